import pytest

from src.setcore.sets import GroundContext


@pytest.fixture
def ctx52() -> GroundContext:
    return GroundContext(5, 2)


@pytest.fixture
def ctx73() -> GroundContext:
    return GroundContext(7, 3)


@pytest.fixture
def ctx103() -> GroundContext:
    return GroundContext(10, 3)


@pytest.fixture
def ctx123() -> GroundContext:
    return GroundContext(12, 3)
