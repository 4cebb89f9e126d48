from src.setcore.sets import (
    GeneratorCollection,
    GeneratorSet,
    GroundContext,
    KSet,
    SetFamily,
    SortedSet,
)

__all__ = [
    "GeneratorCollection",
    "GeneratorSet",
    "GroundContext",
    "KSet",
    "SetFamily",
    "SortedSet",
]
