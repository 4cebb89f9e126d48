from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class BaseScanner(ABC):
    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply fn to every item and return the results in input order."""
        ...

    @abstractmethod
    def describe(self) -> str:
        """Short label for log lines."""
        ...
