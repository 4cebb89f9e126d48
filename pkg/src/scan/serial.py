from __future__ import annotations

from typing import Callable, Iterable, TypeVar

from src.scan.base import BaseScanner

T = TypeVar("T")
R = TypeVar("R")


class SerialScanner(BaseScanner):
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        return [fn(item) for item in items]

    def describe(self) -> str:
        return "serial"


def default_scanner(scanner: BaseScanner | None) -> BaseScanner:
    return scanner if scanner is not None else SerialScanner()
