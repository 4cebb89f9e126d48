from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from src.scan.base import BaseScanner
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ThreadedScanner(BaseScanner):
    """Runs work items on a thread pool; Executor.map keeps results in input order."""

    def __init__(self, threads: int):
        if threads < 1:
            raise ValueError(f"threads must be positive, got {threads}")
        self._threads = threads
        logger.debug(f"Thread pool scanner initialized (threads={threads}).")

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        with ThreadPoolExecutor(max_workers=self._threads) as pool:
            return list(pool.map(fn, items))

    def describe(self) -> str:
        return f"threads={self._threads}"
