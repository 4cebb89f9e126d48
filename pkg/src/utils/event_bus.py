from __future__ import annotations

import threading
from collections import defaultdict
from typing import Any, Callable

SHIFT_APPLIED = "shift_applied"
SWEEP_FINISHED = "sweep_finished"
CLOSURE_ADDED = "closure_added"
CLIQUE_FOUND = "clique_found"

EVENTS = frozenset({SHIFT_APPLIED, SWEEP_FINISHED, CLOSURE_ADDED, CLIQUE_FOUND})


class EventBus:
    """Thread-safe publish/subscribe bus for progress of long-running searches."""

    def __init__(self):
        self._listeners: dict[str, list[Callable[[Any], None]]] = defaultdict(list)
        self._lock = threading.Lock()

    def on(self, event: str, callback: Callable[[Any], None]) -> None:
        _require_known(event)
        with self._lock:
            self._listeners[event].append(callback)

    def emit(self, event: str, data: Any = None) -> None:
        _require_known(event)
        with self._lock:
            callbacks = list(self._listeners.get(event, []))
        for cb in callbacks:
            cb(data)

    def has_listeners(self, event: str) -> bool:
        with self._lock:
            return bool(self._listeners.get(event))


def _require_known(event: str) -> None:
    if event not in EVENTS:
        raise ValueError(f"Unknown event '{event}'. Expected one of {sorted(EVENTS)}.")


def emit(bus: EventBus | None, event: str, data: Any = None) -> None:
    """Publish on ``bus`` when one was supplied."""
    if bus is not None:
        bus.emit(event, data)
