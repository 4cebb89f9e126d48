from __future__ import annotations

from typing import Any


class LcifError(ValueError):
    """Base class for every error raised by the library."""


class DomainError(LcifError):
    """An operation was called outside the inputs it is defined for."""


class PreconditionError(LcifError):
    """An input lacks a property the operation requires.

    ``witness`` holds the sets that certify the violation, when there are any.
    """

    def __init__(self, message: str, witness: tuple[Any, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class UsageError(LcifError):
    """Bad command-line usage or an unknown name."""


class ParseError(UsageError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class BudgetExceeded(UsageError):
    """Exhaustive search refused because it would exceed the configured budget."""
