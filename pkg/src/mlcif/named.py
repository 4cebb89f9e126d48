from __future__ import annotations

from typing import Callable

from src.errors import UsageError
from src.setcore.order import all_ksets
from src.setcore.sets import GroundContext, KSet, SetFamily


def _star(a: KSet, ctx: GroundContext) -> bool:
    return 1 in a


def _a23(a: KSet, ctx: GroundContext) -> bool:
    return sum(1 for e in (1, 2, 3) if e in a) >= 2


def _hilton_milner(a: KSet, ctx: GroundContext) -> bool:
    block = tuple(range(2, ctx.k + 2))
    if a.elements == block:
        return True
    return 1 in a and any(e in a for e in block)


NAMED_FAMILIES: dict[str, Callable[[KSet, GroundContext], bool]] = {
    "star": _star,
    "a23": _a23,
    "hm": _hilton_milner,
}


def named_family(name: str, ctx: GroundContext) -> SetFamily:
    """The star, A_{2,3} or Hilton–Milner family, by direct membership test."""
    try:
        member = NAMED_FAMILIES[name]
    except KeyError:
        raise UsageError(f"unknown family '{name}', expected one of {sorted(NAMED_FAMILIES)}") from None
    return SetFamily(ctx, tuple(a for a in all_ksets(ctx) if member(a, ctx)))
