"""Constructive certificate that two generators are not strongly intersecting.

Walks l = 1..m (m = max(G ∪ H)) keeping G_l ≤ G ∩ [l], H_l ≤ H ∩ [l],
G_l ∩ H_l = ∅ and G_l ∪ H_l = [z_l], then pads both sides from [z_m + 1, n].
"""
from __future__ import annotations

from dataclasses import dataclass

from src.errors import DomainError, PreconditionError
from src.setcore.sets import GroundContext, KSet, SortedSet
from src.sicheck.criterion import criterion


@dataclass(frozen=True)
class WitnessLevel:
    level: int
    x: int
    y: int
    z: int
    g_part: tuple[int, ...]
    h_part: tuple[int, ...]


@dataclass(frozen=True)
class WitnessTrace:
    levels: tuple[WitnessLevel, ...]
    m: int
    pair: tuple[KSet, KSet]


def witness_construct(g: SortedSet, h: SortedSet, ctx: GroundContext) -> WitnessTrace:
    verdict = criterion(g, h, ctx)
    if verdict.holds:
        raise PreconditionError(
            f"{g} and {h} are strongly intersecting (level {verdict.level}); no witness exists"
        )

    m = max(g.max, h.max)
    g_part: list[int] = []
    h_part: list[int] = []
    z = 0
    levels = []
    for level in range(1, m + 1):
        in_g, in_h = level in g, level in h
        if in_g and in_h:
            g_part.append(z + 1)
            h_part.append(z + 2)
            z += 2
        elif in_g:
            z += 1
            g_part.append(z)
        elif in_h:
            z += 1
            h_part.append(z)
        levels.append(WitnessLevel(level, len(g_part), len(h_part), z, tuple(g_part), tuple(h_part)))

    need_g, need_h = ctx.k - len(g), ctx.k - len(h)
    free = range(z + 1, ctx.n + 1)
    if need_g + need_h > len(free):
        raise DomainError(
            f"no room to pad: need {need_g + need_h} elements above {z}, only {len(free)} available"
        )
    pad_g = tuple(free[:need_g])
    pad_h = tuple(free[need_g:need_g + need_h])
    pair = (KSet(tuple(g_part) + pad_g), KSet(tuple(h_part) + pad_h))
    return WitnessTrace(levels=tuple(levels), m=m, pair=pair)
