from __future__ import annotations

from dataclasses import dataclass

from src.setcore.order import mu
from src.setcore.sets import GroundContext, SortedSet


@dataclass(frozen=True)
class CriterionVerdict:
    holds: bool
    level: int | None = None


def criterion(g: SortedSet, h: SortedSet, ctx: GroundContext) -> CriterionVerdict:
    """Smallest l ∈ [n] with μ_G(l) + μ_H(l) > l, if any.

    Both counts are constant past max(G ∪ H), so the scan stops there.
    """
    g.validate_in(ctx)
    h.validate_in(ctx)
    top = min(ctx.n, max(g.max, h.max))
    for level in range(1, top + 1):
        if mu(g, level, ctx) + mu(h, level, ctx) > level:
            return CriterionVerdict(holds=True, level=level)
    return CriterionVerdict(holds=False)
