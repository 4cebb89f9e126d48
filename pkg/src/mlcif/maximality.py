from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.errors import PreconditionError
from src.setcore.order import all_ksets
from src.setcore.sets import GroundContext, KSet, SetFamily, SortedSet
from src.sicheck.oracle import find_disjoint_pair


@dataclass(frozen=True)
class MaximalityVerdict:
    is_maximal: bool
    blocker: KSet | None = None


def require_intersecting(family: SetFamily) -> None:
    if not family:
        return
    pair = find_disjoint_pair(family, family)
    if pair is not None:
        raise PreconditionError(f"family is not intersecting: {pair[0]} ∩ {pair[1]} = ∅", witness=pair)


def is_maximal_intersecting(family: SetFamily) -> MaximalityVerdict:
    """Maximal iff every k-set outside F misses some member; else the first addable set."""
    family.require_nonempty("is_maximal_intersecting")
    require_intersecting(family)
    masks = family.masks
    for c in all_ksets(family.context):
        if c in family:
            continue
        if np.all((masks & np.uint64(c.mask)) != 0):
            return MaximalityVerdict(is_maximal=False, blocker=c)
    return MaximalityVerdict(is_maximal=True)


def satisfies_prefix_bound(g: SortedSet, ctx: GroundContext) -> bool:
    """|G ∩ [k + |G| − 1]| = |G|, i.e. max(G) ≤ k + |G| − 1.

    Necessary for every generator of a maximal left-compressed intersecting family.
    """
    g.validate_in(ctx)
    return g.max <= ctx.k + len(g) - 1
