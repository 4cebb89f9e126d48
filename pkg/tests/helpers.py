from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

from src.setcore.order import leq, preceq
from src.setcore.sets import GeneratorCollection, GeneratorSet, GroundContext, KSet
from src.sicheck.criterion import criterion
from src.sicheck.witness import WitnessTrace

FIXTURES = Path(__file__).parent / "fixtures"


def small_sets(top: int, max_size: int) -> list[GeneratorSet]:
    """Every nonempty subset of [top] with at most max_size elements."""
    return [
        GeneratorSet(c)
        for size in range(1, max_size + 1)
        for c in combinations(range(1, top + 1), size)
    ]


def ksets(top: int, k: int) -> list[KSet]:
    return [KSet(c) for c in combinations(range(1, top + 1), k)]


def random_strongly_intersecting(ctx: GroundContext, top: int, rng: random.Random) -> GeneratorCollection:
    """Greedy sample of generators over [top] whose pairs all meet the criterion."""
    candidates = [g for g in small_sets(top, ctx.k) if g[0] <= ctx.k]
    rng.shuffle(candidates)
    cap = rng.randint(1, 4)
    chosen: list[GeneratorSet] = []
    for g in candidates:
        if not criterion(g, g, ctx).holds:
            continue
        if all(criterion(g, h, ctx).holds for h in chosen):
            chosen.append(g)
            if len(chosen) == cap:
                break
    return GeneratorCollection.of(ctx, chosen)


def witness_violations(g: GeneratorSet, h: GeneratorSet, trace: WitnessTrace, ctx: GroundContext) -> list[str]:
    problems = []
    previous_z = 0
    for rec in trace.levels:
        g_prefix = GeneratorSet(tuple(e for e in g if e <= rec.level)) if g[0] <= rec.level else None
        h_prefix = GeneratorSet(tuple(e for e in h if e <= rec.level)) if h[0] <= rec.level else None
        if (g_prefix is None) != (not rec.g_part):
            problems.append(f"level {rec.level}: G side size mismatch")
        elif g_prefix is not None and not leq(GeneratorSet(rec.g_part), g_prefix):
            problems.append(f"level {rec.level}: G_l not ≤ G ∩ [l]")
        if (h_prefix is None) != (not rec.h_part):
            problems.append(f"level {rec.level}: H side size mismatch")
        elif h_prefix is not None and not leq(GeneratorSet(rec.h_part), h_prefix):
            problems.append(f"level {rec.level}: H_l not ≤ H ∩ [l]")
        if set(rec.g_part) & set(rec.h_part):
            problems.append(f"level {rec.level}: G_l and H_l meet")
        if set(rec.g_part) | set(rec.h_part) != set(range(1, rec.z + 1)):
            problems.append(f"level {rec.level}: union is not [z_l]")
        if rec.z != rec.x + rec.y or rec.z - previous_z not in (0, 1, 2):
            problems.append(f"level {rec.level}: bad z step")
        previous_z = rec.z
    a, b = trace.pair
    if len(a) != ctx.k or len(b) != ctx.k:
        problems.append("pair members are not k-sets")
    if a.mask & b.mask:
        problems.append("pair is not disjoint")
    if not preceq(a, g) or not preceq(b, h):
        problems.append("pair is not dominated by (G, H)")
    return problems
