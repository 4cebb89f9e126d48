"""Families generated by collections of generating sets, and back again."""
from __future__ import annotations

from dataclasses import dataclass

from src.errors import PreconditionError
from src.scan.base import BaseScanner
from src.scan.serial import default_scanner
from src.setcore.order import (
    dominated,
    find_downclosure_violation,
    generator_bounds,
    maximal_sets,
    preceq,
)
from src.setcore.sets import GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class TypedGenerator:
    generator: GeneratorSet
    type_index: int
    truncation: GeneratorSet


def family_of(g: GeneratorSet, ctx: GroundContext) -> SetFamily:
    """F({G}): k-sets S with S ⪯ G."""
    g.validate_in(ctx)
    return SetFamily(ctx, tuple(KSet(s) for s in dominated(generator_bounds(g, ctx))))


def build_family(gc: GeneratorCollection, scanner: BaseScanner | None = None) -> SetFamily:
    """F(n, k, 𝒢), the union of the per-generator families."""
    ctx = gc.context
    parts = default_scanner(scanner).map(lambda g: family_of(g, ctx).members, gc.generators)
    members: set[KSet] = set()
    for part in parts:
        members.update(part)
    family = SetFamily.of(ctx, members)
    logger.debug(f"Built family of {len(family)} k-sets from {len(gc)} generators on {ctx}.")
    return family


def extract_generators(family: SetFamily) -> GeneratorCollection:
    """The maximal k-sets of a left-compressed family, as generators."""
    family.require_nonempty("extract_generators")
    violation = find_downclosure_violation(family)
    if violation is not None:
        a, b = violation
        raise PreconditionError(
            f"family is not left-compressed: {a} is a member but {b} ≤ {a} is not",
            witness=violation,
        )
    tops = maximal_sets(family)
    return GeneratorCollection(family.context, tuple(GeneratorSet(m.elements) for m in tops))


def incompatibility_witness(g: GeneratorSet, ctx: GroundContext) -> tuple[KSet, KSet]:
    """Disjoint pair [k] and G ∪ C inside F({G}) for a generator with g_1 > k.

    C is the smallest k−|G| elements above max G; [k] ≤ G ∪ C since every
    element of G ∪ C exceeds k.
    """
    padding = tuple(range(g.max + 1, g.max + 1 + ctx.k - len(g)))
    if padding and padding[-1] > ctx.n:
        # no room above max G: pad from the gap below instead
        free = [e for e in range(ctx.k + 1, ctx.n + 1) if e not in g]
        padding = tuple(free[: ctx.k - len(g)])
    return KSet(tuple(range(1, ctx.k + 1))), KSet(tuple(sorted(g.elements + padding)))


def type_of(g: GeneratorSet, ctx: GroundContext) -> TypedGenerator:
    """Type r = max{t : g_t < k + t} and the truncation π(G) = {g_1..g_r}."""
    g.validate_in(ctx)
    if g[0] > ctx.k:
        raise PreconditionError(
            f"generator {g} incompatible with any intersecting family (g_1={g[0]} > k={ctx.k})",
            witness=incompatibility_witness(g, ctx),
        )
    r = max(t for t in range(1, len(g) + 1) if g[t - 1] < ctx.k + t)
    return TypedGenerator(generator=g, type_index=r, truncation=GeneratorSet(g.elements[:r]))


def prune_dominated(gc: GeneratorCollection) -> GeneratorCollection:
    """Drop every generator G with G ⪯ H for another generator H."""
    kept = [
        g for g in gc
        if not any(h != g and preceq(g, h) for h in gc)
    ]
    return GeneratorCollection(gc.context, tuple(kept))


def pi_collection(gc: GeneratorCollection) -> GeneratorCollection:
    """{π(G) : G ∈ 𝒢}, deduplicated and pruned."""
    truncations = {type_of(g, gc.context).truncation for g in gc}
    return prune_dominated(GeneratorCollection.of(gc.context, truncations))
