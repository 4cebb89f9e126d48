"""Pairwise criterion over whole generator collections."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from src.errors import DomainError
from src.scan.base import BaseScanner
from src.scan.serial import default_scanner
from src.setcore.sets import GeneratorCollection, GeneratorSet, SetFamily
from src.sicheck.criterion import CriterionVerdict, criterion
from src.sicheck.witness import WitnessTrace, witness_construct
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class PairVerdict:
    first: GeneratorSet
    second: GeneratorSet
    verdict: CriterionVerdict


@dataclass(frozen=True)
class CollectionVerdict:
    passes: bool
    pairs: tuple[PairVerdict, ...]
    failure: PairVerdict | None = None
    witness: WitnessTrace | None = None


def _judge(pairs: list[tuple[GeneratorSet, GeneratorSet]], gc: GeneratorCollection,
           scanner: BaseScanner | None) -> CollectionVerdict:
    ctx = gc.context
    verdicts = default_scanner(scanner).map(lambda p: criterion(p[0], p[1], ctx), pairs)
    judged = tuple(PairVerdict(g, h, v) for (g, h), v in zip(pairs, verdicts))
    # pairs are already in lexicographic order, so the first failure is canonical
    failure = next((p for p in judged if not p.verdict.holds), None)
    if failure is None:
        return CollectionVerdict(passes=True, pairs=judged)
    logger.debug(f"Pair ({failure.first}, {failure.second}) is not strongly intersecting.")
    trace = witness_construct(failure.first, failure.second, ctx)
    return CollectionVerdict(passes=False, pairs=judged, failure=failure, witness=trace)


def check_collection(gc: GeneratorCollection, scanner: BaseScanner | None = None) -> CollectionVerdict:
    """F(𝒢) is intersecting iff every pair (self-pairs included) meets the criterion."""
    if not len(gc):
        raise DomainError("check_collection is undefined for the empty collection")
    pairs = list(combinations_with_replacement(gc.generators, 2))
    return _judge(pairs, gc, scanner)


def check_cross_collections(first: GeneratorCollection, second: GeneratorCollection,
                            scanner: BaseScanner | None = None) -> CollectionVerdict:
    """F(𝒢1) and F(𝒢2) are cross-intersecting iff every G ∈ 𝒢1, H ∈ 𝒢2 meets the criterion."""
    if first.context != second.context:
        raise DomainError(f"context mismatch: {first.context} vs {second.context}")
    if not len(first) or not len(second):
        raise DomainError("check_cross_collections is undefined for empty collections")
    pairs = list(product(first.generators, second.generators))
    return _judge(pairs, first, scanner)


def is_strongly_intersecting_family(family: SetFamily) -> bool:
    """Every pair of members, a member with itself included, strongly intersects."""
    family.require_nonempty("is_strongly_intersecting_family")
    members = family.members
    return all(
        criterion(a, b, family.context).holds
        for a, b in combinations_with_replacement(members, 2)
    )
