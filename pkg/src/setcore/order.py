"""The two partial orders on sets, the μ-function, closures and the
left-compressed predicates."""
from __future__ import annotations

from bisect import bisect_right
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from src.errors import DomainError
from src.setcore.sets import GroundContext, KSet, SetFamily, SortedSet


def mu(x: SortedSet, level: int, ctx: GroundContext) -> int:
    """|X ∩ [level]|."""
    if not 1 <= level <= ctx.n:
        raise DomainError(f"level {level} outside [1, {ctx.n}]")
    return bisect_right(x.elements, level)


def leq(a: SortedSet, b: SortedSet) -> bool:
    """Componentwise a_i ≤ b_i on equal-size sets."""
    if len(a) != len(b):
        raise DomainError(f"cannot compare {a} and {b} under ≤: sizes {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a.elements, b.elements))


def lt(a: SortedSet, b: SortedSet) -> bool:
    return leq(a, b) and a.elements != b.elements


def preceq(a: SortedSet, b: SortedSet) -> bool:
    """|A| ≥ |B| and the first |B| elements of A are componentwise ≤ B."""
    if len(a) < len(b):
        return False
    return all(x <= y for x, y in zip(a.elements, b.elements))


def dominated(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing sequences s with 1 ≤ s_i ≤ bounds[i], in lexicographic order."""
    caps = list(bounds)
    for i in range(len(caps) - 2, -1, -1):
        caps[i] = min(caps[i], caps[i + 1] - 1)
    if not caps or caps[0] < 1:
        return

    width = len(caps)
    prefix: list[int] = []

    # caps is strictly increasing, so every branch reaches full width
    def descend(position: int, low: int) -> Iterator[tuple[int, ...]]:
        if position == width:
            yield tuple(prefix)
            return
        for value in range(low, caps[position] + 1):
            prefix.append(value)
            yield from descend(position + 1, value + 1)
            prefix.pop()

    yield from descend(0, 1)


def generator_bounds(g: SortedSet, ctx: GroundContext) -> list[int]:
    """Position bounds for the k-sets S with S ⪯ G."""
    return list(g.elements[: ctx.k]) + [ctx.n] * (ctx.k - len(g))


def all_ksets(ctx: GroundContext) -> Iterator[KSet]:
    for combo in combinations(range(1, ctx.n + 1), ctx.k):
        yield KSet(combo)


def lower_closure(a: KSet, ctx: GroundContext) -> SetFamily:
    """L(A): every k-set S with S ≤ A."""
    a.validate_in(ctx)
    return SetFamily(ctx, tuple(KSet(s) for s in dominated(a.elements)))


def covers_below(a: KSet) -> Iterator[KSet]:
    """k-sets obtained from A by lowering one coordinate by one."""
    elements = a.elements
    for i, value in enumerate(elements):
        floor = elements[i - 1] if i else 0
        if value - 1 > floor:
            yield KSet(elements[:i] + (value - 1,) + elements[i + 1:])


def find_downclosure_violation(family: SetFamily) -> tuple[KSet, KSet] | None:
    """First (A, B) with A ∈ F, B ≤ A, B ∉ F.

    Checking covers is enough: if B < A, lowering A at the first index where
    it exceeds B yields a cover A' with B ≤ A'.
    """
    for a in family:
        for b in covers_below(a):
            if b not in family:
                return a, b
    return None


def is_left_compressed_downclosed(family: SetFamily) -> bool:
    return find_downclosure_violation(family) is None


def shift_set(a: SortedSet, i: int, j: int) -> KSet:
    return KSet(tuple(sorted((set(a.elements) - {j}) | {i})))


def find_shift_violation(family: SetFamily) -> tuple[KSet, KSet, int, int] | None:
    """First (A, A−{j}∪{i}, i, j) with the shifted set missing from F."""
    for a in family:
        for j in a.elements:
            for i in range(1, j):
                if i in a:
                    continue
                shifted = shift_set(a, i, j)
                if shifted not in family:
                    return a, shifted, i, j
    return None


def is_left_compressed_shiftstable(family: SetFamily) -> bool:
    return find_shift_violation(family) is None


def maximal_sets(family: SetFamily) -> SetFamily:
    """Members with nothing strictly above them under ≤."""
    family.require_nonempty("maximal_sets")
    table = np.array([m.elements for m in family], dtype=np.int64)
    keep = []
    for row, member in zip(table, family):
        above = np.all(table >= row, axis=1) & np.any(table > row, axis=1)
        if not above.any():
            keep.append(member)
    return SetFamily(family.context, tuple(keep))


def has_common_element(family: SetFamily) -> bool:
    """Whether the intersection of all members is nonempty."""
    family.require_nonempty("has_common_element")
    return int(np.bitwise_and.reduce(family.masks)) != 0
