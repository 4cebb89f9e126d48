"""Immutable value types: ground context, k-sets, generators and families.

Sets are stored as strictly increasing tuples; a bitmask over [n] backs the
intersection tests. Equality and ordering are defined on the tuple, so
families sort lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from src.errors import DomainError

# one uint64 word per set
MAX_UNIVERSE = 64


@dataclass(frozen=True)
class GroundContext:
    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise DomainError(f"n and k must be integers, got n={self.n!r}, k={self.k!r}")
        if not 4 <= 2 * self.k <= self.n:
            raise DomainError(f"requires 4 ≤ 2k ≤ n, got n={self.n}, k={self.k}")
        if self.n > MAX_UNIVERSE:
            raise DomainError(f"n={self.n} exceeds the supported universe size {MAX_UNIVERSE}")

    def kset(self, elements: Iterable[int]) -> KSet:
        s = KSet(tuple(elements))
        s.validate_in(self)
        return s

    def generator(self, elements: Iterable[int]) -> GeneratorSet:
        g = GeneratorSet(tuple(elements))
        g.validate_in(self)
        return g

    def family(self, members: Iterable[Iterable[int]]) -> SetFamily:
        return SetFamily.of(self, (self.kset(m) for m in members))

    def collection(self, generators: Iterable[Iterable[int]]) -> GeneratorCollection:
        return GeneratorCollection.of(self, (self.generator(g) for g in generators))

    def __str__(self) -> str:
        return f"(n={self.n}, k={self.k})"


@dataclass(frozen=True, order=True)
class SortedSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise DomainError("sets must be nonempty")
        if elements[0] < 1:
            raise DomainError(f"elements must be positive, got {elements[0]}")
        for a, b in zip(elements, elements[1:]):
            if a >= b:
                raise DomainError(f"elements must be strictly increasing: {a} then {b}")

    @cached_property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and 1 <= element <= MAX_UNIVERSE and bool(self.mask >> (element - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def _check_range(self, ctx: GroundContext) -> None:
        if self.max > ctx.n:
            raise DomainError(f"element {self.max} of {self} lies outside [1, {ctx.n}]")


class KSet(SortedSet):
    """A k-element subset of [n]."""

    def validate_in(self, ctx: GroundContext) -> None:
        if len(self) != ctx.k:
            raise DomainError(f"{self} has {len(self)} elements, expected k={ctx.k}")
        self._check_range(ctx)


class GeneratorSet(SortedSet):
    """A generator: 1..k elements of [n]."""

    def validate_in(self, ctx: GroundContext) -> None:
        if len(self) > ctx.k:
            raise DomainError(f"generator {self} has more than k={ctx.k} elements")
        self._check_range(ctx)


def masks_of(sets: Iterable[SortedSet]) -> np.ndarray:
    return np.fromiter((s.mask for s in sets), dtype=np.uint64)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free, lexicographically ordered family of k-sets."""

    context: GroundContext
    members: tuple[KSet, ...]

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if not isinstance(m, KSet):
                raise DomainError(f"family members must be k-sets, got {m!r}")
            m.validate_in(self.context)
        for a, b in zip(members, members[1:]):
            if a == b:
                raise DomainError(f"duplicate member {a}")
            if b < a:
                raise DomainError(f"members out of lexicographic order: {a} before {b}")

    @classmethod
    def of(cls, ctx: GroundContext, members: Iterable[KSet]) -> SetFamily:
        return cls(ctx, tuple(sorted(members)))

    @classmethod
    def empty(cls, ctx: GroundContext) -> SetFamily:
        return cls(ctx, ())

    @cached_property
    def _index(self) -> frozenset[KSet]:
        return frozenset(self.members)

    @cached_property
    def masks(self) -> np.ndarray:
        return masks_of(self.members)

    @property
    def k(self) -> int:
        return self.context.k

    @property
    def n(self) -> int:
        return self.context.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self._index

    def __bool__(self) -> bool:
        return bool(self.members)

    def issubset(self, other: SetFamily) -> bool:
        return self._index <= other._index

    def union(self, other: SetFamily | Iterable[KSet]) -> SetFamily:
        extra = other.members if isinstance(other, SetFamily) else tuple(other)
        return SetFamily.of(self.context, self._index.union(extra))

    def require_nonempty(self, operation: str) -> None:
        if not self.members:
            raise DomainError(f"{operation} is undefined for the empty family")


@dataclass(frozen=True)
class GeneratorCollection:
    """A duplicate-free, lexicographically ordered collection of generators."""

    context: GroundContext
    generators: tuple[GeneratorSet, ...]

    def __post_init__(self):
        generators = tuple(self.generators)
        object.__setattr__(self, "generators", generators)
        for g in generators:
            if not isinstance(g, GeneratorSet):
                raise DomainError(f"collection members must be generators, got {g!r}")
            g.validate_in(self.context)
        for a, b in zip(generators, generators[1:]):
            if a == b:
                raise DomainError(f"duplicate generator {a}")
            if b < a:
                raise DomainError(f"generators out of lexicographic order: {a} before {b}")

    @classmethod
    def of(cls, ctx: GroundContext, generators: Iterable[GeneratorSet]) -> GeneratorCollection:
        return cls(ctx, tuple(sorted(generators)))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[GeneratorSet]:
        return iter(self.generators)

    def __contains__(self, item: object) -> bool:
        return item in self.generators

    def __getitem__(self, index: int) -> GeneratorSet:
        return self.generators[index]

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.elements for g in self.generators)
