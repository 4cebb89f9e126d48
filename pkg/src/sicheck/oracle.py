"""Brute-force ground truth: strong intersection and cross-intersection by
exhaustive enumeration."""
from __future__ import annotations

import numpy as np

from src.errors import DomainError
from src.setcore.order import dominated
from src.setcore.sets import GeneratorSet, KSet, SetFamily, SortedSet

DEFAULT_CHUNK = 1024


def _dominated_masks(x: SortedSet) -> tuple[list[tuple[int, ...]], np.ndarray]:
    seqs = list(dominated(x.elements))
    masks = np.fromiter((sum(1 << (e - 1) for e in s) for s in seqs), dtype=np.uint64)
    return seqs, masks


def find_dominated_disjoint_pair(g: SortedSet, h: SortedSet) -> tuple[GeneratorSet, GeneratorSet] | None:
    """First disjoint (G', H') with G' ≤ G and H' ≤ H, in lexicographic order."""
    g_seqs, g_masks = _dominated_masks(g)
    h_seqs, h_masks = _dominated_masks(h)
    for g_seq, g_mask in zip(g_seqs, g_masks):
        hits = np.flatnonzero((h_masks & g_mask) == 0)
        if hits.size:
            return GeneratorSet(g_seq), GeneratorSet(h_seqs[int(hits[0])])
    return None


def strongly_intersecting_oracle(g: SortedSet, h: SortedSet) -> bool:
    return find_dominated_disjoint_pair(g, h) is None


def find_disjoint_pair(
    first: SetFamily, second: SetFamily, chunk: int = DEFAULT_CHUNK
) -> tuple[KSet, KSet] | None:
    """First (A, B) ∈ F1 × F2 with A ∩ B = ∅, rows scanned in blocks."""
    if first.context != second.context:
        raise DomainError(f"context mismatch: {first.context} vs {second.context}")
    left, right = first.masks, second.masks
    if left.size == 0 or right.size == 0:
        return None
    for start in range(0, left.size, chunk):
        block = left[start:start + chunk]
        disjoint = (block[:, None] & right[None, :]) == 0
        if disjoint.any():
            row, col = np.unravel_index(int(np.argmax(disjoint)), disjoint.shape)
            return first.members[start + int(row)], second.members[int(col)]
    return None


def cross_intersecting_oracle(first: SetFamily, second: SetFamily, chunk: int = DEFAULT_CHUNK) -> bool:
    return find_disjoint_pair(first, second, chunk) is None


def is_intersecting_family(family: SetFamily, chunk: int = DEFAULT_CHUNK) -> bool:
    family.require_nonempty("is_intersecting_family")
    return find_disjoint_pair(family, family, chunk) is None
