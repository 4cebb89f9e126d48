from __future__ import annotations

from src.errors import DomainError
from src.setcore.sets import SortedSet


def bond_condition(a: SortedSet, b: SortedSet, strict: bool = True) -> bool:
    """Some 1 ≤ i, j ≤ k with i + j > max(a_i, b_j).

    ``strict=False`` tests i + j ≥ max(a_i, b_j) instead; that variant
    disagrees with strong intersection on ({2,4}, {2,4}).
    """
    if len(a) != len(b):
        raise DomainError(f"bond condition needs equal sizes, got {len(a)} and {len(b)}")
    for i, a_i in enumerate(a.elements, start=1):
        for j, b_j in enumerate(b.elements, start=1):
            top = max(a_i, b_j)
            if i + j > top or (not strict and i + j == top):
                return True
    return False
