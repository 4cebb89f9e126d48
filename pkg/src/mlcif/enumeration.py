"""Exhaustive catalogue of maximal left-compressed intersecting families.

Maximal intersecting families are the maximal cliques of the graph on all
k-sets whose edges join intersecting pairs. Cliques are listed with
Bron–Kerbosch (Tomita pivot) over a degeneracy ordering, and kept when they
are down-closed.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from src.errors import BudgetExceeded
from src.genfam.generators import extract_generators, pi_collection
from src.scan.base import BaseScanner
from src.scan.serial import default_scanner
from src.setcore.order import all_ksets, covers_below
from src.setcore.sets import GeneratorCollection, GroundContext, KSet, SetFamily, masks_of
from src.utils.event_bus import CLIQUE_FOUND, EventBus, emit
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

DEFAULT_BUDGET = 40


@dataclass(frozen=True)
class CatalogueEntry:
    family: SetFamily
    generators: GeneratorCollection


@dataclass(frozen=True)
class MlcifCatalogue:
    context: GroundContext
    entries: tuple[CatalogueEntry, ...]
    cliques_examined: int

    def __len__(self) -> int:
        return len(self.entries)

    def families(self) -> list[SetFamily]:
        return [e.family for e in self.entries]


def intersection_graph(vertices: list[KSet]) -> list[frozenset[int]]:
    masks = masks_of(vertices)
    adjacency = (masks[:, None] & masks[None, :]) != 0
    np.fill_diagonal(adjacency, False)
    return [frozenset(int(u) for u in np.flatnonzero(row)) for row in adjacency]


def degeneracy_order(neighbors: list[frozenset[int]]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (smallest index on ties)."""
    remaining = set(range(len(neighbors)))
    degree = {v: len(neighbors[v]) for v in remaining}
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        order.append(v)
        remaining.remove(v)
        for u in neighbors[v]:
            if u in remaining:
                degree[u] -= 1
    return order


def _bron_kerbosch(clique: frozenset[int], candidates: set[int], excluded: set[int],
                   neighbors: list[frozenset[int]], found: list[frozenset[int]]) -> None:
    if not candidates and not excluded:
        found.append(clique)
        return
    pivot = max(candidates | excluded, key=lambda u: (len(candidates & neighbors[u]), -u))
    for v in sorted(candidates - neighbors[pivot]):
        _bron_kerbosch(clique | {v}, candidates & neighbors[v], excluded & neighbors[v], neighbors, found)
        candidates.remove(v)
        excluded.add(v)


def maximal_cliques(neighbors: list[frozenset[int]], scanner: BaseScanner | None = None) -> list[frozenset[int]]:
    order = degeneracy_order(neighbors)
    position = {v: p for p, v in enumerate(order)}

    def branch(v: int) -> list[frozenset[int]]:
        later = {u for u in neighbors[v] if position[u] > position[v]}
        earlier = {u for u in neighbors[v] if position[u] < position[v]}
        found: list[frozenset[int]] = []
        _bron_kerbosch(frozenset({v}), later, earlier, neighbors, found)
        return found

    cliques: list[frozenset[int]] = []
    for part in default_scanner(scanner).map(branch, order):
        cliques.extend(part)
    return cliques


def enumerate_mlcif(ctx: GroundContext, budget: int = DEFAULT_BUDGET,
                    scanner: BaseScanner | None = None, bus: EventBus | None = None) -> MlcifCatalogue:
    vertex_count = comb(ctx.n, ctx.k)
    if vertex_count > budget:
        raise BudgetExceeded(
            f"C({ctx.n},{ctx.k}) = {vertex_count} k-sets exceeds the enumeration budget of {budget}"
        )

    vertices = list(all_ksets(ctx))
    index = {v: i for i, v in enumerate(vertices)}
    below = [[index[b] for b in covers_below(v)] for v in vertices]
    neighbors = intersection_graph(vertices)

    cliques = maximal_cliques(neighbors, scanner)
    logger.info(f"Found {len(cliques)} maximal intersecting families on {ctx}.")

    entries: dict[tuple[KSet, ...], CatalogueEntry] = {}
    for clique in cliques:
        if not all(b in clique for v in clique for b in below[v]):
            continue
        family = SetFamily(ctx, tuple(vertices[i] for i in sorted(clique)))
        if family.members in entries:
            continue
        # maximal k-sets truncated to their type; maximality makes F(π(𝒢)) = F
        entry = CatalogueEntry(family=family, generators=pi_collection(extract_generators(family)))
        entries[family.members] = entry
        emit(bus, CLIQUE_FOUND, entry)

    ordered = tuple(sorted(entries.values(), key=lambda e: e.generators.sort_key()))
    logger.info(f"{len(ordered)} of them are left-compressed.")
    return MlcifCatalogue(context=ctx, entries=ordered, cliques_examined=len(cliques))
