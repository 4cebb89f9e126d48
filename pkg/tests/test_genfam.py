import random
from itertools import combinations

import pytest

from helpers import random_strongly_intersecting, small_sets
from src.errors import PreconditionError
from src.genfam.generators import (
    build_family,
    extract_generators,
    family_of,
    pi_collection,
    prune_dominated,
    type_of,
)
from src.mlcif.named import named_family
from src.scan.threaded import ThreadedScanner
from src.setcore.order import all_ksets, is_left_compressed_downclosed, leq, mu, preceq
from src.setcore.sets import GeneratorCollection, GeneratorSet, GroundContext, KSet
from src.sicheck.collection import check_collection


def test_build_family_examples(ctx52, ctx103):
    assert build_family(ctx52.collection([[1]])) == ctx52.family([[1, 2], [1, 3], [1, 4], [1, 5]])
    assert build_family(ctx52.collection([[2, 3]])) == ctx52.family([[1, 2], [1, 3], [2, 3]])
    family = build_family(ctx103.collection([[2, 4]]))
    assert KSet((1, 3, 5)) in family and KSet((2, 4, 6)) in family


def test_build_family_matches_definition(ctx73):
    for gens in ([[1, 4]], [[2, 3, 4]], [[1, 4], [2, 3, 4]], [[3]], [[2, 5], [1, 6, 7]]):
        gc = ctx73.collection(gens)
        expected = {s for s in all_ksets(ctx73) if any(preceq(s, gen) for gen in gc)}
        assert set(build_family(gc)) == expected


def test_build_family_is_downclosed_union(ctx73):
    sets = small_sets(7, 3)
    for a, b in combinations(sets[::4], 2):
        gc = GeneratorCollection.of(ctx73, [a, b])
        family = build_family(gc)
        assert is_left_compressed_downclosed(family)
        assert set(family) == set(family_of(a, ctx73)) | set(family_of(b, ctx73))


def test_build_family_same_with_thread_pool(ctx103):
    gc = ctx103.collection([[1, 3], [1, 4, 5], [2, 3, 5]])
    assert build_family(gc, ThreadedScanner(4)) == build_family(gc)


def test_extract_generators_examples(ctx52):
    assert extract_generators(ctx52.family([[1, 2], [1, 3], [2, 3]])) == ctx52.collection([[2, 3]])
    assert extract_generators(named_family("star", ctx52)) == ctx52.collection([[1, 5]])


def test_extract_generators_round_trip_hilton_milner():
    ctx = GroundContext(8, 3)
    family = named_family("hm", ctx)
    assert build_family(extract_generators(family)) == family


def test_extract_generators_rejects_uncompressed(ctx52):
    with pytest.raises(PreconditionError) as info:
        extract_generators(ctx52.family([[2, 3]]))
    assert info.value.witness == (KSet((2, 3)), KSet((1, 3)))


def test_extract_of_build_is_identity_on_antichains(ctx73):
    ksets = [GeneratorSet(s.elements) for s in all_ksets(ctx73)]
    for a, b in combinations(ksets, 2):
        if leq(a, b) or leq(b, a):
            continue
        gc = GeneratorCollection.of(ctx73, [a, b])
        assert extract_generators(build_family(gc)) == gc


def test_type_of_examples(ctx103):
    ctx = GroundContext(10, 3)
    typed = type_of(GeneratorSet((2, 3, 5)), ctx)
    assert typed.type_index == 3 and typed.truncation == GeneratorSet((2, 3, 5))
    typed = type_of(GeneratorSet((2, 3, 7)), ctx)
    assert typed.type_index == 2 and typed.truncation == GeneratorSet((2, 3))
    typed = type_of(GeneratorSet((1, 5, 6)), ctx)
    assert typed.type_index == 1 and typed.truncation == GeneratorSet((1,))


def test_type_of_rejects_large_first_element_with_certificate(ctx103):
    gen = GeneratorSet((4, 6))
    with pytest.raises(PreconditionError) as info:
        type_of(gen, ctx103)
    a, b = info.value.witness
    assert a.mask & b.mask == 0
    family = family_of(gen, ctx103)
    assert a in family and b in family


def test_truncation_keeps_mu_below_type_bound(ctx123):
    for gen in small_sets(12, 3):
        if gen[0] > ctx123.k:
            continue
        typed = type_of(gen, ctx123)
        for level in range(1, ctx123.k + typed.type_index):
            assert mu(typed.truncation, level, ctx123) == mu(gen, level, ctx123)


def test_pi_collection_examples(ctx103):
    assert pi_collection(ctx103.collection([[2, 3, 7]])) == ctx103.collection([[2, 3]])
    gc = ctx103.collection([[1, 3], [1, 4, 5], [2, 3, 5]])
    assert pi_collection(gc) == gc


def test_pi_collection_is_idempotent(ctx123):
    rng = random.Random(7)
    for _ in range(50):
        gc = random_strongly_intersecting(ctx123, 8, rng)
        once = pi_collection(gc)
        assert pi_collection(once) == once


def test_prune_dominated_examples(ctx52):
    assert prune_dominated(ctx52.collection([[1, 2], [2, 3]])) == ctx52.collection([[2, 3]])
    assert prune_dominated(ctx52.collection([[1], [2, 3]])) == ctx52.collection([[1], [2, 3]])
    antichain = ctx52.collection([[1, 5], [2, 4]])
    assert prune_dominated(antichain) == antichain


def test_prune_dominated_keeps_family(ctx73):
    gc = ctx73.collection([[1], [1, 2], [2, 3], [1, 3, 4], [2, 3, 4]])
    assert build_family(prune_dominated(gc)) == build_family(gc)


def test_truncation_preserves_intersection_and_grows_family(ctx123):
    rng = random.Random(2024)
    for _ in range(200):
        gc = random_strongly_intersecting(ctx123, 8, rng)
        assert check_collection(gc).passes
        truncated = pi_collection(gc)
        assert check_collection(truncated).passes
        assert build_family(gc).issubset(build_family(truncated))

        verdict = check_collection(gc)
        for p in verdict.pairs:
            r = min(type_of(p.first, ctx123).type_index, type_of(p.second, ctx123).type_index)
            assert p.verdict.level <= ctx123.k + r - 1
