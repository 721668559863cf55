"""Acceptance gate: one test per acceptance criterion, in order.

Each criterion is a single test function, so a verbose pytest run shows one
pass/fail line per criterion.  Brute-force reference results come from
tests/oracles.py, which recomputes everything from the definitions.
"""

import random
import statistics
import time

import pytest

import fitchkit as fk
from fitchkit import (
    FitchMap,
    RecoloringScheme,
    build_index,
    check_k_elc,
    displayed_triples,
    enumerate_explaining_trees,
    find_forbidden_witness,
    is_coarse_graining,
    is_hierarchy_like,
    is_k_restricted,
    is_least_resolved,
    map_of_tree,
    neighborhood,
    random_tree,
    recognize,
    recolor_map,
    recolor_tree,
    restrict_map,
    tree_clusters,
    trees_isomorphic,
    triples_of_map,
)
import oracles

DENSITIES = (0.1, 0.3, 0.7)


def fitch_instance(n, k, p, seed):
    return map_of_tree(random_tree(n, k, p, seed))


def label_sum(tree):
    return sum(len(tree.label(v)) for v in tree.preorder())


def max_label(tree):
    return max((len(tree.label(v)) for v in tree.preorder()), default=0)


@pytest.fixture(scope="module")
def small_instances():
    """200 exhaustively enumerable Fitch maps with their full tree censuses."""
    maps = []
    for i in range(197):
        n = 2 + i % 3
        k = 1 + i % 2
        p = (0.2, 0.4, 0.6, 0.8)[i % 4]
        maps.append(fitch_instance(n, k, p, i))
    maps.append(
        FitchMap(
            ("a", "b", "c"),
            ("1", "2"),
            {("a", "b"): ("2",), ("c", "a"): ("1",), ("c", "b"): ("1", "2")},
        )
    )
    maps.append(
        FitchMap(
            ("a", "b", "c", "d"),
            ("1", "2"),
            {
                ("c", "a"): ("1",), ("c", "b"): ("1",), ("d", "a"): ("1", "2"),
                ("d", "b"): ("1", "2"), ("d", "c"): ("2",),
            },
        )
    )
    maps.append(
        FitchMap(
            ("a", "b", "d"), ("1", "2"),
            {("d", "a"): ("1", "2"), ("d", "b"): ("1", "2")},
        )
    )
    out = []
    for fmap in maps:
        trees = enumerate_explaining_trees(fmap)
        eps = recognize(fmap).tree
        out.append((fmap, trees, eps))
    assert len(out) == 200
    return out


def test_criterion_01_exhaustive_three_way_agreement():
    started = time.perf_counter()
    for n_colors in (1, 2):
        colors = ("1", "2")[:n_colors]
        derivable, _ = oracles.derivable_maps(("a", "b", "c"), colors)
        count = 0
        for fmap in fk.enumerate_maps(3, n_colors):
            recognized = recognize(fmap).is_fitch
            witness_free = find_forbidden_witness(fmap) is None
            tree_exists = fmap in derivable
            assert recognized == witness_free == tree_exists
            if count % 97 == 0:
                assert bool(enumerate_explaining_trees(fmap)) == tree_exists
            count += 1
        assert count == 4 ** (n_colors * 3)
    assert time.perf_counter() - started < 60.0
    print("PASS criterion 1: three-way agreement on 64 + 4096 maps")


def test_criterion_02_round_trip_suite():
    started = time.perf_counter()
    for seed in range(1000):
        n = 2 + seed % 11
        k = 1 + seed % 4
        tree = random_tree(n, k, DENSITIES[seed % 3], seed)
        fmap = map_of_tree(tree)
        result = recognize(fmap)
        assert result.is_fitch
        assert map_of_tree(result.tree) == fmap
        assert is_coarse_graining(tree, result.tree)
    assert time.perf_counter() - started < 10.0
    print("PASS criterion 2: 1000 derive/recognize round trips")


def test_criterion_03_uniqueness_and_minimality(small_instances):
    for fmap, trees, eps in small_instances:
        least = [t for t in trees if is_least_resolved(t, fmap)]
        assert least
        assert all(trees_isomorphic(t, eps) for t in least)
        assert eps.n_vertices == min(t.n_vertices for t in trees)
        assert label_sum(eps) == min(label_sum(t) for t in trees)
    print("PASS criterion 3: unique least-resolved tree on 200 instances")


def test_criterion_04_least_resolved_equivalence(small_instances):
    for fmap, trees, eps in small_instances:
        for tree in trees:
            assert is_least_resolved(tree, fmap) == trees_isomorphic(tree, eps)
    print("PASS criterion 4: least-resolved <=> isomorphic to the built tree")


def test_criterion_05_hierarchy_fast_vs_naive():
    rng = random.Random(2024)
    for case in range(10**4):
        family = oracles.random_family(
            rng, max_universe=20, max_members=60, laminar=case % 3 == 0
        )
        fast = is_hierarchy_like(family).is_hierarchy_like
        slow = is_hierarchy_like(family, naive=True).is_hierarchy_like
        assert fast == slow
        members = list(family.members)
        rng.shuffle(members)
        shuffled = fk.SetFamily(family.universe, members)
        assert is_hierarchy_like(shuffled).is_hierarchy_like == fast
    print("PASS criterion 5: 10^4 families, fast = naive, order-invariant")


def test_criterion_06_k_restriction_equivalences():
    for seed in range(500):
        fmap = fitch_instance(2 + seed % 9, 1 + seed % 4, DENSITIES[seed % 3], seed)
        eps = recognize(fmap).tree
        index = build_index(fmap)
        for k in range(4):
            by_recognition = is_k_restricted(fmap, k)
            by_tree = max_label(eps) <= k
            by_condition = check_k_elc(index, k)[0]
            assert by_recognition == by_tree == by_condition

    narrow = FitchMap(
        ("a", "b", "d"), ("1", "2"),
        {("d", "a"): ("1", "2"), ("d", "b"): ("1", "2")},
    )
    assert recognize(narrow).is_fitch
    assert not is_k_restricted(narrow, 1)
    assert is_k_restricted(narrow, 2)
    wide = FitchMap(
        ("a", "b", "c", "d"), ("1", "2"),
        {
            ("c", "a"): ("1",), ("c", "b"): ("1",), ("d", "a"): ("1", "2"),
            ("d", "b"): ("1", "2"), ("d", "c"): ("2",),
        },
    )
    assert is_k_restricted(wide, 1)
    assert restrict_map(wide, ("a", "b", "d")) == narrow
    print("PASS criterion 6: k-restriction equivalences on 500 instances")


def test_criterion_07_recoloring():
    rng = random.Random(99)
    for seed in range(500):
        k = 1 + seed % 4
        tree = random_tree(2 + seed % 9, k, 0.5, seed)
        style = seed % 3
        if style == 0:
            parts = [
                tuple(rng.sample(tree.colors, rng.randint(1, k)))
                for _ in range(rng.randint(1, 3))
            ]
            scheme = RecoloringScheme(parts)
        elif style == 1:
            shuffled = list(tree.colors)
            rng.shuffle(shuffled)
            cuts = sorted(rng.sample(range(1, k), rng.randint(0, k - 1))) if k > 1 else []
            bounds = [0] + cuts + [k]
            parts = [
                tuple(shuffled[lo:hi]) for lo, hi in zip(bounds, bounds[1:])
            ]
            scheme = RecoloringScheme(parts, partition=True)
        else:
            scheme = RecoloringScheme(
                [(m,) for m in tree.colors], tree.colors, partition=True
            )
        fmap = map_of_tree(tree)
        recolored = recolor_map(fmap, scheme)
        assert map_of_tree(recolor_tree(tree, scheme)) == recolored
        assert recognize(recolored).is_fitch
        if style == 2:
            assert recolored == fmap
    print("PASS criterion 7: 500 recoloring commutations")


def test_criterion_08_triples():
    checked = 0
    for seed in range(200):
        tree = random_tree(3 + seed % 10, 1 + seed % 3, DENSITIES[seed % 3], seed)
        fmap = map_of_tree(tree)
        triples = triples_of_map(fmap)
        assert triples <= displayed_triples(tree)
        assert triples == displayed_triples(recognize(fmap).tree)
        checked += 1
    assert checked == 200

    caterpillar = fk.parse_tree("(((a:{},b:{}):{1},c:{}):{2},d:{});")
    clusters = set(tree_clusters(caterpillar).members)
    assert clusters == {
        frozenset("abcd"), frozenset("abc"), frozenset("ab"),
        frozenset("a"), frozenset("b"), frozenset("c"), frozenset("d"),
    }
    assert {str(t) for t in displayed_triples(caterpillar)} == {
        "a,b|c", "a,c|d", "b,c|d", "a,b|d",
    }
    print("PASS criterion 8: triple containment and equality, fixed tree census")


def test_criterion_09_micro_fixtures(neighborhood_demo_map, fine_tree, coarse_tree):
    assert neighborhood(neighborhood_demo_map, "1", "b") == frozenset({"a", "b"})
    assert neighborhood(neighborhood_demo_map, "4", "b") == frozenset({"a", "b", "c"})

    fine_clusters = {fine_tree.cluster(v) for v in fine_tree.preorder()}
    coarse_clusters = {coarse_tree.cluster(v) for v in coarse_tree.preorder()}
    assert fine_clusters - coarse_clusters == {frozenset({"a", "b", "c"})}
    dropped = fine_tree.parent(fine_tree.vertex_of("a"))
    kept = coarse_tree.parent(coarse_tree.vertex_of("a"))
    assert fine_tree.label(dropped) == frozenset({"1", "2"})
    assert coarse_tree.label(kept) == frozenset({"2"})
    assert coarse_tree.label(kept) == fine_tree.label(dropped) - {"1"}

    fmap = map_of_tree(fine_tree)
    assert map_of_tree(coarse_tree) == fmap
    assert is_coarse_graining(fine_tree, coarse_tree)
    assert not is_coarse_graining(coarse_tree, fine_tree)
    assert not is_least_resolved(fine_tree, fmap)
    assert is_least_resolved(coarse_tree, fmap)
    assert trees_isomorphic(recognize(fmap).tree, coarse_tree)
    print("PASS criterion 9: neighborhood and coarse-graining fixtures")


def test_criterion_10_complexity_scaling():
    def timed(fmap, repeats=9):
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            result = recognize(fmap)
            times.append(time.perf_counter() - t0)
            assert result.is_fitch
        return statistics.median(times)

    base = fitch_instance(500, 8, 0.3, 42)
    recognize(base)  # warm-up outside the timed runs
    t_small = timed(base)
    t_large = timed(fitch_instance(1000, 8, 0.3, 42))
    leaf_ratio = t_large / t_small
    assert t_large < 30.0
    assert 2.5 <= leaf_ratio <= 6.5

    # Halving the colors of the large run isolates the |M|-linear share.
    t_half_colors = timed(fitch_instance(1000, 4, 0.3, 42))
    color_ratio = t_large / t_half_colors
    assert 1.3 <= color_ratio <= 3.5
    print(
        "PASS criterion 10: |X| ratio %.2f in [2.5, 6.5], "
        "|M| ratio %.2f in [1.3, 3.5], large run %.3fs < 30s"
        % (leaf_ratio, color_ratio, t_large)
    )


def test_criterion_11_induced_submap_closure():
    rng = random.Random(7)
    for seed in range(500):
        fmap = fitch_instance(3 + seed % 10, 1 + seed % 4, DENSITIES[seed % 3], seed)
        size = rng.randint(1, fmap.n_leaves)
        subset = rng.sample(list(fmap.leaves), size)
        sub = restrict_map(fmap, subset)
        assert recognize(sub).is_fitch
    print("PASS criterion 11: 500 induced submaps stay recognizable")
