"""Shared fixtures: small hand-checked instances reused across the suite."""

import pytest

import fitchkit as fk


@pytest.fixture
def demo_tree():
    """Three-leaf tree used throughout: derives demo_map."""
    return fk.parse_tree("((a:{},b:{2}):{1},c:{});")


@pytest.fixture
def demo_map():
    """The map derived by demo_tree, built independently from its entries."""
    return fk.FitchMap(
        ("a", "b", "c"),
        ("1", "2"),
        {("a", "b"): ("2",), ("c", "a"): ("1",), ("c", "b"): ("1", "2")},
    )


@pytest.fixture
def ic_violation_map():
    """Hierarchy-like neighborhoods but a strictly larger one reachable.

    A single entry (c, b) -> {m} gives N[m, b] = {a, b} while N[m, a] is the
    whole leaf set, so the inequality condition fails at (m, b, a).
    """
    return fk.FitchMap(("a", "b", "c"), ("m",), {("c", "b"): ("m",)})


@pytest.fixture
def overlap_map():
    """Neighborhoods {a,b} and {b,c} overlap properly; guards stay quiet."""
    return fk.FitchMap(
        ("a", "b", "c", "d"),
        ("1",),
        {("c", "a"): ("1",), ("d", "a"): ("1",), ("a", "b"): ("1",), ("d", "b"): ("1",)},
    )


@pytest.fixture
def too_many_same_size_map():
    """Two distinct two-element neighborhoods on three leaves trip the guard."""
    return fk.FitchMap(
        ("a", "b", "c"), ("m",), {("c", "a"): ("m",), ("a", "b"): ("m",)}
    )


@pytest.fixture
def too_many_members_map():
    """Eight distinct neighborhoods on four leaves exceed the 2n-1 bound.

    Color 1 contributes all four singletons, color 2 the pairs {a,b} and
    {c,d}, and color 3 first {a,b,c} and then {a,b,d}, whose insertion is
    the eighth member.
    """
    leaves = ("a", "b", "c", "d")
    block = {"a": 0, "b": 0, "c": 1, "d": 1}
    entries = {}
    for x in leaves:
        for y in leaves:
            if x == y:
                continue
            ms = ["1"]
            if block[x] != block[y]:
                ms.append("2")
            entries[(x, y)] = ms
    entries[("d", "a")] = entries[("d", "a")] + ["3"]
    entries[("c", "b")] = entries[("c", "b")] + ["3"]
    return fk.FitchMap(leaves, ("1", "2", "3"), entries)


@pytest.fixture
def neighborhood_demo_map():
    """Three leaves, four colors; N[1, b] = {a, b} and N[4, b] = {a, b, c}."""
    return fk.FitchMap(
        ("a", "b", "c"),
        ("1", "2", "3", "4"),
        {
            ("b", "a"): ("2",),
            ("a", "c"): ("1",),
            ("b", "c"): ("1",),
            ("c", "a"): ("1", "2"),
            ("c", "b"): ("1",),
        },
    )


@pytest.fixture
def fine_tree():
    """Resolved tree: an extra unlabeled cluster {a,b,c} and a 1 on {a,b}."""
    return fk.parse_tree("(((a:{1},b:{1}):{1,2},c:{}):{},d:{});")


@pytest.fixture
def coarse_tree():
    """Least-resolved form of fine_tree: same map, cluster dropped, 1 removed."""
    return fk.parse_tree("((a:{1},b:{1}):{2},c:{},d:{});")


@pytest.fixture
def caterpillar_tree():
    """Clusters X, {a,b,c}, {a,b} plus singletons; triples ab|c, ab|d, ac|d, bc|d."""
    return fk.parse_tree("(((a:{},b:{}):{1},c:{}):{2},d:{});")


@pytest.fixture
def one_restricted_map():
    """Four-leaf map whose least-resolved tree is caterpillar_tree (labels <= 1)."""
    return fk.FitchMap(
        ("a", "b", "c", "d"),
        ("1", "2"),
        {
            ("c", "a"): ("1",),
            ("c", "b"): ("1",),
            ("d", "a"): ("1", "2"),
            ("d", "b"): ("1", "2"),
            ("d", "c"): ("2",),
        },
    )


@pytest.fixture
def two_restricted_map():
    """Restriction of one_restricted_map to {a,b,d}: needs a two-color edge."""
    return fk.FitchMap(
        ("a", "b", "d"),
        ("1", "2"),
        {("d", "a"): ("1", "2"), ("d", "b"): ("1", "2")},
    )


@pytest.fixture
def quartet_witness_map():
    """Map whose first forbidden pattern is the four-leaf condition C4."""
    return fk.FitchMap(
        ("a", "b", "c", "d"),
        ("1", "2"),
        {
            ("a", "b"): ("1", "2"),
            ("a", "c"): ("1",),
            ("a", "d"): ("1",),
            ("b", "a"): ("2",),
            ("b", "c"): ("1",),
            ("b", "d"): ("1",),
            ("c", "a"): ("2",),
            ("c", "b"): ("2",),
            ("c", "d"): ("1",),
            ("d", "a"): ("2",),
            ("d", "b"): ("2",),
            ("d", "c"): ("1", "2"),
        },
    )
