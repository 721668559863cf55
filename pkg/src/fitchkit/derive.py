"""From trees to maps: derivation, recoloring, and rooted triples.

A tree derives the map that sends (x, y) to the union of edge labels along
the path from lca(x, y) down to y.  The fast path exploits that this set is
determined by the lowest m-labeled edge above y: color m reaches y from x
exactly when x lies outside the cluster under that edge.  A naive per-pair
path walk is kept as an oracle mode.
"""

import numpy as np

from .errors import (
    EmptyMember,
    NotAPartition,
    PartNotSubsetOfM,
    TooFewLeaves,
)
from .model import (
    EdgeLabeledTree,
    FitchMap,
    RootedTriple,
    check_universe,
    lca,
)
from .neighborhoods import _complement


def _map_of_tree_fast(tree):
    n = tree.n_leaves
    k = len(tree.colors)
    leaf_pos = {name: i for i, name in enumerate(tree.leaf_names)}
    color_pos = {name: i for i, name in enumerate(tree.colors)}

    nv = tree.n_vertices
    member = np.zeros((nv, n), dtype=bool)
    order = tree.preorder()
    for v in reversed(order):
        if tree.is_leaf(v):
            member[v, leaf_pos[tree.name_of(v)]] = True
        else:
            for c in tree.children(v):
                member[v] |= member[c]

    label_idx = [
        [color_pos[m] for m in tree.label(v)] for v in range(nv)
    ]

    bits = np.zeros((k, n, n), dtype=bool)
    # Iterative depth-first walk keeping, per color, the lower endpoint of
    # the deepest edge carrying that color on the current root path.
    lowest = np.full(k, tree.root, dtype=np.intp)
    stack = [(tree.root, iter(tree.children(tree.root)), [])]
    while stack:
        v, it, saved = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            for mi, old in saved:
                lowest[mi] = old
            continue
        undo = []
        for mi in label_idx[child]:
            undo.append((mi, lowest[mi]))
            lowest[mi] = child
        if tree.is_leaf(child):
            yi = leaf_pos[tree.name_of(child)]
            # x outside the cluster under the deepest m-edge receives m.
            bits[:, :, yi] = ~member[lowest]
            for mi, old in undo:
                lowest[mi] = old
        else:
            stack.append((child, iter(tree.children(child)), undo))
    return FitchMap._from_bits(tree.leaf_names, tree.colors, bits)


def _map_of_tree_naive(tree):
    names = tree.leaf_names
    entries = {}
    for y in names:
        vy = tree.vertex_of(y)
        for x in names:
            if x == y:
                continue
            top = lca(tree, (x, y))
            acc = set()
            v = vy
            while v != top:
                acc |= tree.label(v)
                v = tree.parent(v)
            if acc:
                entries[(x, y)] = acc
    return FitchMap(names, tree.colors, entries)


def map_of_tree(tree, naive=False):
    """The map derived by ``tree``: (x, y) collects the labels on lca(x,y)->y.

    The default path runs in O(|X|^2 |M| / w) array work plus one tree walk;
    ``naive=True`` walks every pair's path separately (test oracle).
    """
    if naive:
        return _map_of_tree_naive(tree)
    return _map_of_tree_fast(tree)


def explains(tree, fmap):
    """Whether ``tree`` derives exactly the entries of ``fmap``.

    The tree may use fewer colors than the map declares; entries must agree
    as sets.
    """
    if set(tree.leaf_names) != set(fmap.leaves):
        return False
    return map_of_tree(tree).entries() == fmap.entries()


class RecoloringScheme:
    """An ordered collection of color groups used to rewrite color universes.

    Each part is a nonempty color set; output color i fires wherever the
    original set meets part i.  Parts may overlap and need not cover the
    universe unless ``partition=True``, which additionally requires pairwise
    disjoint parts whose union is the full universe of the recolored object.
    """

    __slots__ = ("parts", "output_colors", "partition")

    def __init__(self, parts, output_colors=None, partition=False):
        self.parts = tuple(frozenset(part) for part in parts)
        for part in self.parts:
            if not part:
                raise EmptyMember("recoloring parts must be nonempty")
        if output_colors is None:
            output_colors = tuple(str(i + 1) for i in range(len(self.parts)))
        self.output_colors = check_universe(output_colors, "color")
        if len(self.output_colors) != len(self.parts):
            raise ValueError("need exactly one output color per part")
        self.partition = bool(partition)
        if self.partition:
            seen = set()
            for part in self.parts:
                if part & seen:
                    raise NotAPartition("parts overlap")
                seen |= part

    def _check_against(self, colors):
        universe = set(colors)
        covered = set()
        for part in self.parts:
            extra = part - universe
            if extra:
                raise PartNotSubsetOfM(
                    "part color %r is not in the universe" % (sorted(extra)[0],)
                )
            covered |= part
        if self.partition and covered != universe:
            raise NotAPartition("parts do not cover the color universe")

    def part_indices(self, colors):
        """Per part, the positions of its colors within ``colors``."""
        self._check_against(colors)
        pos = {m: i for i, m in enumerate(colors)}
        return [sorted(pos[m] for m in part) for part in self.parts]


def recolor_map(fmap, scheme):
    """The recolored map: output color i is present iff the entry meets part i."""
    groups = scheme.part_indices(fmap.colors)
    n = fmap.n_leaves
    bits = np.zeros((len(groups), n, n), dtype=bool)
    for i, idxs in enumerate(groups):
        bits[i] = fmap.bits()[idxs].any(axis=0)
    return FitchMap._from_bits(fmap.leaves, scheme.output_colors, bits)


def recolor_tree(tree, scheme):
    """Same topology, every edge label rewritten through the scheme."""
    scheme._check_against(tree.colors)
    parents = [tree.parent(v) for v in range(tree.n_vertices)]
    names = {v: tree.name_of(v) for v in range(tree.n_vertices) if tree.is_leaf(v)}
    labels = {}
    for v in range(tree.n_vertices):
        if v == tree.root:
            continue
        old = tree.label(v)
        labels[v] = frozenset(
            scheme.output_colors[i]
            for i, part in enumerate(scheme.parts)
            if old & part
        )
    return EdgeLabeledTree(
        scheme.output_colors, parents, names, labels=labels,
        leaf_order=tree.leaf_names,
    )


def triples_of_map(fmap):
    """All rooted triples ab|c with a, b inside some neighborhood and c outside.

    Defined for every map; for maps derived from a tree this equals the
    triple set displayed by the least-resolved tree.
    """
    n = fmap.n_leaves
    if n < 3:
        raise TooFewLeaves("triples need at least three leaves")
    comp = _complement(fmap)
    seen = set()
    members = []
    packed = np.packbits(np.ascontiguousarray(comp.transpose(0, 2, 1)), axis=2)
    for mi in range(fmap.n_colors):
        for yi in range(n):
            key = packed[mi, yi].tobytes()
            if key in seen:
                continue
            seen.add(key)
            members.append(frozenset(
                fmap.leaves[int(xi)] for xi in np.nonzero(comp[mi, :, yi])[0]
            ))
    out = set()
    everything = set(fmap.leaves)
    for member in members:
        if len(member) < 2 or len(member) == n:
            continue
        inside = sorted(member)
        outside = sorted(everything - member)
        for i, a in enumerate(inside):
            for b in inside[i + 1 :]:
                for c in outside:
                    out.add(RootedTriple(a, b, c))
    return frozenset(out)
