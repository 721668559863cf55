"""Core data types: colored maps on leaf pairs, edge-labeled trees, set families.

A map assigns to every ordered pair of distinct leaves (x, y) a subset of a
fixed color universe M.  An edge-labeled tree is a rooted phylogenetic tree
whose non-root vertices carry a color set on the edge to their parent; the
root edge does not exist and therefore carries no label.  Set families and
rooted triples support the hierarchy and consistency machinery built on top.

All types are immutable after construction.  Pair data is stored as a dense
boolean array of shape (|M|, |X|, |X|) so large instances stay cheap.
"""

import numpy as np

from .errors import (
    DegreeViolation,
    DuplicateLeaf,
    DuplicateMember,
    DuplicateName,
    InvalidToken,
    NotSubsetOfUniverse,
    SelfPair,
    UnknownColor,
    UnknownLeaf,
)

# Characters with grammatical meaning in the tree format; names must avoid them.
RESERVED_CHARS = set("(){},:;")


def check_token(name, what="name"):
    """Validate a leaf or color name; return it unchanged."""
    if not isinstance(name, str) or not name:
        raise InvalidToken("%s must be a nonempty string, got %r" % (what, name))
    for ch in name:
        if ch.isspace() or ch in RESERVED_CHARS:
            raise InvalidToken("%s %r contains forbidden character %r" % (what, name, ch))
    return name


def check_universe(names, what="name"):
    """Validate an ordered universe of tokens; return it as a tuple."""
    out = tuple(check_token(n, what) for n in names)
    if len(set(out)) != len(out):
        seen = set()
        for n in out:
            if n in seen:
                raise DuplicateName("%s %r appears more than once" % (what, n))
            seen.add(n)
    return out


class FitchMap:
    """A map from ordered pairs of distinct leaves to color subsets.

    ``leaves`` and ``colors`` fix the universes and their canonical order.
    ``entries`` maps pairs ``(x, y)`` to iterables of colors; missing pairs
    get the empty set.  Entries on a pair ``(x, x)`` are rejected.
    """

    __slots__ = ("leaves", "colors", "_leaf_pos", "_color_pos", "_bits", "_fp")

    def __init__(self, leaves, colors, entries=None):
        self.leaves = check_universe(leaves, "leaf")
        self.colors = check_universe(colors, "color")
        self._leaf_pos = {name: i for i, name in enumerate(self.leaves)}
        self._color_pos = {name: i for i, name in enumerate(self.colors)}
        n, k = len(self.leaves), len(self.colors)
        bits = np.zeros((k, n, n), dtype=bool)
        for (x, y), ms in (entries or {}).items():
            xi = self._require_leaf(x)
            yi = self._require_leaf(y)
            if xi == yi:
                raise SelfPair("entry on pair (%r, %r)" % (x, y))
            for m in ms:
                bits[self._require_color(m), xi, yi] = True
        bits.setflags(write=False)
        self._bits = bits
        self._fp = None

    @classmethod
    def _from_bits(cls, leaves, colors, bits):
        """Trusted constructor from an existing (|M|, |X|, |X|) boolean array."""
        obj = cls.__new__(cls)
        obj.leaves = tuple(leaves)
        obj.colors = tuple(colors)
        obj._leaf_pos = {name: i for i, name in enumerate(obj.leaves)}
        obj._color_pos = {name: i for i, name in enumerate(obj.colors)}
        bits = np.ascontiguousarray(bits, dtype=bool)
        if bits.shape != (len(obj.colors), len(obj.leaves), len(obj.leaves)):
            raise ValueError("bits shape %r does not match universes" % (bits.shape,))
        n = len(obj.leaves)
        if n and bits[:, np.arange(n), np.arange(n)].any():
            raise SelfPair("nonempty entry on the diagonal")
        bits.setflags(write=False)
        obj._bits = bits
        obj._fp = None
        return obj

    def _require_leaf(self, name):
        try:
            return self._leaf_pos[name]
        except KeyError:
            raise UnknownLeaf("unknown leaf %r" % (name,)) from None

    def _require_color(self, name):
        try:
            return self._color_pos[name]
        except KeyError:
            raise UnknownColor("unknown color %r" % (name,)) from None

    @property
    def n_leaves(self):
        return len(self.leaves)

    @property
    def n_colors(self):
        return len(self.colors)

    def leaf_index(self, name):
        return self._require_leaf(name)

    def color_index(self, name):
        return self._require_color(name)

    def bits(self):
        """The underlying read-only boolean array, indexed [color, x, y]."""
        return self._bits

    def entry(self, x, y):
        """The color set of the ordered pair (x, y)."""
        xi = self._require_leaf(x)
        yi = self._require_leaf(y)
        if xi == yi:
            raise SelfPair("pair (%r, %r)" % (x, y))
        col = self._bits[:, xi, yi]
        return frozenset(self.colors[mi] for mi in np.nonzero(col)[0])

    def entries(self):
        """All nonempty entries as a dict {(x, y): frozenset of colors}."""
        out = {}
        any_color = self._bits.any(axis=0)
        for xi, yi in np.argwhere(any_color):
            ms = self._bits[:, xi, yi]
            out[(self.leaves[xi], self.leaves[yi])] = frozenset(
                self.colors[mi] for mi in np.nonzero(ms)[0]
            )
        return out

    def _fingerprint(self):
        # Canonical form is independent of universe order, so renaming-free
        # reorderings of the same map compare and hash equal.
        if self._fp is None:
            lp = sorted(range(self.n_leaves), key=lambda i: self.leaves[i])
            cp = sorted(range(self.n_colors), key=lambda i: self.colors[i])
            b = self._bits[cp, :, :][:, lp, :][:, :, lp]
            self._fp = (
                tuple(sorted(self.leaves)),
                tuple(sorted(self.colors)),
                np.packbits(b).tobytes(),
            )
        return self._fp

    def __eq__(self, other):
        if not isinstance(other, FitchMap):
            return NotImplemented
        if self.leaves == other.leaves and self.colors == other.colors:
            return np.array_equal(self._bits, other._bits)
        return self._fingerprint() == other._fingerprint()

    def __hash__(self):
        return hash(self._fingerprint())

    def __repr__(self):
        return "FitchMap(leaves=%d, colors=%d, entries=%d)" % (
            self.n_leaves,
            self.n_colors,
            int(self._bits.any(axis=0).sum()),
        )


class EdgeLabeledTree:
    """A rooted phylogenetic tree with a color set on every non-root edge.

    ``parents[v]`` is the parent index of vertex ``v`` (-1 for the root),
    ``names`` maps every childless vertex to its leaf name, and ``labels``
    maps non-root vertices to the color set on the edge to their parent.
    Inner vertices need at least two children; the only exception is the
    single-vertex tree, whose root is itself a leaf.

    Children are stored sorted by the smallest leaf name below them, so
    traversal order is canonical and independent of construction order.
    """

    __slots__ = (
        "colors",
        "leaf_names",
        "_parent",
        "_children",
        "_labels",
        "_clusters",
        "_names",
        "_vertex",
        "_root",
        "_depth",
        "_order",
    )

    def __init__(self, colors, parents, names, labels=None, leaf_order=None):
        self.colors = check_universe(colors, "color")
        color_set = set(self.colors)

        parents = list(parents)
        nv = len(parents)
        if nv == 0:
            raise ValueError("a tree needs at least one vertex")
        roots = [v for v, p in enumerate(parents) if p == -1]
        if len(roots) != 1:
            raise ValueError("expected exactly one root, found %d" % len(roots))
        root = roots[0]
        kids = [[] for _ in range(nv)]
        for v, p in enumerate(parents):
            if p == -1:
                continue
            if not (0 <= p < nv) or p == v:
                raise ValueError("vertex %d has invalid parent %r" % (v, p))
            kids[p].append(v)

        # Reachability from the root rules out cycles among non-root vertices.
        order = [root]
        for v in order:
            order.extend(kids[v])
        if len(order) != nv:
            raise ValueError("parent array does not describe a connected tree")

        leaves = [v for v in range(nv) if not kids[v]]
        names = dict(names)
        if set(names) != set(leaves):
            raise ValueError("names must cover exactly the childless vertices")
        seen = set()
        for v in leaves:
            name = check_token(names[v], "leaf")
            if name in seen:
                raise DuplicateLeaf("leaf name %r used twice" % (name,))
            seen.add(name)

        leaf_set = set(leaves)
        if nv > 1:
            for v in range(nv):
                if v not in leaf_set and len(kids[v]) < 2:
                    raise DegreeViolation(
                        "inner vertex %d has %d children, needs at least 2"
                        % (v, len(kids[v]))
                    )

        label_map = {}
        for v, ms in (labels or {}).items():
            if not (0 <= v < nv):
                raise ValueError("label on unknown vertex %r" % (v,))
            ms = frozenset(ms)
            for m in ms:
                if m not in color_set:
                    raise UnknownColor("unknown color %r in edge label" % (m,))
            if v == root:
                if ms:
                    raise ValueError("the root has no parent edge to label")
                continue
            label_map[v] = ms

        clusters = [None] * nv
        for v in reversed(order):
            if not kids[v]:
                clusters[v] = frozenset((names[v],))
            else:
                acc = set()
                for c in kids[v]:
                    acc.update(clusters[c])
                clusters[v] = frozenset(acc)
        for v in range(nv):
            kids[v].sort(key=lambda c: min(clusters[c]))

        depth = [0] * nv
        canon = [root]
        for v in canon:
            for c in kids[v]:
                depth[c] = depth[v] + 1
                canon.append(c)

        leaf_names = tuple(sorted(seen)) if leaf_order is None else tuple(leaf_order)
        if sorted(leaf_names) != sorted(seen):
            raise ValueError("leaf_order is not a permutation of the leaf names")

        self._parent = tuple(parents)
        self._children = tuple(tuple(k) for k in kids)
        self._labels = tuple(label_map.get(v, frozenset()) for v in range(nv))
        self._clusters = tuple(clusters)
        self._names = {v: names[v] for v in leaves}
        self._vertex = {names[v]: v for v in leaves}
        self._root = root
        self._depth = tuple(depth)
        self._order = tuple(canon)
        self.leaf_names = leaf_names

    @property
    def root(self):
        return self._root

    @property
    def n_vertices(self):
        return len(self._parent)

    @property
    def n_leaves(self):
        return len(self._names)

    def parent(self, v):
        return self._parent[v]

    def children(self, v):
        return self._children[v]

    def is_leaf(self, v):
        return not self._children[v]

    def name_of(self, v):
        return self._names[v]

    def vertex_of(self, name):
        try:
            return self._vertex[name]
        except KeyError:
            raise UnknownLeaf("unknown leaf %r" % (name,)) from None

    def label(self, v):
        """Color set on the edge from ``v``'s parent to ``v`` (empty at the root)."""
        return self._labels[v]

    def cluster(self, v):
        """Leaf names below ``v`` (inclusive), as a frozenset."""
        return self._clusters[v]

    def depth(self, v):
        return self._depth[v]

    def preorder(self):
        """Vertices root-first, children in canonical order."""
        return self._order

    def __eq__(self, other):
        # Clusters are pairwise distinct in a phylogenetic tree, so the
        # cluster-to-label dict determines the tree up to vertex numbering.
        if not isinstance(other, EdgeLabeledTree):
            return NotImplemented
        if set(self.leaf_names) != set(other.leaf_names):
            return False
        if set(self.colors) != set(other.colors):
            return False
        mine = {self._clusters[v]: self._labels[v] for v in range(self.n_vertices)}
        theirs = {
            other._clusters[v]: other._labels[v] for v in range(other.n_vertices)
        }
        return mine == theirs

    def __hash__(self):
        items = frozenset(
            (self._clusters[v], self._labels[v]) for v in range(self.n_vertices)
        )
        return hash((frozenset(self.colors), items))

    def __repr__(self):
        return "EdgeLabeledTree(leaves=%d, vertices=%d, colors=%d)" % (
            self.n_leaves,
            self.n_vertices,
            len(self.colors),
        )


def lca(tree, names):
    """The vertex of ``tree`` that is the least common ancestor of ``names``."""
    names = list(names)
    if not names:
        raise ValueError("lca of an empty leaf set is undefined")
    v = tree.vertex_of(names[0])
    for name in names[1:]:
        w = tree.vertex_of(name)
        while v != w:
            if tree.depth(v) >= tree.depth(w):
                v = tree.parent(v)
            else:
                w = tree.parent(w)
    return v


class SetFamily:
    """A family of distinct subsets of a finite universe.

    Member order follows construction order; members are frozensets.  The
    empty set is representable here and rejected only by operations whose
    contract requires nonempty members.
    """

    __slots__ = ("universe", "members", "_member_set")

    def __init__(self, universe, members):
        self.universe = check_universe(universe, "element")
        scope = set(self.universe)
        out = []
        seen = set()
        for member in members:
            member = frozenset(member)
            extra = member - scope
            if extra:
                raise NotSubsetOfUniverse(
                    "member contains %r outside the universe" % (sorted(extra)[0],)
                )
            if member in seen:
                raise DuplicateMember("member %r listed twice" % (sorted(member),))
            seen.add(member)
            out.append(member)
        self.members = tuple(out)
        self._member_set = frozenset(out)

    def __contains__(self, member):
        return frozenset(member) in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (
            set(self.universe) == set(other.universe)
            and self._member_set == other._member_set
        )

    def __hash__(self):
        return hash((frozenset(self.universe), self._member_set))

    def __repr__(self):
        return "SetFamily(universe=%d, members=%d)" % (
            len(self.universe),
            len(self.members),
        )


class RootedTriple:
    """A rooted triple ab|c: leaves a and b are closer to each other than to c."""

    __slots__ = ("pair", "outgroup")

    def __init__(self, a, b, c):
        if len({a, b, c}) != 3:
            raise ValueError("a rooted triple needs three distinct leaves")
        self.pair = frozenset((a, b))
        self.outgroup = c

    def __eq__(self, other):
        if not isinstance(other, RootedTriple):
            return NotImplemented
        return self.pair == other.pair and self.outgroup == other.outgroup

    def __hash__(self):
        return hash((self.pair, self.outgroup))

    def __str__(self):
        a, b = sorted(self.pair)
        return "%s,%s|%s" % (a, b, self.outgroup)

    def __repr__(self):
        return "RootedTriple(%s)" % (self,)


def tree_clusters(tree):
    """All clusters of ``tree`` as a set family over its leaf names."""
    return SetFamily(
        sorted(tree.leaf_names), (tree.cluster(v) for v in tree.preorder())
    )


def displayed_triples(tree):
    """All rooted triples ab|c displayed by ``tree``.

    ab|c is displayed exactly when some cluster contains a and b but not c.
    """
    leaves = set(tree.leaf_names)
    out = set()
    for v in tree.preorder():
        cl = tree.cluster(v)
        if len(cl) < 2 or cl == leaves:
            continue
        inside = sorted(cl)
        outside = sorted(leaves - cl)
        for i, a in enumerate(inside):
            for b in inside[i + 1 :]:
                for c in outside:
                    out.add(RootedTriple(a, b, c))
    return frozenset(out)
