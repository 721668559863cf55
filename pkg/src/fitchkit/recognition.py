"""Map recognition and the least-resolved explaining tree.

A map is recognized by building its neighborhood index, checking that the
system is hierarchy-like and that the inequality condition holds, and then
assembling the tree whose clusters are the system members plus the universe
and all singletons.  The edge above a cluster carries exactly the colors
that realize it as a neighborhood.  That tree explains the map and is the
unique least-resolved tree doing so, which the verification and brute-force
operations below check from independent definitions.
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from .errors import (
    InstanceTooLarge,
    TooFewLeaves,
    TreeDoesNotExplainMap,
    UniverseMismatch,
)
from .hierarchy import _tree_from_members
from .model import EdgeLabeledTree
from .neighborhoods import (
    GuardFailure,
    build_index,
    check_hlc,
    check_ic,
    check_k_elc,
)


def _format_member(member):
    return "{%s}" % ",".join(sorted(member))


@dataclass(frozen=True)
class NotFitchReason:
    """Why recognition rejected a map.

    ``kind`` is "guard" (index construction failed fast), "hlc" (two
    neighborhoods overlap without nesting) or "ic" (a neighborhood contains
    a leaf with a strictly larger neighborhood for the same color).
    """

    kind: str
    guard: Optional[GuardFailure] = None
    hlc_pair: Optional[Tuple[frozenset, frozenset]] = None
    ic_violation: Optional[Tuple[str, str, str]] = None

    def describe(self):
        """One-line machine-readable rendering, stable across runs."""
        if self.kind == "guard":
            g = self.guard
            return "GUARD %s %s %s" % (g.reason, g.color, g.leaf)
        if self.kind == "hlc":
            a, b = self.hlc_pair
            return "HLC %s %s" % (_format_member(a), _format_member(b))
        m, y, yp = self.ic_violation
        return "IC %s %s %s" % (m, y, yp)


@dataclass(frozen=True)
class RecognitionResult:
    """Verdict of recognize(): the tree is present exactly on acceptance."""

    is_fitch: bool
    tree: Optional[EdgeLabeledTree] = None
    reason: Optional[NotFitchReason] = None

    def __post_init__(self):
        if self.is_fitch and (self.tree is None or self.reason is not None):
            raise ValueError("positive verdicts carry a tree and no reason")
        if not self.is_fitch and (self.tree is not None or self.reason is None):
            raise ValueError("negative verdicts carry a reason and no tree")


def _eps_tree(fmap, index):
    """The tree for a map that passed all checks.

    Clusters are the system members plus the full leaf set and every
    singleton; the edge above a member carries its realizing colors.  The
    full leaf set never labels an edge because it sits at the root.
    """
    universe = frozenset(fmap.leaves)
    members = list(index.system.members)
    present = set(members)
    if universe not in present:
        members.append(universe)
        present.add(universe)
    for x in fmap.leaves:
        single = frozenset((x,))
        if single not in present:
            members.append(single)
            present.add(single)

    def label_of(member):
        if member == universe:
            return frozenset()
        return index.label_sets.get(member, frozenset())

    return _tree_from_members(
        fmap.leaves, members, label_of=label_of,
        colors=fmap.colors, leaf_order=fmap.leaves,
    )


def recognize(fmap):
    """Decide whether some edge-labeled tree derives ``fmap``.

    On acceptance the result carries the unique least-resolved such tree;
    on rejection it carries the first failed check in guard, hierarchy,
    inequality order.  Runs in O(|X|^2 |M|).
    """
    if fmap.n_leaves == 0:
        raise TooFewLeaves("a map needs at least one leaf")
    index = build_index(fmap)
    if isinstance(index, GuardFailure):
        return RecognitionResult(False, reason=NotFitchReason("guard", guard=index))
    verdict = check_hlc(index)
    if not verdict.is_hierarchy_like:
        i, j = verdict.violation
        pair = (index.system.members[i], index.system.members[j])
        return RecognitionResult(False, reason=NotFitchReason("hlc", hlc_pair=pair))
    ok, violation = check_ic(fmap, index)
    if not ok:
        return RecognitionResult(
            False, reason=NotFitchReason("ic", ic_violation=violation)
        )
    return RecognitionResult(True, tree=_eps_tree(fmap, index))


def is_coarse_graining(fine, coarse):
    """Whether ``coarse`` keeps a subset of clusters and, clusterwise, labels.

    Both trees must share leaf and color universes.  Two trees are
    isomorphic exactly when each is a coarse-graining of the other.
    """
    if set(fine.leaf_names) != set(coarse.leaf_names):
        raise UniverseMismatch("trees are on different leaf sets")
    if set(fine.colors) != set(coarse.colors):
        raise UniverseMismatch("trees are on different color universes")
    fine_label = {fine.cluster(v): fine.label(v) for v in fine.preorder()}
    for v in coarse.preorder():
        cl = coarse.cluster(v)
        if cl not in fine_label:
            return False
        if v != coarse.root and not coarse.label(v) <= fine_label[cl]:
            return False
    return True


def trees_isomorphic(left, right):
    """Equality up to vertex renumbering: mutual coarse-graining."""
    return is_coarse_graining(left, right) and is_coarse_graining(right, left)


def _has_label_free_path(tree, v, m):
    """Is some leaf below ``v`` reachable without crossing an m-labeled edge?"""
    stack = [v]
    while stack:
        u = stack.pop()
        if tree.is_leaf(u):
            return True
        for c in tree.children(u):
            if m not in tree.label(c):
                stack.append(c)
    return False


def is_least_resolved(tree, fmap):
    """Whether no strict coarse-graining of ``tree`` still derives ``fmap``.

    The tree must derive the map to begin with.  Equivalent to: every inner
    edge has a nonempty label, and every color on any edge can be avoided on
    some path from the edge's lower end down to a leaf.
    """
    from .derive import explains

    if not explains(tree, fmap):
        raise TreeDoesNotExplainMap("the given tree does not derive the given map")
    for v in tree.preorder():
        if v == tree.root:
            continue
        if not tree.is_leaf(v) and not tree.label(v):
            return False
        for m in tree.label(v):
            if not _has_label_free_path(tree, v, m):
                return False
    return True


def is_k_restricted(fmap, k):
    """Is the map derived by some tree with at most k colors per edge?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    index = build_index(fmap)
    if isinstance(index, GuardFailure):
        return False
    if not check_hlc(index).is_hierarchy_like:
        return False
    ok, _ = check_ic(fmap, index)
    if not ok:
        return False
    return check_k_elc(index, k)[0]


def _partitions(elems):
    """All partitions of a tuple into nonempty blocks, deterministic order."""
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for count in range(2 ** len(rest)):
        mates = tuple(rest[i] for i in range(len(rest)) if count >> i & 1)
        others = tuple(rest[i] for i in range(len(rest)) if not count >> i & 1)
        block = (first,) + mates
        for tail in _partitions(others):
            yield [block] + tail


def _topologies(leaves):
    """All hierarchies on ``leaves``, each as a list of clusters."""
    if len(leaves) == 1:
        yield [frozenset(leaves)]
        return
    whole = frozenset(leaves)
    for blocks in _partitions(tuple(leaves)):
        if len(blocks) < 2:
            continue
        subtrees = [list(_topologies(block)) for block in blocks]
        for choice in product(*subtrees):
            members = [whole]
            for sub in choice:
                members.extend(sub)
            yield members


def _canonical_key(tree):
    return tuple(
        sorted(
            (tuple(sorted(tree.cluster(v))), tuple(sorted(tree.label(v))))
            for v in tree.preorder()
        )
    )


def enumerate_explaining_trees(fmap, max_leaves=6):
    """Every edge-labeled tree on the map's leaves that derives the map.

    Brute force over all topologies and all labelings with color subsets;
    intended as a test oracle for small instances only.
    """
    n, k = fmap.n_leaves, fmap.n_colors
    if n > max_leaves or n > 6 or k > 3:
        raise InstanceTooLarge(
            "enumeration is capped at 6 leaves and 3 colors (got %d, %d)" % (n, k)
        )
    if n == 0:
        raise TooFewLeaves("a map needs at least one leaf")

    leaves = fmap.leaves
    pos = {x: i for i, x in enumerate(leaves)}
    target = {}
    for xi in range(n):
        for yi in range(n):
            if xi == yi:
                continue
            mask = 0
            for mi in range(k):
                if fmap.bits()[mi, xi, yi]:
                    mask |= 1 << mi
            target[(xi, yi)] = mask

    results = []
    for members in _topologies(leaves):
        base = _tree_from_members(leaves, members, colors=fmap.colors,
                                  leaf_order=leaves)
        inner = [v for v in base.preorder() if v != base.root]
        # Edge (par(v), v) lies on the path lca(x, y) -> y exactly when the
        # cluster below v separates y from x.
        pair_edges = {}
        for (xi, yi) in target:
            hits = []
            for e, v in enumerate(inner):
                cl = base.cluster(v)
                if leaves[yi] in cl and leaves[xi] not in cl:
                    hits.append(e)
            pair_edges[(xi, yi)] = hits

        for assignment in product(range(2 ** k), repeat=len(inner)):
            good = True
            for pair, hits in pair_edges.items():
                mask = 0
                for e in hits:
                    mask |= assignment[e]
                if mask != target[pair]:
                    good = False
                    break
            if not good:
                continue
            edge_label = {
                base.cluster(inner[e]): frozenset(
                    fmap.colors[mi] for mi in range(k) if assignment[e] >> mi & 1
                )
                for e in range(len(inner))
            }
            results.append(
                _tree_from_members(
                    leaves, members,
                    label_of=lambda c: edge_label.get(c, frozenset()),
                    colors=fmap.colors, leaf_order=leaves,
                )
            )
    results.sort(key=_canonical_key)
    return results
