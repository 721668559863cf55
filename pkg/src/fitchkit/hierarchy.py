"""Hierarchy-like set families and the correspondence with rooted trees.

A family is hierarchy-like when every two members are disjoint or nested.
A hierarchy additionally contains the universe and all singletons; those are
exactly the cluster sets of rooted phylogenetic trees, and the tree can be
rebuilt from them.

The fast test sorts members by non-increasing cardinality and sweeps once,
keeping for every element the most recently processed member containing it.
Distinct nonempty laminar members over an n-element universe number at most
2n-1, so larger families fail immediately; a witness pair is then recovered
by sweeping just the first 2n members.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import EmptyMember, NotAHierarchy
from .model import EdgeLabeledTree, SetFamily


@dataclass(frozen=True)
class HierarchyVerdict:
    """Outcome of the hierarchy-like test.

    ``violation`` holds indices (i, j), i < j, into the family's member
    tuple exactly when the verdict is negative; the two cited members then
    overlap without either containing the other.
    """

    is_hierarchy_like: bool
    violation: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.is_hierarchy_like == (self.violation is not None):
            raise ValueError("violation must be present iff the verdict is negative")


def _check_nonempty(family):
    for member in family.members:
        if not member:
            raise EmptyMember("set family contains the empty set")


def _size_desc(indices, members):
    """Indices bucket-sorted by non-increasing member size, stable within ties."""
    buckets = {}
    for i in indices:
        buckets.setdefault(len(members[i]), []).append(i)
    out = []
    for size in sorted(buckets, reverse=True):
        out.extend(buckets[size])
    return out


def _phi_sweep(pos_of, members, indices):
    """Single laminarity sweep over ``indices`` (given in size-descending order).

    Returns None if the selected members are laminar, else an index pair
    (i, j) of two properly overlapping members, i < j in original order.
    """
    phi = [0] * len(pos_of)  # 1-based position in the sweep, 0 = untouched
    swept = []
    for i in indices:
        member = members[i]
        last = max(phi[pos_of[x]] for x in member)
        if last:
            j = swept[last - 1]
            if not member <= members[j]:
                # members[j] is the most recent member meeting ``member``;
                # it is at least as large, so the overlap is proper.
                return (j, i) if j < i else (i, j)
        swept.append(i)
        mark = len(swept)
        for x in member:
            phi[pos_of[x]] = mark
    return None


def _naive_violation(members, indices):
    """All-pairs scan; first violating index pair in lexicographic order."""
    for a, i in enumerate(indices):
        for j in indices[a + 1 :]:
            inter = members[i] & members[j]
            if inter and inter != members[i] and inter != members[j]:
                return (i, j) if i < j else (j, i)
    return None


def is_hierarchy_like(family, naive=False):
    """Decide whether every two members are disjoint or nested.

    The default mode runs the sorted single sweep in O(|family| * |universe|);
    ``naive=True`` runs the quadratic all-pairs scan used as a test oracle.
    Verdicts always agree; the cited witness pair may differ.
    """
    _check_nonempty(family)
    members = family.members
    if len(members) <= 1:
        return HierarchyVerdict(True)
    pos_of = {x: i for i, x in enumerate(family.universe)}
    n = len(family.universe)

    if naive:
        violation = _naive_violation(members, list(range(len(members))))
        return HierarchyVerdict(violation is None, violation)

    if len(members) > 2 * n - 1:
        # Too many distinct nonempty members to be laminar; any 2n of them
        # already contain a proper overlap, so a prefix sweep finds one.
        prefix = list(range(2 * n))
        violation = _phi_sweep(pos_of, members, _size_desc(prefix, members))
        if violation is None:
            violation = _naive_violation(members, prefix)
        if violation is None:
            raise AssertionError("laminar family exceeded the 2n-1 bound")
        return HierarchyVerdict(False, violation)

    order = _size_desc(range(len(members)), members)
    violation = _phi_sweep(pos_of, members, order)
    return HierarchyVerdict(violation is None, violation)


def is_hierarchy(family, naive=False):
    """True iff hierarchy-like and containing the universe and all singletons."""
    if not is_hierarchy_like(family, naive=naive).is_hierarchy_like:
        return False
    universe = frozenset(family.universe)
    if universe not in family:
        return False
    return all(frozenset((x,)) in family for x in family.universe)


def _tree_from_members(universe, members, label_of=None, colors=(), leaf_order=None):
    """Build the tree whose cluster set is ``members`` (assumed a hierarchy).

    ``label_of`` optionally assigns a color set to the edge above each
    member's vertex.  One vertex per member; the parent of a member is its
    smallest strict superset, found during a size-descending sweep.
    """
    pos_of = {x: i for i, x in enumerate(universe)}
    order = _size_desc(range(len(members)), members)
    vertex_at = [0] * len(members)  # member index -> vertex id, in sweep order
    parents = []
    names = {}
    proc = [-1] * len(universe)  # element -> vertex of the last member containing it
    for v, i in enumerate(order):
        member = members[i]
        vertex_at[i] = v
        first = next(iter(member))
        parents.append(proc[pos_of[first]])
        if len(member) == 1:
            names[v] = first
        for x in member:
            proc[pos_of[x]] = v
    labels = None
    if label_of is not None:
        labels = {vertex_at[i]: label_of(members[i]) for i in range(len(members))}
    return EdgeLabeledTree(
        colors, parents, names, labels=labels, leaf_order=leaf_order
    )


def tree_from_hierarchy(family):
    """The unique phylogenetic tree whose cluster set equals ``family``.

    The family must be a hierarchy; all edge labels of the result are empty
    and its color universe is empty.
    """
    verdict = is_hierarchy_like(family)
    if not verdict.is_hierarchy_like:
        raise NotAHierarchy(
            "two members overlap without nesting", violation=verdict.violation
        )
    universe = frozenset(family.universe)
    if universe not in family:
        raise NotAHierarchy("the universe itself is not a member")
    for x in family.universe:
        if frozenset((x,)) not in family:
            raise NotAHierarchy("singleton {%s} is not a member" % (x,))
    return _tree_from_members(
        family.universe, family.members, leaf_order=family.universe
    )
