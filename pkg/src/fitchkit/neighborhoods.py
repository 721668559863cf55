"""Complementary neighborhoods and the conditions a map must meet.

For a color m and a leaf y, the complementary neighborhood N[m, y] collects
y itself plus every other leaf x whose entry (x, y) misses m.  The distinct
sets arising this way form the neighborhood system of the map.  Three
conditions on that system drive recognition:

* hierarchy-likeness of the system (members pairwise disjoint or nested),
* the inequality condition: for N = N[m, y] and any y' in N, the set
  N[m, y'] is no larger than N,
* the k-bound: at most k colors realize each member other than X.

Index construction keeps the accounting of the recognition algorithm: one
pass over colors then leaves, deduplication bucketed by cardinality, and two
growth guards that fail fast when the system already cannot be
hierarchy-like.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import numpy as np

from .hierarchy import is_hierarchy_like
from .model import SetFamily


@dataclass(frozen=True)
class GuardFailure:
    """Early negative verdict from index construction.

    ``reason`` is "too-many-members" (system exceeded 2|X|-1 members) or
    "too-many-same-size" (members of one cardinality cannot be pairwise
    disjoint).  ``color`` and ``leaf`` identify the insertion that fired.
    """

    reason: str
    color: str
    leaf: str
    size: int


@dataclass(frozen=True, eq=False)
class NeighborhoodIndex:
    """The deduplicated neighborhood system with per-member bookkeeping.

    ``witness`` gives one realizing (color, leaf) pair per member,
    ``label_sets`` the full set of realizing colors, and ``count_by_size``
    the number of members per cardinality.
    """

    system: SetFamily
    witness: Dict[FrozenSet[str], Tuple[str, str]]
    label_sets: Dict[FrozenSet[str], FrozenSet[str]]
    count_by_size: Dict[int, int]


def _complement(fmap):
    """Boolean array c with c[m, x, y] true iff x is in N[m, y]."""
    comp = ~fmap.bits()
    n = fmap.n_leaves
    if n:
        idx = np.arange(n)
        comp[:, idx, idx] = True
    return comp


def neighborhood(fmap, m, y):
    """The complementary neighborhood N[m, y] as a frozenset of leaf names."""
    mi = fmap.color_index(m)
    yi = fmap.leaf_index(y)
    col = ~fmap.bits()[mi, :, yi]
    col = col.copy()
    col[yi] = True
    return frozenset(fmap.leaves[int(xi)] for xi in np.nonzero(col)[0])


def build_index(fmap):
    """Deduplicate all neighborhoods of ``fmap`` into a NeighborhoodIndex.

    Colors and leaves are visited in universe order.  Returns a GuardFailure
    instead of an index as soon as either growth guard fires; both guards
    certify that the system cannot be hierarchy-like, so callers may treat a
    GuardFailure as a negative recognition verdict.
    """
    n, k = fmap.n_leaves, fmap.n_colors
    comp = _complement(fmap)
    sizes = comp.sum(axis=1)
    # packed[m, y] is the bit-packed membership vector of N[m, y]; equal
    # vectors have equal bytes, so same-size buckets dedup by exact content.
    packed = np.packbits(np.ascontiguousarray(comp.transpose(0, 2, 1)), axis=2)

    buckets = {}
    order = []
    witnesses = []
    labels = []
    count_by_size = {}
    limit = 2 * n - 1
    for mi in range(k):
        color = fmap.colors[mi]
        for yi in range(n):
            size = int(sizes[mi, yi])
            key = packed[mi, yi].tobytes()
            bucket = buckets.setdefault(size, {})
            slot = bucket.get(key)
            if slot is None:
                bucket[key] = len(order)
                order.append((mi, yi))
                witnesses.append((color, fmap.leaves[yi]))
                labels.append([color])
                count_by_size[size] = count_by_size.get(size, 0) + 1
                if len(order) > limit:
                    return GuardFailure(
                        "too-many-members", color, fmap.leaves[yi], size
                    )
                if count_by_size[size] * size > n:
                    return GuardFailure(
                        "too-many-same-size", color, fmap.leaves[yi], size
                    )
            else:
                # Colors arrive in non-decreasing universe order per slot.
                acc = labels[slot]
                if acc[-1] != color:
                    acc.append(color)

    members = []
    for mi, yi in order:
        col = comp[mi, :, yi]
        members.append(frozenset(fmap.leaves[int(xi)] for xi in np.nonzero(col)[0]))
    return NeighborhoodIndex(
        system=SetFamily(fmap.leaves, members),
        witness={members[s]: witnesses[s] for s in range(len(members))},
        label_sets={members[s]: frozenset(labels[s]) for s in range(len(members))},
        count_by_size=count_by_size,
    )


def check_hlc(index):
    """Hierarchy-likeness of the neighborhood system."""
    return is_hierarchy_like(index.system)


def check_ic(fmap, index):
    """The inequality condition.

    Returns (True, None) or (False, (m, y, y')) with the first violation in
    color-major, then leaf-order scan: y' lies in N[m, y] but N[m, y'] is
    strictly larger.
    """
    del index  # the scan recomputes sizes directly from the map
    n = fmap.n_leaves
    if n == 0:
        return True, None
    comp = _complement(fmap)
    sizes = comp.sum(axis=1)
    for mi in range(fmap.n_colors):
        srow = sizes[mi]
        crow = comp[mi]
        reach = np.where(crow, srow[:, None], 0).max(axis=0)
        bad = reach > srow
        if bad.any():
            yi = int(np.nonzero(bad)[0][0])
            onto = crow[:, yi] & (srow > srow[yi])
            xi = int(np.nonzero(onto)[0][0])
            return False, (fmap.colors[mi], fmap.leaves[yi], fmap.leaves[xi])
    return True, None


def check_k_elc(index, k):
    """At most k realizing colors per system member other than the universe.

    Returns (True, None) or (False, member) for the first oversize member in
    system order.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    universe = frozenset(index.system.universe)
    for member in index.system.members:
        if member == universe:
            continue
        if len(index.label_sets[member]) > k:
            return False, member
    return True, None
