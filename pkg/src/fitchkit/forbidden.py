"""Forbidden-pattern characterization of maps no tree can derive.

A map cannot be derived by any tree exactly when it contains one of five
small entry patterns on three or four leaves and up to two colors.  The
patterns are existential over entries (not induced submaps): unconstrained
entries cannot rescue a map once a pattern is present.  The scan here is
the quadratic-oracle counterpart to recognition and reports the first
witness in a fixed deterministic order.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Tuple

from .errors import UnknownColor, UnknownLeaf
from .model import FitchMap

CONDITIONS = ("C1", "C2a", "C2b", "C3", "C4")


@dataclass(frozen=True)
class ForbiddenWitness:
    """A located pattern: condition name, leaf tuple, color pair.

    C1 uses one color (the pair repeats it); C2a and C2b allow equal
    colors; C3 and C4 require two distinct colors.  C4 uses four leaves,
    the rest three.
    """

    condition: str
    leaves: Tuple[str, ...]
    colors: Tuple[str, str]


def _holds(bits, condition, leaf_idx, color_idx):
    m, mp = color_idx
    if condition == "C1":
        a, b, c = leaf_idx
        return bits[m, c, b] and not bits[m, a, b] and not bits[m, c, a]
    if condition == "C2a":
        a, b, c = leaf_idx
        return (
            bits[m, c, b]
            and not bits[m, a, b]
            and not bits[mp, a, c]
            and bits[mp, b, c]
        )
    if condition == "C2b":
        a, b, c = leaf_idx
        return (
            bits[m, c, b]
            and not bits[m, a, b]
            and bits[mp, a, c]
            and not bits[mp, b, c]
        )
    if condition == "C3":
        a, b, c = leaf_idx
        return (
            m != mp
            and bits[m, c, b]
            and not bits[m, a, b]
            and not bits[mp, c, b]
            and bits[mp, a, b]
        )
    if condition == "C4":
        a, b, c, d = leaf_idx
        return (
            m != mp
            and bits[m, c, b]
            and not bits[m, a, b]
            and not bits[mp, b, d]
            and not bits[mp, c, d]
            and bits[mp, a, d]
        )
    raise ValueError("unknown condition %r" % (condition,))


def find_forbidden_witness(fmap):
    """The first forbidden pattern in the map, or None.

    Scan order: condition C1 < C2a < C2b < C3 < C4; within a condition,
    leaf tuples lexicographically by universe position, then color pairs
    likewise.  Present iff no tree derives the map.
    """
    bits = fmap.bits()
    n, k = fmap.n_leaves, fmap.n_colors
    leaf_range = range(n)
    color_range = range(k)
    for condition in CONDITIONS:
        arity = 4 if condition == "C4" else 3
        if n < arity:
            continue
        single_color = condition == "C1"
        for leaf_idx in permutations(leaf_range, arity):
            for m in color_range:
                if single_color:
                    if _holds(bits, condition, leaf_idx, (m, m)):
                        return ForbiddenWitness(
                            condition,
                            tuple(fmap.leaves[i] for i in leaf_idx),
                            (fmap.colors[m], fmap.colors[m]),
                        )
                    continue
                for mp in color_range:
                    if _holds(bits, condition, leaf_idx, (m, mp)):
                        return ForbiddenWitness(
                            condition,
                            tuple(fmap.leaves[i] for i in leaf_idx),
                            (fmap.colors[m], fmap.colors[mp]),
                        )
    return None


def verify_witness(fmap, witness):
    """Re-check a witness's predicate against the map's entries."""
    if witness.condition not in CONDITIONS:
        raise ValueError("unknown condition %r" % (witness.condition,))
    arity = 4 if witness.condition == "C4" else 3
    if len(witness.leaves) != arity:
        raise ValueError(
            "%s needs %d leaves, got %d"
            % (witness.condition, arity, len(witness.leaves))
        )
    leaf_idx = tuple(fmap.leaf_index(x) for x in witness.leaves)
    color_idx = tuple(fmap.color_index(m) for m in witness.colors)
    if len(set(leaf_idx)) != arity:
        return False
    return bool(_holds(fmap.bits(), witness.condition, leaf_idx, color_idx))


def restrict_map(fmap, leaves, colors=None):
    """The submap induced by a leaf subset, optionally cut to a color subset.

    Entries are intersected with the kept colors; universe order follows the
    source map.
    """
    for x in leaves:
        fmap.leaf_index(x)
    keep_leaves = set(leaves)
    if colors is None:
        keep_colors = set(fmap.colors)
    else:
        for m in colors:
            fmap.color_index(m)
        keep_colors = set(colors)
    sub_leaves = [x for x in fmap.leaves if x in keep_leaves]
    sub_colors = [m for m in fmap.colors if m in keep_colors]
    li = [fmap.leaf_index(x) for x in sub_leaves]
    ci = [fmap.color_index(m) for m in sub_colors]
    bits = fmap.bits()[ci][:, li][:, :, li]
    return FitchMap._from_bits(sub_leaves, sub_colors, bits)
