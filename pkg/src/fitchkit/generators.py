"""Seeded random instances and small exhaustive enumerations.

Random trees refine a star by repeatedly grouping children under a fresh
inner vertex, which keeps every intermediate shape degree-valid.  The
topology distribution is not uniform over shapes; every shape is reachable,
which is all the property tests need.
"""

import random
from itertools import product

import numpy as np

from .errors import InstanceTooLarge
from .model import EdgeLabeledTree, FitchMap


def _color_universe(colors):
    if isinstance(colors, int):
        if colors < 0:
            raise ValueError("color count must be nonnegative")
        return tuple(str(i + 1) for i in range(colors))
    return tuple(colors)


def random_tree(n_leaves, colors, label_density, seed):
    """A seeded random edge-labeled tree on leaves x1..xn.

    ``colors`` is a color count (universe "1".."k") or an explicit universe.
    Each (edge, color) pair enters the label independently with probability
    ``label_density``.  Equal arguments always produce equal trees.
    """
    if n_leaves < 1:
        raise ValueError("need at least one leaf")
    if not 0 <= label_density <= 1:
        raise ValueError("label density must lie in [0, 1]")
    colors = _color_universe(colors)
    rng = random.Random(seed)
    width = len(str(n_leaves))
    names = ["x" + str(i + 1).zfill(width) for i in range(n_leaves)]
    if n_leaves == 1:
        return EdgeLabeledTree(colors, [-1], {0: names[0]})

    parent = [-1] + [0] * n_leaves
    children = {0: list(range(1, n_leaves + 1))}
    for _ in range(rng.randint(0, n_leaves - 2)):
        # Grouping strictly fewer than all children keeps the host vertex
        # with at least two children, so degrees stay valid throughout.
        hosts = sorted(v for v, kids in children.items() if len(kids) >= 3)
        if not hosts:
            break
        v = rng.choice(hosts)
        kids = children[v]
        size = rng.randint(2, len(kids) - 1)
        picked = set(rng.sample(range(len(kids)), size))
        w = len(parent)
        parent.append(v)
        group = [kids[i] for i in sorted(picked)]
        for c in group:
            parent[c] = w
        children[w] = group
        children[v] = [kids[i] for i in range(len(kids)) if i not in picked] + [w]

    labels = {}
    for v in range(1, len(parent)):
        chosen = [m for m in colors if rng.random() < label_density]
        if chosen:
            labels[v] = chosen
    leaf_names = {v: names[v - 1] for v in range(1, n_leaves + 1)}
    return EdgeLabeledTree(colors, parent, leaf_names, labels=labels,
                           leaf_order=names)


def enumerate_maps(n_leaves, n_colors):
    """Every map on up to three leaves named a, b, c and up to two colors.

    Yields all (2^k)^(n(n-1)) maps in lexicographic order over the ordered
    pairs (universe order, first pair most significant).
    """
    if n_leaves < 1:
        raise ValueError("need at least one leaf")
    if n_colors < 0:
        raise ValueError("color count must be nonnegative")
    if n_leaves > 3 or n_colors > 2:
        raise InstanceTooLarge(
            "enumeration is capped at 3 leaves and 2 colors (got %d, %d)"
            % (n_leaves, n_colors)
        )
    leaves = ("a", "b", "c")[:n_leaves]
    colors = ("1", "2")[:n_colors]
    pairs = [
        (xi, yi)
        for xi in range(n_leaves)
        for yi in range(n_leaves)
        if xi != yi
    ]
    for masks in product(range(2 ** n_colors), repeat=len(pairs)):
        bits = np.zeros((n_colors, n_leaves, n_leaves), dtype=bool)
        for (xi, yi), mask in zip(pairs, masks):
            for mi in range(n_colors):
                if mask >> mi & 1:
                    bits[mi, xi, yi] = True
        yield FitchMap._from_bits(leaves, colors, bits)
