"""Multi-colored maps on leaf pairs and the trees that explain them.

The package recognizes maps that arise from edge-labeled rooted trees,
builds the unique least-resolved explaining tree, derives maps from trees,
recolors both, extracts rooted triples, and ships brute-force oracles for
exhaustive verification on small instances.
"""

from .derive import (
    RecoloringScheme,
    explains,
    map_of_tree,
    recolor_map,
    recolor_tree,
    triples_of_map,
)
from .errors import (
    DegreeViolation,
    DuplicateEntry,
    DuplicateLeaf,
    DuplicateMember,
    DuplicateName,
    EmptyMember,
    FitchkitError,
    InstanceTooLarge,
    InvalidToken,
    NotAHierarchy,
    NotAPartition,
    NotSubsetOfUniverse,
    ParseError,
    PartNotSubsetOfM,
    SelfPair,
    TooFewLeaves,
    TreeDoesNotExplainMap,
    UniverseMismatch,
    UnknownColor,
    UnknownLeaf,
    UnknownName,
)
from .forbidden import (
    ForbiddenWitness,
    find_forbidden_witness,
    restrict_map,
    verify_witness,
)
from .generators import enumerate_maps, random_tree
from .hierarchy import (
    HierarchyVerdict,
    is_hierarchy,
    is_hierarchy_like,
    tree_from_hierarchy,
)
from .io_formats import (
    parse_map,
    parse_scheme,
    parse_set_family,
    parse_tree,
    print_map,
    print_set_family,
    print_tree,
)
from .model import (
    EdgeLabeledTree,
    FitchMap,
    RootedTriple,
    SetFamily,
    displayed_triples,
    lca,
    tree_clusters,
)
from .neighborhoods import (
    GuardFailure,
    NeighborhoodIndex,
    build_index,
    check_hlc,
    check_ic,
    check_k_elc,
    neighborhood,
)
from .recognition import (
    NotFitchReason,
    RecognitionResult,
    enumerate_explaining_trees,
    is_coarse_graining,
    is_k_restricted,
    is_least_resolved,
    recognize,
    trees_isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeViolation",
    "DuplicateEntry",
    "DuplicateLeaf",
    "DuplicateMember",
    "DuplicateName",
    "EdgeLabeledTree",
    "EmptyMember",
    "FitchkitError",
    "FitchMap",
    "ForbiddenWitness",
    "GuardFailure",
    "HierarchyVerdict",
    "InstanceTooLarge",
    "InvalidToken",
    "NeighborhoodIndex",
    "NotAHierarchy",
    "NotAPartition",
    "NotFitchReason",
    "NotSubsetOfUniverse",
    "ParseError",
    "PartNotSubsetOfM",
    "RecognitionResult",
    "RecoloringScheme",
    "RootedTriple",
    "SelfPair",
    "SetFamily",
    "TooFewLeaves",
    "TreeDoesNotExplainMap",
    "UniverseMismatch",
    "UnknownColor",
    "UnknownLeaf",
    "UnknownName",
    "build_index",
    "check_hlc",
    "check_ic",
    "check_k_elc",
    "displayed_triples",
    "enumerate_explaining_trees",
    "enumerate_maps",
    "explains",
    "find_forbidden_witness",
    "is_coarse_graining",
    "is_hierarchy",
    "is_hierarchy_like",
    "is_k_restricted",
    "is_least_resolved",
    "lca",
    "map_of_tree",
    "neighborhood",
    "parse_map",
    "parse_scheme",
    "parse_set_family",
    "parse_tree",
    "print_map",
    "print_set_family",
    "print_tree",
    "recognize",
    "recolor_map",
    "recolor_tree",
    "restrict_map",
    "random_tree",
    "tree_clusters",
    "tree_from_hierarchy",
    "trees_isomorphic",
    "triples_of_map",
    "verify_witness",
]
