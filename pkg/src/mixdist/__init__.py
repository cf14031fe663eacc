"""mixdist: exact mixture-tree distance engines, Newick I/O, generators.

A mixture tree is a rooted full binary tree whose internal nodes carry
mutation times. The mixture distance between two trees over the same
leaf set sums, over all unordered leaf pairs, the absolute difference of
the mutation time of the pair's lowest common ancestor. Three engines
compute it with bit-identical results: a brute-force oracle, an O(n^2)
2-coloring sweep, and an O(nh) virtual-subtree algorithm.
"""

from .errors import (
    CycleError,
    DegenerateInputError,
    DistanceOverflowError,
    DuplicateLabelError,
    EmptyInputError,
    InvalidSpecError,
    MixdistError,
    MissingTimeError,
    MultipleRootsError,
    NegativeTimeError,
    NewickSyntaxError,
    NonMonotoneTimeError,
    NotBinaryError,
    NotComparableError,
    SameLeafError,
    TooManyFractionDigitsError,
    TreeValidationError,
)
from .tree import (
    MAX_TICKS,
    STRICT,
    TICKS_PER_UNIT,
    WEAK,
    MixtureTree,
    NodeRecord,
    RawNode,
    ValidationReport,
    build_tree,
    check_comparable,
    from_nested,
    lca_naive,
    level_order,
    postorder_leaf_ranks,
    scale_times,
    trees_identical,
    validate,
)
from .newick import parse_newick, read_tree_file, read_trees, ticks_from_decimal, ticks_to_decimal, write_newick
from .lca import LcaIndex, build_index
from .generate import GenSpec, random_comparable_pair, random_mixture_tree
from .distance import (
    lca_time,
    max_discrepancy_pair,
    mixture_distance,
    mixture_distance_bruteforce,
    mixture_distance_coloring,
    pair_product,
)
from .fast import build_virtual_subtree, merge_leaf_lists, mixture_distance_fast, partial_distance, rank_leaves
from .nodal import nodal_distance
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "MAX_TICKS",
    "STRICT",
    "TICKS_PER_UNIT",
    "WEAK",
    "CycleError",
    "DegenerateInputError",
    "DistanceOverflowError",
    "DuplicateLabelError",
    "EmptyInputError",
    "GenSpec",
    "MultipleRootsError",
    "InvalidSpecError",
    "LcaIndex",
    "MixdistError",
    "MissingTimeError",
    "MixtureTree",
    "NegativeTimeError",
    "NewickSyntaxError",
    "NodeRecord",
    "NonMonotoneTimeError",
    "NotBinaryError",
    "NotComparableError",
    "RawNode",
    "SameLeafError",
    "SplitMix64",
    "TooManyFractionDigitsError",
    "TreeValidationError",
    "ValidationReport",
    "build_index",
    "build_tree",
    "build_virtual_subtree",
    "check_comparable",
    "from_nested",
    "lca_naive",
    "lca_time",
    "level_order",
    "max_discrepancy_pair",
    "merge_leaf_lists",
    "mixture_distance",
    "mixture_distance_bruteforce",
    "mixture_distance_coloring",
    "mixture_distance_fast",
    "nodal_distance",
    "pair_product",
    "parse_newick",
    "postorder_leaf_ranks",
    "random_comparable_pair",
    "random_mixture_tree",
    "rank_leaves",
    "read_tree_file",
    "read_trees",
    "scale_times",
    "ticks_from_decimal",
    "ticks_to_decimal",
    "trees_identical",
    "validate",
    "write_newick",
    "__version__",
]
