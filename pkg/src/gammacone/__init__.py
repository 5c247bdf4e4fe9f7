"""Exact chamber counts for acyclic orientations of graphs.

An acyclic orientation ``o`` of a graph cuts out a cone of configurations;
its chamber count ``sigma(o)`` is the number of linear extensions of the
induced partial order.  For trees the maximum is attained exactly at the
two principal orientations (all edges between the colour classes pointing
the same way), and that maximum splits into hook length counts of rooted
trees, one per block.
"""
from .count import (
    GammaVector,
    count_brute,
    count_by_decomposition,
    count_ideals_dp,
    count_refined,
    gamma_vector,
    monotonicity_check,
    refined_by_decomposition,
    split_at,
    wedge,
)
from .errors import (
    ConsistencyError,
    CyclicOrientationError,
    GammaConeError,
    GraphFormatError,
    GuardExceeded,
    NotATreeError,
    NotBipartiteError,
)
from .graph import (
    Graph,
    classify,
    connected_component,
    format_graph,
    named_family,
    nonisomorphic_trees,
    parse_graph,
    random_tree,
)
from .order import (
    LinearOrder,
    Orientation,
    Poset,
    PrincipalDecomposition,
    enumerate_acyclic_orientations,
    flip_to_principal,
    is_linear_extension,
    make_orientation,
    principal_decomposition,
    principal_orientation,
    reverse,
    to_poset,
)
from .principal import (
    BlockReport,
    RootedTree,
    block_decomposition,
    classify_extension,
    gamma_dv,
    hook_length_count,
    lift,
    ordtilde_classes,
    principal_number_formula,
    principal_number_induction,
    verify_block_characterizations,
)
from .series import check_a_series, evaluate_family_series, zigzag_numbers, zigzag_series

__version__ = "0.1.0"

__all__ = [
    "GammaVector",
    "count_brute",
    "count_by_decomposition",
    "count_ideals_dp",
    "count_refined",
    "gamma_vector",
    "monotonicity_check",
    "refined_by_decomposition",
    "split_at",
    "wedge",
    "ConsistencyError",
    "CyclicOrientationError",
    "GammaConeError",
    "GraphFormatError",
    "GuardExceeded",
    "NotATreeError",
    "NotBipartiteError",
    "Graph",
    "classify",
    "connected_component",
    "format_graph",
    "named_family",
    "nonisomorphic_trees",
    "parse_graph",
    "random_tree",
    "LinearOrder",
    "Orientation",
    "Poset",
    "PrincipalDecomposition",
    "enumerate_acyclic_orientations",
    "flip_to_principal",
    "is_linear_extension",
    "make_orientation",
    "principal_decomposition",
    "principal_orientation",
    "reverse",
    "to_poset",
    "BlockReport",
    "RootedTree",
    "block_decomposition",
    "classify_extension",
    "gamma_dv",
    "hook_length_count",
    "lift",
    "ordtilde_classes",
    "principal_number_formula",
    "principal_number_induction",
    "verify_block_characterizations",
    "check_a_series",
    "evaluate_family_series",
    "zigzag_numbers",
    "zigzag_series",
]
