"""Deciding, counting and approximating even/odd induced k-vertex subgraphs."""

from .approx import DensityBound, Estimate, Mode, density_lower_bound, estimate_parity_count, sample_k_subset
from .decide import StructureClass, StructureKind, classify, decide, decide_even, decide_odd, find_parity_flip
from .errors import BudgetExceeded, ConsistencyError, InputError, ParityCountError
from .exact import (
    colour_pattern_census,
    count_colourful_parity_subsets,
    count_multicolour_cliques,
    count_parity_subsets,
    count_parity_tuples,
    edge_count_histogram,
)
from .gf2 import QuadraticFormF2, count_zeros, encode_polynomial, total_even_subgraphs
from .graph import (
    Colouring,
    Graph,
    ParityTarget,
    VertexSet,
    complement,
    generate,
    induced_edge_count,
    k_subsets,
    parse_colouring,
    parse_graph,
)
from .lattice import EdgePattern, LatticeFn, decomposition_check, det_exact, det_via_formula, meet_matrix, mobius, totient
from .reduction import enumerate_index_family, filter_graph, pad_instance, run_reduction

EVEN = ParityTarget.EVEN
ODD = ParityTarget.ODD

__version__ = "0.1.0"

__all__ = [
    "DensityBound",
    "Estimate",
    "Mode",
    "density_lower_bound",
    "estimate_parity_count",
    "sample_k_subset",
    "StructureClass",
    "StructureKind",
    "classify",
    "decide",
    "decide_even",
    "decide_odd",
    "find_parity_flip",
    "BudgetExceeded",
    "ConsistencyError",
    "InputError",
    "ParityCountError",
    "colour_pattern_census",
    "count_colourful_parity_subsets",
    "count_multicolour_cliques",
    "count_parity_subsets",
    "count_parity_tuples",
    "edge_count_histogram",
    "QuadraticFormF2",
    "count_zeros",
    "encode_polynomial",
    "total_even_subgraphs",
    "Colouring",
    "Graph",
    "ParityTarget",
    "VertexSet",
    "complement",
    "generate",
    "induced_edge_count",
    "k_subsets",
    "parse_colouring",
    "parse_graph",
    "EdgePattern",
    "LatticeFn",
    "decomposition_check",
    "det_exact",
    "det_via_formula",
    "meet_matrix",
    "mobius",
    "totient",
    "enumerate_index_family",
    "filter_graph",
    "pad_instance",
    "run_reduction",
    "EVEN",
    "ODD",
    "__version__",
]
