"""Exact search and verification tooling for visibility-style vertex-set
invariants: mutual visibility, total mutual visibility, and general
position, each in its maximum and minimum-maximal ("lower") variant."""

from .families import FamilySpec, generate
from .graph_core import (
    DistanceMatrix,
    Graph,
    InstanceTooLargeError,
    ParseError,
    VertexSet,
    format_edge_list,
    parse_graph,
)
from .solvers import (
    GreedyProfile,
    SolveResult,
    greedy_profile,
    independent_domination,
    solve_lower,
    solve_max,
)
from .theorems import CheckReport, run_suite
from .visibility import is_maximal_set, is_valid_set, pair_visible

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "DistanceMatrix",
    "FamilySpec",
    "Graph",
    "GreedyProfile",
    "InstanceTooLargeError",
    "ParseError",
    "SolveResult",
    "VertexSet",
    "format_edge_list",
    "generate",
    "greedy_profile",
    "independent_domination",
    "is_maximal_set",
    "is_valid_set",
    "pair_visible",
    "parse_graph",
    "run_suite",
    "solve_lower",
    "solve_max",
    "__version__",
]
