"""Ramsey-critical edge colorings: blow-up constructions, verification and
exhaustive search for small multicolor Ramsey numbers."""

from .coloring import (Coloring, canonical_key, class_graph, format_coloring, format_dot,
                       load_coloring, merge_classes, parse_coloring, save_coloring)
from .construct import (RamseyParams, blow_up, known_kappa, lower_bound_witness,
                        pentagon_coloring, predicted_value, ramsey_lower_bound)
from .detect import (Witness, check_witness, contains_clique, contains_cycle_exact,
                     contains_subgraph, verify_coloring)
from .graph import Graph, complete, components, cycle, is_connected, path
from .kernels import BACKEND
from .search import Budget, is_forced, search_ramsey
from .targets import Clique, Cycle, General, Path, TargetSpec, parse_targets, targets

__all__ = [
    "BACKEND", "Budget", "Clique", "Coloring", "Cycle", "General", "Graph", "Path",
    "RamseyParams", "TargetSpec", "Witness", "blow_up", "canonical_key", "check_witness",
    "class_graph", "complete", "components", "contains_clique", "contains_cycle_exact",
    "contains_subgraph", "cycle", "format_coloring", "format_dot", "is_connected",
    "is_forced", "known_kappa", "load_coloring", "lower_bound_witness", "merge_classes",
    "parse_coloring", "parse_targets", "path", "pentagon_coloring", "predicted_value",
    "ramsey_lower_bound", "save_coloring", "search_ramsey", "targets", "verify_coloring",
]
