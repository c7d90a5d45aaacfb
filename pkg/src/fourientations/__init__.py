"""Exact enumeration of fourientations under reachability constraints.

A fourientation gives each edge of a multigraph one of four states: 0-way,
forward, backward, or 2-way. Orientations (no solid edges) and subgraphs (all
edges solid) are the two extremes. The package counts fourientations that
satisfy added-arc reachability constraints, groups them into cycle / cocycle
reversal classes, and checks the resulting equidistribution statements by
brute force.
"""

from .errors import SizeGuardError
from .graph import (
    Arc,
    Cocycle,
    Digraph,
    Multigraph,
    SccDecomposition,
    classify_arc,
    connected_components,
    enumerate_directed_cocycles,
    enumerate_directed_cycles,
    reachable_from,
    reaches,
    scc,
)
from .fourientation import (
    ConstraintSystem,
    EdgeConfig,
    Fourientation,
    augment,
    constraints_cover,
    constraints_root_component,
    has_two_way_cycle,
    has_zero_way_cocycle,
    is_valid,
    is_valid_simple,
    realize,
    reverse_cocycle,
    reverse_cycle,
    satisfies_conditions,
)
from .enumeration import (
    CountReport,
    count_subgraph_family,
    count_valid,
    count_valid_bruteforce,
    is_ab_connected,
    is_forest,
    iterate_fourientations,
    verify_theorem_main,
)
from .equivalence import (
    ClassPartition,
    ReversalMode,
    equivalence_classes,
    filter_valid_classes,
    outdegree_signature,
    verify_theorem_eqclass,
    verify_theorem_eqclass_all,
)
from .series import (
    ArcWeights,
    ExactSeries,
    acy_cyc,
    complete_graph,
    count_scc_digraphs,
    count_scc_tournaments,
    eval_identity,
    ira_series,
    random_weights,
    series_exp,
    series_log,
    series_reciprocal,
    tournament_cyclic_weight,
    verify_ira,
)

__version__ = "0.1.0"

__all__ = [
    "SizeGuardError",
    "Arc",
    "Cocycle",
    "Digraph",
    "Multigraph",
    "SccDecomposition",
    "classify_arc",
    "connected_components",
    "enumerate_directed_cocycles",
    "enumerate_directed_cycles",
    "reachable_from",
    "reaches",
    "scc",
    "ConstraintSystem",
    "EdgeConfig",
    "Fourientation",
    "augment",
    "constraints_cover",
    "constraints_root_component",
    "has_two_way_cycle",
    "has_zero_way_cocycle",
    "is_valid",
    "is_valid_simple",
    "realize",
    "reverse_cocycle",
    "reverse_cycle",
    "satisfies_conditions",
    "CountReport",
    "count_subgraph_family",
    "count_valid",
    "count_valid_bruteforce",
    "is_ab_connected",
    "is_forest",
    "iterate_fourientations",
    "verify_theorem_main",
    "ClassPartition",
    "ReversalMode",
    "equivalence_classes",
    "filter_valid_classes",
    "outdegree_signature",
    "verify_theorem_eqclass",
    "verify_theorem_eqclass_all",
    "ArcWeights",
    "ExactSeries",
    "acy_cyc",
    "complete_graph",
    "count_scc_digraphs",
    "count_scc_tournaments",
    "eval_identity",
    "ira_series",
    "random_weights",
    "series_exp",
    "series_log",
    "series_reciprocal",
    "tournament_cyclic_weight",
    "verify_ira",
]
