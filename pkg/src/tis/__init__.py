"""Temporal interval graph toolkit: delta-independent sets, order
preservation, deletion sets, and exact/approximate solvers."""

from .conflict import (
    IndependenceReport,
    WindowPlan,
    WindowSemantics,
    conflict_graph,
    delta_independence_check,
    neighborhood_is_bound_check,
    window_plan,
)
from .generators import (
    gadget_character_vertices,
    gen_lcsp_gadget,
    gen_order_preserving,
    gen_random_unit,
    lcs_permutations,
)
from .intervals import (
    C1PResult,
    CliqueMatrix,
    CliqueRow,
    NotIntervalError,
    OrderingIncompatible,
    REOrdering,
    UnitIntervalResult,
    c1p_test,
    ensure_unit,
    intersect_models,
    maximal_cliques,
    maximal_cliques_abstract,
    mwis_interval,
    normalize_to_ordering,
    normalized_model_for,
    ordering_agrees,
    recognize_unit_interval,
    union_models,
)
from .model import (
    BudgetExceeded,
    InstanceError,
    IntervalModel,
    LimitExceeded,
    NotUnitError,
    Solution,
    StaticGraph,
    TemporalIntervalInstance,
    edge_intersection,
    edge_union,
    layer_graph,
    parse_instance,
    remove_vertices,
    serialize_instance,
)
from .opvd import (
    OpvdResult,
    column_deletion_check,
    min_opvd,
    opvd_exhaustive,
    reduce_to_column_deletion,
)
from .order import (
    OrderPreservationReport,
    conflict_interval_model,
    pooled_clique_matrix,
    recognize_order_preserving,
)
from .solvers import (
    VerificationReport,
    solve_exact_bruteforce,
    solve_exact_op,
    solve_fpt,
    solve_greedy,
    verify_solution,
)

__all__ = [
    "BudgetExceeded",
    "C1PResult",
    "CliqueMatrix",
    "CliqueRow",
    "IndependenceReport",
    "InstanceError",
    "IntervalModel",
    "LimitExceeded",
    "NotIntervalError",
    "NotUnitError",
    "OpvdResult",
    "OrderPreservationReport",
    "OrderingIncompatible",
    "REOrdering",
    "Solution",
    "StaticGraph",
    "TemporalIntervalInstance",
    "UnitIntervalResult",
    "VerificationReport",
    "WindowPlan",
    "WindowSemantics",
    "c1p_test",
    "column_deletion_check",
    "conflict_graph",
    "conflict_interval_model",
    "delta_independence_check",
    "edge_intersection",
    "edge_union",
    "ensure_unit",
    "gadget_character_vertices",
    "gen_lcsp_gadget",
    "gen_order_preserving",
    "gen_random_unit",
    "intersect_models",
    "layer_graph",
    "lcs_permutations",
    "maximal_cliques",
    "maximal_cliques_abstract",
    "min_opvd",
    "mwis_interval",
    "neighborhood_is_bound_check",
    "normalize_to_ordering",
    "normalized_model_for",
    "opvd_exhaustive",
    "ordering_agrees",
    "parse_instance",
    "pooled_clique_matrix",
    "recognize_order_preserving",
    "recognize_unit_interval",
    "reduce_to_column_deletion",
    "remove_vertices",
    "serialize_instance",
    "solve_exact_bruteforce",
    "solve_exact_op",
    "solve_fpt",
    "solve_greedy",
    "union_models",
    "verify_solution",
    "window_plan",
]
