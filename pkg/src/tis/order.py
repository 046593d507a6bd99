"""Order preservation: recognition and the conflict-graph interval model.

A temporal interval instance is order preserving when all layers agree on a
single right-endpoint ordering. For unit layers this is equivalent to the
pooled vertices-vs-maximal-cliques matrix having the consecutive ones
property, which is how recognition works here; any C1P column order makes
every maximal clique of every layer a contiguous block, and a contiguous
clique cover forces the per-layer agreement condition directly.

On an order-preserving instance the conflict graph itself is an interval
graph: normalize every layer to the common ordering, intersect the models
inside each window (pointwise max of left endpoints), and union across
windows (pointwise min). conflict_interval_model performs that fold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .conflict import WindowSemantics, window_plan
from .intervals import (
    CliqueMatrix,
    CliqueRow,
    REOrdering,
    c1p_test,
    ensure_unit,
    maximal_cliques,
    maximal_cliques_abstract,
    normalized_model_for,
)
from .model import IntervalModel, TemporalIntervalInstance


@dataclass(frozen=True)
class OrderPreservationReport:
    """Recognition outcome. `ordering` is a common right-endpoint order when
    order preserving; otherwise `witness` is an inclusion-minimal vertex set
    whose pooled clique-matrix columns are non-C1P (a certificate that no
    common ordering exists, though not in general a set meeting every
    minimum deletion set)."""

    is_order_preserving: bool
    ordering: Optional[REOrdering] = None
    witness: Optional[tuple[int, ...]] = None


def pooled_clique_matrix(inst: TemporalIntervalInstance) -> CliqueMatrix:
    """Maximal cliques of every layer, pooled and deduplicated.

    Rows are tagged with the first layer they came from and kept in
    (layer, sweep position) order. Edges-mode layers must be interval graphs
    (NotIntervalError otherwise).
    """
    rows: list[CliqueRow] = []
    seen: set[frozenset[int]] = set()
    for t in range(1, inst.tau + 1):
        if inst.mode == "model":
            cliques = maximal_cliques(inst.layer_model(t))
        else:
            cliques = maximal_cliques_abstract(inst.layer_graph(t))
        for K in cliques:
            if K not in seen:
                seen.add(K)
                rows.append(CliqueRow(K, t))
    return CliqueMatrix(tuple(rows), inst.n)


def recognize_order_preserving(
    inst: TemporalIntervalInstance,
) -> OrderPreservationReport:
    """Recognize order preservation of a unit instance via the pooled
    clique matrix.

    On success the returned ordering is re-verified constructively: every
    layer must normalize to it (an internal error otherwise, since a
    contiguous clique arrangement always agrees). Non-unit instances are
    refused; recognition of non-unit temporal interval graphs is not offered.
    """
    ensure_unit(inst)
    matrix = pooled_clique_matrix(inst)
    res = c1p_test(matrix)
    if not res.is_c1p:
        return OrderPreservationReport(False, None, res.witness)
    ordering = REOrdering(res.ordering)
    for t in range(1, inst.tau + 1):
        normalized_model_for(inst.layer_graph(t), ordering)  # raises if not agreeing
    return OrderPreservationReport(True, ordering, None)


def conflict_interval_model(
    inst: TemporalIntervalInstance,
    ordering: REOrdering,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> IntervalModel:
    """Interval model of the conflict graph along a common agreeing ordering.

    Per vertex: right = its position; left = min over windows of (max over
    the window's layers of the normalized layer left endpoint). With no
    windows (formula semantics at delta = tau) every left equals the
    position, i.e. the edgeless normalized model.
    """
    if ordering.n != inst.n:
        raise ValueError("ordering size does not match instance")
    layer_lefts: list[list[Fraction]] = []
    for t in range(1, inst.tau + 1):
        norm = normalized_model_for(inst.layer_graph(t), ordering)
        layer_lefts.append([norm.left(v) for v in range(inst.n)])

    plan = window_plan(inst.tau, inst.delta, semantics)
    intervals = []
    for v in range(inst.n):
        right = Fraction(ordering.position(v))
        left = right
        for start in plan.starts:
            window_left = max(layer_lefts[t - 1][v] for t in plan.layers(start))
            left = min(left, window_left)
        intervals.append((left, right))
    return IntervalModel(intervals)
