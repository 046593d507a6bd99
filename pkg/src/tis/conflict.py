"""Conflict graph construction and direct independence checking.

The conflict graph collects, over a sliding window of consecutive layers, the
edges present in every layer of the window. A vertex set is delta-independent
exactly when it is independent in the conflict graph: for every pair and
every window there is a layer in the window where the pair is non-adjacent.

Two window semantics are supported. The default ("figure") uses windows of
exactly delta consecutive layers, starting at 1..tau-delta+1, with a single
all-layer window when delta = tau. The alternate ("formula") uses delta+1
layers per window, starting at 1..tau-delta; it is implemented literally, so
delta = tau yields no windows at all and an empty conflict graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .model import (
    NotUnitError,
    StaticGraph,
    TemporalIntervalInstance,
    edge_intersection,
)
from .intervals import ensure_unit


class WindowSemantics(enum.Enum):
    FIGURE = "figure"
    FORMULA = "formula"


@dataclass(frozen=True)
class WindowPlan:
    """Resolved windows for one instance: a window is the layer range
    [start, start + window_length - 1], 1-based inclusive."""

    window_length: int
    window_count: int
    starts: tuple[int, ...]

    def layers(self, start: int) -> range:
        return range(start, start + self.window_length)


def window_plan(
    tau: int, delta: int, semantics: WindowSemantics = WindowSemantics.FIGURE
) -> WindowPlan:
    if semantics is WindowSemantics.FIGURE:
        if delta >= tau:
            return WindowPlan(tau, 1, (1,))
        starts = tuple(range(1, tau - delta + 2))
        return WindowPlan(delta, len(starts), starts)
    # formula semantics: delta+1 layers per window, tau-delta windows
    starts = tuple(range(1, tau - delta + 1))
    return WindowPlan(delta + 1, len(starts), starts)


def conflict_graph(
    inst: TemporalIntervalInstance,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> StaticGraph:
    """Union over windows of the edge-intersection of the window's layers."""
    plan = window_plan(inst.tau, inst.delta, semantics)
    edges: set[tuple[int, int]] = set()
    for start in plan.starts:
        window = None
        for t in plan.layers(start):
            layer = inst.layer_graph(t)
            window = layer if window is None else edge_intersection(window, layer)
        if window is not None:
            edges |= window.edges
    return StaticGraph(inst.n, edges)


@dataclass(frozen=True)
class IndependenceReport:
    """Outcome of the direct delta-independence check.

    When independent, `witnesses` lists one layer per (pair, window) where the
    pair is non-adjacent (pairs already non-adjacent in the conflict graph are
    fully covered too). When not, `violation` names a (u, v, window_start)
    whose window contains the pair in every layer.
    """

    independent: bool
    witnesses: tuple[tuple[int, int, int, int], ...] = ()
    violation: Optional[tuple[int, int, int]] = None


def delta_independence_check(
    inst: TemporalIntervalInstance,
    selected,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> IndependenceReport:
    """Check delta-independence straight from the definition.

    `selected` may hold vertex names or indices. The result always equals
    "selected is independent in conflict_graph(inst)" but is computed without
    building that graph.
    """
    S = sorted(inst.vertex_set(selected))
    plan = window_plan(inst.tau, inst.delta, semantics)
    witnesses: list[tuple[int, int, int, int]] = []
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            u, v = S[a], S[b]
            for start in plan.starts:
                witness = None
                for t in plan.layers(start):
                    if not inst.layer_graph(t).has_edge(u, v):
                        witness = t
                        break
                if witness is None:
                    return IndependenceReport(False, (), (u, v, start))
                witnesses.append((u, v, start, witness))
    return IndependenceReport(True, tuple(witnesses), None)


def neighborhood_is_bound_check(
    inst: TemporalIntervalInstance,
    v,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> bool:
    """Does the largest independent set inside the closed conflict-graph
    neighborhood of v respect the 2^delta * (tau - delta + 1) cap?

    Only meaningful (and only allowed) for unit model-mode instances; the
    bound is a structural fact about unit layers.
    """
    if inst.mode != "model":
        raise NotUnitError("neighborhood bound check needs a unit model-mode instance")
    ensure_unit(inst)
    vi = inst.vertex_index(v)
    g = conflict_graph(inst, semantics)
    hood = sorted(g.closed_neighborhood(vi))
    sub = g.induced(hood)
    from .solvers import _max_independent_cardinality

    mis = _max_independent_cardinality(sub)
    bound = (2**inst.delta) * max(inst.tau - inst.delta + 1, 1)
    return mis <= bound
