"""Solvers for maximum-weight delta-independent sets.

Four strategies, all returning Solution values whose selected sets pass
delta_independence_check on the input instance:

  solve_exact_bruteforce  branch and bound on the conflict graph; canonical
                          (lexicographically smallest optimal index set)
  solve_greedy            weight-greedy with closed-neighborhood removal
  solve_exact_op          interval sweep on the conflict interval model,
                          for instances that are order preserving
  solve_fpt               parameterized by a deletion set S: enumerate the
                          2^|S| independent sub-selections of S, solve the
                          order-preserving remainder exactly each time

The two exact solvers resolve weight ties identically (canonical set), so
tests may compare selected sets, not just objectives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .conflict import (
    IndependenceReport,
    WindowSemantics,
    conflict_graph,
    delta_independence_check,
)
from .intervals import REOrdering, mwis_interval
from .model import (
    LimitExceeded,
    Solution,
    StaticGraph,
    TemporalIntervalInstance,
    remove_vertices,
)
from .order import conflict_interval_model, recognize_order_preserving

BRUTEFORCE_DEFAULT_LIMIT = 30


def _mwis_graph_value(
    g: StaticGraph, weights: Sequence[Fraction], allowed: Iterable[int]
) -> Fraction:
    """Maximum total weight of an independent set inside `allowed`.

    Branch and bound: pick the highest-degree remaining vertex, branch on
    include/exclude, prune when even taking everything left cannot beat the
    incumbent. Exact Fraction arithmetic throughout.
    """
    best = Fraction(0)
    start = frozenset(allowed)

    def rec(remaining: frozenset[int], current: Fraction) -> None:
        nonlocal best
        if current > best:
            best = current
        if not remaining:
            return
        if current + sum((weights[v] for v in remaining), Fraction(0)) <= best:
            return
        # peel isolated vertices for free before branching
        iso = [v for v in remaining if not (g.neighbors(v) & remaining)]
        if iso:
            rec(
                remaining - frozenset(iso),
                current + sum((weights[v] for v in iso), Fraction(0)),
            )
            return
        v = max(remaining, key=lambda u: (len(g.neighbors(u) & remaining), -u))
        rec(remaining - g.neighbors(v) - {v}, current + weights[v])
        rec(remaining - {v}, current)

    rec(start, Fraction(0))
    return best


def _max_independent_cardinality(g: StaticGraph) -> int:
    value = _mwis_graph_value(g, [Fraction(1)] * g.n, range(g.n))
    assert value.denominator == 1
    return int(value)


def _canonical_optimum(
    g: StaticGraph, weights: Sequence[Fraction]
) -> tuple[frozenset[int], Fraction]:
    """The lexicographically smallest maximum-weight independent index set.

    Greedy completion: scan vertices in index order and keep v exactly when
    some optimum extends the current prefix through v. The invariant (the
    kept prefix extends to an optimum) holds at every step, so the result is
    optimal and lex-minimal among optimal sets.
    """
    opt = _mwis_graph_value(g, weights, range(g.n))
    chosen: list[int] = []
    total = Fraction(0)
    allowed = set(range(g.n))
    for v in range(g.n):
        if total == opt:
            break  # extensions can only be lexicographically larger
        if v not in allowed:
            continue
        rest = frozenset(u for u in allowed if u > v and u not in g.neighbors(v))
        if total + weights[v] + _mwis_graph_value(g, weights, rest) == opt:
            chosen.append(v)
            total += weights[v]
            allowed.discard(v)
            allowed -= g.neighbors(v)
    assert total == opt
    return frozenset(chosen), opt


def solve_exact_bruteforce(
    inst: TemporalIntervalInstance,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
    limit: int = BRUTEFORCE_DEFAULT_LIMIT,
) -> Solution:
    """Exact maximum-weight delta-independent set via the conflict graph."""
    if inst.n > limit:
        raise LimitExceeded(f"bruteforce capped at n <= {limit}, got {inst.n}")
    g = conflict_graph(inst, semantics)
    selected, objective = _canonical_optimum(g, inst.weights)
    report = delta_independence_check(inst, selected, semantics)
    assert report.independent
    return Solution(
        selected=selected,
        objective=objective,
        algorithm="bruteforce",
        certificate=report,
    )


def solve_greedy(
    inst: TemporalIntervalInstance,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> Solution:
    """Pick the heaviest remaining vertex (ties: smallest index), discard its
    closed conflict neighborhood, repeat. Runs anywhere, no optimality."""
    g = conflict_graph(inst, semantics)
    remaining = set(range(inst.n))
    chosen: list[int] = []
    total = Fraction(0)
    while remaining:
        v = max(remaining, key=lambda u: (inst.weights[u], -u))
        chosen.append(v)
        total += inst.weights[v]
        remaining -= g.neighbors(v)
        remaining.discard(v)
    selected = frozenset(chosen)
    report = delta_independence_check(inst, selected, semantics)
    assert report.independent
    return Solution(
        selected=selected, objective=total, algorithm="greedy", certificate=report
    )


def solve_exact_op(
    inst: TemporalIntervalInstance,
    ordering: REOrdering,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> Solution:
    """Exact solve for an instance every layer of which agrees with
    `ordering`: sweep the conflict interval model instead of branching."""
    model = conflict_interval_model(inst, ordering, semantics)
    inner = mwis_interval(model, inst.weights)
    report = delta_independence_check(inst, inner.selected, semantics)
    assert report.independent
    return Solution(
        selected=inner.selected,
        objective=inner.objective,
        algorithm="exact-op",
        certificate=report,
    )


def solve_fpt(
    inst: TemporalIntervalInstance,
    deletion_set: Iterable,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> Solution:
    """Exact solve parameterized by a deletion set S to order preservation.

    For each of the 2^|S| subsets X of S that are independent in the
    conflict graph, the rest of the instance is restricted to vertices not
    conflicting with X and solved by the order-preserving sweep; the best
    total wins. Requires inst minus S to be order preserving. Runtime is
    exponential only in |S|.
    """
    s_set = inst.vertex_set(deletion_set)
    reduced = remove_vertices(inst, s_set)
    rep = recognize_order_preserving(reduced)
    if not rep.is_order_preserving:
        raise ValueError(
            "deletion set does not leave an order-preserving instance"
        )
    keep = [v for v in range(inst.n) if v not in s_set]
    assert rep.ordering is not None
    orig_order = [keep[i] for i in rep.ordering.order]

    g = conflict_graph(inst, semantics)
    s_sorted = sorted(s_set)
    best_selected: Optional[frozenset[int]] = None
    best_total = Fraction(-1)
    for mask in range(1 << len(s_sorted)):
        x = [s_sorted[i] for i in range(len(s_sorted)) if mask >> i & 1]
        if any(b in g.neighbors(a) for a in x for b in x):
            continue
        blocked: set[int] = set()
        for a in x:
            blocked |= g.neighbors(a)
        sub_keep = [v for v in keep if v not in blocked]
        x_weight = sum((inst.weights[v] for v in x), Fraction(0))
        if sub_keep:
            sub_inst = remove_vertices(
                inst, set(range(inst.n)) - set(sub_keep)
            )
            sub_pos = {v: i for i, v in enumerate(sub_keep)}
            sub_order = REOrdering(
                tuple(sub_pos[v] for v in orig_order if v in sub_pos)
            )
            inner = solve_exact_op(sub_inst, sub_order, semantics)
            total = x_weight + inner.objective
            selected = frozenset(x) | frozenset(
                sub_keep[i] for i in inner.selected
            )
        else:
            total = x_weight
            selected = frozenset(x)
        if total > best_total:
            best_total = total
            best_selected = selected
    assert best_selected is not None
    report = delta_independence_check(inst, best_selected, semantics)
    assert report.independent
    return Solution(
        selected=best_selected,
        objective=best_total,
        algorithm="fpt",
        certificate=report,
    )


@dataclass(frozen=True)
class VerificationReport:
    independent: bool
    cardinality: int
    k: int
    meets_k: bool
    total_weight: Fraction
    accepted: bool
    certificate: IndependenceReport


def verify_solution(
    inst: TemporalIntervalInstance,
    selected: Iterable,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
) -> VerificationReport:
    """Judge a proposed vertex set: delta independence, cardinality against
    the instance target k, and total weight. Accepts iff independent and
    |selected| >= k."""
    sel = inst.vertex_set(selected)
    report = delta_independence_check(inst, sel, semantics)
    weight = sum((inst.weights[v] for v in sel), Fraction(0))
    meets = len(sel) >= inst.k
    return VerificationReport(
        independent=report.independent,
        cardinality=len(sel),
        k=inst.k,
        meets_k=meets,
        total_weight=weight,
        accepted=report.independent and meets,
        certificate=report,
    )
