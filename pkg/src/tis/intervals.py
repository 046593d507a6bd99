"""Interval-graph algorithmics.

Maximum-weight independent set on interval models, maximal clique enumeration
(geometric and abstract), consecutive-ones testing with minimal witnesses,
unit-interval recognition with model synthesis, and the right-endpoint
ordering algebra: normalization of a model to an ordering, and intersection /
union of models normalized to a common ordering.

A vertex ordering `agrees` with a graph when the graph has an interval model
whose right endpoints appear in exactly that order. That holds iff, for every
vertex, its neighbors at earlier positions occupy a contiguous block of
positions ending immediately before it (checked by `ordering_agrees`).
Normalizing to an agreeing ordering puts right(v) at v's 1-based position and
left(v) at the smallest position among the vertices sharing a clique with v,
which makes intersection and union of two layers pointwise max / min on the
left endpoints.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from .model import (
    IntervalModel,
    NotUnitError,
    Solution,
    StaticGraph,
    TemporalIntervalInstance,
)
from .pqtree import c1p_order, check_consecutive


class NotIntervalError(ValueError):
    """A graph required to be an interval graph is not one."""


class OrderingIncompatible(ValueError):
    """A model/graph does not agree with the requested vertex ordering."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        self.pair = pair
        super().__init__(message)


@dataclass(frozen=True)
class REOrdering:
    """A total vertex order, realizable as a right-endpoint order.

    Positions are 1-based: position(v) is the index used as the normalized
    right endpoint of v.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("ordering is not a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self, v: int) -> int:
        return self._pos()[v] + 1

    def _pos(self) -> dict[int, int]:
        pos = self.__dict__.get("_pos_cache")
        if pos is None:
            pos = {v: i for i, v in enumerate(self.order)}
            self.__dict__["_pos_cache"] = pos
        return pos


@dataclass(frozen=True)
class CliqueRow:
    """One row of a clique matrix: a maximal clique tagged with its layer."""

    vertices: frozenset[int]
    layer: int


@dataclass(frozen=True)
class CliqueMatrix:
    """Binary matrix, rows = maximal cliques pooled over layers, columns = vertices."""

    rows: tuple[CliqueRow, ...]
    ncols: int

    def row_sets(self) -> list[frozenset[int]]:
        return [r.vertices for r in self.rows]

    def debug_format(self, names: Sequence[str]) -> str:
        """Human-readable dump: column header with vertex names, then one
        0/1 line per row."""
        lines = [" ".join(names)]
        for row in self.rows:
            lines.append(
                "".join("1" if v in row.vertices else "0" for v in range(self.ncols))
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class C1PResult:
    """Either a column ordering making every row consecutive, or an
    inclusion-minimal column subset whose submatrix has no such ordering."""

    ordering: tuple[int, ...] | None
    witness: tuple[int, ...] | None

    @property
    def is_c1p(self) -> bool:
        return self.ordering is not None


MatrixLike = Union[CliqueMatrix, Sequence[Iterable[int]]]


def _as_rows(m: MatrixLike, ncols: int | None) -> tuple[list[frozenset[int]], int]:
    if isinstance(m, CliqueMatrix):
        return m.row_sets(), m.ncols
    if ncols is None:
        raise ValueError("ncols is required for a raw row list")
    return [frozenset(row) for row in m], ncols


def c1p_test(m: MatrixLike, ncols: int | None = None) -> C1PResult:
    """Consecutive-ones test with a verified ordering or a minimal witness."""
    rows, ncols = _as_rows(m, ncols)
    order = c1p_order(rows, ncols)
    if order is not None:
        if not check_consecutive(rows, order):
            raise RuntimeError("internal error: returned ordering failed row scan")
        return C1PResult(ordering=tuple(order), witness=None)
    return C1PResult(ordering=None, witness=_minimize_witness(rows, ncols))


def _minimize_witness(rows: list[frozenset[int]], ncols: int) -> tuple[int, ...]:
    """Greedy single-pass column dropping. The consecutive ones property is
    hereditary under column deletion, so one pass yields an inclusion-minimal
    non-C1P column subset."""
    keep = set(range(ncols))
    for c in range(ncols):
        trial = keep - {c}
        sub = [r & trial for r in rows]
        if c1p_order(sub, ncols) is None:
            keep = trial
    return tuple(sorted(keep))


# -- maximum-weight independent set on an interval model ---------------------


def mwis_interval(model: IntervalModel, weights: Sequence[Fraction]) -> Solution:
    """Maximum-total-weight set of pairwise non-intersecting intervals.

    Among equal-weight optima, returns the lexicographically smallest index
    set (decided by greedy completion against the DP optimum).
    """
    n = model.n
    if len(weights) != n:
        raise ValueError("weight count does not match model size")
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights):
        raise ValueError("negative weight refused")

    opt = _mwis_value(model, weights, range(n))
    chosen: list[int] = []
    total = Fraction(0)
    allowed = list(range(n))
    for v in range(n):
        if total == opt:
            break  # any extension would only be lexicographically larger
        if v not in allowed:
            continue
        rest = [u for u in allowed if u > v and not model.intersects(u, v)]
        if total + weights[v] + _mwis_value(model, weights, rest) == opt:
            chosen.append(v)
            total += weights[v]
            allowed = rest
    assert total == opt
    return Solution(frozenset(chosen), opt, "mwis-interval")


def _mwis_value(
    model: IntervalModel, weights: Sequence[Fraction], allowed: Iterable[int]
) -> Fraction:
    """Sweep DP for the optimal weight within `allowed` (classic weighted
    interval scheduling, closed intervals: touching intervals conflict)."""
    items = sorted(allowed, key=lambda v: (model.right(v), v))
    if not items:
        return Fraction(0)
    rights = [model.right(v) for v in items]
    best = [Fraction(0)] * (len(items) + 1)
    for i, v in enumerate(items):
        p = bisect.bisect_left(rights, model.left(v), 0, i)
        take = weights[v] + best[p]
        best[i + 1] = max(best[i], take)
    return best[len(items)]


# -- maximal cliques ---------------------------------------------------------


def maximal_cliques(model: IntervalModel) -> list[frozenset[int]]:
    """Maximal cliques of the model's graph, ordered by sweep position.

    Every maximal clique of an interval graph shows up as the set of
    intervals covering some right endpoint (the smallest right endpoint in
    the clique), so scanning distinct right endpoints and filtering
    non-maximal candidates is exact. At most n cliques exist.
    """
    n = model.n
    if n == 0:
        return []
    points = sorted({model.right(v) for v in range(n)})
    cands: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for p in points:
        K = frozenset(
            v for v in range(n) if model.left(v) <= p <= model.right(v)
        )
        if K and K not in seen:
            seen.add(K)
            cands.append(K)
    out = [
        K
        for K in cands
        if not any(K < other for other in cands)
    ]
    assert len(out) <= n
    return out


def maximal_cliques_abstract(g: StaticGraph) -> list[frozenset[int]]:
    """Maximal cliques of an abstract graph, in a consecutive arrangement
    order; raises NotIntervalError when g is not an interval graph.

    An interval graph has at most n maximal cliques and admits an ordering of
    them in which every vertex's cliques are consecutive; the converse holds
    too, so both checks together decide interval-ness.
    """
    n = g.n
    if n == 0:
        return []
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(sorted(g.edges))
    cliques: list[frozenset[int]] = []
    for cl in nx.find_cliques(G):
        cliques.append(frozenset(cl))
        if len(cliques) > n:
            raise NotIntervalError(
                f"more than {n} maximal cliques: not an interval graph"
            )
    rows = [
        frozenset(i for i, cl in enumerate(cliques) if v in cl) for v in range(n)
    ]
    res = c1p_test(rows, ncols=len(cliques))
    if not res.is_c1p:
        raise NotIntervalError("maximal cliques admit no consecutive arrangement")
    return [cliques[i] for i in res.ordering]


# -- agreement with an ordering and normalization ----------------------------


def ordering_agrees(
    g: StaticGraph, ordering: REOrdering
) -> Optional[tuple[int, int]]:
    """None when some interval model of g has its right endpoints in this
    order; otherwise a violating pair (u, w): the edge {u, w} spans a
    position whose vertex is not adjacent to w."""
    if ordering.n != g.n:
        raise ValueError("ordering size does not match graph")
    order = ordering.order
    for j in range(g.n):
        w = order[j]
        below = [i for i in range(j) if g.has_edge(order[i], w)]
        if below and below != list(range(below[0], j)):
            return (order[below[0]], w)
    return None


def normalized_model_for(g: StaticGraph, ordering: REOrdering) -> IntervalModel:
    """The normalized model of g along an agreeing ordering: right(v) = v's
    1-based position, left(v) = smallest position among vertices sharing a
    clique with v (equivalently min over N(v) ∪ {v})."""
    viol = ordering_agrees(g, ordering)
    if viol is not None:
        raise OrderingIncompatible(
            f"ordering incompatible: violating pair {viol}", pair=viol
        )
    order = ordering.order
    pos = {v: i for i, v in enumerate(order)}
    intervals: list[tuple[Fraction, Fraction]] = [None] * g.n  # type: ignore
    for j, v in enumerate(order):
        nbrs = g.neighbors(v)
        lo = min([pos[u] for u in nbrs], default=j)
        lo = min(lo, j)
        intervals[v] = (Fraction(lo + 1), Fraction(j + 1))
    return IntervalModel(intervals)


def normalize_to_ordering(model: IntervalModel, ordering: REOrdering) -> IntervalModel:
    """Normalized form of a model along an agreeing ordering; the normalized
    model induces the same graph. Raises OrderingIncompatible (with the
    violating pair) when the model's graph does not agree."""
    return normalized_model_for(model.induced_graph(), ordering)


def _require_normalized_pair(m1: IntervalModel, m2: IntervalModel) -> None:
    if m1.n != m2.n:
        raise ValueError("model sizes differ")
    for v in range(m1.n):
        if m1.right(v) != m2.right(v):
            raise ValueError(
                f"inputs not normalized to one ordering: right endpoints of "
                f"vertex {v} differ ({m1.right(v)} vs {m2.right(v)})"
            )


def intersect_models(m1: IntervalModel, m2: IntervalModel) -> IntervalModel:
    """Model of the edge-intersection of two graphs normalized to one
    ordering: per vertex [max(l1, l2), shared right endpoint]."""
    _require_normalized_pair(m1, m2)
    return IntervalModel(
        (max(m1.left(v), m2.left(v)), m1.right(v)) for v in range(m1.n)
    )


def union_models(m1: IntervalModel, m2: IntervalModel) -> IntervalModel:
    """Model of the edge-union: per vertex [min(l1, l2), shared right endpoint]."""
    _require_normalized_pair(m1, m2)
    return IntervalModel(
        (min(m1.left(v), m2.left(v)), m1.right(v)) for v in range(m1.n)
    )


# -- unit-interval recognition -----------------------------------------------


@dataclass(frozen=True)
class UnitIntervalResult:
    """Outcome of unit-interval recognition: a unit-length model on success,
    or a minimal vertex set whose closed-neighborhood submatrix is non-C1P."""

    model: IntervalModel | None
    ordering: REOrdering | None
    witness: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.model is not None


def recognize_unit_interval(g: StaticGraph) -> UnitIntervalResult:
    """Recognize unit (= proper) interval graphs and synthesize a unit model.

    A graph is a proper interval graph iff its closed-neighborhood matrix has
    the consecutive ones property; the C1P column order is then an umbrella
    ordering. Left endpoints along that ordering are pinned by an exact
    difference-constraint system (adjacent to the leftmost below-neighbor,
    separated from the one before it) solved with a symbolic infinitesimal
    margin, so closed-interval touching comes out exactly right. Failure is a
    value carrying the witness, not an exception.
    """
    n = g.n
    if n == 0:
        return UnitIntervalResult(IntervalModel([]), REOrdering(()), None)
    rows = [g.closed_neighborhood(v) for v in range(n)]
    res = c1p_test(rows, ncols=n)
    if not res.is_c1p:
        return UnitIntervalResult(None, None, res.witness)
    sigma = REOrdering(res.ordering)
    if not g.edges:
        model = IntervalModel((Fraction(2 * v), Fraction(2 * v + 1)) for v in range(n))
        return UnitIntervalResult(model, sigma, None)
    assert ordering_agrees(g, sigma) is None
    lefts = _unit_lefts(g, sigma)
    intervals: list[tuple[Fraction, Fraction]] = [None] * n  # type: ignore
    for j, v in enumerate(sigma.order):
        intervals[v] = (lefts[j], lefts[j] + 1)
    model = IntervalModel(intervals)
    if model.induced_graph() != g:
        raise RuntimeError("internal error: synthesized unit model mismatch")
    return UnitIntervalResult(model, sigma, None)


def _unit_lefts(g: StaticGraph, sigma: REOrdering) -> list[Fraction]:
    """Left endpoints x_0..x_{n-1} (position space) for unit intervals along
    an umbrella ordering.

    Constraints, with f(j) = leftmost below-neighbor position (f(j)=j if none):
      x_{j-1} <= x_j                      (right endpoints in order)
      x_j <= x_{f(j)} + 1    if f(j) < j  (touch the leftmost neighbor)
      x_j >= x_{f(j)-1} + 1 + mu  if f(j) >= 1  (clear the nearest non-neighbor)
    Solved as a shortest-path problem over weights (a, b) meaning a + b*mu
    with mu an infinitesimal; mu is then instantiated as 1/(n+1), halving
    exactly as needed (the strict separations hold for every sufficiently
    small positive mu).
    """
    n = g.n
    order = sigma.order
    pos = {v: i for i, v in enumerate(order)}
    f = []
    for j, v in enumerate(order):
        below = [pos[u] for u in g.neighbors(v) if pos[u] < j]
        f.append(min(below) if below else j)

    # Difference constraints x_b - x_a <= (c0, c1) as edges (a, b, c0, c1).
    edges: list[tuple[int, int, int, int]] = []
    for j in range(1, n):
        edges.append((j, j - 1, 0, 0))
        if f[j] < j:
            edges.append((f[j], j, 1, 0))
        if f[j] >= 1:
            edges.append((j, f[j] - 1, -1, -1))

    dist = [(0, 0)] * n
    for round_ in range(n + 1):
        changed = False
        for a, b, c0, c1 in edges:
            cand = (dist[a][0] + c0, dist[a][1] + c1)
            if cand < dist[b]:
                dist[b] = cand
                changed = True
        if not changed:
            break
    else:
        raise RuntimeError("internal error: unit synthesis constraints infeasible")

    mu = Fraction(1, n + 1)
    for _ in range(8 * n + 8):
        xs = [Fraction(a) + Fraction(b) * mu for a, b in dist]
        if _unit_lefts_realize(g, order, xs):
            return xs
        mu /= 2
    raise RuntimeError("internal error: no margin made the unit model exact")


def _unit_lefts_realize(
    g: StaticGraph, order: tuple[int, ...], xs: list[Fraction]
) -> bool:
    n = g.n
    for j in range(n):
        for i in range(j):
            adjacent = xs[j] - xs[i] <= 1 and xs[i] - xs[j] <= 1
            if adjacent != g.has_edge(order[i], order[j]):
                return False
    return True


def ensure_unit(inst: TemporalIntervalInstance) -> None:
    """Refuse instances that do not carry (and, in edges mode, survive) the
    unit declaration. Model-mode lengths were verified at construction; an
    edges-mode declaration is verified here layer by layer."""
    if not inst.unit_flag:
        raise NotUnitError("operation requires a unit instance (unit flag false)")
    if inst.mode == "edges":
        for t in range(1, inst.tau + 1):
            if not recognize_unit_interval(inst.layer_graph(t)).ok:
                raise NotUnitError(
                    f"unit declared but layer {t} is not a unit interval graph"
                )
