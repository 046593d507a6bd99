"""Deletion sets to order preservation.

min_opvd finds a minimum vertex set whose removal makes the instance order
preserving. The search is iterative-deepening DFS. At every node the current
reduced instance is re-recognized; when it is not order preserving, the
branching set is an inclusion-minimal vertex set whose *induced sub-instance*
is itself not order preserving. Order preservation is hereditary under taking
induced sub-instances (restrict an agreeing representation), so every valid
deletion set must meet every such set: branching on its members is complete.

Branching on a minimal non-C1P column subset of the pooled clique matrix
would NOT be complete: cliques must be re-extracted after a deletion (a
maximal clique can stop being maximal), and there are instances where a
single vertex outside the minimal column witness is a valid deletion set
while the witness itself induces an order-preserving sub-instance. The test
suite carries such an instance as a regression fixture.

All recognitions are memoized by deletion set, and the first successful
depth collects every minimum before tie-breaking, so the returned set is the
lexicographically smallest minimum regardless of exploration order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .intervals import REOrdering, ensure_unit
from .model import (
    BudgetExceeded,
    LimitExceeded,
    TemporalIntervalInstance,
    remove_vertices,
)
from .order import (
    CliqueMatrix,
    OrderPreservationReport,
    pooled_clique_matrix,
    recognize_order_preserving,
)

EXHAUSTIVE_DEFAULT_LIMIT = 16


@dataclass(frozen=True)
class OpvdResult:
    """A deletion set plus a right-endpoint ordering of the survivors.

    `ordering` holds original vertex indices in agreement order; removing
    `deletion_set` and following it normalizes every layer.
    """

    deletion_set: frozenset[int]
    size: int
    ordering: tuple[int, ...]


class _RecognitionCache:
    """Memoized `is the instance minus this deletion set order preserving`."""

    def __init__(self, inst: TemporalIntervalInstance):
        self.inst = inst
        self.cache: dict[frozenset[int], OrderPreservationReport] = {}

    def report(self, dels: frozenset[int]) -> OrderPreservationReport:
        hit = self.cache.get(dels)
        if hit is None:
            hit = recognize_order_preserving(remove_vertices(self.inst, dels))
            self.cache[dels] = hit
        return hit

    def is_op(self, dels: frozenset[int]) -> bool:
        return self.report(dels).is_order_preserving

    def result_for(self, dels: frozenset[int]) -> OpvdResult:
        rep = self.report(dels)
        assert rep.is_order_preserving and rep.ordering is not None
        keep = [v for v in range(self.inst.n) if v not in dels]
        return OpvdResult(
            deletion_set=dels,
            size=len(dels),
            ordering=tuple(keep[i] for i in rep.ordering.order),
        )


def _hereditary_witness(cache: _RecognitionCache, dels: frozenset[int]) -> list[int]:
    """An inclusion-minimal vertex set (disjoint from dels) whose induced
    sub-instance is not order preserving. One greedy pass suffices because
    order preservation is hereditary."""
    n = cache.inst.n
    support = frozenset(range(n)) - dels
    assert not cache.is_op(dels)
    for v in sorted(support):
        trial = support - {v}
        if not cache.is_op(frozenset(range(n)) - trial):
            support = trial
    return sorted(support)


def min_opvd(
    inst: TemporalIntervalInstance,
    budget: int | None = None,
    candidates: Optional[Iterable] = None,
) -> OpvdResult:
    """Minimum deletion set to order preservation (unit instances only).

    With `candidates`, only subsets of that vertex set are considered,
    enumerated smallest-cardinality-first then lexicographically. Otherwise
    the witness-branching search runs. Ties always go to the
    lexicographically smallest vertex-index set. Raises BudgetExceeded when
    no set within `budget` exists (or, with candidates, none within them).
    """
    ensure_unit(inst)
    cache = _RecognitionCache(inst)
    if cache.is_op(frozenset()):
        return cache.result_for(frozenset())

    if candidates is not None:
        pool = sorted(inst.vertex_set(candidates))
        top = len(pool) if budget is None else min(budget, len(pool))
        for d in range(1, top + 1):
            for combo in itertools.combinations(pool, d):
                dels = frozenset(combo)
                if cache.is_op(dels):
                    return cache.result_for(dels)
        raise BudgetExceeded(
            f"no deletion set of size <= {top} within the candidate set"
        )

    n = inst.n
    top = n if budget is None else min(budget, n)
    for depth in range(1, top + 1):
        found: list[frozenset[int]] = []
        visited: set[frozenset[int]] = set()

        def dfs(dels: frozenset[int], remaining: int) -> None:
            if dels in visited:
                return
            visited.add(dels)
            if cache.is_op(dels):
                found.append(dels)
                return
            if remaining == 0:
                return
            for v in _hereditary_witness(cache, dels):
                dfs(dels | {v}, remaining - 1)

        dfs(frozenset(), depth)
        if found:
            best = min(found, key=lambda s: tuple(sorted(s)))
            return cache.result_for(best)
    raise BudgetExceeded(f"no deletion set of size <= {top}")


def opvd_exhaustive(
    inst: TemporalIntervalInstance, limit: int = EXHAUSTIVE_DEFAULT_LIMIT
) -> OpvdResult:
    """Exact minimum by plain subset enumeration (the oracle used to
    cross-check min_opvd); smallest cardinality first, then lexicographic."""
    ensure_unit(inst)
    if inst.n > limit:
        raise LimitExceeded(
            f"exhaustive deletion search capped at n <= {limit}, got {inst.n}"
        )
    for d in range(inst.n + 1):
        for combo in itertools.combinations(range(inst.n), d):
            dels = frozenset(combo)
            rep = recognize_order_preserving(remove_vertices(inst, dels))
            if rep.is_order_preserving:
                keep = [v for v in range(inst.n) if v not in dels]
                assert rep.ordering is not None
                return OpvdResult(
                    deletion_set=dels,
                    size=d,
                    ordering=tuple(keep[i] for i in rep.ordering.order),
                )
    raise AssertionError("unreachable: the empty instance is order preserving")


def reduce_to_column_deletion(
    inst: TemporalIntervalInstance,
) -> tuple[CliqueMatrix, tuple[str, ...]]:
    """The pooled clique matrix plus the column-to-vertex-name bijection.

    Deleting a column set makes the matrix consecutive-ones-orderable iff
    deleting the mapped vertices makes the instance order preserving,
    *provided* rows are re-derived as maximal cliques of the reduced layers
    (column_deletion_check does that); maximality is not hereditary under
    vertex deletion, so dropping matrix columns in place is not sound.
    """
    ensure_unit(inst)
    return pooled_clique_matrix(inst), tuple(inst.names)


def column_deletion_check(inst: TemporalIntervalInstance, cols: Iterable) -> bool:
    """Would deleting these columns (vertices) leave a consecutive-ones
    pooled matrix? Evaluated by re-extracting cliques from the reduced
    instance, per reduce_to_column_deletion's contract."""
    from .intervals import c1p_test

    reduced = remove_vertices(inst, inst.vertex_set(cols))
    return c1p_test(pooled_clique_matrix(reduced)).is_c1p
