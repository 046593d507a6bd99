"""Benchmark harness: run every solver over a directory of instance files
and emit one CSV row per (instance, algorithm).

Column schema is fixed for downstream tooling:

  instance, n, tau, delta, k, algorithm, objective, cardinality,
  runtime_ms, verified, oracle_objective, ratio_bound, bound_holds

objective and oracle_objective are exact rationals. ratio_bound is the
greedy guarantee (tau - delta + 1) * 2^delta and is only filled on greedy
rows of unit instances; bound_holds checks objective * ratio_bound >=
oracle_objective whenever both sides are known. Unreadable files produce a
single row with verified=ERROR and the run continues. Rows are sorted by
(instance, algorithm) before writing, so the CSV is deterministic up to the
runtime_ms column.
"""

from __future__ import annotations

import csv
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from .conflict import WindowSemantics
from .model import (
    BudgetExceeded,
    LimitExceeded,
    Solution,
    TemporalIntervalInstance,
    parse_instance,
)
from .opvd import min_opvd
from .order import recognize_order_preserving
from .solvers import (
    solve_exact_bruteforce,
    solve_exact_op,
    solve_fpt,
    solve_greedy,
)

COLUMNS = [
    "instance",
    "n",
    "tau",
    "delta",
    "k",
    "algorithm",
    "objective",
    "cardinality",
    "runtime_ms",
    "verified",
    "oracle_objective",
    "ratio_bound",
    "bound_holds",
]


def _greedy_ratio(inst: TemporalIntervalInstance) -> Optional[int]:
    if not inst.unit_flag:
        return None
    return (inst.tau - inst.delta + 1) * 2**inst.delta


def _row(
    inst: TemporalIntervalInstance,
    name: str,
    algorithm: str,
    runner: Callable[[], Solution],
    oracle: Optional[Fraction],
) -> dict[str, str]:
    t0 = time.perf_counter()
    sol = runner()
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    verified = sol.certificate is not None and sol.certificate.independent
    ratio = _greedy_ratio(inst) if algorithm == "greedy" else None
    bound = ""
    if ratio is not None and oracle is not None:
        bound = "yes" if sol.objective * ratio >= oracle else "no"
    return {
        "instance": name,
        "n": str(inst.n),
        "tau": str(inst.tau),
        "delta": str(inst.delta),
        "k": str(inst.k),
        "algorithm": algorithm,
        "objective": str(sol.objective),
        "cardinality": str(sol.cardinality),
        "runtime_ms": f"{elapsed_ms:.3f}",
        "verified": "PASS" if verified else "FAIL",
        "oracle_objective": "" if oracle is None else str(oracle),
        "ratio_bound": "" if ratio is None else str(ratio),
        "bound_holds": bound,
    }


def _error_row(name: str, message: str) -> dict[str, str]:
    row = {col: "" for col in COLUMNS}
    row["instance"] = name
    row["verified"] = "ERROR"
    row["algorithm"] = message[:80]
    return row


def run_bench(
    directory: str | Path,
    csv_out: str | Path,
    semantics: WindowSemantics = WindowSemantics.FIGURE,
    oracle_limit: int = 30,
) -> list[dict[str, str]]:
    """Benchmark every *.tis file under `directory` and write the CSV."""
    directory = Path(directory)
    rows: list[dict[str, str]] = []
    for path in sorted(directory.glob("*.tis")):
        name = path.name
        try:
            inst = parse_instance(path.read_text())
        except Exception as exc:  # noqa: BLE001  (ERROR row, keep going)
            rows.append(_error_row(name, str(exc)))
            continue
        try:
            rows.extend(_instance_rows(inst, name, semantics, oracle_limit))
        except Exception as exc:  # noqa: BLE001
            rows.append(_error_row(name, str(exc)))
    rows.sort(key=lambda r: (r["instance"], r["algorithm"]))
    out = Path(csv_out)
    with out.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return rows


def _instance_rows(
    inst: TemporalIntervalInstance,
    name: str,
    semantics: WindowSemantics,
    oracle_limit: int,
) -> list[dict[str, str]]:
    oracle: Optional[Fraction] = None
    exact_sol: Optional[Solution] = None
    if inst.n <= oracle_limit:
        exact_sol = solve_exact_bruteforce(inst, semantics, limit=oracle_limit)
        oracle = exact_sol.objective

    rows = [_row(inst, name, "greedy", lambda: solve_greedy(inst, semantics), oracle)]
    if exact_sol is not None:
        rows.append(
            _row(
                inst,
                name,
                "exact",
                lambda: solve_exact_bruteforce(inst, semantics, limit=oracle_limit),
                oracle,
            )
        )
    if inst.unit_flag:
        rep = recognize_order_preserving(inst)
        if rep.is_order_preserving and rep.ordering is not None:
            rows.append(
                _row(
                    inst,
                    name,
                    "op",
                    lambda: solve_exact_op(inst, rep.ordering, semantics),
                    oracle,
                )
            )
        try:
            deletion = min_opvd(inst).deletion_set
            rows.append(
                _row(
                    inst,
                    name,
                    "fpt",
                    lambda: solve_fpt(inst, deletion, semantics),
                    oracle,
                )
            )
        except (BudgetExceeded, LimitExceeded):
            pass
    return rows
