#!/usr/bin/env python3
"""Benchmark every solver on a directory of instance files.

Thin wrapper over tis.bench.run_bench; prints a short summary table on top
of the CSV it writes.  Timing lives only in the CSV.
"""

import argparse
import collections
import csv
import pathlib

from tis.bench import run_bench
from tis.conflict import WindowSemantics


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("directory", type=pathlib.Path)
    ap.add_argument("csv_out", type=pathlib.Path)
    ap.add_argument(
        "--window-semantics", choices=["figure", "formula"], default="figure",
    )
    ap.add_argument("--limit-oracle", type=int, default=30)
    args = ap.parse_args()

    rows = run_bench(
        args.directory,
        args.csv_out,
        semantics=WindowSemantics(args.window_semantics),
        oracle_limit=args.limit_oracle,
    )
    nrows = len(rows)

    by_alg = collections.Counter()
    verified = collections.Counter()
    with open(args.csv_out) as fh:
        for row in csv.DictReader(fh):
            by_alg[row["algorithm"]] += 1
            verified[row["verified"]] += 1
    print(f"rows={nrows} csv={args.csv_out}")
    for alg in sorted(by_alg):
        print(f"  {alg}: {by_alg[alg]}")
    if verified.get("ERROR"):
        print(f"  errors: {verified['ERROR']}")


if __name__ == "__main__":
    main()
