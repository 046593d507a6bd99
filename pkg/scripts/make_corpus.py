#!/usr/bin/env python3
"""Generate a directory of instance files for benchmarking.

Writes three families: random unit instances, order-preserving instances,
and a few permutation-string gadgets.  Seeds are derived from --seed so a
corpus can be regenerated byte for byte.
"""

import argparse
import itertools
import pathlib
import random

from tis import gen_lcsp_gadget, gen_order_preserving, gen_random_unit, serialize_instance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=pathlib.Path)
    ap.add_argument("--count", type=int, default=20, help="instances per family")
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--tau", type=int, default=3)
    ap.add_argument("--delta", type=int, default=1)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-weight", type=int, default=None)
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        inst = gen_random_unit(
            args.n, args.tau, args.delta, args.k,
            seed=args.seed + i, max_weight=args.max_weight,
        )
        (args.outdir / f"random_{i:03d}.tis").write_text(serialize_instance(inst))
    for i in range(args.count):
        inst = gen_order_preserving(
            args.n, args.tau, args.delta, args.k, seed=args.seed + 1000 + i,
        )
        (args.outdir / f"op_{i:03d}.tis").write_text(serialize_instance(inst))

    rng = random.Random(args.seed + 2000)
    perms = [list(p) for p in itertools.permutations(range(1, 4))]
    for i in range(min(args.count, 5)):
        strings = [rng.choice(perms) for _ in range(rng.randint(1, 3))]
        inst = gen_lcsp_gadget(strings)
        (args.outdir / f"gadget_{i:03d}.tis").write_text(serialize_instance(inst))

    total = 2 * args.count + min(args.count, 5)
    print(f"wrote {total} instances to {args.outdir}")


if __name__ == "__main__":
    main()
