"""Solve the fixed-seed corpus with both backends and print a per-graph table plus totals."""

import argparse
import time
from collections import Counter

from nzflow import reduction
from nzflow.flows import verify_pair
from nzflow.generators import corpus
from nzflow.pipeline import solve_pipeline


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=240)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("-q", "--quiet", action="store_true")
    args = ap.parse_args()

    graphs = corpus(args.size, args.seed)
    steps = Counter()
    times = Counter()
    failures = 0
    for name, g in graphs:
        steps.update(reduction.summary(reduction.reduce(g))["steps"])
        row = [f"{name:34s} n={g.n:3d} m={g.m:3d}"]
        for b in ("one", "two"):
            t0 = time.perf_counter()
            sol = solve_pipeline(g, b, workers=args.workers)
            times[b] += time.perf_counter() - t0
            ok = verify_pair(g, sol.pair).ok
            failures += not ok
            row.append(f"{b}={'ok' if ok else 'FAIL'}")
        if not args.quiet:
            print("  ".join(row))
    print(f"graphs {len(graphs)}  failures {failures}")
    print("reduction steps " + ", ".join(f"{k} {v}" for k, v in sorted(steps.items())))
    print(f"time one {times['one']:.2f}s  two {times['two']:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
