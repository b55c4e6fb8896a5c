"""Petersen graph: no nowhere-zero Z4-flow (exhaustive), yet a Z5-flow and a solver-built 6-flow."""

import time

from nzflow import oracle
from nzflow.generators import petersen
from nzflow.pipeline import solve_pipeline


def main():
    g = petersen()
    dim = oracle.cycle_basis(g).dim
    for k in (2, 3, 4, 5, 6):
        t0 = time.perf_counter()
        phi = oracle.find_nz_zk_flow(g, k)
        dt = time.perf_counter() - t0
        print(f"Z{k}: {'exists' if phi else 'none':6s} ({k}^{dim} = {k ** dim} combinations, {dt * 1000:.1f} ms)")
    for b in ("one", "two"):
        sol = solve_pipeline(g, b)
        print(f"\nbackend {b}:")
        print(sol.document(), end="")


if __name__ == "__main__":
    main()
