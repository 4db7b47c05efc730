#!/usr/bin/env python3
"""Benchmark the compiled elimination kernel against the pure-Python twin.

Workloads are the actual hot matrices of the engine: full coboundary
operators of catalog complexes, plus synthetic sparse rationals.  Outputs a
small table with per-kernel timings; run after `pip install -e .` so the
compiled module exists (the script degrades gracefully if it does not).
"""

import random
import time

from epslie import _elim_py

try:
    from epslie import _elim_cy
except ImportError:
    _elim_cy = None

from epslie import catalog
from epslie.cohomology import CochainComplex
from epslie.gmodule import trivial


def coboundary_rows(L, V, n):
    cx = CochainComplex(L, V, n)
    return cx.delta(n)._int_rows()


def synthetic_rows(rng, rows, cols, density, scale):
    out = []
    for _ in range(rows):
        row = {
            c: rng.randint(-scale, scale)
            for c in range(cols)
            if rng.random() < density
        }
        out.append({c: v for c, v in row.items() if v})
    return out


def timed(kernel, rows, repeats=3):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = kernel.rref(rows)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    rng = random.Random(1)
    L12 = catalog.sl12()
    P22 = catalog.psl_nn(2)
    cases = [
        ("delta^2 of sl(1|2) with the 7-dim module", coboundary_rows(
            L12, catalog.module_wn(L12, 3), 2)),
        ("delta^3 of psl(2|2), trivial coefficients", coboundary_rows(
            P22, trivial(P22), 3)),
        ("synthetic 400x300, 5% fill", synthetic_rows(rng, 400, 300, 0.05, 9)),
        ("synthetic 150x150, 30% fill", synthetic_rows(rng, 150, 150, 0.30, 5)),
    ]
    print("%-46s %10s %10s %8s" % ("case", "python", "cython", "speedup"))
    for label, rows in cases:
        t_py, r_py = timed(_elim_py, rows)
        if _elim_cy is None:
            print("%-46s %9.3fs %10s %8s" % (label, t_py, "n/a", "n/a"))
            continue
        t_cy, r_cy = timed(_elim_cy, rows)
        assert r_py == r_cy, "kernels disagree on %s" % label
        print(
            "%-46s %9.3fs %9.3fs %7.2fx"
            % (label, t_py, t_cy, t_py / t_cy if t_cy else float("inf"))
        )
    if _elim_cy is None:
        print("compiled kernel not built; install with cython to compare")


if __name__ == "__main__":
    main()
