"""Benchmark the numba kernels against the pure-numpy fallback.

Both builds are importable from icup._kernels regardless of which one is
active, so a single process can time them side by side.  Run:

    python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from icup import ChannelParams, build_constraints, gamma_pa
from icup import _kernels as k

POINTS = [
    (6.0, 1.0, 0.5),
    (1e4, 0.01, 2.0),
    (100.0, 0.3, 0.0),
    (2.0, 0.5, 1.0),
    (1e6, 1e-3, 10.0),
]


def lp_inputs():
    out = []
    for p, a, c12 in POINTS:
        params = ChannelParams(p, a, c12)
        cons = build_constraints(gamma_pa(params, 0.4), params)
        A = np.ascontiguousarray([c.coeffs for c in cons])
        b = np.ascontiguousarray([c.rhs for c in cons])
        out.append((A, b, np.ones(3)))
    return out


def bench(label, fn, calls, repeats):
    fn()  # warm-up (numba compilation, numpy combo cache)
    best = min(timed(fn) for _ in range(repeats))
    per_call = best / calls * 1e6
    print(f"  {label:<22} {best * 1e3:9.2f} ms/iter  ({per_call:8.2f} us/call)")
    return best


def timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    kernels = [
        (
            "gamma search (2001-pt grid + trisection)",
            lambda impl: [impl(p, a, c) for p, a, c in POINTS],
            {"numba": k._optimize_gamma_nb, "numpy": k._optimize_gamma_np}
            if k.NUMBA_ACTIVE
            else {"numpy": k._optimize_gamma_np},
        ),
        (
            "eta search (1001-pt grid + golden section)",
            lambda impl: [impl(p, min(a, 1.0)) for p, a, _ in POINTS],
            {"numba": k._cgrc_eta_max_nb, "numpy": k._cgrc_eta_max_np}
            if k.NUMBA_ACTIVE
            else {"numpy": k._cgrc_eta_max_np},
        ),
        (
            "vertex enumeration (680 triples)",
            lambda impl: [impl(A, b, c) for A, b, c in lp_inputs()],
            {"numba": k._vertex_enum_nb, "numpy": k._vertex_enum_np}
            if k.NUMBA_ACTIVE
            else {"numpy": k._vertex_enum_np},
        ),
    ]

    if not k.NUMBA_ACTIVE:
        print("numba path inactive (ICUP_DISABLE_NUMBA set or numba missing); "
              "timing the numpy fallback only\n")

    for name, runner, impls in kernels:
        print(f"{name}, {len(POINTS)} calls per iteration:")
        times = {
            label: bench(label, lambda impl=impl: runner(impl), len(POINTS), args.repeats)
            for label, impl in impls.items()
        }
        if "numba" in times and "numpy" in times:
            print(f"  speedup numba vs numpy: {times['numpy'] / times['numba']:.1f}x")
        print()


if __name__ == "__main__":
    main()
