#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [n_rows]
"""

import sys
import time

import numpy as np

from macfb import _kernels


def bench(label, fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<22s} {best * 1e3:9.1f} ms")
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    rng = np.random.default_rng(0)
    backends = _kernels.backends()
    print(f"active backend: {_kernels.BACKEND}; rows per case: {n:,}")

    p = rng.dirichlet(np.ones(2), size=n)
    q1 = rng.uniform(size=(n, 2))
    q2 = rng.uniform(size=(n, 2))
    joint = rng.dirichlet(np.ones(4), size=n)

    results = {}
    for name, mod in backends.items():
        print(f"{name}:")
        results[name, "input"] = bench(
            "input_stats (noisy)", mod.input_stats, p, q1, q2, _kernels.KIND_NOISY
        )
        results[name, "erase"] = bench(
            "input_stats (erasure)", mod.input_stats, p, q1, q2, _kernels.KIND_ERASURE
        )
        results[name, "cutset"] = bench("cutset_stats", mod.cutset_stats, joint, _kernels.KIND_NOISY)

    if "compiled" in backends:
        for case in ("input", "erase", "cutset"):
            ratio = results["numpy", case] / results["compiled", case]
            print(f"speedup {case:<7s}: {ratio:5.1f}x")
        a = backends["compiled"].input_stats(p[:1000], q1[:1000], q2[:1000], 0)
        b = backends["numpy"].input_stats(p[:1000], q1[:1000], q2[:1000], 0)
        print(f"max |compiled - numpy| on 1000 rows: {np.abs(a - b).max():.3e}")


if __name__ == "__main__":
    main()
