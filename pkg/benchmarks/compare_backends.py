#!/usr/bin/env python3
"""Timing comparison of the compiled kernels against the pure-Python twin.

Measures the two hot spots (the incomplete-gamma series over a batch of
quadrature nodes, and the compensated reduction) in-process for both
backends, then times an end-to-end evaluation in subprocesses with
BESSELQUAD_BACKEND forced each way.

Usage:  python benchmarks/compare_backends.py [--repeats 7]
"""

import argparse
import math
import os
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from besselquad import special as sp  # noqa: E402
from besselquad._kernels import pykernels  # noqa: E402

try:
    from besselquad._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def series_case(impl, mu, radius, n):
    rng = np.random.default_rng(0)
    theta = rng.uniform(-math.pi, math.pi, size=n)
    w = np.ascontiguousarray(radius * np.exp(1j * theta))
    out = np.empty_like(w)
    seed = sp.recip_gamma(mu + 1)

    def run():
        impl.series_batch_into(mu, w, out, seed, 0, True, 512)

    return run


def comp_sum_case(impl, n):
    rng = np.random.default_rng(1)
    v = np.ascontiguousarray(rng.normal(size=n) + 1j * rng.normal(size=n))

    def run():
        impl.comp_sum(v)

    return run


def end_to_end(backend, repeats):
    code = (
        "import time, besselquad as bq\n"
        "t0 = time.perf_counter()\n"
        "for mu in (-2.5, 0.0, 0.5, 3.7+1j):\n"
        "    for z in (1.0, 2+1j, 5.0, 10.0):\n"
        "        bq.bessel_j(mu, z)\n"
        "print(time.perf_counter() - t0)\n"
    )
    env = dict(os.environ, BESSELQUAD_BACKEND=backend)
    best = math.inf
    for _ in range(repeats):
        res = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, env=env, check=True
        )
        best = min(best, float(res.stdout))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend not built; showing pure-Python numbers only")
    backends = [("python", pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])

    rows = []
    for radius in (5.0, 20.0):
        for n in (256, 4096):
            label = f"series |w|={radius:g} n={n}"
            times = {
                name: best_of(series_case(impl, 0.7 - 0.3j, radius, n), args.repeats)
                for name, impl in backends
            }
            rows.append((label, times))
    for n in (1024, 8192):
        label = f"comp_sum n={n}"
        times = {name: best_of(comp_sum_case(impl, n), args.repeats) for name, impl in backends}
        rows.append((label, times))

    print(f"{'kernel':28s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}")
    for label, times in rows:
        p = times["python"]
        c = times.get("compiled")
        if c is None:
            print(f"{label:28s} {p * 1e6:10.1f}us {'-':>12s} {'-':>9s}")
        else:
            print(f"{label:28s} {p * 1e6:10.1f}us {c * 1e6:10.1f}us {p / c:8.1f}x")

    if _ckernels is not None:
        print()
        py = end_to_end("python", max(3, args.repeats // 2))
        cc = end_to_end("compiled", max(3, args.repeats // 2))
        print(f"{'bessel_j 16-point sweep':28s} {py * 1e3:10.1f}ms {cc * 1e3:10.1f}ms {py / cc:8.1f}x")


if __name__ == "__main__":
    main()
