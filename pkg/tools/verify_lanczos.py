#!/usr/bin/env python3
"""Acceptance gate for the shipped Lanczos coefficient table.

Compares gamma_fn / recip_gamma against 40-digit mpmath references over
the |s| <= 30 disk and reports the worst relative error.  Any
regenerated coefficient set must pass this before replacing
src/besselquad/lanczos_g607_n15.json (contract: <= 1e-13).

Usage:  python tools/verify_lanczos.py [--samples 4000]
"""

import argparse
import math
import os
import sys

import mpmath as mp
import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from besselquad.special import gamma_fn, nonpositive_int_or_none, recip_gamma  # noqa: E402

TOL = 1e-13


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=4000)
    parser.add_argument("--radius", type=float, default=30.0)
    args = parser.parse_args()

    mp.mp.dps = 40
    rng = np.random.default_rng(20240901)
    worst_g = worst_r = 0.0
    worst_g_at = worst_r_at = None
    tested = 0
    while tested < args.samples:
        r = args.radius * math.sqrt(rng.uniform())
        ph = rng.uniform(0.0, 2.0 * math.pi)
        s = complex(r * math.cos(ph), r * math.sin(ph))
        if nonpositive_int_or_none(s) is not None:
            continue
        ref = complex(mp.gamma(mp.mpc(s.real, s.imag)))
        if not (math.isfinite(ref.real) and math.isfinite(ref.imag)) or ref == 0:
            continue
        err_g = abs(gamma_fn(s) - ref) / abs(ref)
        err_r = abs(recip_gamma(s) - 1.0 / ref) * abs(ref)
        if err_g > worst_g:
            worst_g, worst_g_at = err_g, s
        if err_r > worst_r:
            worst_r, worst_r_at = err_r, s
        tested += 1

    print(f"samples: {tested}, radius: {args.radius}")
    print(f"worst gamma_fn     rel err: {worst_g:.3e} at s = {worst_g_at}")
    print(f"worst recip_gamma  rel err: {worst_r:.3e} at s = {worst_r_at}")
    ok = worst_g <= TOL and worst_r <= TOL
    print("PASS" if ok else f"FAIL (tolerance {TOL:g})")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
