"""Pure-Python (numpy) twin of the compiled evaluation kernels.

These are the hot inner loops of the library: the incomplete-gamma /
Kummer power series evaluated at every quadrature node, and the
fixed-order compensated reduction used by the quadrature rules.  The
compiled module ``_ckernels`` implements the same three entry points
with identical semantics; either backend must pass the full test suite.

Series stopping rule (shared contract): a node is converged once
``|term| <= 1e-16 * |partial sum| + 1e-300`` holds for 3 consecutive
terms; the term budget is bounded by the caller (512 by default
upstream).  Per-node diagnostics are reduced to a worst-case envelope:
max terms used, max term magnitude, max cancellation digits
(log10(max |term| / |sum|), clamped to [0, 300]), and an all-converged
flag.
"""

import math

import numpy as np

BACKEND_NAME = "python"

SERIES_RTOL = 1e-16
SERIES_TINY = 1e-300
SERIES_STREAK = 3
CANCEL_SENTINEL = 300.0


def series_batch_into(mu, w, out, seed, k_start, apply_exp_neg_w, max_terms):
    """Sum seed * sum_{k>=k_start} w^(k-k_start) * prod 1/(mu+j+1) per node.

    Concretely: term(k_start) = seed * w**k_start and
    term(k+1) = term(k) * w / (mu + k + 1).  With seed = 1/Gamma(mu+1)
    and k_start = 0 this is the entire incomplete-gamma kernel series
    sum_k w^k / Gamma(mu+k+1); with seed = 1 it is the Kummer series
    M(1, 1+mu; w).  When ``apply_exp_neg_w`` the result is multiplied by
    exp(-w) at the end.  Callers arrange k_start so that mu + k + 1
    never vanishes along the recurrence.

    Writes values into ``out`` and returns the reduced diagnostics
    tuple ``(terms_max, max_term_mag, cancel_digits_max, all_converged)``.
    """
    mu = complex(mu)
    w = np.ascontiguousarray(w, dtype=np.complex128)
    n = w.shape[0]
    if k_start:
        term = (w ** int(k_start)) * complex(seed)
    else:
        term = np.full(n, complex(seed), dtype=np.complex128)
    acc = np.zeros(n, dtype=np.complex128)
    max_mag = np.zeros(n)
    streak = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.int64)
    converged = np.zeros(n, dtype=bool)
    done = np.zeros(n, dtype=bool)
    k = int(k_start)
    count = 0
    with np.errstate(over="ignore", invalid="ignore"):
        while True:
            live = ~done
            acc = np.where(live, acc + term, acc)
            # sqrt(re^2+im^2), not hypot: same formula as the compiled
            # twin, valid up to ~1e154 (anything past that goes through
            # the non-finite failure path below)
            mag = np.sqrt(term.real ** 2 + term.imag ** 2)
            bad = live & ~np.isfinite(mag)
            np.maximum(max_mag, np.where(live, mag, 0.0), out=max_mag)
            count += 1
            used[live] = count
            amag = np.sqrt(acc.real ** 2 + acc.imag ** 2)
            small = mag <= SERIES_RTOL * amag + SERIES_TINY
            streak = np.where(live & small, streak + 1, np.where(live, 0, streak))
            converged |= live & (streak >= SERIES_STREAK)
            done |= converged | bad
            if done.all() or count >= max_terms:
                break
            # one scalar reciprocal per k; the node loop sees only multiplies
            term = term * (w * (1.0 / (mu + k + 1.0)))
            k += 1
        if apply_exp_neg_w:
            np.multiply(np.exp(-w), acc, out=out)
        else:
            out[:] = acc
        amag = np.sqrt(acc.real ** 2 + acc.imag ** 2)
        cancel = np.where(
            amag > 0.0,
            np.log10(np.maximum(max_mag, SERIES_TINY) / np.maximum(amag, SERIES_TINY)),
            np.where(max_mag > 0.0, CANCEL_SENTINEL, 0.0),
        )
    cancel = np.where(np.isfinite(cancel), cancel, CANCEL_SENTINEL)
    cancel = np.clip(cancel, 0.0, CANCEL_SENTINEL)
    max_mag_out = float(max_mag.max())
    if not math.isfinite(max_mag_out):
        max_mag_out = math.inf
    return int(used.max()), max_mag_out, float(cancel.max()), bool(converged.all())


def comp_sum(values) -> complex:
    """Neumaier-compensated sum of a complex array in ascending index order.

    The fixed order and the compensation make the reduction bit-stable:
    identical inputs give the identical bit pattern on every run.
    """
    values = np.ascontiguousarray(values, dtype=np.complex128)
    re = values.real
    im = values.imag
    sr = cr = si = ci = 0.0
    fabs = math.fabs
    for j in range(values.shape[0]):
        x = re[j]
        t = sr + x
        if fabs(sr) >= fabs(x):
            cr += (sr - t) + x
        else:
            cr += (x - t) + sr
        sr = t
        y = im[j]
        u = si + y
        if fabs(si) >= fabs(y):
            ci += (si - u) + y
        else:
            ci += (y - u) + si
        si = u
    return complex(sr + cr, si + ci)
