# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of pykernels: incomplete-gamma / Kummer series evaluated
per quadrature node, plus the fixed-order compensated reduction.

Semantics mirror besselquad._kernels.pykernels exactly; see that module
for the stopping rule and the diagnostics contract.
"""

from libc.math cimport cos, exp, fabs, isfinite, log10, sin, sqrt

BACKEND_NAME = "compiled"

cdef double SERIES_RTOL = 1e-16
cdef double SERIES_TINY = 1e-300
cdef int SERIES_STREAK = 3
cdef double CANCEL_SENTINEL = 300.0


cdef inline double cmag(double complex z) noexcept nogil:
    # sqrt form (not hypot): much cheaper in the hot loop and identical
    # to the pure-Python twin; overflows past ~1e154 feed the explicit
    # non-finite failure path in the series loop.
    return sqrt(z.real * z.real + z.imag * z.imag)


def series_batch_into(double complex mu, double complex[::1] w,
                      double complex[::1] out, double complex seed,
                      int k_start, bint apply_exp_neg_w, int max_terms):
    """See pykernels.series_batch_into; identical contract."""
    cdef Py_ssize_t n = w.shape[0], i
    cdef int k, used, streak, terms_max = 0
    cdef double max_mag_all = 0.0, cancel_all = 0.0
    cdef bint all_conv = True, conv
    cdef double complex term, acc, wi, ew
    cdef double m, amag, max_mag, cancel
    cdef double complex inv[512]
    if max_terms > 512:
        raise ValueError("max_terms exceeds the reciprocal table size (512)")
    # one reciprocal per k, shared across nodes: the per-term update
    # inside the hot loop is then two complex multiplies
    for k in range(max_terms):
        inv[k] = 1.0 / (mu + (k_start + k) + 1.0)
    with nogil:
        for i in range(n):
            wi = w[i]
            term = seed
            for k in range(k_start):
                term = term * wi
            acc = 0
            max_mag = 0.0
            streak = 0
            used = 0
            conv = False
            k = 0
            while True:
                acc = acc + term
                m = cmag(term)
                if not isfinite(m):
                    break  # left the representable range: node failed
                if m > max_mag:
                    max_mag = m
                used += 1
                if m <= SERIES_RTOL * cmag(acc) + SERIES_TINY:
                    streak += 1
                    if streak >= SERIES_STREAK:
                        conv = True
                        break
                else:
                    streak = 0
                if used >= max_terms:
                    break
                term = term * (wi * inv[k])
                k += 1
            if apply_exp_neg_w:
                ew = exp(-wi.real) * (cos(wi.imag) - 1j * sin(wi.imag))
                out[i] = ew * acc
            else:
                out[i] = acc
            amag = cmag(acc)
            if amag > 0.0:
                m = max_mag if max_mag > SERIES_TINY else SERIES_TINY
                amag = amag if amag > SERIES_TINY else SERIES_TINY
                cancel = log10(m / amag)
            else:
                cancel = CANCEL_SENTINEL if max_mag > 0.0 else 0.0
            if cancel < 0.0:
                cancel = 0.0
            elif cancel > CANCEL_SENTINEL:
                cancel = CANCEL_SENTINEL
            if cancel > cancel_all:
                cancel_all = cancel
            if max_mag > max_mag_all:
                max_mag_all = max_mag
            if used > terms_max:
                terms_max = used
            if not conv:
                all_conv = False
    return terms_max, max_mag_all, cancel_all, all_conv


def comp_sum(double complex[::1] values):
    """Neumaier-compensated ascending-index sum; see pykernels.comp_sum."""
    cdef Py_ssize_t j, n = values.shape[0]
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0, t, u, x, y
    with nogil:
        for j in range(n):
            x = values[j].real
            t = sr + x
            if fabs(sr) >= fabs(x):
                cr += (sr - t) + x
            else:
                cr += (x - t) + sr
            sr = t
            y = values[j].imag
            u = si + y
            if fabs(si) >= fabs(y):
                ci += (si - u) + y
            else:
                ci += (y - u) + si
            si = u
    return complex(sr + cr, si + ci)
