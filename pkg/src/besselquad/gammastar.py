"""Tricomi's entire incomplete-gamma kernel and its derived family.

The central object is gamma_star(mu, w), entire in both arguments,
evaluated by the single canonical series

    gamma_star(mu, w) = exp(-w) * sum_{k>=0} w^k / Gamma(mu + k + 1),

with the reciprocal-gamma factor advanced by r_{k+1} = r_k / (mu+k+1)
from r_0 = 1/Gamma(mu+1).  When mu is exactly a nonpositive integer -n
the first n coefficients vanish identically, so the recurrence is seeded
at k = n with r_n = 1/Gamma(1) = 1 instead of dividing 0/0 through the
pole.  Everything else here (the normalised lower function P, the
lower/upper decomposition, the order-shift recurrence, the Kummer form
M(1, 1+mu; w)) is a thin layer over that series.

Conditioning: for Re w < 0 the series alternates and the exp(-w)*sum
arrangement loses roughly log10(max |term| / |sum|) digits.  That loss
is reported, not hidden: every evaluation carries SeriesDiagnostics and
consumers attach a cancellation warning above 3 digits.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels as kern
from . import special as sp
from .errors import ConvergenceError, DegenerateInput, PoleError

MAX_TERMS = 512
CANCEL_WARN_DIGITS = 3.0


@dataclass(frozen=True)
class SeriesDiagnostics:
    """Conditioning record for one series evaluation (or the worst case
    over a batch of them)."""

    terms_used: int
    max_term_mag: float
    cancellation_digits: float
    converged: bool


def _series_seed(mu: complex):
    """Starting index and coefficient for the kernel series at this order."""
    n = sp.nonpositive_int_or_none(complex(mu) + 1.0)
    if n is not None:
        # mu = -(n+1) exactly: coefficients vanish through k = n, and
        # r_{n+1} = 1/Gamma(1) = 1.
        return n + 1, 1.0 + 0.0j
    return 0, sp.recip_gamma(complex(mu) + 1.0)


def gamma_star_nodes(mu: complex, w):
    """Evaluate gamma_star(mu, w_j) over an array of arguments.

    Returns (values, SeriesDiagnostics) where the diagnostics are the
    worst-case envelope over the batch.  This is the hot path used by
    the quadrature integrands; it never raises on slow convergence (the
    flag is carried in the diagnostics instead).
    """
    w = np.ascontiguousarray(w, dtype=np.complex128)
    out = np.empty_like(w)
    k_start, seed = _series_seed(mu)
    terms, max_mag, cancel, converged = kern.series_batch_into(
        complex(mu), w, out, seed, k_start, True, MAX_TERMS
    )
    return out, SeriesDiagnostics(terms, max_mag, cancel, converged)


def gamma_star(mu: complex, w: complex):
    """Tricomi's fundamental function gamma_star(mu, w); entire in both.

    Returns (value, SeriesDiagnostics).  Raises ConvergenceError if the
    stopping rule is not met within 512 terms.
    """
    values, diag = gamma_star_nodes(mu, np.array([complex(w)]))
    if not diag.converged:
        raise ConvergenceError(
            f"gamma_star series did not converge in {MAX_TERMS} terms "
            f"at mu={mu}, w={w}"
        )
    return complex(values[0]), diag


def lower_p(mu: complex, w: complex) -> complex:
    """Normalised lower incomplete gamma P(mu, w) = w^mu gamma_star(mu, w)."""
    value, _ = gamma_star(mu, w)
    return sp.principal_pow(w, mu) * value


def gamma_lower(mu: complex, w: complex) -> complex:
    """Lower incomplete gamma(mu, w) = Gamma(mu) w^mu gamma_star(mu, w)."""
    return sp.gamma_fn(mu) * lower_p(mu, w)


def gamma_upper(mu: complex, w: complex) -> complex:
    """Upper incomplete Gamma(mu, w) = Gamma(mu) [1 - w^mu gamma_star(mu, w)]."""
    return sp.gamma_fn(mu) * (1.0 - lower_p(mu, w))


def gamma_star_shift(mu: complex, n: int, w: complex, base: complex) -> complex:
    """Order-shift recurrence: gamma_star(mu + n, w) from base = gamma_star(mu, w).

        gamma_star(mu+n, w) = w^-n (base - exp(-w) sum_{k<n} w^k / Gamma(mu+k+1))

    Takes ``base`` explicitly so the recurrence can be probed in
    isolation from the series.  n = 0 returns base unchanged.
    """
    if n < 0:
        raise DegenerateInput("shift count n must be >= 0")
    if n == 0:
        return complex(base)
    w = complex(w)
    if w == 0:
        raise DegenerateInput(
            "order-shift recurrence is undefined at w = 0; "
            "evaluate gamma_star(mu + n, 0) directly"
        )
    mu = complex(mu)
    total = 0.0 + 0.0j
    wk = 1.0 + 0.0j
    for k in range(n):
        total += wk * sp.recip_gamma(mu + k + 1.0)
        wk *= w
    return (complex(base) - np.exp(-w) * total) / w ** n


def kummer_m1_nodes(mu: complex, w):
    """Kummer M(1, 1+mu; w_j) over an array, via the Pochhammer recurrence
    t_{k+1} = t_k * w / (1 + mu + k).  Batch analogue of kummer_m1."""
    mu = complex(mu)
    if sp.nonpositive_int_or_none(mu + 1.0) is not None:
        raise PoleError(f"Kummer series undefined: 1+mu = {mu + 1.0}")
    w = np.ascontiguousarray(w, dtype=np.complex128)
    out = np.empty_like(w)
    terms, max_mag, cancel, converged = kern.series_batch_into(
        mu, w, out, 1.0 + 0.0j, 0, False, MAX_TERMS
    )
    return out, SeriesDiagnostics(terms, max_mag, cancel, converged)


def kummer_m1(mu: complex, w: complex) -> complex:
    """Kummer confluent hypergeometric M(1, 1+mu; w)."""
    values, diag = kummer_m1_nodes(mu, np.array([complex(w)]))
    if not diag.converged:
        raise ConvergenceError(
            f"Kummer series did not converge in {MAX_TERMS} terms "
            f"at mu={mu}, w={w}"
        )
    return complex(values[0])
