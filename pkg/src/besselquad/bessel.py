"""Integral representations of J_mu(z), I_mu(z) and the z-derivatives.

All evaluations share one skeleton: a smooth 2pi-periodic kernel built
from the entire incomplete-gamma function gamma_star is integrated by
the spectral periodic rule, then scaled by a principal-branch prefactor
in (z/2).  The kernels implemented here:

* cosine form    J_mu(z) = (z/2)^mu/(2pi) Int e^{i z cos t} g*(mu, i z e^{it}/2) dt
* sine form      J_mu(z) = (z/2)^mu/(2pi) Int e^{i z sin t} g*(mu, z e^{it}/2) dt
* order shift    J_{mu+n}(z): sine-form integrand times e^{-i n t}, same prefactor
* Fourier side   kappa_n = Int e^{i z sin t} g*(mu, z e^{it}/2) e^{+i n t} dt
* modified       I_mu(z) = (z/2)^mu/(2pi) Int e^{z cos t} g*(mu, z e^{it}/2) dt
* derivative     d^k/dz^k J_mu(z) = (z/2)^{mu-k}/(2pi) Int e^{i z sin t}
                     g*(mu-k, z e^{it}/2) (i sin t)^k e^{-i k t} dt,  Re k > -1
* Kummer form    J_mu(z) = (z/2)^mu/(2pi Gamma(1+mu)) Int e^{i z e^{-it}/2}
                     M(1, 1+mu; i z e^{it}/2) dt

Branch policy: powers take the principal branch with arg in (-pi, pi],
so a non-integer order at negative real z is evaluated on the upper side
of the cut and flagged with a BranchCutProximity warning rather than
rejected.  z = 0 is handled as a series limit, never by quadrature.

The derivative order k continues analytically to complex k with
Re k > -1.  For non-integer k the kernel (i sin t)^k has algebraic
singularities at t in {-pi, 0, pi}; the midpoint grid never samples
them, but convergence is sub-spectral there, so for Re k < 0 the node
budget is raised 4x and a SlowConvergence warning is always attached.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from . import gammastar as gs
from . import quadrature as quad
from . import special as sp
from .errors import BranchError, DomainError, PoleError
from .gammastar import SeriesDiagnostics
from .quadrature import QuadratureSpec

WARN_BRANCH_CUT = "BranchCutProximity"
WARN_SLOW_CONVERGENCE = "SlowConvergence"
WARN_CANCELLATION = "CancellationLoss"

_TWO_PI = 2.0 * math.pi
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class EvalOutput:
    """One evaluated function value with its error budget and provenance."""

    value: complex
    err_est: float
    nodes_used: int
    series_diag: SeriesDiagnostics
    warnings: tuple = ()


@dataclass(frozen=True)
class OrderArg:
    """Validated (order, argument, derivative-order, shift) bundle."""

    mu: complex
    z: complex
    k: complex = 0.0 + 0.0j
    n: int = 0

    def __post_init__(self):
        if complex(self.k).real <= -1.0:
            raise DomainError(f"derivative order needs Re k > -1, got k = {self.k}")
        if self.n < 0:
            raise DomainError(f"shift count must be >= 0, got n = {self.n}")


def _is_integer(v: complex) -> bool:
    v = complex(v)
    return v.imag == 0.0 and v.real == round(v.real)


def _on_negative_axis(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real < 0.0


class _DiagReducer:
    """Worst-case envelope over the per-node series diagnostics."""

    def __init__(self):
        self.terms_used = 1
        self.max_term_mag = 0.0
        self.cancellation_digits = 0.0
        self.converged = True

    def update(self, d: SeriesDiagnostics):
        self.terms_used = max(self.terms_used, d.terms_used)
        self.max_term_mag = max(self.max_term_mag, d.max_term_mag)
        self.cancellation_digits = max(self.cancellation_digits, d.cancellation_digits)
        self.converged = self.converged and d.converged

    def snapshot(self) -> SeriesDiagnostics:
        return SeriesDiagnostics(
            self.terms_used, self.max_term_mag, self.cancellation_digits, self.converged
        )


def _prefactor(z: complex, exponent: complex) -> complex:
    """(z/2)**exponent under the principal branch.

    Kept as a named seam: flipping this convention must break the
    branch-sensitive identities (order shift, connection relation), and
    the tests exercise exactly that.
    """
    return sp.principal_pow(complex(z) / 2.0, exponent)


def _limit_at_zero(effective_mu: complex, n: int = 0):
    """Series-limit value of the representations at z = 0, or BranchError."""
    if effective_mu == 0:
        return 1.0 + 0.0j if n == 0 else 0.0 + 0.0j
    if complex(effective_mu).real > 0:
        return 0.0 + 0.0j
    raise BranchError(
        f"z = 0 with Re order <= 0 (order = {effective_mu}): branch point"
    )


def _zero_output(value: complex) -> EvalOutput:
    diag = SeriesDiagnostics(1, abs(value), 0.0, True)
    return EvalOutput(value, 0.0, 0, diag, ())


def _assemble(pref, q, diag, extra_warnings=()) -> EvalOutput:
    value = pref * q.value
    cancel_factor = 10.0 ** min(diag.cancellation_digits, 280.0)
    err = abs(pref) * q.err_est + abs(value) * _EPS * cancel_factor
    warnings = []
    if WARN_BRANCH_CUT in extra_warnings:
        warnings.append(WARN_BRANCH_CUT)
    if (not q.converged) or (not diag.converged) or (WARN_SLOW_CONVERGENCE in extra_warnings):
        warnings.append(WARN_SLOW_CONVERGENCE)
    if diag.cancellation_digits > gs.CANCEL_WARN_DIGITS:
        warnings.append(WARN_CANCELLATION)
    return EvalOutput(value, err, q.nodes_used, diag, tuple(warnings))


def _branch_warnings(mu: complex, z: complex):
    if _on_negative_axis(z) and not _is_integer(mu):
        return (WARN_BRANCH_CUT,)
    return ()


# ---------------------------------------------------------------------------
# integrand builders (shared by the adaptive ops and the fixed-N ladder)
# ---------------------------------------------------------------------------


def _j_cos_parts(mu, z, red):
    pref = _prefactor(z, mu) / _TWO_PI
    c = 0.5j * z

    def f(theta):
        g, d = gs.gamma_star_nodes(mu, c * np.exp(1j * theta))
        red.update(d)
        return np.exp(1j * z * np.cos(theta)) * g

    return pref, f


def _j_sin_parts(mu, n, z, red):
    # Order-shift kernel; n = 0 is the plain sine form.  The prefactor is
    # (z/2)^mu, not (z/2)^(mu+n).
    pref = _prefactor(z, mu) / _TWO_PI
    c = 0.5 * z

    def f(theta):
        g, d = gs.gamma_star_nodes(mu, c * np.exp(1j * theta))
        red.update(d)
        kernel = np.exp(1j * z * np.sin(theta)) * g
        if n:
            kernel = kernel * np.exp(-1j * n * theta)
        return kernel

    return pref, f


def _kappa_parts(n, mu, z, red):
    c = 0.5 * z

    def f(theta):
        g, d = gs.gamma_star_nodes(mu, c * np.exp(1j * theta))
        red.update(d)
        return np.exp(1j * z * np.sin(theta)) * g * np.exp(1j * n * theta)

    return 1.0 + 0.0j, f


def _i_parts(mu, z, red):
    pref = _prefactor(z, mu) / _TWO_PI
    c = 0.5 * z

    def f(theta):
        g, d = gs.gamma_star_nodes(mu, c * np.exp(1j * theta))
        red.update(d)
        return np.exp(z * np.cos(theta)) * g

    return pref, f


def _deriv_parts(mu, k, z, red):
    pref = _prefactor(z, mu - k) / _TWO_PI
    c = 0.5 * z
    k_int = int(complex(k).real) if _is_integer(k) else None

    def f(theta):
        g, d = gs.gamma_star_nodes(mu - k, c * np.exp(1j * theta))
        red.update(d)
        base = 1j * np.sin(theta)
        if k_int is not None:
            power = base ** k_int
        else:
            power = sp.principal_pow_array(base, k)
        return np.exp(1j * z * np.sin(theta)) * g * power * np.exp(-1j * k * theta)

    return pref, f


def _kummer_parts(mu, z, red):
    pref = _prefactor(z, mu) * sp.recip_gamma(1.0 + mu) / _TWO_PI
    c = 0.5j * z

    def f(theta):
        m, d = gs.kummer_m1_nodes(mu, c * np.exp(1j * theta))
        red.update(d)
        return np.exp(c * np.exp(-1j * theta)) * m

    return pref, f


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def bessel_j(mu, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """J_mu(z) through the cosine-kernel representation."""
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        return _zero_output(_limit_at_zero(mu))
    red = _DiagReducer()
    pref, f = _j_cos_parts(mu, z, red)
    q = quad.periodic_trapezoid(f, spec)
    return _assemble(pref, q, red.snapshot(), _branch_warnings(mu, z))


def bessel_j_sin_kernel(mu, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """J_mu(z) through the sine-kernel (generating-function) representation."""
    return bessel_j_shifted(mu, 0, z, spec)


def bessel_j_shifted(mu, n: int, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """J_{mu+n}(z) as the -n-th Fourier coefficient of the sine-form kernel."""
    if n < 0:
        raise DomainError(f"shift count must be >= 0, got n = {n}")
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        return _zero_output(_limit_at_zero(mu, n))
    red = _DiagReducer()
    pref, f = _j_sin_parts(mu, n, z, red)
    q = quad.periodic_trapezoid(f, spec)
    return _assemble(pref, q, red.snapshot(), _branch_warnings(mu, z))


def kappa_fourier_coeff(n: int, mu, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """Fourier coefficient kappa_n of the sine-form kernel, any integer n.

    For n <= 0 this equals 2pi (z/2)^(-mu) J_{mu-n}(z); for n > 0 it
    equals 2pi (z/2)^(-mu) times the tail of the J_{mu-n} power series
    starting at term n.  The raw integral is returned (no prefactor), so
    it is entire in z and needs no branch handling.
    """
    mu = complex(mu)
    z = complex(z)
    red = _DiagReducer()
    pref, f = _kappa_parts(int(n), mu, z, red)
    q = quad.periodic_trapezoid(f, spec)
    return _assemble(pref, q, red.snapshot())


def bessel_i(mu, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """Modified Bessel I_mu(z); stated for -pi <= arg z < pi, and evaluated
    on the arg = +pi side (with a warning) when z is on the negative axis."""
    mu = complex(mu)
    z = complex(z)
    if z == 0:
        return _zero_output(_limit_at_zero(mu))
    red = _DiagReducer()
    pref, f = _i_parts(mu, z, red)
    q = quad.periodic_trapezoid(f, spec)
    extra = (WARN_BRANCH_CUT,) if (_on_negative_axis(z) and not _is_integer(mu)) else ()
    return _assemble(pref, q, red.snapshot(), extra)


def bessel_j_deriv(mu, k, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """k-th z-derivative of J_mu(z), continued to complex k with Re k > -1.

    k = 0 takes exactly the sine-kernel path (bit-identical values).
    Integer k >= 1 keeps spectral accuracy; non-integer k is sub-spectral
    because of the (i sin t)^k kernel kinks, severely so for Re k < 0.
    """
    mu = complex(mu)
    k = complex(k)
    z = complex(z)
    if k.real <= -1.0:
        raise DomainError(f"derivative order needs Re k > -1, got k = {k}")
    if k == 0:
        return bessel_j_shifted(mu, 0, z, spec)
    if z == 0:
        if mu == k:
            return _zero_output(sp.principal_pow(2.0, -k))
        return _zero_output(_limit_at_zero(mu - k))
    extra = list(_branch_warnings(mu - k, z))
    if not _is_integer(k) and k.real < 0.0:
        spec = replace(spec, n_max=max(spec.n_max * 4, spec.n_start))
        extra.append(WARN_SLOW_CONVERGENCE)
    red = _DiagReducer()
    pref, f = _deriv_parts(mu, k, z, red)
    q = quad.periodic_trapezoid(f, spec)
    return _assemble(pref, q, red.snapshot(), tuple(extra))


def bessel_j_kummer(mu, z, spec: QuadratureSpec = QuadratureSpec()) -> EvalOutput:
    """J_mu(z) through the Kummer-function form of the kernel."""
    mu = complex(mu)
    z = complex(z)
    if sp.nonpositive_int_or_none(mu + 1.0) is not None:
        raise PoleError(f"Kummer representation undefined: 1+mu = {mu + 1.0}")
    if z == 0:
        return _zero_output(_limit_at_zero(mu))
    red = _DiagReducer()
    pref, f = _kummer_parts(mu, z, red)
    q = quad.periodic_trapezoid(f, spec)
    return _assemble(pref, q, red.snapshot(), _branch_warnings(mu, z))


_CONVERGE_BUILDERS = {
    "J": lambda mu, z, k, n, red: _j_cos_parts(mu, z, red),
    "I": lambda mu, z, k, n, red: _i_parts(mu, z, red),
    "Jderiv": lambda mu, z, k, n, red: _deriv_parts(mu, k, z, red),
    "kappa": lambda mu, z, k, n, red: _kappa_parts(n, mu, z, red),
}


def fixed_node_values(function: str, mu, z, n_list, k=0.0, n=0):
    """Evaluate one representation at fixed node counts (no adaptivity).

    Returns [(N, value), ...] in the order given; feeds the convergence
    study (and the spectral-accuracy acceptance check).
    """
    if function not in _CONVERGE_BUILDERS:
        raise DomainError(f"unknown function {function!r}")
    red = _DiagReducer()
    pref, f = _CONVERGE_BUILDERS[function](complex(mu), complex(z), complex(k), int(n), red)
    return [(int(nn), pref * quad.periodic_sum(f, int(nn))) for nn in n_list]
