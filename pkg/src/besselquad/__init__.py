"""besselquad: Bessel functions of unrestricted complex order and argument.

J_mu(z), I_mu(z) and the z-derivatives (including fractional orders with
Re k > -1) are evaluated by spectral quadrature of smooth periodic
kernels built from Tricomi's entire incomplete-gamma function, and every
representation is cross-validated against independent power-series and
classical-integral oracles.  ``BACKEND`` names the active kernel
implementation ("compiled" or "python").
"""

from ._kernels import BACKEND
from .bessel import (
    EvalOutput,
    OrderArg,
    WARN_BRANCH_CUT,
    WARN_CANCELLATION,
    WARN_SLOW_CONVERGENCE,
    bessel_i,
    bessel_j,
    bessel_j_deriv,
    bessel_j_kummer,
    bessel_j_shifted,
    bessel_j_sin_kernel,
    kappa_fourier_coeff,
)
from .errors import (
    BesselQuadError,
    BranchError,
    ConvergenceError,
    DegenerateInput,
    DomainError,
    NodeEvaluationError,
    PoleError,
)
from .gammastar import (
    SeriesDiagnostics,
    gamma_lower,
    gamma_star,
    gamma_star_shift,
    gamma_upper,
    kummer_m1,
    lower_p,
)
from .oracles import IdentityReport, SuiteConfig, run_identity_suite
from .quadrature import QuadratureResult, QuadratureSpec, periodic_trapezoid, segment_quad
from .special import beta_fn, gamma_fn, principal_pow, recip_gamma

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BesselQuadError",
    "BranchError",
    "ConvergenceError",
    "DegenerateInput",
    "DomainError",
    "EvalOutput",
    "IdentityReport",
    "NodeEvaluationError",
    "OrderArg",
    "PoleError",
    "QuadratureResult",
    "QuadratureSpec",
    "SeriesDiagnostics",
    "SuiteConfig",
    "WARN_BRANCH_CUT",
    "WARN_CANCELLATION",
    "WARN_SLOW_CONVERGENCE",
    "bessel_i",
    "bessel_j",
    "bessel_j_deriv",
    "bessel_j_kummer",
    "bessel_j_shifted",
    "bessel_j_sin_kernel",
    "beta_fn",
    "gamma_fn",
    "gamma_lower",
    "gamma_star",
    "gamma_star_shift",
    "gamma_upper",
    "kappa_fourier_coeff",
    "kummer_m1",
    "lower_p",
    "periodic_trapezoid",
    "principal_pow",
    "recip_gamma",
    "run_identity_suite",
    "segment_quad",
    "__version__",
]
