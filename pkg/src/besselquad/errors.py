"""Exception hierarchy shared by every besselquad module."""


class BesselQuadError(Exception):
    """Base class for all library errors."""


class PoleError(BesselQuadError):
    """An argument sits exactly on a pole of a gamma-family factor."""


class BranchError(BesselQuadError):
    """A principal power is requested at a point where it is undefined
    (zero base with non-positive real exponent)."""


class ConvergenceError(BesselQuadError):
    """A power series failed to satisfy its stopping rule within the
    term budget."""


class DegenerateInput(BesselQuadError):
    """An input combination for which the requested recurrence or
    transformation is undefined."""


class DomainError(BesselQuadError):
    """An argument lies outside the validity domain of the formula."""


class NodeEvaluationError(BesselQuadError):
    """An integrand raised, or returned a non-finite value, at a
    quadrature node."""
