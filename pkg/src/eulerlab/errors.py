"""Exception types shared across the library."""


class EulerLabError(ValueError):
    """Base class for all library-specific errors."""


class DomainError(EulerLabError):
    """Argument lies outside the domain an operation supports."""


class PoleError(EulerLabError):
    """Evaluation requested exactly at a pole."""


class IllConditionedError(EulerLabError):
    """Evaluation requested too close to a zero of a denominator factor."""


class IntegrandError(EulerLabError):
    """An integrand produced a non-finite value at a quadrature node."""
