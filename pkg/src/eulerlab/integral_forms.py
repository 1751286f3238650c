"""The two-parameter integral families and their exact 1D reductions.

The unit-square integrands (1-x)/(1 +- xy) * (-ln xy)**s collapse, via
u = xy, v = 1 - x followed by t = -ln u, to

    plus kernel:   t**s (t - 1 + e**-t) / (e**t + 1)
    minus kernel:  t**s (t - 1 + e**-t) / (e**t - 1)

over (0, inf).  Both share the numerator t - 1 + e**-t ~ t**2/2, which
is evaluated by series below t = 0.5 to avoid the catastrophic
cancellation a naive evaluation suffers near 0.  The right-hand-side
closed forms pair these with gamma/eta/zeta from
:mod:`eulerlab.special_functions`.
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np

from .core_numerics import (
    QuadratureResult,
    SeriesResult,
    integrate_finite,
    integrate_semi_infinite,
)
from .errors import DomainError
from .special_functions import (
    DEFAULT_OPTIONS,
    EvalOptions,
    eta,
    eta_prime,
    gamma,
    zeta_minus_pole,
)


class SignedKernel(enum.Enum):
    """Sign choice in the 1 +- xy denominator of the square integrands."""

    PLUS = "plus"
    MINUS = "minus"


# Exact limits of the plus-kernel family exist at s = -1 and s = -2;
# inside this radius of either point the bracket of the closed form
# cancels catastrophically and a first-order expansion is used instead.
_EXPANSION_RADIUS = 1e-4
_SLOPE_STEP = 1e-3

# Taylor coefficients of (e**-t - 1 + t) / (t**2/2): 2 (-1)**j / (j+2)!
_RESIDUAL_COEFFS = tuple(
    2.0 * (-1 if j % 2 else 1) / math.factorial(j + 2) for j in range(13)
)


def _power(t: float, s: complex) -> complex:
    # t**s for real t > 0 through the real logarithm
    if s.imag == 0.0:
        return t**s.real
    return cmath.exp(s * math.log(t))


def _residual_series(t: float) -> float:
    # (e**-t - 1 + t) / t**2, for t < 0.5
    acc = 0.0
    for c in reversed(_RESIDUAL_COEFFS):
        acc = acc * t + c
    return 0.5 * acc


def reduced_integrand_plus(s: complex, t: float) -> complex:
    """Integrand t**s (t - 1 + e**-t)/(e**t + 1) of the plus-kernel family.

    Behaves like t**(s+2)/4 as t -> 0, so it is integrable for
    Re(s) > -3.  Below t = 0.5 the numerator's t**2 scale is folded
    into the power so that neither factor over- or underflows at the
    deepest quadrature nodes.
    """
    if not t > 0.0:
        raise ValueError("t must be positive")
    s = complex(s)
    if t < 0.5:
        return _power(t, s + 2.0) * _residual_series(t) / (math.exp(t) + 1.0)
    if t > 40.0:
        et = math.exp(-t)
        return _power(t, s) * (t - 1.0 + et) * et / (1.0 + et)
    return _power(t, s) * (math.expm1(-t) + t) / (math.exp(t) + 1.0)


def reduced_integrand_minus(s: complex, t: float) -> complex:
    """Integrand t**s (t - 1 + e**-t)/(e**t - 1) of the minus-kernel family.

    Behaves like t**(s+1)/2 as t -> 0 (integrable for Re(s) > -2); the
    small-t branch mirrors the plus kernel's overflow-safe split.
    """
    if not t > 0.0:
        raise ValueError("t must be positive")
    s = complex(s)
    if t < 0.5:
        return (
            _power(t, s + 1.0) * _residual_series(t) * (t / math.expm1(t))
        )
    return _power(t, s) * (math.expm1(-t) + t) / math.expm1(t)


def integrand_2d(kernel: SignedKernel, s: complex, x: float, y: float) -> complex:
    """(1-x)/(1 +- xy) * (-ln xy)**s on the open unit square."""
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0):
        raise DomainError("x and y must lie in the open unit interval")
    s = complex(s)
    neg_log = -(math.log(x) + math.log(y))
    denom = 1.0 + x * y if kernel is SignedKernel.PLUS else 1.0 - x * y
    return (1.0 - x) / denom * _power(neg_log, s)


def I_plus(s: complex, tol: float) -> QuadratureResult:
    """Quadrature of the plus-kernel reduced integrand over (0, inf)."""
    s = complex(s)
    if s.real <= -3.0 + 0.01:
        raise DomainError("outside Re(s) > -3")
    return integrate_semi_infinite(
        lambda t: reduced_integrand_plus(s, t), tol, s.real + 1.0
    )


def I_minus(s: complex, tol: float) -> QuadratureResult:
    """Quadrature of the minus-kernel reduced integrand over (0, inf)."""
    s = complex(s)
    if s.real <= -2.0 + 0.01:
        raise DomainError("outside Re(s) > -2")
    return integrate_semi_infinite(
        lambda t: reduced_integrand_minus(s, t), tol, s.real + 1.0
    )


def fermi_dirac(s: complex, tol: float) -> QuadratureResult:
    """Integral of t**(s-1)/(e**t + 1) over (0, inf); equals gamma(s) eta(s)."""
    s = complex(s)
    if s.real <= 0.01:
        raise DomainError("outside Re(s) > 0")

    def integrand(t: float) -> complex:
        if t > 40.0:
            et = math.exp(-t)
            return _power(t, s - 1.0) * et / (1.0 + et)
        return _power(t, s - 1.0) / (math.exp(t) + 1.0)

    return integrate_semi_infinite(integrand, tol, s.real - 1.0)


def _rhs_eq15_generic(s: complex, opts: EvalOptions) -> complex:
    bracket = eta(s + 2.0, opts) + (1.0 - 2.0 * eta(s + 1.0, opts)) / (s + 1.0)
    return gamma(s + 2.0) * bracket


def _rhs_eq15_limit(point: float, opts: EvalOptions) -> complex:
    if point == -1.0:
        # limit value eta(1) - 2 eta'(0) = ln 2 - ln(pi/2) = ln(4/pi)
        return eta(1.0, opts) - 2.0 * eta_prime(0.0, opts)
    # point == -2.0: limit value eta'(0) - 1/2 + 2 eta'(-1)
    return eta_prime(0.0, opts) - 0.5 + 2.0 * eta_prime(-1.0, opts)


def rhs_eq15(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Closed form gamma(s+2) [eta(s+2) + (1 - 2 eta(s+1))/(s+1)].

    The bracket has removable singularities at s = -1 and s = -2; the
    exact limits are returned there, and within 1e-4 of either point a
    first-order expansion around the limit replaces the generic route.
    """
    s = complex(s)
    if s.real <= -3.0:
        raise DomainError("outside Re(s) > -3")
    for point in (-1.0, -2.0):
        w = s - point
        dist = abs(w)
        if dist == 0.0:
            return _rhs_eq15_limit(point, opts)
        if dist < _EXPANSION_RADIUS:
            direction = w / dist
            step = _SLOPE_STEP * direction
            slope = (
                _rhs_eq15_generic(point + step, opts)
                - _rhs_eq15_generic(point - step, opts)
            ) / (2.0 * step)
            return _rhs_eq15_limit(point, opts) + w * slope
    return _rhs_eq15_generic(s, opts)


def rhs_eq12(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Closed form gamma(s+2) [zeta(s+2) - 1/(s+1)].

    The bracket is exactly the pole-removed zeta at s+2, so the limit
    point s = -1 (where the value is Euler's gamma) and its whole
    neighbourhood are served by the same ring-extrapolated route.
    """
    s = complex(s)
    if s.real <= -2.0:
        raise DomainError("outside Re(s) > -2")
    return gamma(s + 2.0) * zeta_minus_pole(s + 2.0, opts)


def beukers_reduced(order: int, tol: float) -> QuadratureResult:
    """zeta(2) or zeta(3) by the 1D collapse of their square integrals.

    Any integrand g(xy) on the unit square integrates to
    int_0^1 g(u)(-ln u) du; the 1/(1-xy) and -ln(xy)/(2(1-xy)) kernels
    reduce this way to int (-ln u)/(1-u) and (1/2) int (-ln u)^2/(1-u).
    """
    if order == 2:
        return integrate_finite(
            lambda u: -math.log(u) / (1.0 - u), 0.0, 1.0, tol
        )
    if order == 3:
        return integrate_finite(
            lambda u: 0.5 * math.log(u) ** 2 / (1.0 - u), 0.0, 1.0, tol
        )
    raise ValueError("order must be 2 or 3")


def termwise_series_oracle(kernel: SignedKernel, n_terms: int) -> SeriesResult:
    """Partial sums of sum_n (+-1)**(n-1) (1/n - ln((n+1)/n)).

    Termwise integration of the geometric expansion of the square
    integrals produces exactly these series, so they are an independent
    route to the plus/minus kernel values at s = -1.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    n = np.arange(1, n_terms + 1, dtype=float)
    terms = 1.0 / n - np.log1p(1.0 / n)
    if kernel is SignedKernel.PLUS:
        terms[1::2] *= -1.0
        m = n_terms + 1.0
        bound = 1.0 / m - math.log1p(1.0 / m)
    else:
        bound = None
    return SeriesResult(float(np.sum(terms)), n_terms, bound, True)
