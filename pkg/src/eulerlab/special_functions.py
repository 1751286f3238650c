"""Gamma, the alternating zeta function, zeta, and their derivatives.

Gamma uses the 9-term Lanczos approximation (g = 7) on the right
half-plane and the reflection formula elsewhere.  The alternating zeta
function eta is summed by the Euler-transformation double sum, which
converges geometrically for every complex argument; zeta and its
derivative are obtained from eta through the factor 1 - 2**(1-s).  The
pole of zeta at s = 1 is removed by ring extrapolation in
``zeta_minus_pole``.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import IllConditionedError, PoleError

_LN2 = math.log(2.0)
_TWO_PI = 2.0 * math.pi

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class EvalOptions:
    """Truncation controls for the eta/zeta series."""

    tol: float = 1e-13
    max_terms: int = 128

    def __post_init__(self) -> None:
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


DEFAULT_OPTIONS = EvalOptions()


def gamma(s: complex) -> complex:
    """Gamma function for complex s; raises PoleError at 0, -1, -2, ..."""
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0 and s.real == int(s.real):
        raise PoleError("pole of Gamma")
    if s.real < 0.5:
        # reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return math.pi / (cmath.sin(math.pi * s) * gamma(1.0 - s))
    x = s - 1.0
    acc = _LANCZOS_COEFFS[0]
    for k, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (x + k)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(_TWO_PI) * t ** (x + 0.5) * cmath.exp(-t) * acc


# --------------------------------------------------------------------------
# Euler-transformation sum for the alternating zeta function:
#
#   eta(s) = sum_{n>=0} 2**-(n+1) sum_{k=0..n} (-1)**k C(n,k) (k+1)**-s
#
# The scaled binomials 2**-(n+1) C(n,k) never exceed 1/2, so the inner
# cancellation stays harmless in double precision.  Outer terms decay
# like 2**-n; rows of the scaled table are built once and shared.
# --------------------------------------------------------------------------

_row_cache: list[np.ndarray] = [np.array([0.5])]
_row_lock = threading.Lock()


def _scaled_binomial_rows(n_rows: int) -> list[np.ndarray]:
    if len(_row_cache) < n_rows:
        with _row_lock:
            while len(_row_cache) < n_rows:
                prev = _row_cache[-1]
                row = np.zeros(len(prev) + 1)
                row[: len(prev)] = prev
                row[1:] += prev
                _row_cache.append(0.5 * row)
    return _row_cache


def _euler_transform(s: complex, weights: np.ndarray, opts: EvalOptions) -> complex:
    rows = _scaled_binomial_rows(opts.max_terms)
    total = 0.0 + 0.0j
    small_run = 0
    for n in range(opts.max_terms):
        term = complex(rows[n] @ weights[: n + 1])
        total += term
        if abs(term) < opts.tol:
            small_run += 1
            if small_run >= 3:
                break
        else:
            small_run = 0
    return total


def _alternating_powers(s: complex, count: int) -> np.ndarray:
    # (-1)**k (k+1)**-s for k = 0..count-1
    k1 = np.arange(1, count + 1, dtype=float)
    powers = np.exp(-s * np.log(k1))
    powers[1::2] *= -1.0
    return powers


def eta(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Alternating zeta function (entire); valid for every complex s."""
    s = complex(s)
    return _euler_transform(s, _alternating_powers(s, opts.max_terms), opts)


def eta_prime(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Derivative of eta, by termwise differentiation of the same sum."""
    s = complex(s)
    k1 = np.arange(1, opts.max_terms + 1, dtype=float)
    weights = -np.log(k1) * np.exp(-s * np.log(k1))
    weights[1::2] *= -1.0
    return _euler_transform(s, weights, opts)


def _eta_zeta_factor(s: complex) -> complex:
    # 1 - 2**(1-s), evaluated without cancellation near s = 1
    w = (1.0 - s) * _LN2
    if w.imag == 0.0:
        return -math.expm1(w.real)
    if abs(w) < 1e-4:
        return -(w + w * w / 2.0 + w * w * w / 6.0)
    return -(cmath.exp(w) - 1.0)


def _reject_bad_points(s: complex) -> None:
    if s == 1.0:
        raise PoleError("pole of zeta")
    # complex zeros of 1 - 2**(1-s) sit at s = 1 + 2 pi i k / ln 2, k != 0
    k = round(s.imag * _LN2 / _TWO_PI)
    if k != 0 and abs(s - (1.0 + 2j * math.pi * k / _LN2)) < 1e-6:
        raise IllConditionedError("ill-conditioned point")


def zeta(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Riemann zeta via eta(s) / (1 - 2**(1-s)); s = 1 is a pole."""
    s = complex(s)
    _reject_bad_points(s)
    return eta(s, opts) / _eta_zeta_factor(s)


def zeta_prime(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Derivative of zeta, from the differentiated eta/zeta product."""
    s = complex(s)
    _reject_bad_points(s)
    f = _eta_zeta_factor(s)
    z = eta(s, opts) / f
    return (eta_prime(s, opts) - _LN2 * (1.0 - f) * z) / f


def zeta_minus_pole(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """zeta(s) - 1/(s-1), with the removable singularity at s = 1 filled.

    Inside |s-1| < 0.05 the direct difference is ill-conditioned, so the
    value is extrapolated from the analytic ring: a cubic through the
    four points at radii 0.05 and 0.1 on the ray through s (both
    directions), evaluated at |s-1|.  At s = 1 this returns the
    extrapolated limit itself.
    """
    s = complex(s)
    d = s - 1.0
    if abs(d) >= 0.05:
        return zeta(s, opts) - 1.0 / d
    direction = d / abs(d) if d != 0.0 else 1.0 + 0.0j
    radii = (-0.1, -0.05, 0.05, 0.1)
    points = [1.0 + r * direction for r in radii]
    values = [zeta(p, opts) - 1.0 / (p - 1.0) for p in points]
    target = abs(d)
    result = 0.0 + 0.0j
    for i, (ri, vi) in enumerate(zip(radii, values)):
        basis = 1.0
        for j, rj in enumerate(radii):
            if j != i:
                basis *= (target - rj) / (ri - rj)
        result += vi * basis
    return result
