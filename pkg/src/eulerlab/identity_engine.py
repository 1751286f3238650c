"""Registry binding each verifiable identity to two evaluation routes.

Every entry pairs a left-hand route with an algorithmically independent
right-hand route (the two self-checks of single functions excepted) and
produces machine-readable reports.  Reports never raise on numeric
disagreement; pass/fail is decided by absolute error against the
identity's tolerance.  All evaluation is deterministic: the random
panels for the functional-equation and product-relation checks are
drawn from a fixed seed.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import constants, core_numerics, integral_forms, special_functions
from .errors import DomainError, PoleError

EXCLUSION_RADIUS = 1e-6
# Quadrature-backed routes keep a margin above the mathematical domain edge.
DOMAIN_MARGIN = 0.01
PANEL_SEED = 0x5EED

Route = Callable[[complex | None, float], tuple[complex, int]]


@dataclass(frozen=True)
class Identity:
    """One registry entry.

    ``lhs_ops``/``rhs_ops`` name the operations each route calls
    directly (the audit surface for route independence);
    ``self_check`` marks the two single-function consistency relations
    whose sides necessarily share that function.
    """

    id: str
    description: str
    parameterized: bool
    s_domain: float | None
    excluded_points: tuple[complex, ...]
    default_tol: float
    lhs_route: str
    rhs_route: str
    lhs_ops: tuple[str, ...]
    rhs_ops: tuple[str, ...]
    self_check: bool = False


@dataclass(frozen=True)
class VerificationReport:
    id: str
    s: complex | None
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float | None
    tol: float
    passed: bool
    lhs_route: str
    rhs_route: str
    evaluations: int
    elapsed: float


@dataclass(frozen=True)
class SkippedPoint:
    id: str
    s: complex
    reason: str


def _quad_tol(tol: float) -> float:
    return max(tol / 10.0, 1e-12)


def _gamma_reference(s: complex | None, tol: float) -> tuple[complex, int]:
    est = constants.euler_formula_gamma(50)
    return complex(est.value), est.terms_or_n


def _quad(result: core_numerics.QuadratureResult) -> tuple[complex, int]:
    return result.value, result.evaluations


# --- route implementations, one pair per identity -------------------------

def _eq2_lhs(s, tol):
    return _quad(integral_forms.I_minus(-1.0, _quad_tol(tol)))


def _eq3_lhs(s, tol):
    return _quad(integral_forms.I_plus(-1.0, _quad_tol(tol)))


def _eq3_rhs(s, tol):
    return complex(math.log(4.0) - math.log(math.pi)), 0


def _eq4_lhs(s, tol):
    est = constants.euler_gamma_series(10**6)
    return complex(est.value), est.terms_or_n


def _eq6_lhs(s, tol):
    return _quad(integral_forms.beukers_reduced(2, _quad_tol(tol)))


def _eq6_rhs(s, tol):
    return complex(math.pi**2 / 6.0), 0


def _eq7_lhs(s, tol):
    return _quad(integral_forms.beukers_reduced(3, _quad_tol(tol)))


def _eq7_rhs(s, tol):
    return special_functions.zeta(3.0), 0


def _eq9_lhs(s, tol):
    return _quad(integral_forms.I_plus(-2.0, _quad_tol(tol)))


def _eq9_rhs(s, tol):
    ln_a = math.log(constants.glaisher_zeta().value)
    value = 0.5 * math.log(math.pi) + 6.0 * ln_a - 7.0 / 6.0 * math.log(2.0) - 1.0
    return complex(value), 0


def _eq10_lhs(s, tol):
    est = constants.glaisher_limit(10**5)
    return complex(est.value), est.terms_or_n


def _eq10_rhs(s, tol):
    return complex(constants.glaisher_zeta().value), 0


def _eq11_lhs(s, tol):
    series = core_numerics.sum_series(
        lambda n: (1.0 if n % 2 else -1.0) / n, 1e-300, 10**5, alternating=True
    )
    return complex(series.value), series.terms_used


def _eq11_rhs(s, tol):
    return complex(math.log(2.0)), 0


def _eq12_lhs(s, tol):
    return _quad(integral_forms.I_minus(s, _quad_tol(tol)))


def _eq12_rhs(s, tol):
    return integral_forms.rhs_eq12(s), 0


def _eq14_lhs(s, tol):
    # Richardson extrapolation in eps**2 of the symmetrized pole-removed
    # zeta at s = 1 +- {0.1, 0.05, 0.025}.
    zmp = special_functions.zeta_minus_pole
    e0, e1, e2 = (
        0.5 * (zmp(1.0 + eps) + zmp(1.0 - eps)) for eps in (0.1, 0.05, 0.025)
    )
    r1 = (4.0 * e1 - e0) / 3.0
    r2 = (4.0 * e2 - e1) / 3.0
    return (16.0 * r2 - r1) / 15.0, 6


def _eq15_lhs(s, tol):
    return _quad(integral_forms.I_plus(s, _quad_tol(tol)))


def _eq15_rhs(s, tol):
    return integral_forms.rhs_eq15(s), 0


def _eq16_lhs(s, tol):
    if s == 0.0:
        # the recurrence form divides by s; the point is a Gamma pole anyway
        raise PoleError("pole of Gamma")
    return special_functions.gamma(s + 1.0) / s, 0


def _eq16_rhs(s, tol):
    return special_functions.gamma(s), 0


def _eq17_lhs(s, tol):
    return special_functions.eta(s), 0


def _eq17_rhs(s, tol):
    return (1.0 - 2.0 ** (1.0 - s)) * special_functions.zeta(s), 0


def _eq18_lhs(s, tol):
    return _quad(integral_forms.fermi_dirac(s, _quad_tol(tol)))


def _eq18_rhs(s, tol):
    return special_functions.gamma(s) * special_functions.eta(s), 0


def _wallis_lhs(s, tol):
    return complex(constants.wallis_partial(10**6)), 10**6


def _wallis_rhs(s, tol):
    return complex(math.pi / 2.0), 0


def _stirling_lhs(s, tol):
    return complex(constants.stirling_ratio(10**5)), 10**5


def _stirling_rhs(s, tol):
    return complex(math.sqrt(2.0 * math.pi)), 0


def _ident(entries: Iterable[Identity]) -> dict[str, Identity]:
    return {ident.id: ident for ident in entries}


_REGISTRY: dict[str, Identity] = _ident(
    [
        Identity(
            "eq2",
            "Euler's constant as the minus-kernel integral at s = -1",
            False, None, (), 1e-9,
            "minus-kernel quadrature at s = -1",
            "geometrically convergent zeta series for Euler's constant",
            ("integral_forms.I_minus",),
            ("constants.euler_formula_gamma",),
        ),
        Identity(
            "eq3",
            "ln(4/pi) as the plus-kernel integral at s = -1",
            False, None, (), 1e-9,
            "plus-kernel quadrature at s = -1",
            "closed form ln 4 - ln pi",
            ("integral_forms.I_plus",),
            ("constants.ln_4_over_pi",),
        ),
        Identity(
            "eq4",
            "Euler's formula linking gamma, ln(4/pi) and zeta(n)/(2^n n)",
            False, None, (), 2e-6,
            "harmonic-rate series sum_n (1/n - ln((n+1)/n)), 10^6 terms",
            "ln(4/pi) + 2 sum (-1)^n zeta(n)/(2^n n), 50 terms",
            ("constants.euler_gamma_series",),
            ("constants.euler_formula_gamma",),
        ),
        Identity(
            "eq6",
            "zeta(2) as the unit-square integral of 1/(1-xy)",
            False, None, (), 1e-10,
            "reduced quadrature of (-ln u)/(1-u)",
            "closed form pi^2/6",
            ("integral_forms.beukers_reduced",),
            (),
        ),
        Identity(
            "eq7",
            "zeta(3) as half the unit-square integral of -ln(xy)/(1-xy)",
            False, None, (), 1e-10,
            "reduced quadrature of (-ln u)^2/(2(1-u))",
            "zeta(3) by the alternating-series continuation",
            ("integral_forms.beukers_reduced",),
            ("special_functions.zeta",),
        ),
        Identity(
            "eq9",
            "plus-kernel integral at s = -2 equals ln(pi^(1/2) A^6 / (2^(7/6) e))",
            False, None, (), 1e-8,
            "plus-kernel quadrature at s = -2",
            "closed form from ln A = 1/12 - zeta'(-1)",
            ("integral_forms.I_plus",),
            ("constants.glaisher_zeta",),
        ),
        Identity(
            "eq10_limit",
            "Glaisher-Kinkelin constant as its hyperfactorial limit ratio",
            False, None, (), 1e-3,
            "hyperfactorial ratio at n = 10^5",
            "exp(1/12 - zeta'(-1))",
            ("constants.glaisher_limit",),
            ("constants.glaisher_zeta",),
        ),
        Identity(
            "eq11",
            "alternating harmonic series equals ln 2",
            False, None, (), 1e-5,
            "alternating harmonic partial sum, 10^5 terms",
            "closed form ln 2",
            ("core_numerics.sum_series",),
            (),
        ),
        Identity(
            "eq12",
            "minus-kernel integral equals Gamma(s+2)[zeta(s+2) - 1/(s+1)]",
            True, -2.0, (-1.0 + 0.0j,), 1e-8,
            "minus-kernel quadrature",
            "Gamma(s+2) times pole-removed zeta at s+2",
            ("integral_forms.I_minus",),
            ("integral_forms.rhs_eq12", "special_functions.gamma",
             "special_functions.zeta_minus_pole"),
        ),
        Identity(
            "eq14",
            "zeta(s) - 1/(s-1) tends to Euler's constant as s -> 1",
            False, None, (), 1e-6,
            "Richardson extrapolation of pole-removed zeta to s = 1",
            "geometrically convergent zeta series for Euler's constant",
            ("special_functions.zeta_minus_pole",),
            ("constants.euler_formula_gamma",),
        ),
        Identity(
            "eq15",
            "plus-kernel integral equals Gamma(s+2)[eta(s+2) + (1-2 eta(s+1))/(s+1)]",
            True, -3.0, (-1.0 + 0.0j, -2.0 + 0.0j), 1e-8,
            "plus-kernel quadrature",
            "Gamma(s+2) times the eta bracket",
            ("integral_forms.I_plus",),
            ("integral_forms.rhs_eq15", "special_functions.gamma",
             "special_functions.eta", "special_functions.eta_prime"),
        ),
        Identity(
            "eq16",
            "Gamma functional equation Gamma(s+1) = s Gamma(s)",
            True, None, (), 1e-12,
            "Gamma(s+1)/s",
            "Gamma(s)",
            ("special_functions.gamma",),
            ("special_functions.gamma",),
            self_check=True,
        ),
        Identity(
            "eq17",
            "eta(s) = (1 - 2^(1-s)) zeta(s)",
            True, None, (), 1e-11,
            "eta by the Euler-transformation sum",
            "(1 - 2^(1-s)) zeta(s)",
            ("special_functions.eta",),
            ("special_functions.zeta",),
            self_check=True,
        ),
        Identity(
            "eq18",
            "integral of t^(s-1)/(e^t+1) equals Gamma(s) eta(s)",
            True, 0.0, (), 1e-9,
            "Fermi-Dirac-type quadrature",
            "Gamma(s) eta(s)",
            ("integral_forms.fermi_dirac",),
            ("special_functions.gamma", "special_functions.eta"),
        ),
        Identity(
            "wallis",
            "alternating product of (n+1)/n factors converges to pi/2",
            False, None, (), 1e-6,
            "partial product, 10^6 factors",
            "closed form pi/2",
            ("constants.wallis_partial",),
            (),
        ),
        Identity(
            "stirling",
            "n!/(n^(n+1/2) e^-n) converges to sqrt(2 pi)",
            False, None, (), 1e-4,
            "factorial ratio at n = 10^5",
            "closed form sqrt(2 pi)",
            ("constants.stirling_ratio",),
            (),
        ),
    ]
)

_ROUTES: dict[str, tuple[Route, Route]] = {
    "eq2": (_eq2_lhs, _gamma_reference),
    "eq3": (_eq3_lhs, _eq3_rhs),
    "eq4": (_eq4_lhs, _gamma_reference),
    "eq6": (_eq6_lhs, _eq6_rhs),
    "eq7": (_eq7_lhs, _eq7_rhs),
    "eq9": (_eq9_lhs, _eq9_rhs),
    "eq10_limit": (_eq10_lhs, _eq10_rhs),
    "eq11": (_eq11_lhs, _eq11_rhs),
    "eq12": (_eq12_lhs, _eq12_rhs),
    "eq14": (_eq14_lhs, _gamma_reference),
    "eq15": (_eq15_lhs, _eq15_rhs),
    "eq16": (_eq16_lhs, _eq16_rhs),
    "eq17": (_eq17_lhs, _eq17_rhs),
    "eq18": (_eq18_lhs, _eq18_rhs),
    "wallis": (_wallis_lhs, _wallis_rhs),
    "stirling": (_stirling_lhs, _stirling_rhs),
}


def list_identities() -> list[Identity]:
    """All registry entries in stable order."""
    return list(_REGISTRY.values())


def get_identity(token: str) -> Identity:
    try:
        return _REGISTRY[token]
    except KeyError:
        raise ValueError(f"unknown identity: {token!r}") from None


def _check_point(ident: Identity, s: complex) -> str | None:
    # Reason the point cannot be evaluated, or None if it can.
    if ident.s_domain is not None and s.real <= ident.s_domain + DOMAIN_MARGIN:
        return f"outside Re(s) > {ident.s_domain:g}"
    for point in ident.excluded_points:
        if abs(s - point) < EXCLUSION_RADIUS:
            return f"within exclusion radius of s = {point.real:g}"
    return None


def verify(
    token: str, s: complex | None = None, tol: float | None = None
) -> VerificationReport:
    """Evaluate both routes of one identity and report the comparison.

    Numeric disagreement never raises; it comes back as pass=False.
    Unknown tokens, missing/superfluous s, and domain violations raise.
    """
    ident = get_identity(token)
    if ident.parameterized and s is None:
        raise ValueError(f"identity {token} requires a parameter s")
    if not ident.parameterized and s is not None:
        raise ValueError(f"identity {token} is not parameterized")
    if s is not None:
        s = complex(s)
        reason = _check_point(ident, s)
        if reason is not None:
            raise DomainError(reason)
    effective_tol = ident.default_tol if tol is None else float(tol)
    if not effective_tol > 0.0:
        raise ValueError("tol must be positive")
    lhs_fn, rhs_fn = _ROUTES[token]
    start = time.perf_counter()
    lhs, lhs_evals = lhs_fn(s, effective_tol)
    rhs, rhs_evals = rhs_fn(s, effective_tol)
    elapsed = time.perf_counter() - start
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if abs(rhs) >= 1e-300 else None
    return VerificationReport(
        id=token,
        s=s,
        lhs=complex(lhs),
        rhs=complex(rhs),
        abs_err=abs_err,
        rel_err=rel_err,
        tol=effective_tol,
        passed=abs_err <= effective_tol,
        lhs_route=ident.lhs_route,
        rhs_route=ident.rhs_route,
        evaluations=lhs_evals + rhs_evals,
        elapsed=elapsed,
    )


def _range_values(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0.0:
        raise ValueError("step must be positive")
    values = []
    k = 0
    while True:
        v = lo + k * step
        if v > hi + 1e-9 * step:
            break
        values.append(v)
        k += 1
    return values


def _max_workers(n_points: int) -> int:
    raw = os.environ.get("EULERLAB_MAX_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(1, min(cap, n_points))


def _evaluate_points(
    token: str, points: Sequence[complex], tol: float | None
) -> list[VerificationReport | SkippedPoint]:
    ident = get_identity(token)
    entries: list[VerificationReport | SkippedPoint] = []
    survivors: list[complex] = []
    order: list[tuple[int, str | complex]] = []
    for s in points:
        reason = _check_point(ident, s)
        if reason is None:
            order.append((len(survivors), s))
            survivors.append(s)
        else:
            order.append((-1, SkippedPoint(token, s, reason)))
    workers = _max_workers(len(survivors))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda p: verify(token, p, tol), survivors))
    else:
        reports = [verify(token, p, tol) for p in survivors]
    for idx, payload in order:
        entries.append(reports[idx] if idx >= 0 else payload)
    return entries


def grid(
    token: str,
    re_range: tuple[float, float, float],
    im_range: tuple[float, float, float],
    tol: float | None = None,
) -> list[VerificationReport | SkippedPoint]:
    """Sweep a rectangular grid of s values (row-major, re fastest).

    Points outside the identity's domain or inside an exclusion radius
    come back as SkippedPoint markers, not errors.
    """
    ident = get_identity(token)
    if not ident.parameterized:
        raise ValueError(f"identity {token} is not parameterized")
    res = _range_values(*re_range)
    ims = _range_values(*im_range)
    points = [complex(r, i) for i in ims for r in res]
    return _evaluate_points(token, points, tol)


def _seeded_panel(
    count: int,
    re_lo: float,
    re_hi: float,
    im_lo: float,
    im_hi: float,
    avoid: tuple[complex, ...],
    min_distance: float,
) -> list[complex]:
    rng = random.Random(PANEL_SEED)
    points: list[complex] = []
    while len(points) < count:
        s = complex(rng.uniform(re_lo, re_hi), rng.uniform(im_lo, im_hi))
        if all(abs(s - a) >= min_distance for a in avoid):
            points.append(s)
    return points


def functional_equation_panel(count: int = 200) -> list[complex]:
    """Seeded panel for the Gamma functional equation, clear of poles."""
    return _seeded_panel(count, -3.0, 5.0, -3.0, 3.0, (0j, -1 + 0j, -2 + 0j, -3 + 0j), 0.25)


def product_relation_panel(count: int = 25) -> list[complex]:
    """Seeded panel for the eta/zeta product relation, clear of s = 1."""
    return _seeded_panel(count, -3.0, 5.0, -3.0, 3.0, (1 + 0j,), 0.25)


# Canned parameter sets used by verify_all (and by the CLI's `all`).
CANNED_GRIDS: dict[str, tuple[tuple[float, float, float], tuple[float, float, float]]] = {
    "eq12": ((-1.5, 3.0, 0.5), (0.0, 1.0, 1.0)),
    "eq15": ((-2.5, 3.0, 0.5), (0.0, 2.0, 1.0)),
}
CANNED_POINTS: dict[str, tuple[complex, ...]] = {
    "eq18": (1 + 0j, 2 + 0j, 3.5 + 0j, 2 + 1j),
}


def verify_all(
    tol_overrides: dict[str, float] | None = None,
) -> list[VerificationReport | SkippedPoint]:
    """Run every identity: point identities once, parameterized ones on
    their canned grids/panels.  The aggregate passes iff every report does."""
    overrides = tol_overrides or {}
    for token in overrides:
        get_identity(token)
    entries: list[VerificationReport | SkippedPoint] = []
    for ident in list_identities():
        tol = overrides.get(ident.id)
        if not ident.parameterized:
            entries.append(verify(ident.id, None, tol))
        elif ident.id in CANNED_GRIDS:
            re_range, im_range = CANNED_GRIDS[ident.id]
            entries.extend(grid(ident.id, re_range, im_range, tol))
        elif ident.id in CANNED_POINTS:
            entries.extend(_evaluate_points(ident.id, CANNED_POINTS[ident.id], tol))
        elif ident.id == "eq16":
            entries.extend(_evaluate_points(ident.id, functional_equation_panel(), tol))
        elif ident.id == "eq17":
            entries.extend(_evaluate_points(ident.id, product_relation_panel(), tol))
    return entries


def all_passed(entries: Iterable[VerificationReport | SkippedPoint]) -> bool:
    return all(
        entry.passed for entry in entries if isinstance(entry, VerificationReport)
    )


# --- serialization ---------------------------------------------------------

def _complex_dict(z: complex | None) -> dict[str, float] | None:
    return None if z is None else {"re": z.real, "im": z.imag}


def report_to_dict(entry: VerificationReport | SkippedPoint) -> dict:
    """JSON-ready dict; elapsed is omitted so outputs stay byte-stable."""
    if isinstance(entry, SkippedPoint):
        return {
            "id": entry.id,
            "s": _complex_dict(entry.s),
            "skipped": True,
            "reason": entry.reason,
        }
    return {
        "id": entry.id,
        "s": _complex_dict(entry.s),
        "lhs": _complex_dict(entry.lhs),
        "rhs": _complex_dict(entry.rhs),
        "abs_err": entry.abs_err,
        "rel_err": entry.rel_err,
        "tol": entry.tol,
        "pass": entry.passed,
        "lhs_route": entry.lhs_route,
        "rhs_route": entry.rhs_route,
        "evaluations": entry.evaluations,
    }


def to_json(entries: Sequence[VerificationReport | SkippedPoint]) -> str:
    return json.dumps([report_to_dict(e) for e in entries], indent=2)


CSV_HEADER = "id,s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass"


def to_csv(entries: Sequence[VerificationReport | SkippedPoint]) -> str:
    lines = [CSV_HEADER]
    for entry in entries:
        if isinstance(entry, SkippedPoint):
            lines.append(
                f"{entry.id},{entry.s.real!r},{entry.s.imag!r},,,,,,,,skipped"
            )
            continue
        s_re = "" if entry.s is None else repr(entry.s.real)
        s_im = "" if entry.s is None else repr(entry.s.imag)
        rel = "" if entry.rel_err is None else repr(entry.rel_err)
        lines.append(
            ",".join(
                [
                    entry.id,
                    s_re,
                    s_im,
                    repr(entry.lhs.real),
                    repr(entry.lhs.imag),
                    repr(entry.rhs.real),
                    repr(entry.rhs.imag),
                    repr(entry.abs_err),
                    rel,
                    repr(entry.tol),
                    "true" if entry.passed else "false",
                ]
            )
        )
    return "\n".join(lines) + "\n"
