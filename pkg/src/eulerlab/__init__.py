"""eulerlab: special functions and dual-route verification of the
classical identities around Euler's constant, ln(4/pi), the
Glaisher-Kinkelin constant, and the alternating zeta function."""

from .core_numerics import (
    ProductIntegrand,
    QuadratureResult,
    SeriesResult,
    integrate_finite,
    integrate_semi_infinite,
    integrate_unit_square,
    sum_series,
)
from .constants import (
    ConstantEstimate,
    euler_formula_gamma,
    euler_gamma_series,
    glaisher_limit,
    glaisher_zeta,
    ln_4_over_pi,
    stirling_ratio,
    wallis_partial,
)
from .errors import (
    DomainError,
    EulerLabError,
    IllConditionedError,
    IntegrandError,
    PoleError,
)
from .identity_engine import (
    Identity,
    SkippedPoint,
    VerificationReport,
    all_passed,
    grid,
    list_identities,
    verify,
    verify_all,
)
from .integral_forms import (
    I_minus,
    I_plus,
    SignedKernel,
    beukers_reduced,
    fermi_dirac,
    integrand_2d,
    reduced_integrand_minus,
    reduced_integrand_plus,
    rhs_eq12,
    rhs_eq15,
    termwise_series_oracle,
)
from .special_functions import (
    EvalOptions,
    eta,
    eta_prime,
    gamma,
    zeta,
    zeta_minus_pole,
    zeta_prime,
)

__version__ = "0.1.0"

__all__ = [
    "ConstantEstimate",
    "DomainError",
    "EulerLabError",
    "EvalOptions",
    "I_minus",
    "I_plus",
    "Identity",
    "IllConditionedError",
    "IntegrandError",
    "PoleError",
    "ProductIntegrand",
    "QuadratureResult",
    "SeriesResult",
    "SignedKernel",
    "SkippedPoint",
    "VerificationReport",
    "all_passed",
    "beukers_reduced",
    "eta",
    "eta_prime",
    "euler_formula_gamma",
    "euler_gamma_series",
    "fermi_dirac",
    "gamma",
    "glaisher_limit",
    "glaisher_zeta",
    "grid",
    "integrand_2d",
    "integrate_finite",
    "integrate_semi_infinite",
    "integrate_unit_square",
    "list_identities",
    "ln_4_over_pi",
    "reduced_integrand_minus",
    "reduced_integrand_plus",
    "rhs_eq12",
    "rhs_eq15",
    "stirling_ratio",
    "sum_series",
    "termwise_series_oracle",
    "verify",
    "verify_all",
    "wallis_partial",
    "zeta",
    "zeta_minus_pole",
    "zeta_prime",
    "__version__",
]
