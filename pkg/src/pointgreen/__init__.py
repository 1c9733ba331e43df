"""Exact propagators and evolved fields for one-dimensional quantum
point interactions, with a verified special-function core.

The package evaluates the interaction propagator in closed form, evolves
holomorphic initial data either by closed-form plane-wave expansions or
by adaptive quadrature along rotated rays, locates bound states, and
ships self-checking verification suites plus a deterministic CLI.
"""

from .backend import active_backend, available_backends, set_backend
from .errors import (
    BackendUnavailableError,
    DomainError,
    EvaluationOverflowError,
    NoDecayError,
    NonFiniteInputError,
    NonPositiveAError,
    NotUnitaryError,
    PointGreenError,
    PoleCollisionError,
    ToleranceNotMetError,
    ZeroStrengthError,
)
from .evolution import (
    EVOLUTION_CONFIG,
    WaveField,
    asymptotic_defect,
    evolve_grid,
    mirror_datum,
    plane_wave_boundary,
    plane_wave_datum,
    psi,
    psi_asymptotic,
    psi_component,
    psi_plane_wave,
    psi_with_error,
)
from .green import (
    g0,
    g1,
    gfree,
    green,
    green_dt,
    green_dx,
    green_dxx,
    jump_residual,
)
from .interaction import (
    EPS_CASE,
    GreenCoefficients,
    SignPair,
    UnitaryInteraction,
    coefficients,
    delta,
    delta_prime,
    dirichlet,
    eta_matrix,
    free,
    mu_matrix,
    neumann,
    random_interaction,
    robin,
    sign_pair,
)
from .quadrature import (
    DEFAULT_CONFIG,
    FresnelIntegrand,
    HolomorphicDatum,
    QuadratureConfig,
    QuadratureResult,
    fresnel_semiaxis,
    gaussian_tail_radius,
    integrate_segment,
    psi_tail_radius,
)
from .special import (
    erfcx,
    lambda_derivative,
    lambda_fn,
    lambda_gaussian_integral,
    lambda_lambda_integral,
    lambda_quotient,
)
from .spectral import (
    MULTIPLICITY_TOL,
    BoundState,
    asymptotic_consistency,
    bound_states,
    determinant_residual,
    eigenfunction_residual,
)
from .superoscillation import (
    CLOSED_SUM_LOG2_LIMIT,
    N_CAP,
    SuperoscillatingSequence,
    coefficient,
    conditioning,
    convergence_metric,
    evolve_superoscillation,
    evolve_superoscillation_with_error,
    f_n,
    uses_closed_sum,
)
from .verification import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # backends
    "active_backend",
    "available_backends",
    "set_backend",
    # errors
    "PointGreenError",
    "NonFiniteInputError",
    "EvaluationOverflowError",
    "NonPositiveAError",
    "NotUnitaryError",
    "ZeroStrengthError",
    "DomainError",
    "NoDecayError",
    "ToleranceNotMetError",
    "PoleCollisionError",
    "BackendUnavailableError",
    # special functions
    "erfcx",
    "lambda_fn",
    "lambda_derivative",
    "lambda_gaussian_integral",
    "lambda_lambda_integral",
    "lambda_quotient",
    # interactions
    "UnitaryInteraction",
    "GreenCoefficients",
    "SignPair",
    "sign_pair",
    "coefficients",
    "eta_matrix",
    "mu_matrix",
    "free",
    "delta",
    "delta_prime",
    "dirichlet",
    "neumann",
    "robin",
    "random_interaction",
    "EPS_CASE",
    # propagator
    "gfree",
    "g0",
    "g1",
    "green",
    "green_dx",
    "green_dxx",
    "green_dt",
    "jump_residual",
    # quadrature
    "QuadratureConfig",
    "DEFAULT_CONFIG",
    "HolomorphicDatum",
    "FresnelIntegrand",
    "QuadratureResult",
    "integrate_segment",
    "fresnel_semiaxis",
    "gaussian_tail_radius",
    "psi_tail_radius",
    # evolution
    "EVOLUTION_CONFIG",
    "psi",
    "psi_with_error",
    "psi_component",
    "psi_plane_wave",
    "psi_asymptotic",
    "asymptotic_defect",
    "plane_wave_datum",
    "mirror_datum",
    "plane_wave_boundary",
    "evolve_grid",
    "WaveField",
    # superoscillation
    "coefficient",
    "conditioning",
    "f_n",
    "convergence_metric",
    "evolve_superoscillation",
    "evolve_superoscillation_with_error",
    "uses_closed_sum",
    "SuperoscillatingSequence",
    "N_CAP",
    "CLOSED_SUM_LOG2_LIMIT",
    # spectrum
    "BoundState",
    "bound_states",
    "determinant_residual",
    "eigenfunction_residual",
    "asymptotic_consistency",
    "MULTIPLICITY_TOL",
    # verification
    "CheckResult",
    "run_all",
]
