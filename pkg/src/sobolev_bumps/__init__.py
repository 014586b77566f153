"""Norm-minimal compactly supported functions in Sobolev spaces.

Construction, verification and export of the unique minimal-norm "bump"
functions with prescribed support radius in the Sobolev spaces generated by
half-integer Matern kernels, together with their norm function, scaling
behaviour and Power-Function identities.
"""

__version__ = "0.1.0"

from .kernels import (
    KernelSpec,
    RadialProfile,
    kernel_eval,
    matern_profile,
    matern_profile_deriv,
    wendland_phi31,
    wendland_phi31_deriv,
)
from .quadrature import (
    BoundaryIntegrand,
    NonConvergence,
    QuadratureConfig,
    boundary_sum_1d,
    integrate_circle,
    integrate_interval,
)
from .bump_core import (
    BumpProblem,
    NonPositiveG0,
    OptimalBump,
    SingularSystem,
    TraceSystem,
    TranslateRepresenter,
    assemble_trace_system,
    beta_of_r,
    g_j_r,
    kernel_Kr_1d,
    solve_bump,
    translate_1d,
)
from .analysis import (
    BetaCurve,
    PointSet,
    beta_curve,
    lower_bound_check,
    perturbation_optimality,
    power_function,
    reproduction_check_1d,
    run_validation,
    scaled_bump_compare,
    sobolev_inner_1d,
    sobolev_norm_1d,
    transfinite_power_at_origin,
    uncertainty_check,
    wendland_norm_compare,
)

__all__ = [
    "__version__",
    "KernelSpec",
    "RadialProfile",
    "kernel_eval",
    "matern_profile",
    "matern_profile_deriv",
    "wendland_phi31",
    "wendland_phi31_deriv",
    "BoundaryIntegrand",
    "NonConvergence",
    "QuadratureConfig",
    "boundary_sum_1d",
    "integrate_circle",
    "integrate_interval",
    "BumpProblem",
    "NonPositiveG0",
    "OptimalBump",
    "SingularSystem",
    "TraceSystem",
    "TranslateRepresenter",
    "assemble_trace_system",
    "beta_of_r",
    "g_j_r",
    "kernel_Kr_1d",
    "solve_bump",
    "translate_1d",
    "BetaCurve",
    "PointSet",
    "beta_curve",
    "lower_bound_check",
    "perturbation_optimality",
    "power_function",
    "reproduction_check_1d",
    "run_validation",
    "scaled_bump_compare",
    "sobolev_inner_1d",
    "sobolev_norm_1d",
    "transfinite_power_at_origin",
    "uncertainty_check",
    "wendland_norm_compare",
]
