"""Wigner phase-space treatment of tunneling through a parabolic barrier.

Computes the energy profile of inverted-oscillator Wigner functions
directly from their phase-space equations, derives barrier transmission
and reflection coefficients as trajectory weights, and cross-validates
everything against the closed form. Hot quadrature kernels run on a
compiled extension when available, with a pure-NumPy fallback selected at
import time (see ``backend_name``).
"""

from ._backend import backend_name
from .coefficients import (
    CoefficientPair,
    PartialWeightTrace,
    coefficient_pair,
    partial_weight,
    reflection,
    suggest_window,
    transmission_closed,
    transmission_integral,
    windowed_mean,
)
from .phasespace import (
    BarrierParams,
    PhaseSpaceGrid,
    PhaseSpacePoint,
    SeparatrixRegion,
    Side,
    classify_side,
    evaluate_grid,
    scale_point,
    side_mask,
    trajectory_energy,
    wigner_masked,
)
from .profile import (
    DEFAULT_TOLERANCE,
    AccuracyError,
    QuadratureConfig,
    WignerProfile,
    compute_profile,
    integrate_decaying,
    kernel_weight,
    profile_batch,
    profile_derivatives,
    profile_value,
    tau_of_xi,
    xi_of_tau,
)
from .validation import (
    DEFAULT_TOLERANCES,
    EPS_SUITE,
    ResidualReport,
    check_normalization,
    check_symmetry,
    liouville_points,
    normalization_quadrature_check,
    residual_kernel_ode,
    residual_liouville,
    residual_profile_ode,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "AccuracyError",
    "QuadratureConfig",
    "WignerProfile",
    "DEFAULT_TOLERANCE",
    "kernel_weight",
    "xi_of_tau",
    "tau_of_xi",
    "integrate_decaying",
    "profile_value",
    "profile_derivatives",
    "profile_batch",
    "compute_profile",
    "CoefficientPair",
    "PartialWeightTrace",
    "transmission_closed",
    "transmission_integral",
    "reflection",
    "coefficient_pair",
    "partial_weight",
    "windowed_mean",
    "suggest_window",
    "BarrierParams",
    "PhaseSpacePoint",
    "Side",
    "SeparatrixRegion",
    "PhaseSpaceGrid",
    "scale_point",
    "trajectory_energy",
    "classify_side",
    "side_mask",
    "wigner_masked",
    "evaluate_grid",
    "ResidualReport",
    "EPS_SUITE",
    "DEFAULT_TOLERANCES",
    "residual_profile_ode",
    "residual_kernel_ode",
    "check_normalization",
    "normalization_quadrature_check",
    "check_symmetry",
    "residual_liouville",
    "liouville_points",
    "run_suite",
]
