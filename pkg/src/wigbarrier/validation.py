"""Independent residual checks of the exact phase-space identities.

Each check evaluates an identity the implementation does not enforce by
construction: the second-order profile ODE, the first-order kernel ODE,
the closed-form normalization, the eps/eta reflection symmetry, and
constancy along classical trajectories away from the separatrix.
"""

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import partial_weight, suggest_window
from .phasespace import PhaseSpacePoint, Side, trajectory_energy, wigner_masked
from .profile import (
    _require_finite,
    _resolve_config,
    kernel_weight,
    profile_batch,
    profile_derivatives,
)

__all__ = [
    "ResidualReport",
    "EPS_SUITE",
    "SUITE_NAMES",
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

# scaled-energy set every suite sweeps
EPS_SUITE = (-2.0, -1.0, -0.4, 0.0, 0.4, 1.0, 2.0)

SUITE_NAMES = ("ode", "kernel", "symmetry", "normalization", "liouville")

DEFAULT_TOLERANCES = {
    "ode": 1e-6,
    "kernel": 1e-12,
    "symmetry": 1e-10,
    "normalization": 0.0,
    "liouville": 1e-5,
}

_LIOUVILLE_H = 1e-4
_LIOUVILLE_SEED = 20130204


@dataclass(frozen=True)
class ResidualReport:
    """Residuals of one check over a set of points, with a pass verdict."""

    label: str
    points: list
    residuals: np.ndarray
    max_abs: float
    tolerance: float
    passed: bool

    @classmethod
    def from_residuals(cls, label, points, residuals, tolerance):
        residuals = np.asarray(residuals, dtype=np.float64)
        if len(points) != residuals.size:
            raise ValueError("points and residuals must have equal length")
        max_abs = float(np.abs(residuals).max()) if residuals.size else 0.0
        return cls(
            label=label,
            points=list(points),
            residuals=residuals,
            max_abs=max_abs,
            tolerance=float(tolerance),
            passed=max_abs <= tolerance,
        )


def residual_profile_ode(eps, eta, cfg=None):
    """Residual of eta*W'' + W' - 4*(eps - eta)*W at one point."""
    w, d1, d2 = profile_derivatives(eps, eta, cfg=cfg)
    return eta * d2 + d1 - 4.0 * (eps - eta) * w


def _kernel_derivative(eps, tau):
    # closed-form w' = w * (tau - 4i*eps)/(4 - tau^2)
    w = kernel_weight(eps, tau)
    return w * (tau - 4j * eps) / (4.0 - tau * tau)


def residual_kernel_ode(eps, tau, h=None):
    """Residual of i*(4 - tau^2)*w' - (i*tau + 4*eps)*w.

    With ``h=None`` the closed-form derivative is used and the residual is
    an algebraic identity (zero up to rounding). With a finite-difference
    step ``h`` the residual is pure differencing error, O(h^2), which
    guards the closed-form derivative against transcription mistakes.
    """
    eps = _require_finite("eps", eps)
    tau = _require_finite("tau", tau)
    if h is None:
        wp = _kernel_derivative(eps, tau)
    else:
        if abs(tau) + h >= 2.0:
            raise ValueError(f"finite difference leaves the domain: |tau|+h = {abs(tau) + h} >= 2")
        wp = (kernel_weight(eps, tau + h) - kernel_weight(eps, tau - h)) / (2.0 * h)
    w = kernel_weight(eps, tau)
    return 1j * (4.0 - tau * tau) * wp - (1j * tau + 4.0 * eps) * w


def check_normalization(eps):
    """Total eta-integral of the profile via the closed-form kernel at tau=0.

    Equals 2*pi*w_eps(0); the kernel modulus at tau=0 is eps-independent,
    so the value is exactly 1 for every eps. No quadrature involved.
    """
    value = 2.0 * math.pi * kernel_weight(eps, 0.0)
    return value.real


def normalization_quadrature_check(eps, lambda_max=50.0, cfg=None):
    """Windowed average of the profile weight over [-Lambda, Lambda].

    Cross-checks the closed-form normalization by brute accumulation:
    the reflection symmetry maps the negative half-line onto the positive
    half-line of the sign-flipped eigenvalue.
    """
    pos = partial_weight(eps, lambda_max, cfg=cfg)
    neg = partial_weight(-eps, lambda_max, cfg=cfg)
    return (
        float(np.mean(pos.cumulative[-suggest_window(pos):]))
        + float(np.mean(neg.cumulative[-suggest_window(neg):]))
    )


def check_symmetry(eps, eta_grid, cfg=None, tolerance=1e-10):
    """Pointwise residual of the reflection symmetry W_{-eps}(-eta) = W_eps(eta)."""
    eta_grid = np.asarray(eta_grid, dtype=np.float64)
    direct = profile_batch(eps, eta_grid, cfg=cfg)[:, 0]
    mirrored = profile_batch(-eps, -eta_grid, cfg=cfg)[:, 0]
    residuals = np.abs(mirrored - direct)
    points = [f"eps={eps:g};eta={eta:g}" for eta in eta_grid]
    return ResidualReport.from_residuals("symmetry", points, residuals, tolerance)


def residual_liouville(eps, pt, side=Side.LEFT, cfg=None, h=_LIOUVILLE_H):
    """Directional derivative P*dW/dX + X*dW/dP of the masked distribution.

    Central differences cannot represent the distributional term the step
    mask contributes on the separatrix, so points within 10*h of the
    diagonal are rejected; elsewhere the identity is a smooth statement
    and the residual is pure differencing noise.
    """
    eps = _require_finite("eps", eps)
    if abs(pt.P - pt.X) <= 10.0 * h:
        raise ValueError(
            f"point ({pt.X}, {pt.P}) is within 10*h of the separatrix; "
            "the mask derivative is distributional there"
        )
    cfg = _resolve_config(cfg, eps, trajectory_energy(pt))
    dwdx = (
        wigner_masked(eps, PhaseSpacePoint(pt.X + h, pt.P), side, cfg)
        - wigner_masked(eps, PhaseSpacePoint(pt.X - h, pt.P), side, cfg)
    ) / (2.0 * h)
    dwdp = (
        wigner_masked(eps, PhaseSpacePoint(pt.X, pt.P + h), side, cfg)
        - wigner_masked(eps, PhaseSpacePoint(pt.X, pt.P - h), side, cfg)
    ) / (2.0 * h)
    return pt.P * dwdx + pt.X * dwdp


def liouville_points(count=50, h=_LIOUVILLE_H, seed=_LIOUVILLE_SEED):
    """Deterministic off-separatrix sample points in [-3, 3]^2."""
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        X, P = rng.uniform(-3.0, 3.0, 2)
        if abs(P - X) > 10.0 * h:
            points.append(PhaseSpacePoint(float(X), float(P)))
    return points


def _liouville_scaled_residual(eps, pt, cfg, h):
    resolved = _resolve_config(cfg, eps, trajectory_energy(pt))
    residual = residual_liouville(eps, pt, Side.LEFT, resolved, h)
    _, d1, _ = profile_derivatives(eps, trajectory_energy(pt), cfg=resolved)
    scale = 1.0 + abs(d1) * (abs(pt.X) + abs(pt.P))
    return residual / scale


def _ode_report(eps_values, cfg, tolerance):
    points, residuals = [], []
    for eps in eps_values:
        for eta in np.linspace(-5.0, 5.0, 51):
            w, d1, d2 = profile_derivatives(eps, eta, cfg=cfg)
            r = eta * d2 + d1 - 4.0 * (eps - eta) * w
            scale = 1.0 + abs(w) + abs(d1) + abs(d2)
            points.append(f"eps={eps:g};eta={eta:g}")
            residuals.append(r / scale)
    return ResidualReport.from_residuals("profile-ode", points, residuals, tolerance)


def _kernel_report(eps_values, tolerance):
    points, residuals = [], []
    for eps in eps_values:
        for tau in np.linspace(-1.9, 1.9, 20):
            points.append(f"eps={eps:g};tau={tau:g}")
            residuals.append(abs(residual_kernel_ode(eps, tau)))
    return ResidualReport.from_residuals("kernel-ode", points, residuals, tolerance)


def _symmetry_report(eps_values, cfg, tolerance):
    points, residuals = [], []
    for eps in eps_values:
        report = check_symmetry(eps, np.linspace(-6.0, 6.0, 25), cfg=cfg, tolerance=tolerance)
        points.extend(report.points)
        residuals.extend(report.residuals)
    return ResidualReport.from_residuals("symmetry", points, residuals, tolerance)


def _normalization_report(eps_values, tolerance):
    points = [f"eps={eps:g};tau=0" for eps in eps_values]
    residuals = [check_normalization(eps) - 1.0 for eps in eps_values]
    return ResidualReport.from_residuals("normalization", points, residuals, tolerance)


def _liouville_report(eps_values, cfg, tolerance):
    points, residuals = [], []
    sample = liouville_points()
    for eps in eps_values:
        for pt in sample:
            points.append(f"eps={eps:g};X={pt.X:g};P={pt.P:g}")
            residuals.append(_liouville_scaled_residual(eps, pt, cfg, _LIOUVILLE_H))
    return ResidualReport.from_residuals("liouville", points, residuals, tolerance)


def run_suite(names=SUITE_NAMES, cfg=None, tolerances=None, eps_values=EPS_SUITE):
    """Run the named checks over the eps sweep; returns one report per check."""
    tols = dict(DEFAULT_TOLERANCES)
    tols.update(tolerances or {})
    unknown = set(names) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    reports = []
    for name in names:
        if name == "ode":
            reports.append(_ode_report(eps_values, cfg, tols["ode"]))
        elif name == "kernel":
            reports.append(_kernel_report(eps_values, tols["kernel"]))
        elif name == "symmetry":
            reports.append(_symmetry_report(eps_values, cfg, tols["symmetry"]))
        elif name == "normalization":
            reports.append(_normalization_report(eps_values, tols["normalization"]))
        elif name == "liouville":
            reports.append(_liouville_report(eps_values, cfg, tols["liouville"]))
    return reports
