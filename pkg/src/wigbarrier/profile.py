"""Fourier kernel and energy profile of the inverted-oscillator Wigner function.

The profile is defined on the open Fourier window tau in (-2, 2) by

    W(eta) = (1/pi) * integral_{-2}^{2} dtau
             exp[-i*eps*ln((2+tau)/(2-tau))] / sqrt(4 - tau^2) * exp(i*eta*tau)

whose integrand carries an inverse-square-root endpoint singularity and a
logarithmic phase singularity at tau = +-2. All numerical work happens in
the substituted variable xi = ln[(2+tau)/(2-tau)] (inverse tau = 2*tanh(xi/2)),
where the same quantity becomes manifestly real and exponentially decaying:

    W(eta) = (1/2pi) * integral_{-inf}^{inf} dxi
             sech(xi/2) * cos(2*eta*tanh(xi/2) - eps*xi)

This form is smooth and analytic in a strip around the real axis, so the
truncated trapezoid rule converges geometrically; truncation at xi_max costs
at most (4/pi)*exp(-xi_max/2) through the sech tail. Eta-derivatives follow
by differentiation under the integral sign (extra factors 2*tanh(xi/2) and
a sin/cos swap).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _backend

DEFAULT_TOLERANCE = 1e-10

__all__ = [
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
]


class AccuracyError(RuntimeError):
    """Raised when the step-halving check exceeds the configured tolerance."""


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class QuadratureConfig:
    """Truncated-trapezoid parameters for integrals over the xi line.

    xi_max: truncation half-width; step: node spacing; tolerance: target
    absolute accuracy enforced through the step-halving check.
    """

    xi_max: float
    step: float
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not (self.xi_max > 0 and math.isfinite(self.xi_max)):
            raise ValueError(f"xi_max must be positive and finite, got {self.xi_max}")
        if not (self.step > 0 and math.isfinite(self.step)):
            raise ValueError(f"step must be positive and finite, got {self.step}")
        if not self.step < self.xi_max:
            raise ValueError(f"step must be smaller than xi_max ({self.step} >= {self.xi_max})")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")

    @classmethod
    def for_point(cls, eps=0.0, eta=0.0, tolerance=DEFAULT_TOLERANCE):
        """Default config for a single (eps, eta) evaluation.

        xi_max = 2*ln(4/tolerance) bounds the sech tail below tolerance;
        the step resolves the fastest local oscillation of the phase.
        """
        xi_max = 2.0 * math.log(4.0 / tolerance)
        step = min(0.05, 0.5 / (1.0 + abs(eta) + abs(eps)))
        return cls(xi_max=xi_max, step=step, tolerance=tolerance)


def _resolve_config(cfg, eps, eta_scale, tolerance=DEFAULT_TOLERANCE):
    if cfg is None:
        return QuadratureConfig.for_point(eps=eps, eta=eta_scale, tolerance=tolerance)
    return cfg


def kernel_weight(eps, tau):
    """Fourier kernel value at tau, for the profile labeled by eps.

    Modulus (1/pi)/sqrt(4 - tau^2) is eps-independent; the phase is the
    logarithmically singular -eps*ln((2+tau)/(2-tau)). Only defined on the
    open interval |tau| < 2.
    """
    eps = _require_finite("eps", eps)
    tau = _require_finite("tau", tau)
    if abs(tau) >= 2.0:
        raise ValueError(f"kernel is singular at |tau| >= 2, got tau={tau}")
    amplitude = 1.0 / (math.pi * math.sqrt(4.0 - tau * tau))
    return amplitude * cmath.exp(-1j * eps * math.log((2.0 + tau) / (2.0 - tau)))


def xi_of_tau(tau):
    """Substituted coordinate xi = ln[(2+tau)/(2-tau)]; requires |tau| < 2."""
    tau = _require_finite("tau", tau)
    if abs(tau) >= 2.0:
        raise ValueError(f"substitution requires |tau| < 2, got tau={tau}")
    return math.log((2.0 + tau) / (2.0 - tau))


def tau_of_xi(xi):
    """Inverse substitution tau = 2*tanh(xi/2); maps the real line into (-2, 2)."""
    xi = _require_finite("xi", xi)
    return 2.0 * math.tanh(0.5 * xi)


def _trapezoid_pair(values, step):
    """Fine (spacing step/2) and nested coarse (spacing step) trapezoid sums.

    ``values`` are integrand samples on the fine node grid produced by
    ``_nodes``; endpoints carry half weight and coincide for both grids.
    """
    fine = values.copy()
    fine[0] *= 0.5
    fine[-1] *= 0.5
    coarse = values[::2].copy()
    coarse[0] *= 0.5
    coarse[-1] *= 0.5
    return 0.5 * step * np.sum(fine), step * np.sum(coarse)


def _nodes(cfg):
    n, m = _backend.node_counts(cfg.xi_max, cfg.step)
    return np.arange(-m, m + 1) * (0.5 * cfg.step)


def integrate_decaying(f, cfg, full_output=False):
    """Truncated trapezoid integral of a decaying integrand over the xi line.

    ``f`` must accept a NumPy array of nodes and decay at least like
    exp(-|xi|/2) so that the [-xi_max, xi_max] truncation is sound. The
    returned value uses spacing ``cfg.step``; a nested step/2 evaluation
    supplies the accuracy estimate, and an AccuracyError is raised when the
    two differ by more than ``cfg.tolerance``. With ``full_output`` the
    pair (value, estimate) is returned.
    """
    xs = _nodes(cfg)
    values = np.asarray(f(xs), dtype=np.float64)
    if values.ndim == 0:
        values = np.full_like(xs, float(values))
    if values.shape != xs.shape:
        raise ValueError("integrand returned a shape that does not match the nodes")
    fine, coarse = _trapezoid_pair(values, cfg.step)
    estimate = abs(fine - coarse)
    if estimate > cfg.tolerance:
        raise AccuracyError(
            f"step-halving check failed: |delta| = {estimate:.3e} > tolerance "
            f"{cfg.tolerance:.3e} (xi_max={cfg.xi_max}, step={cfg.step})"
        )
    if full_output:
        return coarse, estimate
    return coarse


def _checked_sums(eps, etas, cfg, nderiv):
    """Backend sums with the step-halving check applied to every component."""
    sums = _backend.profile_sums(eps, etas, cfg.xi_max, cfg.step, nderiv)
    err = np.abs(sums[..., 0] - sums[..., 1]).max()
    if err > cfg.tolerance:
        raise AccuracyError(
            f"step-halving check failed: |delta| = {err:.3e} > tolerance "
            f"{cfg.tolerance:.3e} (xi_max={cfg.xi_max}, step={cfg.step})"
        )
    return sums[..., 1]


def profile_value(eps, eta, cfg=None):
    """Wigner profile W_eps(eta), real by construction in the xi form."""
    eps = _require_finite("eps", eps)
    eta = _require_finite("eta", eta)
    cfg = _resolve_config(cfg, eps, eta)
    return float(_checked_sums(eps, np.array([eta]), cfg, 0)[0, 0])


def profile_derivatives(eps, eta, cfg=None):
    """Profile and its first two eta-derivatives at one point.

    dW/deta  = -(1/2pi) integral sech(xi/2) * 2*tanh(xi/2) * sin(phi) dxi
    d2W/deta2 = -(1/2pi) integral sech(xi/2) * 4*tanh(xi/2)^2 * cos(phi) dxi
    with phi = 2*eta*tanh(xi/2) - eps*xi.
    """
    eps = _require_finite("eps", eps)
    eta = _require_finite("eta", eta)
    cfg = _resolve_config(cfg, eps, eta)
    row = _checked_sums(eps, np.array([eta]), cfg, 2)[0]
    return float(row[0]), float(row[1]), float(row[2])


def profile_batch(eps, etas, cfg=None, nderiv=0):
    """Profile (and derivative) values for a whole batch of eta values.

    With ``cfg=None`` a single configuration is resolved from the batch
    maximum |eta| (the conservative direction of the default step rule), so
    every point shares one node grid. Returns shape (len(etas), nderiv+1).
    """
    eps = _require_finite("eps", eps)
    etas = np.ascontiguousarray(etas, dtype=np.float64)
    if etas.size and not np.isfinite(etas).all():
        raise ValueError("eta values must be finite")
    eta_scale = float(np.abs(etas).max()) if etas.size else 0.0
    cfg = _resolve_config(cfg, eps, eta_scale)
    return _checked_sums(eps, etas, cfg, nderiv)


@dataclass(frozen=True, eq=False)
class WignerProfile:
    """Profile samples on a strictly increasing eta grid, with optional derivatives."""

    epsilon: float
    eta_grid: np.ndarray
    values: np.ndarray
    d1: np.ndarray | None = None
    d2: np.ndarray | None = None

    def __post_init__(self):
        grid = np.asarray(self.eta_grid, dtype=np.float64)
        if grid.ndim != 1 or grid.size == 0:
            raise ValueError("eta_grid must be a non-empty 1-D array")
        if not np.all(np.diff(grid) > 0):
            raise ValueError("eta_grid must be strictly increasing")
        for name in ("values", "d1", "d2"):
            arr = getattr(self, name)
            if arr is None:
                continue
            arr = np.asarray(arr, dtype=np.float64)
            if arr.shape != grid.shape:
                raise ValueError(f"{name} length must match eta_grid")
            if not np.isfinite(arr).all():
                raise ValueError(f"{name} must be finite")


def compute_profile(eps, eta_grid, cfg=None, derivatives=False):
    """Evaluate the profile over ``eta_grid`` and package it as a WignerProfile."""
    eta_grid = np.ascontiguousarray(eta_grid, dtype=np.float64)
    cols = profile_batch(eps, eta_grid, cfg=cfg, nderiv=2 if derivatives else 0)
    if derivatives:
        return WignerProfile(
            epsilon=float(eps),
            eta_grid=eta_grid,
            values=cols[:, 0],
            d1=cols[:, 1],
            d2=cols[:, 2],
        )
    return WignerProfile(epsilon=float(eps), eta_grid=eta_grid, values=cols[:, 0])
