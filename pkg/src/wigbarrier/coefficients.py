"""Transmission and reflection coefficients of the parabolic barrier.

Three routes to the same number:

* closed form  T = 1/(1 + exp(-2*pi*eps)) = (1 + tanh(pi*eps))/2,
* an exponentially convergent quadrature of
  T = 1/2 * [1 + (1/pi) * integral_0^inf sin(eps*xi)/sinh(xi/2) dxi],
* direct accumulation of profile weight over positive trajectory energies,
  whose improper integral converges only conditionally and is therefore
  reported through a trailing windowed average.
"""

import math
from dataclasses import dataclass

import numpy as np

from .profile import (
    _require_finite,
    _resolve_config,
    integrate_decaying,
    profile_batch,
)

__all__ = [
    "CoefficientPair",
    "PartialWeightTrace",
    "transmission_closed",
    "transmission_integral",
    "reflection",
    "coefficient_pair",
    "partial_weight",
    "windowed_mean",
    "suggest_window",
]

# Taylor patch radius for the removable singularity of sin(eps*x)/sinh(x/2)
_PATCH_RADIUS = 1e-3

# default spacing of the eta grid in partial-weight traces; resolves the
# O(1)-wavelength oscillations of the profile
_ETA_SPACING = 0.01


@dataclass(frozen=True)
class CoefficientPair:
    """Transmission/reflection pair; both in [0, 1] and summing to one."""

    transmission: float
    reflection: float

    def __post_init__(self):
        for name, value in (("transmission", self.transmission), ("reflection", self.reflection)):
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if abs(self.transmission + self.reflection - 1.0) > 1e-12:
            raise ValueError(
                f"transmission + reflection must equal 1 within 1e-12, "
                f"got {self.transmission + self.reflection}"
            )


def transmission_closed(eps):
    """Closed-form barrier transmission for scaled energy eps.

    Evaluated as (1 + tanh(pi*eps))/2: identical to 1/(1 + exp(-2*pi*eps))
    but immune to the exp overflow for very negative eps.
    """
    eps = _require_finite("eps", eps)
    return 0.5 * (1.0 + math.tanh(math.pi * eps))


def reflection(eps):
    """Reflection coefficient 1 - T(eps)."""
    return 1.0 - transmission_closed(eps)


def coefficient_pair(eps):
    """Both coefficients as a validated pair."""
    t = transmission_closed(eps)
    return CoefficientPair(transmission=t, reflection=1.0 - t)


def _sinh_ratio(eps, xs):
    """sin(eps*x)/sinh(x/2) with the x -> 0 limit filled by its Taylor value.

    On |x| <= 1e-3 the second-order expansion 2*eps*(1 - (4*eps^2+1)*x^2/24)
    replaces the 0/0 form; the switchover error is O(x^4) ~ 1e-12 relative.
    """
    out = np.empty_like(xs)
    small = np.abs(xs) <= _PATCH_RADIUS
    x_s = xs[small]
    out[small] = 2.0 * eps * (1.0 - (4.0 * eps * eps + 1.0) * x_s * x_s / 24.0)
    x_l = xs[~small]
    out[~small] = np.sin(eps * x_l) / np.sinh(0.5 * x_l)
    return out


def transmission_integral(eps, cfg=None):
    """Transmission via the half-line sinh-kernel integral.

    The integrand is even in xi, so the half-line value is half of the
    symmetric whole-line trapezoid sum, which converges geometrically.
    Agrees with the closed form to within cfg.tolerance.
    """
    eps = _require_finite("eps", eps)
    cfg = _resolve_config(cfg, eps, 0.0)
    whole_line = integrate_decaying(lambda xs: _sinh_ratio(eps, xs), cfg)
    return 0.5 + whole_line / (4.0 * math.pi)


@dataclass(frozen=True, eq=False)
class PartialWeightTrace:
    """Cumulative profile weight over [0, Lambda] and its windowed average."""

    lambda_grid: np.ndarray
    cumulative: np.ndarray
    averaged: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lambda_grid, dtype=np.float64)
        if lam.ndim != 1 or lam.size == 0:
            raise ValueError("lambda_grid must be a non-empty 1-D array")
        if lam[0] != 0.0:
            raise ValueError("lambda_grid must start at 0")
        if not np.all(np.diff(lam) > 0):
            raise ValueError("lambda_grid must be strictly increasing")
        for name in ("cumulative", "averaged"):
            if np.asarray(getattr(self, name)).shape != lam.shape:
                raise ValueError(f"{name} length must match lambda_grid")
        if self.cumulative[0] != 0.0:
            raise ValueError("cumulative weight at Lambda=0 must be 0")


def windowed_mean(values, window):
    """Trailing mean over ``window`` samples (shorter prefix near the start)."""
    if window < 1:
        raise ValueError(f"window must be a positive integer, got {window}")
    values = np.asarray(values, dtype=np.float64)
    csum = np.cumsum(values)
    out = np.empty_like(values)
    w = min(window, values.size)
    out[:w] = csum[:w] / np.arange(1, w + 1)
    out[w:] = (csum[w:] - csum[:-w]) / window
    return out


def partial_weight(eps, lambda_max, cfg=None, window=1, samples=None):
    """Cumulative profile weight over [0, lambda_max] with a windowed average.

    Samples the profile on a uniform eta grid (default spacing 0.01),
    accumulates trapezoid integrals, and smooths the conditionally
    convergent cumulative sequence with a trailing mean of ``window``
    samples. The cumulative sequence oscillates around the closed-form
    transmission with a slowly decaying envelope; only the windowed
    average should be read as the limit.
    """
    eps = _require_finite("eps", eps)
    lambda_max = _require_finite("lambda_max", lambda_max)
    if lambda_max <= 0:
        raise ValueError(f"lambda_max must be positive, got {lambda_max}")
    if int(window) != window or window < 1:
        raise ValueError(f"window must be a positive integer, got {window}")
    if samples is None:
        samples = max(2, int(round(lambda_max / _ETA_SPACING)) + 1)
    elif samples < 2:
        raise ValueError(f"samples must be at least 2, got {samples}")

    grid = np.linspace(0.0, lambda_max, int(samples))
    values = profile_batch(eps, grid, cfg=cfg)[:, 0]
    steps = np.diff(grid)
    cumulative = np.concatenate(
        [[0.0], np.cumsum(0.5 * steps * (values[1:] + values[:-1]))]
    )
    averaged = windowed_mean(cumulative, int(window))
    return PartialWeightTrace(lambda_grid=grid, cumulative=cumulative, averaged=averaged)


def suggest_window(trace):
    """Window spanning one oscillation period of the cumulative trace.

    The period is estimated from zero crossings of (cumulative minus its
    expanding mean) over the trailing half of the trace; consecutive
    crossings are half a period apart. Falls back to a tenth of the trace
    when too few crossings exist.
    """
    cumulative = np.asarray(trace.cumulative, dtype=np.float64)
    running = np.cumsum(cumulative) / np.arange(1, cumulative.size + 1)
    detrended = cumulative - running
    tail = detrended[cumulative.size // 2 :]
    signs = np.sign(tail)
    crossings = np.nonzero(np.diff(signs) != 0)[0]
    if crossings.size < 3:
        return max(1, cumulative.size // 10)
    half_period = float(np.diff(crossings).mean())
    return max(1, int(round(2.0 * half_period)))
