"""Scaled phase-space coordinates, separatrix masks, and grid evaluation.

Physical (x, p) enter only here; everything downstream works in the scaled
variables X = x*sqrt(M*Omega/hbar), P = p/sqrt(M*hbar*Omega), in which the
trajectory energy is eta = (P^2 - X^2)/2 and the separatrix p = M*Omega*x
becomes the diagonal P = X. Scattering boundary conditions multiply the
profile by a step mask: 1 on the selected side of the separatrix, 0 on the
other, and 1/2 exactly on it so that left + right = full holds identically.
"""

import enum
import math
from dataclasses import dataclass

import numpy

from .profile import _require_finite, _resolve_config, profile_batch

__all__ = [
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
]


@dataclass(frozen=True)
class BarrierParams:
    """Mass, barrier steepness Omega, and action quantum defining the scaling."""

    mass: float
    steepness: float
    hbar: float

    def __post_init__(self):
        for name in ("mass", "steepness", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value}")


@dataclass(frozen=True)
class PhaseSpacePoint:
    """Point in scaled phase-space coordinates."""

    X: float
    P: float


class Side(enum.Enum):
    """Which scattering boundary condition the mask selects."""

    LEFT = "left"
    RIGHT = "right"
    FULL = "full"


class SeparatrixRegion(enum.Enum):
    """Location of a point relative to the separatrix diagonal P = X."""

    ABOVE = "above"
    BELOW = "below"
    ON = "on"


def scale_point(params, x, p):
    """Map physical (x, p) to scaled coordinates.

    X = x*sqrt(M*Omega/hbar) and P = p/sqrt(M*hbar*Omega), chosen so that
    H(x, p)/(hbar*Omega) = (P^2 - X^2)/2 holds identically.
    """
    x = _require_finite("x", x)
    p = _require_finite("p", p)
    X = x * math.sqrt(params.mass * params.steepness / params.hbar)
    P = p / math.sqrt(params.mass * params.hbar * params.steepness)
    return PhaseSpacePoint(X=X, P=P)


def trajectory_energy(pt):
    """Dimensionless classical energy eta = (P^2 - X^2)/2 of a scaled point."""
    return 0.5 * (pt.P * pt.P - pt.X * pt.X)


def classify_side(pt):
    """Exact classification of a point against the separatrix P = X."""
    if pt.P > pt.X:
        return SeparatrixRegion.ABOVE
    if pt.P < pt.X:
        return SeparatrixRegion.BELOW
    return SeparatrixRegion.ON


def side_mask(pt, side):
    """Step-mask factor for a point: 1 selected side, 0 other side, 1/2 on the line."""
    if side is Side.FULL:
        return 1.0
    if pt.P > pt.X:
        above = 1.0
    elif pt.P < pt.X:
        above = 0.0
    else:
        above = 0.5
    return above if side is Side.LEFT else 1.0 - above


def wigner_masked(eps, pt, side, cfg=None):
    """Profile value at the point's trajectory energy times the side mask."""
    mask = side_mask(pt, side)
    eta = trajectory_energy(pt)
    eps = _require_finite("eps", eps)
    cfg = _resolve_config(cfg, eps, eta)
    # + 0.0 normalizes the -0.0 a zero mask can produce
    return mask * profile_batch(eps, numpy.array([eta]), cfg=cfg)[0, 0] + 0.0


@dataclass(frozen=True, eq=False)
class PhaseSpaceGrid:
    """Masked profile values over a rectangular scaled region.

    ``values`` has shape (np, nx): row index sweeps P ascending, column
    index sweeps X ascending.
    """

    x_range: tuple
    p_range: tuple
    nx: int
    np: int
    side: Side
    values: numpy.ndarray

    def __post_init__(self):
        if self.values.shape != (self.np, self.nx):
            raise ValueError(
                f"values shape {self.values.shape} does not match (np, nx) = "
                f"({self.np}, {self.nx})"
            )
        if not numpy.isfinite(self.values).all():
            raise ValueError("grid values must be finite")

    def axes(self):
        """The X and P lattice coordinates."""
        return (
            numpy.linspace(self.x_range[0], self.x_range[1], self.nx),
            numpy.linspace(self.p_range[0], self.p_range[1], self.np),
        )


def _grid_mask(X, P, side):
    if side is Side.FULL:
        return numpy.ones_like(X)
    above = numpy.where(P > X, 1.0, numpy.where(P < X, 0.0, 0.5))
    return above if side is Side.LEFT else 1.0 - above


def evaluate_grid(eps, x_range, p_range, nx, np, side=Side.LEFT, cfg=None):
    """Masked profile over an nx-by-np lattice of scaled phase-space points.

    Profile values are computed once per distinct trajectory energy (exact
    binary equality) and scattered back, so the cache cannot change any
    value; the mask is applied pointwise afterwards. Results are
    independent of how the distinct energies are partitioned for
    evaluation.
    """
    eps = _require_finite("eps", eps)
    if nx < 1 or np < 1:
        raise ValueError("grid resolutions must be at least 1")
    if not (x_range[0] < x_range[1] and p_range[0] < p_range[1]):
        raise ValueError("coordinate ranges must be non-degenerate")
    side = Side(side)

    xs = numpy.linspace(x_range[0], x_range[1], nx)
    ps = numpy.linspace(p_range[0], p_range[1], np)
    X, P = numpy.meshgrid(xs, ps)
    eta = 0.5 * (P * P - X * X)

    unique, inverse = numpy.unique(eta, return_inverse=True)
    cfg = _resolve_config(cfg, eps, float(numpy.abs(unique).max()))
    profile = profile_batch(eps, unique, cfg=cfg)[:, 0]
    values = profile[inverse].reshape(eta.shape) * _grid_mask(X, P, side) + 0.0

    return PhaseSpaceGrid(
        x_range=(float(x_range[0]), float(x_range[1])),
        p_range=(float(p_range[0]), float(p_range[1])),
        nx=int(nx),
        np=int(np),
        side=side,
        values=values,
    )
