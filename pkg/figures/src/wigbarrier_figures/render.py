"""Renderers for the three figure kinds."""

import matplotlib

matplotlib.use("Agg")

import numpy as np
from matplotlib import pyplot as plt

from .jobs import FigureInputError, load_table, surface_arrays

MIRROR_TOLERANCE = 1e-9

# presentation defaults for the 3-D surface; the quarter-turn azimuth puts
# the incoming/reflected wave fronts in the foreground
DEFAULT_ELEV = 30.0
DEFAULT_AZIM = -150.0


class MirrorAssertionError(AssertionError):
    """The coefficient data violates the R(eps) = T(-eps) mirror property."""


def render(job, dpi=150, view_elev=None, view_azim=None):
    """Render the job's figure kind from its CSV into the output image."""
    columns = load_table(job)
    if job.figure_kind == "transmission_curve":
        fig = _transmission_curve(columns)
    elif job.figure_kind == "wigner_surface":
        fig = _wigner_surface(columns, view_elev, view_azim)
    else:
        fig = _coefficient_panels(columns)
    try:
        fig.savefig(job.output_image, dpi=dpi)
    finally:
        plt.close(fig)
    return job.output_image


def _transmission_curve(columns):
    eps, T = columns["epsilon"], columns["T"]
    order = np.argsort(eps)
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    ax.plot(eps[order], T[order], color="tab:blue")
    ax.axhline(0.5, color="0.8", lw=0.8, zorder=0)
    ax.axvline(0.0, color="0.8", lw=0.8, zorder=0)
    ax.set_xlabel(r"scaled energy $\varepsilon$")
    ax.set_ylabel(r"transmission $T$")
    ax.set_ylim(-0.02, 1.02)
    fig.tight_layout()
    return fig


def _wigner_surface(columns, view_elev, view_azim):
    x_axis, p_axis, w = surface_arrays(columns)
    X, P = np.meshgrid(x_axis, p_axis)
    amplitude = float(np.abs(w).max()) or 1.0

    fig = plt.figure(figsize=(6.0, 4.6))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(
        X, P, w,
        cmap="RdBu_r", vmin=-amplitude, vmax=amplitude,  # diverging, centered: sign structure is the physics
        rcount=min(len(p_axis), 120), ccount=min(len(x_axis), 120),
        linewidth=0, antialiased=False,
    )
    # separatrix P = X across the shared coordinate window, on the zero plane
    lo = max(x_axis[0], p_axis[0])
    hi = min(x_axis[-1], p_axis[-1])
    if lo < hi:
        diag = np.linspace(lo, hi, 64)
        ax.plot(diag, diag, np.zeros_like(diag), color="black", lw=1.4)
    ax.view_init(
        elev=DEFAULT_ELEV if view_elev is None else view_elev,
        azim=DEFAULT_AZIM if view_azim is None else view_azim,
    )
    ax.set_xlabel("X")
    ax.set_ylabel("P")
    ax.set_zlabel("W")
    return fig


def _coefficient_panels(columns):
    eps, T, R = columns["epsilon"], columns["T"], columns["R"]
    order = np.argsort(eps)
    eps, T, R = eps[order], T[order], R[order]

    # the grid must be symmetric for the mirror check to be meaningful
    grid_skew = float(np.abs(eps + eps[::-1]).max())
    if grid_skew > MIRROR_TOLERANCE:
        raise FigureInputError(
            f"epsilon grid is not symmetric about 0 (skew {grid_skew:.3e}); "
            "cannot verify the mirror property"
        )
    mirror = float(np.abs(R - T[::-1]).max())
    if mirror > MIRROR_TOLERANCE:
        raise MirrorAssertionError(
            f"max |R(eps) - T(-eps)| = {mirror:.3e} exceeds {MIRROR_TOLERANCE:g}"
        )

    fig, (ax_r, ax_t) = plt.subplots(1, 2, figsize=(8.0, 3.2), sharey=True)
    ax_r.plot(eps, R, color="tab:red")
    ax_r.set_xlabel(r"scaled energy $\varepsilon$")
    ax_r.set_ylabel(r"$R$")
    ax_t.plot(eps, T, color="tab:blue")
    ax_t.set_xlabel(r"scaled energy $\varepsilon$")
    ax_t.set_ylabel(r"$T$")
    for ax in (ax_r, ax_t):
        ax.set_ylim(-0.02, 1.02)
        ax.axvline(0.0, color="0.8", lw=0.8, zorder=0)
        ax.axhline(0.5, color="0.8", lw=0.8, zorder=0)
    fig.tight_layout()
    return fig
