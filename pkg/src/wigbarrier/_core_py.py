"""Pure-NumPy fallback for the hot quadrature kernels.

Mirrors the compiled module in ``_core.pyx``: same node layout, same
trapezoid weights, same returned sums. Reductions use ``np.sum`` over the
node axis, whose pairwise blocking depends only on the node count, so
results are bit-identical no matter how the eta batch is chunked.
"""

import math

import numpy as np

BACKEND_NAME = "python"

# eta values per vectorized block; bounds peak memory at ~20 MB for the
# largest default node counts without affecting results
_CHUNK = 64


def node_counts(xi_max, step):
    """Half-counts (coarse, fine) of trapezoid intervals for the node grid.

    The coarse grid has spacing ``step`` and the nested fine grid spacing
    ``step/2``; both span [-n*step, n*step] with n = ceil(xi_max/step), so
    the truncated range always covers [-xi_max, xi_max].
    """
    n = max(1, int(math.ceil(xi_max / step)))
    return n, 2 * n


def profile_sums(eps, etas, xi_max, step, nderiv, chunk=_CHUNK):
    """Trapezoid sums of the Wigner-profile integrands in the xi variable.

    For each eta returns the integrals (including the 1/(2*pi) prefactor) of

        f0 = sech(xi/2) * cos(phi)
        f1 = -sech(xi/2) * 2*tanh(xi/2) * sin(phi)
        f2 = -sech(xi/2) * 4*tanh(xi/2)**2 * cos(phi)

    with phi = 2*eta*tanh(xi/2) - eps*xi, up to order ``nderiv``.

    Returns an array of shape (len(etas), nderiv+1, 2): [..., 0] is the
    fine sum (spacing step/2), [..., 1] the nested coarse sum (spacing
    step). Their difference is the step-halving error estimate.
    """
    etas = np.ascontiguousarray(etas, dtype=np.float64)
    n, m = node_counts(xi_max, step)
    h = 0.5 * step

    k = np.arange(-m, m + 1)
    xi = k * h
    sech = 1.0 / np.cosh(0.5 * xi)
    t2 = 2.0 * np.tanh(0.5 * xi)
    ex = eps * xi

    w_fine = np.ones(xi.size)
    w_fine[0] = w_fine[-1] = 0.5
    w_coarse = np.ones(n + n + 1)
    w_coarse[0] = w_coarse[-1] = 0.5

    even = slice(0, None, 2)  # coarse nodes: every second fine node
    scale = 1.0 / (2.0 * math.pi)

    out = np.empty((etas.size, nderiv + 1, 2))
    for lo in range(0, etas.size, chunk):
        sl = slice(lo, lo + chunk)
        phi = np.outer(etas[sl], t2) - ex
        cos = np.cos(phi)
        f = sech * cos
        out[sl, 0, 0] = h * np.sum(w_fine * f, axis=-1)
        out[sl, 0, 1] = step * np.sum(w_coarse * f[:, even], axis=-1)
        if nderiv >= 1:
            sin = np.sin(phi)
            f = -(sech * t2) * sin
            out[sl, 1, 0] = h * np.sum(w_fine * f, axis=-1)
            out[sl, 1, 1] = step * np.sum(w_coarse * f[:, even], axis=-1)
        if nderiv >= 2:
            f = -(sech * t2 * t2) * cos
            out[sl, 2, 0] = h * np.sum(w_fine * f, axis=-1)
            out[sl, 2, 1] = step * np.sum(w_coarse * f[:, even], axis=-1)
    out *= scale
    return out
