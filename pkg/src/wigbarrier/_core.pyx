# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled quadrature kernels for the Wigner-profile integrals.

Same contract as the fallback in ``_core_py``: trapezoid sums (fine spacing
step/2 and nested coarse spacing step, 1/(2*pi) prefactor included) of the
profile integrand and its first two eta-derivative integrands.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, cos, cosh, sin, tanh

cnp.import_array()

BACKEND_NAME = "cython"


def node_counts(double xi_max, double step):
    cdef long n = <long> ceil(xi_max / step)
    if n < 1:
        n = 1
    return n, 2 * n


def profile_sums(double eps, object etas, double xi_max, double step, int nderiv):
    cdef double[::1] ev = np.ascontiguousarray(etas, dtype=np.float64)
    cdef Py_ssize_t n_eta = ev.shape[0]
    cdef long n = <long> ceil(xi_max / step)
    if n < 1:
        n = 1
    cdef long m = 2 * n
    cdef double h = 0.5 * step
    cdef long n_nodes = 2 * m + 1

    # node-only factors, shared across the whole eta batch
    sech_buf = np.empty(n_nodes)
    t2_buf = np.empty(n_nodes)
    ex_buf = np.empty(n_nodes)
    cdef double[::1] sech = sech_buf
    cdef double[::1] t2 = t2_buf
    cdef double[::1] ex = ex_buf
    cdef long j
    cdef double xi
    for j in range(n_nodes):
        xi = (j - m) * h
        sech[j] = 1.0 / cosh(0.5 * xi)
        t2[j] = 2.0 * tanh(0.5 * xi)
        ex[j] = eps * xi

    out_buf = np.empty((n_eta, nderiv + 1, 2))
    cdef double[:, :, ::1] out = out_buf
    cdef double scale = 1.0 / (2.0 * np.pi)
    cdef double eta, phi, c, s, w, f0, f1, f2
    cdef double a0f, a1f, a2f, a0c, a1c, a2c
    cdef Py_ssize_t i

    for i in range(n_eta):
        eta = ev[i]
        a0f = a1f = a2f = 0.0
        a0c = a1c = a2c = 0.0
        for j in range(n_nodes):
            phi = eta * t2[j] - ex[j]
            c = cos(phi)
            f0 = sech[j] * c
            w = 0.5 if (j == 0 or j == n_nodes - 1) else 1.0
            a0f += w * f0
            if (j & 1) == 0:  # coarse node (m is even, so endpoints included)
                a0c += w * f0
            if nderiv >= 1:
                s = sin(phi)
                f1 = -(sech[j] * t2[j]) * s
                a1f += w * f1
                if (j & 1) == 0:
                    a1c += w * f1
            if nderiv >= 2:
                f2 = -(sech[j] * t2[j] * t2[j]) * c
                a2f += w * f2
                if (j & 1) == 0:
                    a2c += w * f2
        out[i, 0, 0] = a0f * h * scale
        out[i, 0, 1] = a0c * step * scale
        if nderiv >= 1:
            out[i, 1, 0] = a1f * h * scale
            out[i, 1, 1] = a1c * step * scale
        if nderiv >= 2:
            out[i, 2, 0] = a2f * h * scale
            out[i, 2, 1] = a2c * step * scale
    return out_buf
