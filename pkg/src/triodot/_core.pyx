# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled transport kernel.

Same contract as ``_core_py.transport_grid``: per-energy assembly of the
symmetric 3x3 inverse Green matrix, cofactor inversion, total and per-path
transmission amplitudes.  One tight C loop over the grid.
"""

import numpy as np

from libc.math cimport sqrt

COMPILED = True


def transport_grid(h11, h22, h33, h12, h23, h13, vl, vr, t0, omegas):
    cdef double complex e1 = h11, e2 = h22, e3 = h33
    cdef double complex t12 = h12, t23 = h23, t13 = h13
    cdef double vl1 = vl[0], vl2 = vl[1], vl3 = vl[2]
    cdef double vr1 = vr[0], vr2 = vr[1], vr3 = vr[2]
    cdef double tt0 = t0

    w_arr = np.ascontiguousarray(omegas, dtype=np.float64)
    cdef Py_ssize_t n = w_arr.shape[0]
    tau_arr = np.empty(n, dtype=np.complex128)
    paths_arr = np.empty((n, 3, 3), dtype=np.complex128)
    det_arr = np.empty(n, dtype=np.complex128)
    rho_arr = np.empty(n, dtype=np.float64)

    cdef double[::1] w = w_arr
    cdef double complex[::1] tau = tau_arr
    cdef double complex[:, :, ::1] paths = paths_arr
    cdef double complex[::1] det_out = det_arr
    cdef double[::1] rho_out = rho_arr

    cdef Py_ssize_t k
    cdef double wk, rho, tt2
    cdef double complex g0, s11, s22, s33, s12, s23, s13
    cdef double complex a11, a22, a33, a12, a23, a13
    cdef double complex c11, c22, c33, c12, c13, c23
    cdef double complex det, pre
    cdef double complex p11, p12, p13, p21, p22, p23, p31, p32, p33

    tt2 = 2.0 * tt0 * tt0
    with nogil:
        for k in range(n):
            wk = w[k]
            rho = sqrt(4.0 * tt0 * tt0 - wk * wk) / tt2
            g0 = wk / tt2 - 1j * rho

            s11 = g0 * (vl1 * vl1 + vr1 * vr1)
            s22 = g0 * (vl2 * vl2 + vr2 * vr2)
            s33 = g0 * (vl3 * vl3 + vr3 * vr3)
            s12 = g0 * (vl1 * vl2 + vr1 * vr2)
            s23 = g0 * (vl2 * vl3 + vr2 * vr3)
            s13 = g0 * (vl1 * vl3 + vr1 * vr3)

            a11 = wk - e1 - s11
            a22 = wk - e2 - s22
            a33 = wk - e3 - s33
            a12 = -t12 - s12
            a23 = -t23 - s23
            a13 = -t13 - s13

            c11 = a22 * a33 - a23 * a23
            c22 = a11 * a33 - a13 * a13
            c33 = a11 * a22 - a12 * a12
            c12 = a13 * a23 - a12 * a33
            c13 = a12 * a23 - a13 * a22
            c23 = a12 * a13 - a11 * a23
            det = a11 * c11 + a12 * c12 + a13 * c13

            pre = 2.0 * rho / det
            p11 = pre * (vl1 * vr1) * c11
            p12 = pre * (vl1 * vr2) * c12
            p13 = pre * (vl1 * vr3) * c13
            p21 = pre * (vl2 * vr1) * c12
            p22 = pre * (vl2 * vr2) * c22
            p23 = pre * (vl2 * vr3) * c23
            p31 = pre * (vl3 * vr1) * c13
            p32 = pre * (vl3 * vr2) * c23
            p33 = pre * (vl3 * vr3) * c33

            paths[k, 0, 0] = p11
            paths[k, 0, 1] = p12
            paths[k, 0, 2] = p13
            paths[k, 1, 0] = p21
            paths[k, 1, 1] = p22
            paths[k, 1, 2] = p23
            paths[k, 2, 0] = p31
            paths[k, 2, 1] = p32
            paths[k, 2, 2] = p33
            tau[k] = p11 + p12 + p13 + p21 + p22 + p23 + p31 + p32 + p33
            det_out[k] = det
            rho_out[k] = rho

    return tau_arr, paths_arr, det_arr, rho_arr
