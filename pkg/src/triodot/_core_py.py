"""Pure-numpy transport kernel; same contract as the compiled module.

Evaluates, for every energy on a grid: the lead surface Green function, the
summed rank-1 self-energies, the inverse retarded Green matrix of the
symmetric 3x3 central block, its determinant and adjugate, and from those the
total transmission amplitude and the per-path amplitude matrix

    tau[j, l] = 2 * rho0 * vL[j] * Gr[j, l] * vR[l].

Kept free of Python-level loops so the fallback stays usable for large grids.
"""

from __future__ import annotations

import numpy as np

COMPILED = False


def transport_grid(h11, h22, h33, h12, h23, h13, vl, vr, t0, omegas):
    """Vectorised transport evaluation over an in-band energy grid.

    Parameters are the six independent entries of the complex-symmetric
    central Hamiltonian, the two real coupling 3-vectors, the lead hopping
    and the energy grid.  Returns ``(tau, paths, det, rho0)`` where ``tau``
    has shape (n,), ``paths`` (n, 3, 3), ``det`` (n,) and ``rho0`` (n,).
    The caller is responsible for keeping the grid strictly inside the band.
    """
    w = np.asarray(omegas, dtype=float)
    vl1, vl2, vl3 = (float(vl[0]), float(vl[1]), float(vl[2]))
    vr1, vr2, vr3 = (float(vr[0]), float(vr[1]), float(vr[2]))

    tt2 = 2.0 * t0 * t0
    rho = np.sqrt(4.0 * t0 * t0 - w * w) / tt2
    g0 = w / tt2 - 1j * rho

    s11 = g0 * (vl1 * vl1 + vr1 * vr1)
    s22 = g0 * (vl2 * vl2 + vr2 * vr2)
    s33 = g0 * (vl3 * vl3 + vr3 * vr3)
    s12 = g0 * (vl1 * vl2 + vr1 * vr2)
    s23 = g0 * (vl2 * vl3 + vr2 * vr3)
    s13 = g0 * (vl1 * vl3 + vr1 * vr3)

    a11 = w - h11 - s11
    a22 = w - h22 - s22
    a33 = w - h33 - s33
    a12 = -h12 - s12
    a23 = -h23 - s23
    a13 = -h13 - s13

    # Cofactors of the symmetric matrix; det by expansion along the first row.
    c11 = a22 * a33 - a23 * a23
    c22 = a11 * a33 - a13 * a13
    c33 = a11 * a22 - a12 * a12
    c12 = a13 * a23 - a12 * a33
    c13 = a12 * a23 - a13 * a22
    c23 = a12 * a13 - a11 * a23
    det = a11 * c11 + a12 * c12 + a13 * c13

    pre = 2.0 * rho / det
    n = w.shape[0]
    paths = np.empty((n, 3, 3), dtype=complex)
    paths[:, 0, 0] = pre * (vl1 * vr1) * c11
    paths[:, 0, 1] = pre * (vl1 * vr2) * c12
    paths[:, 0, 2] = pre * (vl1 * vr3) * c13
    paths[:, 1, 0] = pre * (vl2 * vr1) * c12
    paths[:, 1, 1] = pre * (vl2 * vr2) * c22
    paths[:, 1, 2] = pre * (vl2 * vr3) * c23
    paths[:, 2, 0] = pre * (vl3 * vr1) * c13
    paths[:, 2, 1] = pre * (vl3 * vr2) * c23
    paths[:, 2, 2] = pre * (vl3 * vr3) * c33

    tau = (
        paths[:, 0, 0]
        + paths[:, 0, 1]
        + paths[:, 0, 2]
        + paths[:, 1, 0]
        + paths[:, 1, 1]
        + paths[:, 1, 2]
        + paths[:, 2, 0]
        + paths[:, 2, 1]
        + paths[:, 2, 2]
    )
    return tau, paths, det, rho
