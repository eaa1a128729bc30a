"""Backend selection: compiled kernel when importable, numpy fallback otherwise.

Set the environment variable ``TRIODOT_PURE=1`` to force the fallback even
when the extension is built (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

if os.environ.get("TRIODOT_PURE"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

#: Relative determinant threshold below which a grid point counts as singular.
DET_TOL = 1e-12


def backend_name() -> str:
    return "compiled" if _impl.COMPILED else "python"


def det_threshold(omega, hc_norm: float):
    """Singularity threshold |det| < 1e-12 * scale**3, scale = max(1, |omega|, ||Hc||)."""
    scale = np.maximum(1.0, np.maximum(np.abs(omega), hc_norm))
    return DET_TOL * scale**3


@dataclass(frozen=True)
class GridEval:
    """Raw kernel output over a grid plus the singularity mask."""

    omegas: np.ndarray
    tau: np.ndarray
    paths: np.ndarray
    det: np.ndarray
    rho0: np.ndarray
    T: np.ndarray
    singular: np.ndarray


def evaluate_grid(sys, leads, omegas) -> GridEval:
    """Run the selected kernel over ``omegas`` (assumed strictly in band)."""
    om = np.ascontiguousarray(omegas, dtype=float)
    hc = sys.Hc
    tau, paths, det, rho0 = _impl.transport_grid(
        complex(hc[0, 0]),
        complex(hc[1, 1]),
        complex(hc[2, 2]),
        complex(hc[0, 1]),
        complex(hc[1, 2]),
        complex(hc[0, 2]),
        leads.vL,
        leads.vR,
        leads.t0,
        om,
    )
    T = np.abs(tau) ** 2
    singular = np.abs(det) < det_threshold(om, np.linalg.norm(hc))
    return GridEval(
        omegas=om, tau=tau, paths=paths, det=det, rho0=rho0, T=T, singular=singular
    )
