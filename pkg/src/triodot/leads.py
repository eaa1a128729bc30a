"""Semi-infinite tight-binding lead: surface Green function, self-energy, broadening.

Each lead is a uniform one-dimensional chain with hopping ``t0`` and zero
on-site energy, so its propagating band is the open interval ``(-2*t0, 2*t0)``.
The end-site (surface) Green function has the closed form

    g0(omega) = omega / (2*t0**2) - 1j*rho0(omega),
    rho0(omega) = sqrt(4*t0**2 - omega**2) / (2*t0**2),

valid strictly inside the band.  Band edges are excluded: the square root
vanishes there and the wide-band quantities lose meaning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "OutOfBand",
    "SurfaceGreen",
    "surface_green",
    "self_energy",
    "broadening",
    "gamma_scalar",
]


class OutOfBand(ValueError):
    """Energy lies outside the open lead band (-2*t0, 2*t0)."""

    def __init__(self, omega, t0):
        super().__init__(
            f"omega={omega!r} is outside the open lead band (-{2 * t0}, {2 * t0})"
        )
        self.omega = omega
        self.t0 = t0


@dataclass(frozen=True)
class SurfaceGreen:
    """Surface Green function of one lead at a single in-band energy.

    Attributes
    ----------
    omega : float
        Energy at which the lead was evaluated.
    t0 : float
        Lead hopping.
    g0 : complex
        End-site retarded Green function.
    rho0 : float
        Local density factor ``sqrt(4*t0**2 - omega**2) / (2*t0**2)``;
        equal to ``-Im(g0)`` and strictly positive in band.
    """

    omega: float
    t0: float
    g0: complex
    rho0: float


def surface_green(omega: float, t0: float) -> SurfaceGreen:
    """Evaluate the analytic surface Green function of a semi-infinite chain.

    Raises
    ------
    OutOfBand
        If ``|omega| >= 2*t0`` (band edges excluded).
    ValueError
        If ``t0`` is not positive.
    """
    t0 = float(t0)
    omega = float(omega)
    if t0 <= 0.0:
        raise ValueError(f"lead hopping t0 must be positive, got {t0}")
    if abs(omega) >= 2.0 * t0:
        raise OutOfBand(omega, t0)
    two_t0_sq = 2.0 * t0 * t0
    rho0 = math.sqrt(4.0 * t0 * t0 - omega * omega) / two_t0_sq
    g0 = omega / two_t0_sq - 1j * rho0
    return SurfaceGreen(omega=omega, t0=t0, g0=g0, rho0=rho0)


def self_energy(coupling, g: SurfaceGreen) -> np.ndarray:
    """Rank-1 self-energy of one lead contacted to all three dots.

    Sigma[j, l] = v_j * v_l * g0 for a real coupling 3-vector v.
    """
    v = np.asarray(coupling, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"coupling must be a 3-vector, got shape {v.shape}")
    return g.g0 * np.outer(v, v)


def broadening(sigma: np.ndarray) -> np.ndarray:
    """Broadening matrix Gamma = 1j * (Sigma - Sigma^dagger).

    For the rank-1 lead self-energy this equals ``2*rho0 * outer(v, v)``:
    real, symmetric, positive semidefinite, rank one.
    """
    s = np.asarray(sigma, dtype=complex)
    return 1j * (s - s.conj().T)


def gamma_scalar(v: float, rho0: float) -> float:
    """Scalar contact strength Gamma_n = v**2 * rho0 used by the closed forms."""
    return float(v) * float(v) * float(rho0)
