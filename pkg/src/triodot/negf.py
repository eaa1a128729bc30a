"""Retarded Green matrix of the dot block and the Landauer transmission.

The inverse retarded Green matrix is assembled directly as

    [Gr]^-1 = omega*I - Hc - Sigma_L - Sigma_R

with the rank-1 lead self-energies from :mod:`triodot.leads`.  Transmission
follows the trace formula

    T(omega) = Tr[ Gamma_L * Ga * Gamma_R * Gr ],   Ga = Gr^dagger,

and the normalised total amplitude is

    tau_t(omega) = 2 * rho0 * vL . Gr . vR,

which satisfies |tau_t|**2 == T identically for real couplings (both lead
broadenings are rank one, so the trace factorises).

Energies where det[Gr]^-1 vanishes are exact dot-lead decoupling points
(dark states).  ``green_retarded`` raises :class:`SingularPoint` there; the
scalar observables instead return the two-sided limit, averaging evaluations
at ``omega +- 1e-8``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import det_threshold
from .leads import broadening, self_energy, surface_green
from .model import DotSystem, LeadAttachment

__all__ = [
    "SingularPoint",
    "GreenResult",
    "assemble_inverse_green",
    "green_retarded",
    "transmission",
    "amplitude",
    "path_decomposition",
]

#: Base half-width of the two-sided limit taken at singular energies.
LIMIT_OFFSET = 1e-8


class SingularPoint(ArithmeticError):
    """det[Gr]^-1 vanished: a dark state decouples the dots from the leads."""

    def __init__(self, omega, det):
        super().__init__(
            f"inverse Green matrix is singular at omega={omega!r} (det={det!r})"
        )
        self.omega = omega
        self.det = det


@dataclass(frozen=True)
class GreenResult:
    """Retarded Green matrix with the lead matrices used to build it."""

    omega: float
    Gr: np.ndarray
    SigmaL: np.ndarray
    SigmaR: np.ndarray
    GammaL: np.ndarray
    GammaR: np.ndarray
    detGinv: complex
    rho0: float


def _parts(sys: DotSystem, leads: LeadAttachment, omega: float):
    g = surface_green(omega, leads.t0)
    sigma_l = self_energy(leads.vL, g)
    sigma_r = self_energy(leads.vR, g)
    ginv = omega * np.eye(3, dtype=complex) - sys.Hc - sigma_l - sigma_r
    return g, sigma_l, sigma_r, ginv


def assemble_inverse_green(
    sys: DotSystem, leads: LeadAttachment, omega: float
) -> np.ndarray:
    """[Gr]^-1 = omega*I - Hc - Sigma_L - Sigma_R at one in-band energy."""
    return _parts(sys, leads, omega)[3]


def green_retarded(sys: DotSystem, leads: LeadAttachment, omega: float) -> GreenResult:
    """Invert the assembled matrix; raise SingularPoint at dark-state energies."""
    g, sigma_l, sigma_r, ginv = _parts(sys, leads, omega)
    det = complex(np.linalg.det(ginv))
    if abs(det) < det_threshold(omega, np.linalg.norm(sys.Hc)):
        raise SingularPoint(omega, det)
    gr = np.linalg.inv(ginv)
    return GreenResult(
        omega=float(omega),
        Gr=gr,
        SigmaL=sigma_l,
        SigmaR=sigma_r,
        GammaL=broadening(sigma_l),
        GammaR=broadening(sigma_r),
        detGinv=det,
        rho0=g.rho0,
    )


def _det_ok(sys, leads, omega) -> bool:
    ginv = _parts(sys, leads, omega)[3]
    return abs(np.linalg.det(ginv)) >= det_threshold(omega, np.linalg.norm(sys.Hc))


def _limit_offsets(sys, leads, omega):
    """Two non-singular probe energies bracketing a singular one."""
    h = LIMIT_OFFSET
    for _ in range(6):
        lo, hi = omega - h, omega + h
        if _det_ok(sys, leads, lo) and _det_ok(sys, leads, hi):
            return lo, hi
        h *= 2.0
    raise SingularPoint(omega, 0.0)


def transmission(sys: DotSystem, leads: LeadAttachment, omega: float) -> float:
    """Landauer transmission by the trace formula.

    At a dark-state energy the value is the two-sided limit: the average of
    the transmissions evaluated ``LIMIT_OFFSET`` to either side.
    """
    try:
        r = green_retarded(sys, leads, omega)
    except SingularPoint:
        lo, hi = _limit_offsets(sys, leads, omega)
        return 0.5 * (transmission(sys, leads, lo) + transmission(sys, leads, hi))
    ga = r.Gr.conj().T
    t = np.trace(r.GammaL @ ga @ r.GammaR @ r.Gr)
    return float(t.real)


def amplitude(sys: DotSystem, leads: LeadAttachment, omega: float) -> complex:
    """Total transmission amplitude tau_t = 2*rho0 * vL . Gr . vR.

    Normalised so that |tau_t|**2 equals the trace-formula transmission.
    Singular energies are limit-averaged like :func:`transmission`.
    """
    try:
        r = green_retarded(sys, leads, omega)
    except SingularPoint:
        lo, hi = _limit_offsets(sys, leads, omega)
        return 0.5 * (amplitude(sys, leads, lo) + amplitude(sys, leads, hi))
    return complex(2.0 * r.rho0 * (leads.vL @ r.Gr @ leads.vR))


def path_decomposition(sys: DotSystem, leads: LeadAttachment, omega: float) -> np.ndarray:
    """Per-path amplitudes tau[j, l] = 2*rho0 * vL[j] * Gr[j, l] * vR[l].

    The nine entries sum exactly to the total amplitude.  Entry (j, l) is the
    partial wave entering the dots at site j from the left lead and leaving
    at site l to the right lead.
    """
    try:
        r = green_retarded(sys, leads, omega)
    except SingularPoint:
        lo, hi = _limit_offsets(sys, leads, omega)
        return 0.5 * (
            path_decomposition(sys, leads, lo) + path_decomposition(sys, leads, hi)
        )
    return 2.0 * r.rho0 * (leads.vL[:, None] * r.Gr * leads.vR[None, :])
