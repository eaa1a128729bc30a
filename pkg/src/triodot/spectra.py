"""Transmission spectra on energy grids, antiresonance location, phase jumps.

``sweep`` runs the grid kernel and patches the rare singular samples (exact
``gamma = 0`` decoupling energies) with two-sided limits, so a spectrum is
always finite.  ``find_zeros`` refines every local transmission minimum of a
spectrum to machine precision and cross-checks the result against the
closed-form catalogue when one applies.  ``detect_phase_jumps`` scans the
transmission phase for the pi slips that tag simple antiresonances, using
only data already present in the spectrum.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from ._backend import evaluate_grid
from .closedform import ZeroCondition, zeros_chain, zeros_limit, zeros_ring
from .leads import OutOfBand
from .model import DotSystem, LeadAttachment
from .negf import amplitude, path_decomposition, transmission

__all__ = [
    "Spectrum",
    "NumericZero",
    "ZeroReport",
    "sweep",
    "find_zeros",
    "detect_phase_jumps",
]

#: Refined minima below this transmission count as genuine zeros.
ZERO_TOL = 1e-12

#: Golden-section window width at which zero refinement stops.
REFINE_XTOL = 1e-10

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Spectrum:
    """Sweep result over a uniform energy grid.

    ``tau_paths[k, j, l]`` is the partial amplitude through entry dot j and
    exit dot l at ``omegas[k]``; the nine entries sum to ``tau[k]``.
    ``singular[k]`` marks samples that sat exactly on a decoupling energy
    and were replaced by their two-sided limits.
    """

    omegas: np.ndarray
    T: np.ndarray
    tau: np.ndarray
    tau_paths: np.ndarray
    phase_unwrapped: np.ndarray
    singular: np.ndarray

    @property
    def spacing(self) -> float:
        return float(self.omegas[-1] - self.omegas[0]) / (len(self.omegas) - 1)


def sweep(
    sys: DotSystem,
    leads: LeadAttachment,
    omega_min: float = -2.0,
    omega_max: float = 2.0,
    n_points: int = 2001,
) -> Spectrum:
    """Transmission, amplitude and path amplitudes on a uniform grid.

    The window must lie inside the lead band.  Endpoints given exactly at the
    band edges ``+-2*t0`` are pulled one float inward, so the conventional
    full-band request ``[-2*t0, 2*t0]`` works; anything strictly outside
    raises :class:`~triodot.leads.OutOfBand`.
    """
    n_points = int(n_points)
    if n_points < 2:
        raise ValueError(f"n_points must be at least 2, got {n_points}")
    omega_min = float(omega_min)
    omega_max = float(omega_max)
    if not omega_min < omega_max:
        raise ValueError(
            f"need omega_min < omega_max, got [{omega_min}, {omega_max}]"
        )
    edge = 2.0 * leads.t0
    if omega_min == -edge:
        omega_min = np.nextafter(-edge, 0.0)
    if omega_max == edge:
        omega_max = np.nextafter(edge, 0.0)
    if omega_min <= -edge or omega_min >= edge:
        raise OutOfBand(omega_min, leads.t0)
    if omega_max >= edge or omega_max <= -edge:
        raise OutOfBand(omega_max, leads.t0)

    omegas = np.linspace(omega_min, omega_max, n_points)
    g = evaluate_grid(sys, leads, omegas)
    T = g.T.copy()
    tau = g.tau.copy()
    paths = g.paths.copy()
    for i in np.flatnonzero(g.singular):
        w = float(omegas[i])
        T[i] = transmission(sys, leads, w)
        tau[i] = amplitude(sys, leads, w)
        paths[i] = path_decomposition(sys, leads, w)
    phase = np.unwrap(np.angle(tau))
    for a in (omegas, T, tau, paths, phase):
        a.setflags(write=False)
    sing = g.singular.copy()
    sing.setflags(write=False)
    return Spectrum(
        omegas=omegas, T=T, tau=tau, tau_paths=paths,
        phase_unwrapped=phase, singular=sing,
    )


NumericZero = namedtuple("NumericZero", "omega T_at_min simple")


@dataclass(frozen=True)
class ZeroReport:
    """Numerically refined zeros, the analytic catalogue, and their pairing.

    ``analytic`` is None when no closed form applies (asymmetric lead
    pattern, hand-built Hamiltonian, or fully decoupled leads).
    ``matches`` pairs refined and analytic energies that agree to within
    two grid spacings.
    """

    numeric: tuple
    analytic: ZeroCondition | None
    matches: tuple


def _golden_min(f, a, b, xtol=REFINE_XTOL):
    """Golden-section minimum of f on [a, b]; returns (x, f(x))."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    if fc < fd:
        return c, fc
    return d, fd


def _analytic_condition(sys: DotSystem, leads: LeadAttachment):
    """Closed-form zero catalogue for this system, or None when inapplicable."""
    standard = DotSystem(E0=sys.E0, gamma=sys.gamma, E2=sys.E2, tc=sys.tc, t3=sys.t3)
    if not np.array_equal(sys.Hc, standard.Hc):
        return None
    if not (np.array_equal(leads.vL, leads.vR) and leads.vL[0] == leads.vL[2]):
        return None
    v1, v2 = float(leads.vL[0]), float(leads.vL[1])
    if v1 == 0.0 and v2 == 0.0:
        return None
    kw = dict(E0=sys.E0, E2=sys.E2, gamma=sys.gamma)
    if v1 == 0.0:
        return zeros_limit(sys.geometry, "v1", t3=sys.t3, **kw)
    if sys.geometry == "chain":
        return zeros_chain(v1, v2, tc=sys.tc, **kw)
    return zeros_ring(v1, v2, tc=sys.tc, t3=sys.t3, **kw)


def find_zeros(spectrum: Spectrum, sys: DotSystem, leads: LeadAttachment) -> ZeroReport:
    """Locate the antiresonances of a swept system.

    Every strict interior minimum of the gridded transmission is refined by
    golden-section search on the exact transmission; minima that bottom out
    below ``ZERO_TOL`` are zeros.  Each zero is classified as simple (the
    amplitude flips sign, carrying a pi phase jump) or an even-order touch,
    by the sign of ``Re[tau(w-h) * conj(tau(w+h))]`` one grid step out.
    """
    analytic = _analytic_condition(sys, leads)
    T = spectrum.T
    om = spectrum.omegas
    if not np.any(T > ZERO_TOL):
        return ZeroReport(numeric=(), analytic=analytic, matches=())

    interior = (T[1:-1] < T[:-2]) & (T[1:-1] < T[2:])
    h = spectrum.spacing
    band = 2.0 * leads.t0

    found = []
    for i in np.flatnonzero(interior) + 1:
        f = lambda w: transmission(sys, leads, w)
        w0, t0min = _golden_min(f, float(om[i - 1]), float(om[i + 1]))
        if T[i] < t0min:
            w0, t0min = float(om[i]), float(T[i])
        if t0min >= ZERO_TOL:
            continue
        step = min(h, 0.5 * (band - abs(w0)))
        prod = amplitude(sys, leads, w0 - step) * np.conj(
            amplitude(sys, leads, w0 + step)
        )
        found.append(NumericZero(omega=w0, T_at_min=t0min, simple=prod.real < 0.0))

    # collapse duplicates from neighbouring grid minima refining to one zero
    found.sort(key=lambda z: z.omega)
    numeric = []
    for z in found:
        if numeric and abs(z.omega - numeric[-1].omega) <= h:
            if z.T_at_min < numeric[-1].T_at_min:
                numeric[-1] = z
            continue
        numeric.append(z)

    matches = []
    if analytic is not None:
        remaining = list(analytic.effective_roots())
        for z in numeric:
            if not remaining:
                break
            best = min(remaining, key=lambda r: abs(r - z.omega))
            if abs(best - z.omega) <= 2.0 * h:
                matches.append((z.omega, best))
                remaining.remove(best)
    return ZeroReport(numeric=tuple(numeric), analytic=analytic, matches=tuple(matches))


def _wrap(angle: float) -> float:
    return float((angle + math.pi) % (2.0 * math.pi) - math.pi)


def detect_phase_jumps(spectrum: Spectrum, jump_tol: float = 0.35,
                       mask_floor: float = 1e-24) -> list:
    """Pi slips of the transmission phase, from grid data alone.

    Samples with transmission below ``mask_floor`` carry no usable phase, and
    singular samples hold patched limits whose phase is an artifact whenever
    the amplitude limit is zero; both are skipped.  A phase step of at least
    pi/2 between neighbouring usable samples is a candidate; the smooth
    background rate estimated from the flanking steps is removed, and the
    candidate counts as a jump when the corrected step is within ``jump_tol``
    of +-pi.  The default tolerance leaves room for the strongly curved
    background near a zero that sits next to a resonance, where the flanking
    steps underestimate the in-window drift by up to about 0.27 rad.
    Returns a list of ``(omega, signed_jump)`` pairs, where omega is the
    grid point of deepest transmission inside the jump window.

    Even-order antiresonances (merged zero pairs) produce no sign flip and
    are correctly left out.
    """
    T = spectrum.T
    om = spectrum.omegas
    theta = np.angle(spectrum.tau)
    valid = np.flatnonzero((T >= mask_floor) & ~spectrum.singular)
    if len(valid) < 2:
        return []

    steps = []
    for k in range(len(valid) - 1):
        i, j = int(valid[k]), int(valid[k + 1])
        d = _wrap(theta[j] - theta[i])
        steps.append((i, j, d))

    jumps = []
    half_pi = 0.5 * math.pi
    for k, (i, j, d) in enumerate(steps):
        if abs(d) < half_pi:
            continue
        rates = []
        if k > 0:
            pi_, pj, pd = steps[k - 1]
            if abs(pd) < half_pi:
                rates.append(pd / (om[pj] - om[pi_]))
        if k + 1 < len(steps):
            ni, nj, nd = steps[k + 1]
            if abs(nd) < half_pi:
                rates.append(nd / (om[nj] - om[ni]))
        rate = sum(rates) / len(rates) if rates else 0.0
        corrected = _wrap(d - rate * (om[j] - om[i]))
        if abs(abs(corrected) - math.pi) > jump_tol:
            continue
        lo = max(i - 1, 0)
        hi = min(j + 1, len(om) - 1)
        loc = float(om[lo + int(np.argmin(T[lo : hi + 1]))])
        jumps.append((loc, corrected))

    # merge windows that landed on the same antiresonance
    merged = []
    two_h = 2.0 * spectrum.spacing
    for loc, size in jumps:
        if merged and abs(loc - merged[-1][0]) <= two_h:
            continue
        merged.append((loc, size))
    return merged
