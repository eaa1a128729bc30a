"""Closed-form amplitude and antiresonance catalogue for mirror-coupled leads.

Everything here assumes the mirror pattern ``vL = vR = (v1, v2, v1)`` and the
standard central Hamiltonian built from the scalar fields of
:class:`~triodot.model.DotSystem`.  Under those assumptions the total
amplitude collapses to a ratio of low-order polynomials in ``omega``: with
``w = omega - E0``, ``q = 2*g0(omega)`` and ``Gamma_n = v_n**2 * rho0``,

    numer = 2*Gamma_1*(omega - E2)*(w + t3)
          + Gamma_2*(w**2 + gamma**2 - t3**2)
          + 4*v1*v2*rho0*tc*(w + t3)

    det = (omega - E2 - q*v2**2) * ((w + t3)*(w - t3 - 2*q*v1**2) + gamma**2)
        - 2*(tc + q*v1*v2)**2 * (w + t3)

    tau(omega) = 2 * numer / det

The numerator is real for in-band energies, so the transmission zeros are the
real roots of a quadratic in ``w``.  Dividing by ``v1**2`` (when ``v1 != 0``)
and writing ``r = v2/v1``, ``x = r**2``, ``delta = E2 - E0``:

    (2 + x)*w**2 + 2*(t3 - delta + 2*r*tc)*w
        + x*(gamma**2 - t3**2) - 2*t3*(delta - 2*r*tc) = 0.

The chain is ``t3 = 0``.  Growing ``gamma`` shrinks the discriminant until
the two zeros merge and then leave the real axis; for ``v1 = v2`` and
``t3 = tc`` the discriminant is ``delta**2 - 3*gamma**2``, so the pair
survives exactly while ``gamma <= |delta|/sqrt(3)``.

One subtlety at ``gamma = 0``: the antisymmetric end-dot combination
``(1, 0, -1)/sqrt(2)`` decouples from both leads at ``w = -t3``, the
numerator always carries that root, and the determinant vanishes there too.
The simple pole cancels the numerator root, so no antiresonance appears at
the decoupling energy (a double numerator root loses one power and survives
as an ordinary sign-flipping zero).  :class:`ZeroCondition` records such
roots in ``cancelled``; the energies where the transmission actually
vanishes are ``effective_roots()``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .leads import gamma_scalar, surface_green
from .model import DotSystem, LeadAttachment

__all__ = [
    "AMPLITUDE_CALIBRATION",
    "ZeroCondition",
    "tau_chain",
    "tau_ring",
    "zeros_chain",
    "zeros_ring",
    "zeros_limit",
]

#: Overall amplitude normalisation; fixed once against the trace formula.
AMPLITUDE_CALIBRATION = 2.0


def _pattern(leads: LeadAttachment) -> tuple[float, float]:
    # closed forms hold only for the mirror pattern (v1, v2, v1) on both sides
    if not (
        np.array_equal(leads.vL, leads.vR) and leads.vL[0] == leads.vL[2]
    ):
        raise ValueError(
            "closed form requires vL == vR == (v1, v2, v1); "
            f"got vL={leads.vL!r}, vR={leads.vR!r}"
        )
    return float(leads.vL[0]), float(leads.vL[1])


def _tau(E0, gamma, E2, tc, t3, v1, v2, t0, omega) -> complex:
    g = surface_green(omega, t0)
    q = 2.0 * g.g0
    w = omega - E0
    wt = w + t3
    g1 = gamma_scalar(v1, g.rho0)
    g2 = gamma_scalar(v2, g.rho0)
    numer = (
        2.0 * g1 * (omega - E2) * wt
        + g2 * (w * w + gamma * gamma - t3 * t3)
        + 4.0 * v1 * v2 * g.rho0 * tc * wt
    )
    det = (omega - E2 - q * v2 * v2) * (
        wt * (w - t3 - 2.0 * q * v1 * v1) + gamma * gamma
    ) - 2.0 * (tc + q * v1 * v2) ** 2 * wt
    return AMPLITUDE_CALIBRATION * numer / det


def tau_chain(sys: DotSystem, leads: LeadAttachment, omega: float) -> complex:
    """Closed-form total amplitude of the open chain (``t3 = 0``).

    At a ``gamma = 0`` decoupling energy numerator and determinant vanish
    together and the division raises ``ZeroDivisionError``; the physical
    value there is the limit from neighbouring energies.
    """
    if sys.geometry != "chain":
        raise ValueError(f"tau_chain requires t3 = 0, got t3={sys.t3}")
    v1, v2 = _pattern(leads)
    return _tau(sys.E0, sys.gamma, sys.E2, sys.tc, 0.0, v1, v2, leads.t0, omega)


def tau_ring(sys: DotSystem, leads: LeadAttachment, omega: float) -> complex:
    """Closed-form total amplitude with the direct 1-3 hopping included.

    ``t3 = 0`` reproduces :func:`tau_chain`.
    """
    v1, v2 = _pattern(leads)
    return _tau(
        sys.E0, sys.gamma, sys.E2, sys.tc, sys.t3, v1, v2, leads.t0, omega
    )


@dataclass(frozen=True)
class ZeroCondition:
    """Real roots of the amplitude numerator and their fate.

    Attributes
    ----------
    x : float
        Squared coupling ratio ``(v2/v1)**2``; ``inf`` in the ``v1 = 0``
        limit and ``0`` in the ``v2 = 0`` limit.
    delta : float
        Central detuning ``E2 - E0``.
    discriminant : float
        Discriminant of the zero quadratic; negative means the pair has
        moved off the real axis and the antiresonances are gone.
    roots : tuple of float
        Distinct real numerator roots, ascending.
    degenerate : bool
        The numerator root is a double root (the two zeros have merged).
    cancelled : tuple of float
        Roots that coincide with the ``gamma = 0`` decoupling pole.  A
        cancelled simple root is not a transmission zero at all; a cancelled
        double root keeps one power and flips sign like a simple zero.
    """

    x: float
    delta: float
    discriminant: float
    roots: tuple
    degenerate: bool
    cancelled: tuple

    def effective_roots(self) -> tuple:
        """Energies where the transmission actually vanishes."""
        if not self.cancelled:
            return self.roots
        if self.degenerate:
            # double root minus the cancelled power: a simple zero survives
            return self.roots
        return tuple(w for w in self.roots if w not in self.cancelled)

    @property
    def effective_degenerate(self) -> bool:
        """True when the surviving zero is an even-order touch (no sign flip)."""
        return self.degenerate and not self.cancelled


def _zero_condition(v1, v2, E0, E2, tc, t3, gamma) -> ZeroCondition:
    r = v2 / v1
    x = r * r
    delta = E2 - E0
    a = 2.0 + x
    b = 2.0 * (t3 - delta + 2.0 * r * tc)
    c = x * (gamma * gamma - t3 * t3) - 2.0 * t3 * (delta - 2.0 * r * tc)
    disc = b * b - 4.0 * a * c
    scale = max(1.0, abs(delta), abs(gamma), abs(tc), abs(t3), abs(r * tc))
    tol = 1e-12 * scale * scale

    if gamma == 0.0:
        # exact factorisation: w = -t3 is always a root and is pole-cancelled
        w_dark = E0 - t3
        w_other = E0 + (x * t3 + 2.0 * (delta - 2.0 * r * tc)) / a
        if abs(w_other - w_dark) <= 1e-12 * scale:
            return ZeroCondition(
                x=x,
                delta=delta,
                discriminant=disc,
                roots=(w_dark,),
                degenerate=True,
                cancelled=(w_dark,),
            )
        return ZeroCondition(
            x=x,
            delta=delta,
            discriminant=disc,
            roots=tuple(sorted((w_dark, w_other))),
            degenerate=False,
            cancelled=(w_dark,),
        )

    if disc < -tol:
        return ZeroCondition(
            x=x, delta=delta, discriminant=disc, roots=(), degenerate=False,
            cancelled=(),
        )
    if disc <= tol:
        w = E0 - b / (2.0 * a)
        return ZeroCondition(
            x=x, delta=delta, discriminant=disc, roots=(w,), degenerate=True,
            cancelled=(),
        )
    # pair the large-magnitude root with b to avoid cancellation
    sq = math.sqrt(disc)
    qq = -0.5 * (b + math.copysign(sq, b))
    roots = tuple(sorted((E0 + qq / a, E0 + c / qq)))
    return ZeroCondition(
        x=x, delta=delta, discriminant=disc, roots=roots, degenerate=False,
        cancelled=(),
    )


def zeros_chain(v1, v2, *, E0=0.0, E2=0.0, tc=0.5, gamma=0.0) -> ZeroCondition:
    """Antiresonance energies of the chain for couplings (v1, v2, v1).

    Requires ``v1 != 0`` (the quadratic is written in ``r = v2/v1``); the
    one-sided limits live in :func:`zeros_limit`.
    """
    if v1 == 0.0:
        raise ValueError("v1 = 0 has no finite coupling ratio; use zeros_limit")
    return _zero_condition(v1, v2, E0, E2, tc, 0.0, gamma)


def zeros_ring(v1, v2, *, E0=0.0, E2=0.0, tc=0.5, t3=0.0, gamma=0.0) -> ZeroCondition:
    """Antiresonance energies of the ring for couplings (v1, v2, v1)."""
    if v1 == 0.0:
        raise ValueError("v1 = 0 has no finite coupling ratio; use zeros_limit")
    return _zero_condition(v1, v2, E0, E2, tc, t3, gamma)


def zeros_limit(geometry, which, *, E0=0.0, E2=0.0, gamma=0.0, t3=0.0) -> ZeroCondition:
    """Antiresonance catalogue when one coupling amplitude is exactly zero.

    ``which`` names the vanishing amplitude: ``"v1"`` detaches the end dots
    (the centre carries all transport, zeros at ``w**2 = t3**2 - gamma**2``),
    ``"v2"`` detaches the centre (zeros pinned at ``E2`` and ``E0 - t3``,
    independent of gamma).  The surviving amplitude only scales the
    transmission, so it does not enter.
    """
    if geometry not in ("chain", "ring"):
        raise ValueError(f"geometry must be 'chain' or 'ring', got {geometry!r}")
    if geometry == "chain":
        if t3 != 0.0:
            raise ValueError(f"chain geometry requires t3 = 0, got t3={t3}")
        t3 = 0.0
    delta = E2 - E0

    if which == "v1":
        disc = t3 * t3 - gamma * gamma
        scale = max(1.0, abs(t3), abs(gamma))
        tol = 1e-12 * scale * scale
        dark = E0 - t3
        if gamma == 0.0:
            if abs(t3) <= 1e-12 * scale:
                # double root exactly on the decoupling point
                return ZeroCondition(
                    x=math.inf, delta=delta, discriminant=disc,
                    roots=(dark,), degenerate=True, cancelled=(dark,),
                )
            return ZeroCondition(
                x=math.inf, delta=delta, discriminant=disc,
                roots=tuple(sorted((dark, E0 + t3))), degenerate=False,
                cancelled=(dark,),
            )
        if disc < -tol:
            roots, degenerate = (), False
        elif disc <= tol:
            roots, degenerate = (E0,), True
        else:
            half = math.sqrt(disc)
            roots, degenerate = (E0 - half, E0 + half), False
        return ZeroCondition(
            x=math.inf, delta=delta, discriminant=disc, roots=roots,
            degenerate=degenerate, cancelled=(),
        )

    if which == "v2":
        disc = (delta + t3) ** 2
        scale = max(1.0, abs(delta), abs(t3))
        dark = E0 - t3
        degenerate = abs(E2 - dark) <= 1e-12 * scale
        if degenerate:
            roots = (dark,)
        else:
            roots = tuple(sorted((dark, E2)))
        cancelled = (dark,) if gamma == 0.0 else ()
        return ZeroCondition(
            x=0.0, delta=delta, discriminant=disc, roots=roots,
            degenerate=degenerate, cancelled=cancelled,
        )

    raise ValueError(f"which must be 'v1' or 'v2', got {which!r}")
