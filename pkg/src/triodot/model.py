"""Central triple-dot region and its lead attachment.

The scattering region is three quantum dots.  Dots 1 and 3 carry balanced
gain and loss through conjugate imaginary on-site potentials ``E0 -+ 1j*gamma``
while dot 2 stays real at ``E2``.  Dots 1-2 and 2-3 are coupled by a real
hopping ``tc``; a ring is closed by an additional real hopping ``t3`` between
dots 1 and 3 (``t3 = 0`` gives the open chain).  Both leads may contact all
three dots at once, with real coupling amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DotSystem",
    "LeadAttachment",
    "build_chain",
    "build_ring",
    "check_pt_symmetry",
]

# Site mirror about the central dot (1 <-> 3); the parity half of the
# combined parity-time check below.
_MIRROR = np.fliplr(np.eye(3))


def _real(name: str, value) -> float:
    if isinstance(value, complex):
        raise ValueError(f"{name} must be real, got {value!r}")
    return float(value)


@dataclass(frozen=True, eq=False)
class DotSystem:
    """Three-dot scattering region.

    ``Hc`` is the 3x3 central Hamiltonian.  When it is not supplied it is
    built from the scalar parameters as

        [[E0 - 1j*gamma, tc,  t3           ],
         [tc,            E2,  tc           ],
         [t3,            tc,  E0 + 1j*gamma]]

    A hand-built ``Hc`` is accepted (it must be complex symmetric, matching
    the real-hopping convention); in that case the scalar fields are kept as
    given and are not cross-checked against the matrix.  The numeric engine
    always consumes ``Hc``; the closed-form helpers consume the scalars.
    """

    E0: float
    gamma: float
    E2: float
    tc: float
    t3: float = 0.0
    Hc: np.ndarray = None

    def __post_init__(self):
        object.__setattr__(self, "E0", _real("E0", self.E0))
        object.__setattr__(self, "gamma", _real("gamma", self.gamma))
        object.__setattr__(self, "E2", _real("E2", self.E2))
        object.__setattr__(self, "tc", _real("tc", self.tc))
        object.__setattr__(self, "t3", _real("t3", self.t3))
        if self.Hc is None:
            hc = np.array(
                [
                    [self.E0 - 1j * self.gamma, self.tc, self.t3],
                    [self.tc, self.E2, self.tc],
                    [self.t3, self.tc, self.E0 + 1j * self.gamma],
                ],
                dtype=complex,
            )
        else:
            hc = np.array(self.Hc, dtype=complex)
            if hc.shape != (3, 3):
                raise ValueError(f"Hc must be 3x3, got shape {hc.shape}")
            if not np.array_equal(hc, hc.T):
                raise ValueError("Hc must be complex symmetric (real hoppings)")
        hc.setflags(write=False)
        object.__setattr__(self, "Hc", hc)

    @property
    def geometry(self) -> str:
        return "chain" if self.t3 == 0.0 else "ring"

    @property
    def delta(self) -> float:
        """Detuning of the central dot, E2 - E0."""
        return self.E2 - self.E0


@dataclass(frozen=True, eq=False)
class LeadAttachment:
    """Two leads with a common hopping ``t0`` and real coupling 3-vectors."""

    t0: float
    vL: np.ndarray
    vR: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t0", _real("t0", self.t0))
        if self.t0 <= 0.0:
            raise ValueError(f"lead hopping t0 must be positive, got {self.t0}")
        for name in ("vL", "vR"):
            raw = getattr(self, name)
            try:
                v = np.array(raw, dtype=float)
            except (TypeError, ValueError):
                raise ValueError(f"{name} must be a real 3-vector, got {raw!r}")
            if v.shape != (3,):
                raise ValueError(f"{name} must have 3 entries, got shape {v.shape}")
            v.setflags(write=False)
            object.__setattr__(self, name, v)

    @classmethod
    def symmetric(cls, t0: float, v1: float, v2: float) -> "LeadAttachment":
        """Both leads coupled as (v1, v2, v1): the mirror-symmetric pattern."""
        return cls(t0=t0, vL=(v1, v2, v1), vR=(v1, v2, v1))


def build_chain(E0: float, gamma: float, E2: float, tc: float) -> DotSystem:
    """Open three-dot chain with balanced gain/loss on the end dots.

    ``gamma`` must be non-negative; dot 1 takes the gain (-1j*gamma) and
    dot 3 the loss (+1j*gamma).
    """
    if _real("gamma", gamma) < 0.0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    return DotSystem(E0=E0, gamma=gamma, E2=E2, tc=tc, t3=0.0)


def build_ring(E0: float, gamma: float, E2: float, tc: float, t3: float) -> DotSystem:
    """Three-dot ring: chain plus a direct 1-3 hopping ``t3``."""
    if _real("gamma", gamma) < 0.0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    return DotSystem(E0=E0, gamma=gamma, E2=E2, tc=tc, t3=t3)


def check_pt_symmetry(sys: DotSystem, leads: LeadAttachment, tol: float = 1e-12) -> bool:
    """True when the dot-lead composite is invariant under combined parity-time.

    Parity mirrors the sites (1 <-> 3) and swaps the leads; time reversal
    conjugates.  The check is therefore P * conj(Hc) * P == Hc together with
    the mirrored left coupling equal to the right coupling.
    """
    mirrored = _MIRROR @ np.conj(sys.Hc) @ _MIRROR
    if not np.allclose(mirrored, sys.Hc, rtol=0.0, atol=tol):
        return False
    return bool(np.allclose(leads.vL[::-1], leads.vR, rtol=0.0, atol=tol))
