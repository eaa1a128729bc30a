"""Landauer transport through a gain/loss-balanced triple quantum dot.

Three dots between two semi-infinite tight-binding leads: the end dots carry
conjugate imaginary on-site energies ``E0 -+ i*gamma`` (balanced gain and
loss, a parity-time symmetric arrangement), the centre dot sits at ``E2``,
and an optional direct end-to-end hopping ``t3`` closes the chain into a
ring.  The package computes the exact transmission via lead self-energies
and a 3x3 Green matrix, cross-checks it against closed-form amplitudes,
locates antiresonances (both numerically and from the zero quadratic), and
tracks the pi phase slips that accompany simple transmission zeros.

The grid kernel has a compiled extension and a pure numpy fallback chosen at
import; ``backend_name()`` reports which one is active.
"""

from ._backend import backend_name
from .closedform import (
    AMPLITUDE_CALIBRATION,
    ZeroCondition,
    tau_chain,
    tau_ring,
    zeros_chain,
    zeros_limit,
    zeros_ring,
)
from .leads import (
    OutOfBand,
    SurfaceGreen,
    broadening,
    gamma_scalar,
    self_energy,
    surface_green,
)
from .model import (
    DotSystem,
    LeadAttachment,
    build_chain,
    build_ring,
    check_pt_symmetry,
)
from .negf import (
    GreenResult,
    SingularPoint,
    amplitude,
    assemble_inverse_green,
    green_retarded,
    path_decomposition,
    transmission,
)
from .spectra import (
    NumericZero,
    Spectrum,
    ZeroReport,
    detect_phase_jumps,
    find_zeros,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # model
    "DotSystem",
    "LeadAttachment",
    "build_chain",
    "build_ring",
    "check_pt_symmetry",
    # leads
    "OutOfBand",
    "SurfaceGreen",
    "surface_green",
    "self_energy",
    "broadening",
    "gamma_scalar",
    # green matrix
    "SingularPoint",
    "GreenResult",
    "assemble_inverse_green",
    "green_retarded",
    "transmission",
    "amplitude",
    "path_decomposition",
    # closed forms
    "AMPLITUDE_CALIBRATION",
    "ZeroCondition",
    "tau_chain",
    "tau_ring",
    "zeros_chain",
    "zeros_ring",
    "zeros_limit",
    # spectra
    "Spectrum",
    "NumericZero",
    "ZeroReport",
    "sweep",
    "find_zeros",
    "detect_phase_jumps",
]
