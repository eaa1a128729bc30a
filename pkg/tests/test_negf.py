"""Green matrix assembly, trace-formula transmission, amplitudes, paths.

The frozen reference numbers were hand-computed by cofactor expansion of the
3x3 inverse Green matrix at the band centre, where g0 = -1j and rho0 = 1.
"""

import numpy as np
import pytest

from triodot.leads import OutOfBand
from triodot.model import DotSystem, LeadAttachment, build_chain, build_ring
from triodot.negf import (
    SingularPoint,
    amplitude,
    assemble_inverse_green,
    green_retarded,
    path_decomposition,
    transmission,
)


def _center_only():
    # chain, only the middle dot contacted: v = (0, 0.5, 0)
    return build_chain(0.0, 0.3, 0.0, 0.5), LeadAttachment.symmetric(1.0, 0.0, 0.5)


def test_inverse_green_assembly_at_band_center():
    s, leads = _center_only()
    ginv = assemble_inverse_green(s, leads, 0.0)
    # omega*I - Hc - 2 * g0 * outer(v, v) with g0 = -1j
    expected = np.array(
        [
            [0.3j, -0.5, 0.0],
            [-0.5, 0.5j, -0.5],
            [0.0, -0.5, -0.3j],
        ]
    )
    assert np.allclose(ginv, expected, atol=1e-15)


def test_green_matrix_center_element():
    s, leads = _center_only()
    r = green_retarded(s, leads, 0.0)
    # det = 0.045j by cofactor expansion, C22 = 0.09, so G22 = 0.09/0.045j = -2j
    assert r.detGinv == pytest.approx(0.045j, abs=1e-15)
    assert r.Gr[1, 1] == pytest.approx(-2j, abs=1e-12)
    assert np.allclose(r.Gr @ assemble_inverse_green(s, leads, 0.0), np.eye(3), atol=1e-13)
    assert r.rho0 == 1.0


def test_green_result_lead_matrices():
    s, leads = _center_only()
    r = green_retarded(s, leads, 0.7)
    v = leads.vL
    assert np.allclose(r.GammaL, 2.0 * r.rho0 * np.outer(v, v), atol=1e-15)
    assert np.allclose(r.GammaL, r.GammaR, atol=1e-16)
    assert np.allclose(r.SigmaL, r.SigmaR, atol=1e-16)


def test_center_coupled_transmission_is_unity_on_resonance():
    # E2 = 0 aligned with the band centre: perfect transmission regardless
    # of the gain/loss strength
    for gamma in (0.1, 0.3, 0.5, 0.8):
        s = build_chain(0.0, gamma, 0.0, 0.5)
        leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
        assert transmission(s, leads, 0.0) == pytest.approx(1.0, abs=1e-12)
        assert amplitude(s, leads, 0.0) == pytest.approx(-1j, abs=1e-12)


def test_detuned_center_transmission_is_half():
    for gamma in (0.1, 0.5):
        s = build_chain(0.0, gamma, 0.5, 0.5)
        leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
        assert transmission(s, leads, 0.0) == pytest.approx(0.5, abs=1e-12)


def test_transmission_equals_amplitude_squared():
    # holds for arbitrary real couplings, not only the mirror pattern
    rng = np.random.default_rng(21)
    s = build_ring(0.1, 0.4, -0.2, 0.5, 0.3)
    leads = LeadAttachment(t0=1.0, vL=(0.6, 0.1, 0.2), vR=(0.3, 0.5, 0.1))
    for w in rng.uniform(-1.9, 1.9, 100):
        t = transmission(s, leads, w)
        a = amplitude(s, leads, w)
        assert t == pytest.approx(abs(a) ** 2, rel=1e-11, abs=1e-13)


def test_path_decomposition_sums_to_amplitude():
    rng = np.random.default_rng(22)
    s = build_ring(0.0, 0.3, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.4)
    for w in rng.uniform(-1.9, 1.9, 50):
        p = path_decomposition(s, leads, w)
        assert p.shape == (3, 3)
        assert p.sum() == pytest.approx(amplitude(s, leads, w), abs=1e-14)


def test_center_detached_leaves_four_paths():
    s = build_ring(0.0, 0.3, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.0)
    p = path_decomposition(s, leads, 0.37)
    nonzero = np.abs(p) > 1e-15
    assert nonzero.sum() == 4
    # only the end dots carry weight
    assert not nonzero[1].any() and not nonzero[:, 1].any()


def test_dark_state_raises_singular_point():
    # gamma = 0 with mirrored couplings: the antisymmetric end-dot state
    # decouples at omega = E0 (chain) and E0 - t3 (ring)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    with pytest.raises(SingularPoint):
        green_retarded(build_chain(0.0, 0.0, 0.0, 0.5), leads, 0.0)
    with pytest.raises(SingularPoint):
        green_retarded(build_ring(0.0, 0.0, 0.5, 0.5, 0.3), leads, -0.3)
    # gamma > 0 lifts the decoupling
    green_retarded(build_chain(0.0, 0.1, 0.0, 0.5), leads, 0.0)


def test_scalar_observables_take_limits_at_dark_states():
    s = build_chain(0.0, 0.0, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    # removable singularity: neighbouring values T(+-1e-4) ~ 0.8 + O(1e-4)
    t = transmission(s, leads, 0.0)
    assert t == pytest.approx(0.8, abs=1e-6)
    a = amplitude(s, leads, 0.0)
    assert a == pytest.approx(-0.4 - 0.8j, abs=1e-6)
    p = path_decomposition(s, leads, 0.0)
    # the Green matrix entries grow like 1/h before the dark-state overlap
    # cancels them, so roundoff is amplified here; only 1e-6 agreement holds
    assert p.sum() == pytest.approx(a, abs=1e-6)
    assert t == pytest.approx(abs(a) ** 2, abs=1e-6)


def test_out_of_band_propagates():
    s, leads = _center_only()
    with pytest.raises(OutOfBand):
        transmission(s, leads, 2.5)
    with pytest.raises(OutOfBand):
        green_retarded(s, leads, -2.0)
