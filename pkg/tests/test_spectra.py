"""Sweeps, numeric antiresonance location, and phase-jump detection."""

import numpy as np
import pytest

from triodot.leads import OutOfBand
from triodot.model import DotSystem, LeadAttachment, build_chain, build_ring
from triodot.spectra import detect_phase_jumps, find_zeros, sweep


def _fig5b(gamma):
    # end-coupled ring, t3 = tc: zeros pinned at E0 - t3 and E2
    s = build_ring(0.0, gamma, 0.5, 0.5, 0.5)
    return s, LeadAttachment.symmetric(1.0, 0.5, 0.0)


def test_sweep_grid_and_arrays():
    s, leads = _fig5b(0.3)
    sp = sweep(s, leads, -1.5, 1.5, 301)
    assert np.array_equal(sp.omegas, np.linspace(-1.5, 1.5, 301))
    assert sp.spacing == pytest.approx(0.01)
    assert sp.T.shape == sp.omegas.shape
    assert sp.tau_paths.shape == (301, 3, 3)
    assert not sp.singular.any()
    assert np.allclose(sp.T, np.abs(sp.tau) ** 2, atol=1e-12)
    # unwrapped phase never steps by more than pi between samples
    assert np.all(np.abs(np.diff(sp.phase_unwrapped)) < np.pi)
    for arr in (sp.omegas, sp.T, sp.tau, sp.tau_paths, sp.phase_unwrapped, sp.singular):
        with pytest.raises(ValueError):
            arr[0] = 0


def test_sweep_band_edge_handling():
    s, leads = _fig5b(0.3)
    # exact band edges are nudged one float inward rather than rejected
    sp = sweep(s, leads, -2.0, 2.0, 51)
    assert np.isfinite(sp.T).all()
    assert sp.omegas[0] > -2.0 and sp.omegas[-1] < 2.0
    with pytest.raises(OutOfBand):
        sweep(s, leads, -2.1, 1.0, 51)
    with pytest.raises(ValueError):
        sweep(s, leads, -1.0, 1.0, 1)
    with pytest.raises(ValueError):
        sweep(s, leads, 1.0, -1.0, 51)


def test_sweep_patches_dark_state_sample():
    # Hermitian symmetric chain: grid point at omega = 0 lands exactly on the
    # decoupled-state pole and is refilled with the two-sided limit
    s = build_chain(0.0, 0.0, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    sp = sweep(s, leads, -2.0, 2.0, 2001)
    i = 1000
    # the edge clamp nudges the grid, so the sample is within one ulp of 0
    assert abs(sp.omegas[i]) < 1e-15
    assert sp.singular[i]
    assert sp.singular.sum() == 1
    assert sp.T[i] == pytest.approx(0.8, abs=1e-6)
    assert sp.tau[i] == pytest.approx(-0.4 - 0.8j, abs=1e-6)


def test_sweep_path_sum_identity():
    s = build_ring(0.0, 0.3, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.4)
    sp = sweep(s, leads, -1.9, 1.9, 401)
    total = sp.tau_paths.sum(axis=(1, 2))
    assert np.allclose(total, sp.tau, atol=1e-12)


def test_find_zeros_pinned_ring_pair():
    s, leads = _fig5b(0.4)
    report = find_zeros(sweep(s, leads), s, leads)
    assert [z.omega for z in report.numeric] == pytest.approx([-0.5, 0.5], abs=1e-9)
    assert all(z.simple for z in report.numeric)
    assert all(z.T_at_min < 1e-12 for z in report.numeric)
    assert report.analytic is not None
    assert len(report.matches) == 2
    for numeric_w, analytic_w in report.matches:
        assert numeric_w == pytest.approx(analytic_w, abs=1e-9)
    assert [m[1] for m in report.matches] == pytest.approx([-0.5, 0.5], abs=1e-15)


def test_find_zeros_none_when_pair_merges_away():
    # equal couplings, gamma above delta/sqrt(3): the quadratic has no real roots
    s = build_ring(0.0, 0.3, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    assert report.numeric == ()
    assert report.analytic is not None
    assert report.analytic.roots == ()


def test_find_zeros_degenerate_double():
    # centre-coupled ring at gamma = t3: the zero pair merges at E0; the
    # double zero keeps T >= 0 on both sides, so no sign flip
    s = build_ring(0.0, 0.5, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    assert len(report.numeric) == 1
    z = report.numeric[0]
    assert z.omega == pytest.approx(0.0, abs=1e-8)
    assert not z.simple
    assert report.analytic.effective_degenerate


def test_find_zeros_survived_dark_cancellation():
    # Hermitian symmetric chain: the quadratic root at 0 is eaten by the
    # dark pole, only -2/3 remains and it is simple
    s = build_chain(0.0, 0.0, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    assert [z.omega for z in report.numeric] == pytest.approx([-2.0 / 3.0], abs=1e-9)
    assert report.numeric[0].simple
    assert len(report.matches) == 1
    assert report.matches[0][1] == pytest.approx(-2.0 / 3.0, abs=1e-12)


def test_find_zeros_effective_simple_from_double_at_dark():
    # centre-coupled Hermitian chain: double zero at E0 sits on the dark pole,
    # one power cancels and a simple zero survives
    s = build_chain(0.0, 0.0, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    assert len(report.numeric) == 1
    assert report.numeric[0].omega == pytest.approx(0.0, abs=1e-9)
    assert report.numeric[0].simple


def test_find_zeros_narrow_pair_near_resonance():
    # gamma just above zero splits the dark point into two nearby zeros; both
    # must be resolved even though one hides beside a transmission peak
    s = build_chain(0.0, 0.1, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    expected = sorted(np.roots([3.0, 2.0, 0.01]).real)
    assert [z.omega for z in report.numeric] == pytest.approx(expected, abs=1e-8)
    assert all(z.simple for z in report.numeric)


def test_find_zeros_no_analytic_for_general_pattern():
    s = build_chain(0.0, 0.3, 0.0, 0.5)
    leads = LeadAttachment(t0=1.0, vL=(0.5, 0.2, 0.1), vR=(0.1, 0.2, 0.5))
    report = find_zeros(sweep(s, leads), s, leads)
    assert report.analytic is None


def test_find_zeros_no_analytic_for_hand_built_matrix():
    # matrix disagrees with the scalar fields: closed form must opt out
    hc = np.array([[0.0, 0.7, 0.0], [0.7, 0.5, 0.7], [0.0, 0.7, 0.0]], complex)
    s = DotSystem(E0=0.0, gamma=0.0, E2=0.5, tc=0.5, Hc=hc)
    leads = LeadAttachment.symmetric(1.0, 0.5, 0.5)
    report = find_zeros(sweep(s, leads), s, leads)
    assert report.analytic is None


def test_phase_jumps_at_simple_zeros():
    s, leads = _fig5b(0.3)
    jumps = detect_phase_jumps(sweep(s, leads))
    assert [j[0] for j in jumps] == pytest.approx([-0.5, 0.5], abs=2e-3)
    assert all(abs(abs(j[1]) - np.pi) < 0.35 for j in jumps)


def test_no_phase_jump_at_double_zero():
    s = build_ring(0.0, 0.5, 0.5, 0.5, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
    assert detect_phase_jumps(sweep(s, leads)) == []


def test_phase_jump_at_patched_dark_sample():
    # the singular grid sample is excluded from the step scan, so the flip is
    # picked up across its pristine neighbours
    s = build_chain(0.0, 0.0, 0.0, 0.5)
    leads = LeadAttachment.symmetric(1.0, 0.0, 0.5)
    jumps = detect_phase_jumps(sweep(s, leads))
    assert len(jumps) == 1
    assert jumps[0][0] == pytest.approx(0.0, abs=2e-3)


def test_jumps_pair_with_simple_zeros():
    cases = [
        (build_chain(0.0, 0.1, 0.0, 0.5), LeadAttachment.symmetric(1.0, 0.5, 0.5)),
        (build_ring(0.0, 0.1, 0.5, 0.5, 0.8), LeadAttachment.symmetric(1.0, 0.0, 0.5)),
        (build_ring(0.0, 1.2, 0.5, 0.5, 0.8), LeadAttachment.symmetric(1.0, 0.5, 0.0)),
    ]
    for s, leads in cases:
        sp = sweep(s, leads)
        simple = [z.omega for z in find_zeros(sp, s, leads).numeric if z.simple]
        jumps = detect_phase_jumps(sp)
        assert len(jumps) == len(simple)
        for (loc, _), z in zip(jumps, simple):
            assert abs(loc - z) <= 2 * sp.spacing
