"""Bloch-equation routes: exactness, fixed point, reconstruction."""

import math

import numpy as np
import pytest

from tlspulse import bloch, drives, pulsecraft, schrodinger
from tlspulse.errors import ZeroDissipation
from tlspulse.integrate import IntegratorConfig
from tlspulse.params import TlsParams

_ADAPTIVE = IntegratorConfig(mode="adaptive", rel_tol=1e-11, abs_tol=1e-12,
                             record_points=1001)


def test_bloch_state_validation():
    bloch.BlochState(1.0, 0.0)
    with pytest.raises(ValueError):
        bloch.BlochState(1.5, 0.0)


def test_full_bloch_matches_schrodinger_unitary():
    """With gamma = 0 the Bloch equations are the Schroedinger equation in
    density-matrix variables."""
    p = TlsParams(omega0=1.0)
    d = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    span = (0.0, d.t_center + 8.0 * d.sigma0)
    tr_b = bloch.simulate_bloch_full(p, d, bloch.BlochState(1.0, 0.0), span,
                                     _ADAPTIVE)
    tr_s = schrodinger.propagate_interaction(p, d, (1.0, 0.0), span,
                                             _ADAPTIVE)
    n1_b, _ = bloch.bloch_populations(tr_b.states[:, 0])
    n1_s, _ = schrodinger.populations(tr_s.states)
    assert np.max(np.abs(np.asarray(n1_b) - np.asarray(n1_s))) < 1e-7


def test_coherence_decays_at_gamma2():
    p = TlsParams(omega0=1.0, gamma1=0.0, gamma2=0.05, delta0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.0)
    s0 = bloch.BlochState(0.0, 0.3 + 0.1j)
    traj = bloch.simulate_bloch_full(p, d, s0, (0.0, 40.0), _ADAPTIVE)
    sig = traj.states[:, 1]
    expect = (0.3 + 0.1j) * np.exp((-0.05 + 1j) * traj.times)
    assert np.max(np.abs(sig - expect)) < 1e-9


def test_population_relaxes_at_gamma1():
    p = TlsParams(omega0=1.0, gamma1=0.1, gamma2=0.05, delta0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.0)
    s0 = bloch.BlochState(-1.0, 0.0)
    traj = bloch.simulate_bloch_full(p, d, s0, (0.0, 60.0), _ADAPTIVE)
    delta = traj.states[:, 0].real
    expect = 1.0 - 2.0 * np.exp(-0.1 * traj.times)
    assert np.max(np.abs(delta - expect)) < 1e-9


def test_fixed_point_formula():
    delta_star, sigma_star = bloch.bloch_rwa_fixed_point(
        0.1, 0.0, 0.0002, 0.02, 1.0)
    assert delta_star == pytest.approx(1.0 / (1.0 + 4.0 * 0.01 * 0.02
                                              / (0.0002 * 0.02 ** 2)),
                                       rel=1e-12)
    # stationarity: plug into the averaged right-hand side
    g1, g2 = 0.0002, 0.02
    d_dot = -g1 * (delta_star - 1.0) + 4.0 * 0.1 * sigma_star.imag
    s_dot = -g2 * sigma_star - 1j * 0.1 * delta_star
    assert abs(d_dot) < 1e-15
    assert abs(s_dot) < 1e-15
    with pytest.raises(ZeroDissipation):
        bloch.bloch_rwa_fixed_point(0.1, 0.0, 0.0, 0.02, 1.0)


def test_avg2_reconstruction_beats_bare_average():
    """The counter-rotating correction restores the ripple the averaged
    variables deliberately drop."""
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.2)
    span = (0.0, 3.0 * math.pi / 0.2)
    tr_num = bloch.simulate_bloch_full(p, d, bloch.BlochState(1.0, 0.0),
                                       span, _ADAPTIVE)
    n1_num, _ = bloch.bloch_populations(tr_num.states[:, 0])
    tr_avg = bloch.simulate_bloch_avg2(p, d, bloch.BlochState(1.0, 0.0),
                                       span, _ADAPTIVE)
    n1_bare, _ = bloch.bloch_populations(tr_avg.states[:, 0])
    n1_rec = bloch.reconstruct_sigma(tr_avg, p, d)["n1"]
    err_bare = np.max(np.abs(np.asarray(n1_bare) - np.asarray(n1_num)))
    err_rec = np.max(np.abs(n1_rec - np.asarray(n1_num)))
    # at Omega0/2w = 0.1 the residual after reconstruction is the
    # next-order term; roughly half the bare ripple remains here
    assert err_rec < 0.7 * err_bare


def test_averaged_routes_phase_invariant():
    p = TlsParams(omega0=1.0, gamma1=0.001, gamma2=0.01, delta0=1.0)
    cfg = IntegratorConfig(mode="fixed_rk4", step=2.0 ** -8)
    base = None
    for phi0 in (0.0, 2.0):
        d = drives.CwTone(omega=1.05, amplitude_half=0.1, phase0=phi0)
        traj = bloch.simulate_bloch_avg2(p, d, bloch.BlochState(1.0, 0.0),
                                         (0.0, 30.0), cfg)
        delta = traj.states[:, 0].real
        if base is None:
            base = delta
        else:
            assert np.max(np.abs(delta - base)) < 1e-13


def test_reconstruct_sigma_keys():
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.1)
    traj = bloch.simulate_bloch_avg2(p, d, bloch.BlochState(1.0, 0.0),
                                     (0.0, 10.0), _ADAPTIVE)
    rec = bloch.reconstruct_sigma(traj, p, d)
    assert set(rec) == {"t", "delta", "sigma_tilde", "sigma_lab", "n1", "n2"}
    assert np.allclose(rec["n1"] + rec["n2"], 1.0)
    # the averaged initial state (1, 0) maps to a full state displaced by
    # the counter-rotating correction, an O(kappa^2) effect for CW driving
    kappa = 0.1 / 2.0
    assert rec["n1"][0] == pytest.approx(1.0, abs=2.0 * kappa ** 2)
