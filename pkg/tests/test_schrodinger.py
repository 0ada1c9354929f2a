"""Unitary propagation: frame equivalence and norm conservation."""

import math

import numpy as np
import pytest

from tlspulse import drives, schrodinger
from tlspulse.integrate import IntegratorConfig
from tlspulse.params import TlsParams
from tlspulse.schrodinger import AmplitudePair, Frame

_ADAPTIVE = IntegratorConfig(mode="adaptive", rel_tol=1e-12, abs_tol=1e-12,
                             record_points=501)


def test_amplitude_pair_pure():
    a = AmplitudePair.pure(3.0, 4.0j)
    assert a.norm_sq == pytest.approx(1.0, abs=1e-15)
    assert a.a1 == pytest.approx(0.6)
    with pytest.raises(ValueError):
        AmplitudePair.pure(0.0, 0.0)


def test_populations_shapes():
    n1, n2 = schrodinger.populations(AmplitudePair(1.0, 0.0))
    assert (n1, n2) == (1.0, 0.0)
    arr = np.array([[1.0, 0.0], [0.0, 1.0j]], dtype=complex)
    n1, n2 = schrodinger.populations(arr)
    assert np.allclose(n1, [1.0, 0.0])
    assert np.allclose(n2, [0.0, 1.0])


def test_frames_agree_on_populations():
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.1, amplitude_half=0.1)
    span = (0.0, 40.0)
    t = np.linspace(*span, 501)
    lab = schrodinger.propagate_lab(p, d, (1.0, 0.0), span, _ADAPTIVE)
    inter = schrodinger.propagate_interaction(p, d, (1.0, 0.0), span,
                                              _ADAPTIVE)
    rot = schrodinger.propagate_rotating(p, d, (1.0, 0.0), span, _ADAPTIVE)
    for traj in (inter, rot):
        n1_a, _ = schrodinger.populations(lab.states)
        n1_b, _ = schrodinger.populations(traj.states)
        assert np.max(np.abs(np.asarray(n1_a) - np.asarray(n1_b))) < 1e-9
    del t


def test_transform_round_trip():
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.2, amplitude_half=0.1)
    a = AmplitudePair.pure(0.8, 0.6j, Frame.LAB)
    t = 7.7
    b = schrodinger.transform(a, Frame.ROTATING, p, d, t)
    back = schrodinger.transform(b, Frame.LAB, p, d, t)
    assert abs(back.a1 - a.a1) < 1e-14
    assert abs(back.a2 - a.a2) < 1e-14
    assert b.norm_sq == pytest.approx(1.0, abs=1e-14)


def test_transform_rejects_averaged_frame():
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.2, amplitude_half=0.1)
    a = AmplitudePair(1.0, 0.0, Frame.AVERAGED)
    with pytest.raises(ValueError):
        schrodinger.transform(a, Frame.LAB, p, d, 0.0)


def test_rotating_without_cr_is_rwa():
    from tlspulse import averaging
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.15, amplitude_half=0.2)
    delta = 0.15
    span = (0.0, 30.0)
    traj = schrodinger.propagate_rotating(p, d, (1.0, 0.0), span, _ADAPTIVE,
                                          include_counter_rotating=False)
    n1_ode, _ = schrodinger.populations(traj.states)
    n1_cf, _ = averaging.rwa_populations(0.2, delta, traj.times)
    assert np.max(np.abs(np.asarray(n1_ode) - n1_cf)) < 1e-9


def test_norm_conserved_under_pulse():
    from tlspulse import pulsecraft
    p = TlsParams(omega0=1.0)
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    span = (0.0, pulse.t_center + 8.0 * pulse.sigma0)
    traj = schrodinger.propagate_interaction(p, pulse, (1.0, 0.0), span,
                                             _ADAPTIVE)
    norms = np.abs(traj.states[:, 0]) ** 2 + np.abs(traj.states[:, 1]) ** 2
    assert np.max(np.abs(norms - 1.0)) < 1e-10


def test_phase0_shifts_are_physical():
    """A CW phase shift phi0 = pi flips the field sign; populations follow
    the shifted field, not the phase label."""
    p = TlsParams(omega0=1.0)
    d0 = drives.CwTone(omega=1.0, amplitude_half=0.1, phase0=0.0)
    dpi = drives.CwTone(omega=1.0, amplitude_half=0.1, phase0=math.pi)
    t = np.linspace(0.0, 10.0, 101)
    f0 = np.asarray(drives.evaluate_drive(d0, t))
    fpi = np.asarray(drives.evaluate_drive(dpi, t))
    assert np.max(np.abs(f0 + fpi)) < 1e-14
