"""Drive evaluation: field conventions, phases, areas, serialization."""

import math

import numpy as np
import pytest

from tlspulse import drives, pulsecraft
from tlspulse.errors import ChirpNotSupported


def test_cw_field_convention():
    d = drives.CwTone(omega=1.2, amplitude_half=0.1, phase0=0.3)
    t = np.linspace(0.0, 20.0, 501)
    expect = 2.0 * 0.1 * np.cos(1.2 * t + 0.3)
    assert np.allclose(drives.evaluate_drive(d, t), expect, atol=1e-15)
    assert drives.evaluate_drive(d, 0.7) == pytest.approx(
        2.0 * 0.1 * math.cos(1.2 * 0.7 + 0.3), abs=1e-15)


def test_gaussian_field_centered_phase():
    d = drives.GaussianPulse(omega=1.1, peak_half=0.2, sigma0=2.0,
                             t_center=10.0, phase0=0.0)
    # at the center the cosine argument is exactly phase0
    assert drives.evaluate_drive(d, 10.0) == pytest.approx(2.0 * 0.2,
                                                           abs=1e-15)
    t = np.linspace(0.0, 20.0, 801)
    env = 0.2 * np.exp(-0.5 * ((t - 10.0) / 2.0) ** 2)
    expect = 2.0 * env * np.cos(1.1 * (t - 10.0))
    assert np.allclose(drives.evaluate_drive(d, t), expect, atol=1e-14)


def test_pulse_translation_invariance():
    """Shifting t_center translates the whole field, carrier included."""
    import dataclasses
    base = pulsecraft.make_pi_pulse(0.3, 1.1)
    shift = 7.321
    moved = dataclasses.replace(base, t_center=base.t_center + shift)
    t = np.linspace(0.0, base.t_center + 6.0 * base.sigma0, 2001)
    f0 = drives.evaluate_drive(base, t)
    f1 = drives.evaluate_drive(moved, t + shift)
    assert np.max(np.abs(f0 - f1)) < 1e-13


def test_chirped_translation_invariance():
    import dataclasses
    base = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    shift = 11.5
    moved = dataclasses.replace(base, t_center=base.t_center + shift)
    t = np.linspace(base.t_center - 4.0 * base.sigma0,
                    base.t_center + 4.0 * base.sigma0, 1501)
    f0 = drives.evaluate_drive(base, t)
    f1 = drives.evaluate_drive(moved, t + shift)
    # limited by the tabulated chirp-phase interpolation
    assert np.max(np.abs(f0 - f1)) < 1e-6


def test_train_members_identical():
    pulse = pulsecraft.make_pi_pulse(0.3, 1.1)
    train = pulsecraft.make_pulse_train(pulse, 3)
    spacing = train.pulses[1].t_center - train.pulses[0].t_center
    t = np.linspace(0.0, 2.0 * pulse.t_center, 2001)
    f_first = drives.evaluate_drive(train.pulses[0], t)
    f_second = drives.evaluate_drive(train.pulses[1], t + spacing)
    assert np.max(np.abs(f_first - f_second)) < 1e-13


def test_phase_offset_consistency():
    """F(t) = 2 Omega0(t) cos(Phi(t) + phi(t)) for every drive type."""
    pulse = pulsecraft.make_pi_pulse(0.3, 1.1, phase0=0.4)
    chirp = pulsecraft.make_chirped_pi_pulse(0.4, 1.0, phase0=1.1)
    train = pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(0.2, 1.1), 3)
    cw = drives.CwTone(omega=1.05, amplitude_half=0.1, phase0=0.2)
    # trains are only piecewise single-carrier: neighbor tails leak a
    # little of the other member's phase into the reconstruction
    tol = {drives.CwTone: 1e-12, type(pulse): 1e-12, type(chirp): 1e-7,
           drives.PulseTrain: 2e-3}
    for d in (cw, pulse, chirp, train):
        t_end = 60.0
        t = np.linspace(0.0, t_end, 4001)
        env = np.asarray(drives.envelope_amplitude(d, t), dtype=float)
        phi = np.asarray(drives.accumulated_phase(d, t), dtype=float)
        off = np.asarray(drives.phase_offset(d, t), dtype=float)
        rebuilt = 2.0 * env * np.cos(phi + off)
        f = np.asarray(drives.evaluate_drive(d, t))
        assert np.max(np.abs(rebuilt - f)) < tol[type(d)], type(d).__name__


def test_field_fn_matches_evaluate():
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0, phase0=0.7)
    train = pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(0.2, 1.1), 2)
    for d in (pulse, train):
        f = drives.field_fn(d)
        for t in np.linspace(0.0, 40.0, 173):
            assert f(float(t)) == pytest.approx(
                drives.evaluate_drive(d, float(t)), abs=5e-9)


def test_instantaneous_frequency_chirp_endpoints():
    from tlspulse import averaging
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    w_peak = drives.instantaneous_frequency(pulse, pulse.t_center)
    assert w_peak == pytest.approx(averaging.resonance_frequency(0.4, 1.0),
                                   rel=1e-12)
    # far from the pulse the carrier returns to the transition frequency
    w_tail = drives.instantaneous_frequency(pulse,
                                            pulse.t_center + 20.0 * pulse.sigma0)
    assert w_tail == pytest.approx(1.0, abs=1e-12)


def test_accumulated_phase_chirp():
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    t = np.linspace(0.0, pulse.t_center + 8.0 * pulse.sigma0, 2001)
    phi = np.asarray(drives.accumulated_phase(pulse, t))
    assert np.all(np.diff(phi) > 0)
    # numeric check against direct quadrature of omega(t)
    w = np.asarray(drives.instantaneous_frequency(pulse, t))
    phi_ref = np.concatenate(
        [[0.0], np.cumsum(0.5 * (w[1:] + w[:-1]) * np.diff(t))])
    assert np.max(np.abs(phi - phi_ref)) < 1e-5


def test_envelope_area_closed_form():
    pulse = pulsecraft.make_pi_pulse(0.4, 1.0)
    t = np.linspace(0.0, pulse.t_center + 8.0 * pulse.sigma0, 20001)
    env = 2.0 * np.asarray(drives.envelope_amplitude(pulse, t))
    area_num = np.trapezoid(env, t)
    assert drives.envelope_area(pulse, t[-1]) == pytest.approx(area_num,
                                                              abs=1e-9)
    assert drives.envelope_area(pulse, t[-1]) == pytest.approx(math.pi,
                                                              abs=1e-6)
    a = np.asarray(drives.envelope_area(pulse, t))
    assert np.all(np.diff(a) >= 0)


def test_carrier_frequency_chirp_raises():
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    with pytest.raises(ChirpNotSupported):
        drives.carrier_frequency(pulse)
    assert drives.carrier_frequency(
        drives.CwTone(omega=1.3, amplitude_half=0.1)) == 1.3


def test_with_phase0():
    train = pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(0.2, 1.1), 3)
    shifted = drives.with_phase0(train, 0.9)
    assert all(p.phase0 == 0.9 for p in shifted.pulses)
    assert shifted.pulses[0].t_center == train.pulses[0].t_center


def test_json_round_trip(tmp_path):
    cases = [
        drives.CwTone(omega=1.2, amplitude_half=0.1, phase0=0.3),
        pulsecraft.make_pi_pulse(0.3, 1.1, phase0=0.2),
        pulsecraft.make_chirped_pi_pulse(0.4, 1.0),
        pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(0.2, 1.1), 3),
    ]
    for d in cases:
        path = tmp_path / "drive.json"
        drives.save_drive(d, path)
        assert drives.load_drive(path) == d


def test_validation():
    with pytest.raises(ValueError):
        drives.CwTone(omega=-1.0, amplitude_half=0.1)
    with pytest.raises(ValueError):
        drives.CwTone(omega=1.0, amplitude_half=-0.1)
    with pytest.raises(ValueError):
        drives.GaussianPulse(omega=1.0, peak_half=0.1, sigma0=0.0,
                             t_center=5.0)
    with pytest.raises(ValueError):
        drives.PulseTrain(())
    p = pulsecraft.make_pi_pulse(0.3, 1.1)
    with pytest.raises(ValueError):
        drives.PulseTrain((p, p))  # centers must strictly increase
