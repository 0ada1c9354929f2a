"""Pi-pulse design rules and their guards."""

import math
import warnings

import numpy as np
import pytest

from tlspulse import averaging, drives, pulsecraft
from tlspulse.errors import (NonPositiveAmplitude, OverlappingPulses,
                             RedShiftedDetuning)


def test_pi_pulse_width_values():
    assert pulsecraft.pi_pulse_width(0.4) == pytest.approx(
        1.5666426716443749, abs=1e-15)
    assert pulsecraft.pi_pulse_width(0.5) == pytest.approx(
        1.2533141373155001, abs=1e-15)
    with pytest.raises(NonPositiveAmplitude):
        pulsecraft.pi_pulse_width(0.0)


def test_pi_pulse_area_is_pi():
    for peak in (0.1, 0.25, 0.5):
        pulse = pulsecraft.make_pi_pulse(peak, 1.1)
        total = 2.0 * peak * pulse.sigma0 * math.sqrt(2.0 * math.pi)
        assert total == pytest.approx(math.pi, rel=1e-14)


def test_shaped_amplitude():
    assert pulsecraft.shaped_amplitude(0.1, 1.1) == pytest.approx(
        0.33166247903554, abs=1e-14)
    with pytest.raises(RedShiftedDetuning):
        pulsecraft.shaped_amplitude(-0.1, 1.1)
    with pytest.raises(ValueError):
        pulsecraft.shaped_amplitude(0.1, 0.0)
    with pytest.warns(UserWarning):
        pulsecraft.shaped_amplitude(0.3, 1.0)


def test_fast_envelope_warning():
    with pytest.warns(UserWarning):
        pulsecraft.make_pi_pulse(2.0, 1.0)


def test_chirped_pulse_tracks_resonance():
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, 1.0)
    t = np.linspace(0.0, pulse.t_center + 6.0 * pulse.sigma0, 501)
    w = np.asarray(drives.instantaneous_frequency(pulse, t))
    env = np.asarray(drives.envelope_amplitude(pulse, t))
    # omega(t)^2 - omega0*omega(t) - Omega0(t)^2 = 0 pointwise
    assert np.max(np.abs(w * w - 1.0 * w - env * env)) < 1e-12
    assert drives.instantaneous_frequency(pulse, pulse.t_center) == \
        pytest.approx(averaging.resonance_frequency(0.4, 1.0), abs=1e-12)


def test_train_spacing_guard():
    pulse = pulsecraft.make_pi_pulse(0.3, 1.1)
    with pytest.raises(OverlappingPulses):
        pulsecraft.make_pulse_train(pulse, 3, spacing=5.0 * pulse.sigma0)
    with pytest.raises(TypeError):
        pulsecraft.make_pulse_train(
            drives.CwTone(omega=1.1, amplitude_half=0.1), 3)
    with pytest.raises(ValueError):
        pulsecraft.make_pulse_train(pulse, 0)
    assert pulsecraft.make_pulse_train(pulse, 1) is pulse


def test_train_geometry():
    pulse = pulsecraft.make_pi_pulse(0.3, 1.1)
    train = pulsecraft.make_pulse_train(pulse, 3)
    centers = [p.t_center for p in train.pulses]
    gaps = np.diff(centers)
    assert np.allclose(gaps, pulsecraft.DEFAULT_SPACING_SIGMAS * pulse.sigma0)
    # members are identical translated copies
    for p in train.pulses:
        assert p.peak_half == pulse.peak_half
        assert p.sigma0 == pulse.sigma0
        assert p.phase0 == pulse.phase0


def test_verify_pulse_area_single():
    pulse = pulsecraft.make_pi_pulse(0.4, 1.0)
    areas, grid, cum = pulsecraft.verify_pulse_area(pulse)
    assert len(areas) == 1
    assert areas[0] == pytest.approx(math.pi, abs=1e-6)
    assert cum[-1] == pytest.approx(math.pi, abs=1e-6)
    assert np.all(np.diff(cum) >= -1e-15)


def test_verify_pulse_area_train():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        pulse = pulsecraft.make_pi_pulse(0.33, 1.1)
    train = pulsecraft.make_pulse_train(pulse, 3)
    areas, _, cum = pulsecraft.verify_pulse_area(train)
    assert len(areas) == 3
    for k in range(3):
        assert sum(areas[:k + 1]) == pytest.approx((k + 1) * math.pi,
                                                   abs=3e-6)
    assert cum[-1] == pytest.approx(3.0 * math.pi, abs=3e-6)
