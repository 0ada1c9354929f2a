"""Design of pi-pulses: resonant, chirped, and amplitude-shaped.

A Gaussian envelope with sigma0 = sqrt(pi) / (2 sqrt(2) Omega0) has area
int 2 Omega0(t) dt = pi, independent of the peak amplitude.  Two designs
compensate the amplitude-dependent resonance shift:

* chirping the carrier along omega(t) = (w0 + sqrt(w0^2 + 4 Omega0(t)^2))/2,
  which keeps the shifted detuning at zero throughout the pulse;
* pulse shaping at a fixed blue-shifted carrier, picking the peak
  amplitude Omega0 = sqrt(delta * omega) so the shift cancels the
  detuning at the pulse center.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import replace

import numpy as np
from scipy.integrate import simpson

from . import drives
from .drives import ChirpedGaussianPulse, DriveField, GaussianPulse, PulseTrain
from .errors import NonPositiveAmplitude, OverlappingPulses, RedShiftedDetuning

__all__ = [
    "pi_pulse_width",
    "make_pi_pulse",
    "make_chirped_pi_pulse",
    "shaped_amplitude",
    "make_shaped_pi_pulse",
    "make_pulse_train",
    "verify_pulse_area",
]

# pulse center at 5 sigma keeps the truncated left-tail area below 1e-6 * pi
CENTER_SIGMAS = 5.0
DEFAULT_SPACING_SIGMAS = 7.5


def pi_pulse_width(omega0_half: float) -> float:
    """Gaussian width giving envelope area pi: sigma0 = sqrt(pi)/(2 sqrt(2) W0)."""
    if omega0_half <= 0:
        raise NonPositiveAmplitude("peak amplitude must be > 0")
    return math.sqrt(math.pi) / (2.0 * math.sqrt(2.0) * omega0_half)


def _slow_variation_check(sigma0: float, omega0: float) -> None:
    # averaging assumes the envelope changes little per carrier cycle;
    # sigma0 * omega ~ 2 is where second-order predictions visibly drift
    if sigma0 * omega0 < 2.0:
        warnings.warn(
            "pulse envelope varies on the carrier timescale; "
            "averaging-based predictions degrade for such fast envelopes",
            stacklevel=3)


def make_pi_pulse(omega0_half: float, omega: float,
                  phase0: float = 0.0, t_center: float | None = None
                  ) -> GaussianPulse:
    """Fixed-carrier Gaussian pi-pulse with the area-pi width."""
    sigma0 = pi_pulse_width(omega0_half)
    _slow_variation_check(sigma0, omega)
    if t_center is None:
        t_center = CENTER_SIGMAS * sigma0
    return GaussianPulse(omega=omega, peak_half=omega0_half, sigma0=sigma0,
                         t_center=t_center, phase0=phase0)


def make_chirped_pi_pulse(omega0_half_peak: float, omega0: float,
                          phase0: float = 0.0,
                          t_center: float | None = None
                          ) -> ChirpedGaussianPulse:
    """Chirped Gaussian pi-pulse tracking the amplitude-shifted resonance.

    The instantaneous frequency returns to the transition frequency
    omega0 away from the pulse center.
    """
    sigma0 = pi_pulse_width(omega0_half_peak)
    _slow_variation_check(sigma0, omega0)
    if t_center is None:
        t_center = CENTER_SIGMAS * sigma0
    return ChirpedGaussianPulse(omega0_ref=omega0, peak_half=omega0_half_peak,
                                sigma0=sigma0, t_center=t_center,
                                phase0=phase0)


def shaped_amplitude(delta: float, omega: float) -> float:
    """Peak amplitude Omega0 = sqrt(delta * omega) cancelling the detuning.

    Needs a blue-shifted carrier (delta > 0); the near-resonance advisory
    bound delta/omega < 0.25 keeps the shaping within the perturbative
    regime.
    """
    if delta <= 0:
        raise RedShiftedDetuning(
            "amplitude shaping needs a blue-shifted carrier (delta > 0)")
    if omega <= 0:
        raise ValueError("omega must be > 0")
    if delta / omega >= 0.25:
        warnings.warn("delta/omega >= 0.25: shaping rule leaves the "
                      "perturbative regime", stacklevel=2)
    return math.sqrt(delta * omega)


def make_shaped_pi_pulse(delta: float, omega: float, phase0: float = 0.0,
                         t_center: float | None = None) -> GaussianPulse:
    """Amplitude-shaped pi-pulse at a fixed blue-shifted carrier."""
    return make_pi_pulse(shaped_amplitude(delta, omega), omega,
                         phase0=phase0, t_center=t_center)


def make_pulse_train(pulse: DriveField, n: int,
                     spacing: float | None = None) -> DriveField:
    """Train of n copies of a pulse with the given center-to-center spacing.

    Default spacing is 7.5 sigma0.  Members are exact time-translated
    copies of the given pulse: each carrier phase is referenced to its
    own center, so every pulse of the train hits the system with the
    same field shape.  Per-pulse phase offsets can be set on the members
    afterwards.
    """
    if not isinstance(pulse, (GaussianPulse, ChirpedGaussianPulse)):
        raise TypeError("train members must be single pulses")
    if n < 1:
        raise ValueError("n must be >= 1")
    if spacing is None:
        spacing = DEFAULT_SPACING_SIGMAS * pulse.sigma0
    if spacing <= 6.0 * pulse.sigma0:
        raise OverlappingPulses(
            f"spacing {spacing} <= 6 sigma0 = {6.0 * pulse.sigma0}")
    if n == 1:
        return pulse
    members = tuple(replace(pulse, t_center=pulse.t_center + k * spacing)
                    for k in range(n))
    return PulseTrain(members)


def verify_pulse_area(d: DriveField, samples_per_sigma: int = 400):
    """Numerically integrate the envelope and report per-pulse areas.

    Returns (areas, t_grid, cumulative): one area per pulse (a single
    pulse yields a length-1 array) and the cumulative area curve on a
    fine grid covering the drive.  Independent of the closed-form area
    used elsewhere: plain composite-Simpson quadrature of 2*Omega0(s).
    """
    if isinstance(d, PulseTrain):
        pulses = d.pulses
    elif isinstance(d, (GaussianPulse, ChirpedGaussianPulse)):
        pulses = (d,)
    else:
        raise TypeError("area verification applies to pulses and trains")

    sigma_max = max(p.sigma0 for p in pulses)
    t_end = pulses[-1].t_center + 8.0 * sigma_max
    h = min(p.sigma0 for p in pulses) / samples_per_sigma
    grid = np.linspace(0.0, t_end, int(math.ceil(t_end / h)) + 1)
    envelope = 2.0 * np.asarray(drives.envelope_amplitude(d, grid))

    # per-pulse windows split halfway between neighboring centers
    centers = [p.t_center for p in pulses]
    bounds = [0.0]
    for a, b in zip(centers, centers[1:]):
        bounds.append(0.5 * (a + b))
    bounds.append(t_end)

    # snap window bounds onto grid points so the windows tile the grid
    # exactly and the per-pulse areas sum to the full integral
    cuts = [int(round(b / (grid[1] - grid[0]))) for b in bounds]
    cuts[-1] = len(grid) - 1
    areas = []
    for i, j in zip(cuts, cuts[1:]):
        areas.append(float(simpson(envelope[i:j + 1], x=grid[i:j + 1])))

    from scipy.integrate import cumulative_simpson
    cumulative = cumulative_simpson(envelope, x=grid, initial=0.0)
    return np.array(areas), grid, cumulative
