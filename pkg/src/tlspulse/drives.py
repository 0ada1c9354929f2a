"""Drive-field specifications and their evaluation.

A drive is one of: a CW tone, a Gaussian pulse with fixed carrier, a
chirped Gaussian pulse whose instantaneous frequency tracks the
amplitude-dependent resonance, or a train of pulses.  Every drive can be
evaluated as the real field F(t), as a half-amplitude envelope Omega0(t),
as an instantaneous frequency omega(t), as an accumulated carrier phase
Phi(t) = int_0^t omega(s) ds, and as an envelope area A(t) = int_0^t
2*Omega0(s) ds.

Field conventions: a CW tone is 2*Omega0*cos(omega*t + phase0); a pulse
references its carrier phase to its own center,
F(t) = 2*Omega0(t)*cos(Phi(t) - Phi(t_center) + phase0), so that a
time-shifted pulse is an exact translated copy of the original and a
train is a sequence of identical pulses.  For the chirped pulse the
instantaneous frequency is the positive root of
omega^2 - omega0*omega - Omega0(t)^2 = 0, which keeps the effective
(Bloch-Siegert shifted) detuning at zero throughout the pulse.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.special import erf

from .errors import ChirpNotSupported

__all__ = [
    "CwTone",
    "GaussianPulse",
    "ChirpedGaussianPulse",
    "PulseTrain",
    "DriveField",
    "evaluate_drive",
    "envelope_amplitude",
    "instantaneous_frequency",
    "accumulated_phase",
    "envelope_area",
    "carrier_frequency",
    "phase_offset",
    "drive_to_dict",
    "drive_from_dict",
    "save_drive",
    "load_drive",
]

_SQRT2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class CwTone:
    """Continuous tone F(t) = 2*amplitude_half*cos(omega*t + phase0)."""

    omega: float
    amplitude_half: float
    phase0: float = 0.0

    def __post_init__(self):
        if self.amplitude_half < 0:
            raise ValueError("amplitude_half must be >= 0")
        if self.omega <= 0:
            raise ValueError("omega must be > 0")


@dataclass(frozen=True)
class GaussianPulse:
    """Gaussian-envelope pulse on a fixed carrier.

    F(t) = 2*peak_half*exp(-(t-t_center)^2/(2*sigma0^2))
           * cos(omega*(t-t_center) + phase0)

    The carrier phase is referenced to the pulse center, so shifting
    t_center translates the whole pulse, field included.
    """

    omega: float
    peak_half: float
    sigma0: float
    t_center: float
    phase0: float = 0.0

    def __post_init__(self):
        if self.peak_half < 0:
            raise ValueError("peak_half must be >= 0")
        if self.sigma0 <= 0:
            raise ValueError("sigma0 must be > 0")
        if self.t_center <= 0:
            raise ValueError("t_center must be > 0")
        if self.omega <= 0:
            raise ValueError("omega must be > 0")


@dataclass(frozen=True)
class ChirpedGaussianPulse:
    """Gaussian pulse whose carrier follows the shifted resonance.

    The instantaneous frequency is
    omega(t) = (omega0_ref + sqrt(omega0_ref^2 + 4*Omega0(t)^2)) / 2,
    so the amplitude-dependent detuning vanishes during the pulse.  The
    carrier phase is referenced to the pulse center, as for
    :class:`GaussianPulse`.
    """

    omega0_ref: float
    peak_half: float
    sigma0: float
    t_center: float
    phase0: float = 0.0

    def __post_init__(self):
        if self.peak_half < 0:
            raise ValueError("peak_half must be >= 0")
        if self.sigma0 <= 0:
            raise ValueError("sigma0 must be > 0")
        if self.t_center <= 0:
            raise ValueError("t_center must be > 0")
        if self.omega0_ref <= 0:
            raise ValueError("omega0_ref must be > 0")


@dataclass(frozen=True)
class PulseTrain:
    """Ordered sequence of pulses; the field is the sum of the members."""

    pulses: tuple

    def __post_init__(self):
        if len(self.pulses) == 0:
            raise ValueError("a PulseTrain needs at least one pulse")
        object.__setattr__(self, "pulses", tuple(self.pulses))
        centers = [p.t_center for p in self.pulses]
        if any(b <= a for a, b in zip(centers, centers[1:])):
            raise ValueError("pulse centers must be strictly increasing")


DriveField = CwTone | GaussianPulse | ChirpedGaussianPulse | PulseTrain


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def envelope_amplitude(d: DriveField, t):
    """Half-amplitude envelope Omega0(t); accepts scalar or array t."""
    if isinstance(d, CwTone):
        return d.amplitude_half * np.ones_like(np.asarray(t, dtype=float)) \
            if np.ndim(t) else d.amplitude_half
    if isinstance(d, (GaussianPulse, ChirpedGaussianPulse)):
        u = (np.asarray(t, dtype=float) - d.t_center) / d.sigma0
        out = d.peak_half * np.exp(-0.5 * u * u)
        return out if np.ndim(t) else float(out)
    if isinstance(d, PulseTrain):
        return sum(envelope_amplitude(p, t) for p in d.pulses)
    raise TypeError(f"not a drive: {d!r}")


def _chirp_root(omega0_ref, env):
    return 0.5 * (omega0_ref + np.sqrt(omega0_ref**2 + 4.0 * env * env))


def instantaneous_frequency(d: DriveField, t):
    """Instantaneous carrier frequency omega(t).

    Fixed-carrier drives return their carrier; the chirped pulse returns
    the positive root of omega^2 - omega0_ref*omega - Omega0(t)^2 = 0.
    """
    if isinstance(d, CwTone):
        return d.omega * np.ones_like(np.asarray(t, dtype=float)) \
            if np.ndim(t) else d.omega
    if isinstance(d, GaussianPulse):
        return d.omega * np.ones_like(np.asarray(t, dtype=float)) \
            if np.ndim(t) else d.omega
    if isinstance(d, ChirpedGaussianPulse):
        out = _chirp_root(d.omega0_ref, envelope_amplitude(d, t))
        return out if np.ndim(t) else float(out)
    if isinstance(d, PulseTrain):
        kinds = {type(p) for p in d.pulses}
        if kinds == {GaussianPulse}:
            carriers = {p.omega for p in d.pulses}
            if len(carriers) != 1:
                raise ValueError("train members must share a carrier")
            (w,) = carriers
            return w * np.ones_like(np.asarray(t, dtype=float)) \
                if np.ndim(t) else w
        if kinds == {ChirpedGaussianPulse}:
            refs = {p.omega0_ref for p in d.pulses}
            if len(refs) != 1:
                raise ValueError("chirped train members must share omega0_ref")
            (w0,) = refs
            out = _chirp_root(w0, envelope_amplitude(d, t))
            return out if np.ndim(t) else float(out)
        raise ValueError("mixed fixed/chirped pulse trains are not supported")
    raise TypeError(f"not a drive: {d!r}")


@functools.lru_cache(maxsize=64)
def _phase_excess_table(d):
    """Cumulative chirp phase excess int_0^t (omega(s) - omega_ref) ds.

    Tabulated on a fine grid over the pulse support; outside the table the
    excess is constant (the envelope, and with it the excess rate, has
    decayed to numerical zero).  Composite-Simpson accumulation keeps the
    quadrature error far below the ODE-integrator error.
    """
    if isinstance(d, ChirpedGaussianPulse):
        w_ref = d.omega0_ref
        t_end = d.t_center + 10.0 * d.sigma0
        h = d.sigma0 / 256.0
    elif isinstance(d, PulseTrain):
        w_ref = d.pulses[0].omega0_ref
        t_end = d.pulses[-1].t_center + 10.0 * d.pulses[-1].sigma0
        h = min(p.sigma0 for p in d.pulses) / 256.0
    else:
        raise TypeError(f"drive has no chirp excess: {d!r}")
    n = int(math.ceil(t_end / h)) + 1
    grid = np.linspace(0.0, t_end, n)
    rate = instantaneous_frequency(d, grid) - w_ref
    excess = cumulative_simpson(rate, x=grid, initial=0.0)
    return grid, excess


def _chirp_reference(d):
    if isinstance(d, ChirpedGaussianPulse):
        return d.omega0_ref
    return d.pulses[0].omega0_ref


def _is_chirped(d) -> bool:
    if isinstance(d, ChirpedGaussianPulse):
        return True
    if isinstance(d, PulseTrain):
        return isinstance(d.pulses[0], ChirpedGaussianPulse)
    return False


def accumulated_phase(d: DriveField, t):
    """Accumulated carrier phase Phi(t) = int_0^t omega(s) ds (phase0 excluded)."""
    if isinstance(d, CwTone):
        return d.omega * np.asarray(t, dtype=float) if np.ndim(t) else d.omega * t
    if isinstance(d, GaussianPulse):
        return d.omega * np.asarray(t, dtype=float) if np.ndim(t) else d.omega * t
    if isinstance(d, PulseTrain) and not _is_chirped(d):
        w = instantaneous_frequency(d, 0.0)
        return w * np.asarray(t, dtype=float) if np.ndim(t) else w * t
    # chirped single pulse or chirped train
    grid, table = _phase_excess_table(d)
    w_ref = _chirp_reference(d)
    tt = np.asarray(t, dtype=float)
    excess = np.interp(tt, grid, table, left=0.0, right=float(table[-1]))
    out = w_ref * tt + excess
    return out if np.ndim(t) else float(out)


def _phase_reference(d) -> float:
    """Accumulated phase at the pulse center (zero for a CW tone)."""
    if isinstance(d, (GaussianPulse, ChirpedGaussianPulse)):
        return float(accumulated_phase(d, d.t_center))
    return 0.0


def evaluate_drive(d: DriveField, t):
    """Real field value F(t) = 2*Omega0(t)*cos(Phi(t) - Phi_ref + phase0).

    Phi_ref is the accumulated phase at the pulse center (zero for a CW
    tone), so a pulse's carrier travels with the pulse.  A train
    evaluates as the sum of its member fields.
    """
    if isinstance(d, PulseTrain):
        return sum(evaluate_drive(p, t) for p in d.pulses)
    phase0 = d.phase0 - _phase_reference(d)
    env = envelope_amplitude(d, t)
    phase = accumulated_phase(d, t)
    out = 2.0 * env * np.cos(phase + phase0)
    return out if np.ndim(t) else float(out)


def envelope_area(d: DriveField, t):
    """Accumulated envelope area A(t) = int_0^t 2*Omega0(s) ds.

    Gaussian envelopes use the closed-form error-function antiderivative;
    nondecreasing in t by construction.
    """
    if isinstance(d, CwTone):
        out = 2.0 * d.amplitude_half * np.asarray(t, dtype=float)
        return out if np.ndim(t) else float(out)
    if isinstance(d, (GaussianPulse, ChirpedGaussianPulse)):
        s = d.sigma0
        a = 2.0 * d.peak_half * s * _SQRT2PI
        tt = np.asarray(t, dtype=float)
        out = a * 0.5 * (erf((tt - d.t_center) / (s * math.sqrt(2.0)))
                         + erf(d.t_center / (s * math.sqrt(2.0))))
        return out if np.ndim(t) else float(out)
    if isinstance(d, PulseTrain):
        return sum(envelope_area(p, t) for p in d.pulses)
    raise TypeError(f"not a drive: {d!r}")


def carrier_frequency(d: DriveField) -> float:
    """Fixed carrier of the drive; raises ChirpNotSupported for chirped drives."""
    if _is_chirped(d):
        raise ChirpNotSupported("drive has a time-dependent carrier")
    return float(instantaneous_frequency(d, 0.0))


def drive_phase0(d: DriveField) -> float:
    """Common carrier phase offset of the drive."""
    if isinstance(d, PulseTrain):
        phases = {p.phase0 for p in d.pulses}
        if len(phases) != 1:
            raise ValueError("train members carry different phase offsets")
        (p0,) = phases
        return p0
    return d.phase0


def phase_offset(d: DriveField, t):
    """Effective phase offset phi(t) with F(t) = 2*Omega0(t)*cos(Phi(t)+phi(t)).

    Constant phase0 for a CW tone; phase0 - Phi(t_center) for a single
    pulse; for a train, the offset of the nearest member, switching
    halfway between neighboring centers (where every envelope is
    negligible).  Scalar t gives a float, array t an array.
    """
    tt = np.asarray(t, dtype=float)
    if isinstance(d, CwTone):
        out = np.full_like(tt, d.phase0)
    elif isinstance(d, (GaussianPulse, ChirpedGaussianPulse)):
        out = np.full_like(tt, d.phase0 - _phase_reference(d))
    elif isinstance(d, PulseTrain):
        centers = np.array([p.t_center for p in d.pulses])
        refs = np.asarray(accumulated_phase(d, centers), dtype=float)
        offs = np.array([p.phase0 for p in d.pulses]) - refs
        idx = np.searchsorted(0.5 * (centers[:-1] + centers[1:]), tt)
        out = offs[idx]
    else:
        raise TypeError(f"not a drive: {d!r}")
    return out if np.ndim(t) else float(out)


def with_phase0(d: DriveField, phase0: float) -> DriveField:
    """Copy of the drive with the carrier phase offset replaced."""
    if isinstance(d, PulseTrain):
        return PulseTrain(tuple(replace(p, phase0=phase0) for p in d.pulses))
    return replace(d, phase0=phase0)


def field_fn(d: DriveField):
    """Fast scalar-time evaluator for F(t), for use in integrator loops.

    Returns a closure equivalent to ``evaluate_drive(d, t)`` but built on
    ``math`` scalars; inner ODE loops call it millions of times.
    """
    if isinstance(d, CwTone):
        two_a, w, p0 = 2.0 * d.amplitude_half, d.omega, d.phase0
        return lambda t: two_a * math.cos(w * t + p0)
    if isinstance(d, GaussianPulse):
        two_a, w = 2.0 * d.peak_half, d.omega
        tc, inv2s2 = d.t_center, 0.5 / (d.sigma0 * d.sigma0)
        p0 = d.phase0 - w * tc
        return lambda t: (two_a * math.exp(-(t - tc) * (t - tc) * inv2s2)
                          * math.cos(w * t + p0))
    if isinstance(d, ChirpedGaussianPulse):
        two_a = 2.0 * d.peak_half
        p0 = d.phase0 - _phase_reference(d)
        tc, inv2s2 = d.t_center, 0.5 / (d.sigma0 * d.sigma0)
        w_ref = d.omega0_ref
        grid, table = _phase_excess_table(d)
        t0g, dtg = float(grid[0]), float(grid[1] - grid[0])
        tab = table
        nmax = len(grid) - 1
        tab_last = float(table[-1])

        def _f(t):
            env = two_a * math.exp(-(t - tc) * (t - tc) * inv2s2)
            # linear interpolation on the uniform phase-excess table
            x = (t - t0g) / dtg
            if x <= 0.0:
                exc = 0.0
            elif x >= nmax:
                exc = tab_last
            else:
                i = int(x)
                frac = x - i
                exc = tab[i] * (1.0 - frac) + tab[i + 1] * frac
            return env * math.cos(w_ref * t + exc + p0)

        return _f
    if isinstance(d, PulseTrain):
        fns = [field_fn(p) for p in d.pulses]
        if len(fns) == 1:
            return fns[0]
        return lambda t: sum(f(t) for f in fns)
    raise TypeError(f"not a drive: {d!r}")


# ---------------------------------------------------------------------------
# JSON (de)serialization
# ---------------------------------------------------------------------------

def drive_to_dict(d: DriveField) -> dict:
    if isinstance(d, CwTone):
        return {"kind": "cw", "omega": d.omega,
                "amplitude_half": d.amplitude_half, "phase0": d.phase0}
    if isinstance(d, GaussianPulse):
        return {"kind": "gaussian", "omega": d.omega, "peak_half": d.peak_half,
                "sigma0": d.sigma0, "t_center": d.t_center, "phase0": d.phase0}
    if isinstance(d, ChirpedGaussianPulse):
        return {"kind": "chirped_gaussian", "omega": d.omega0_ref,
                "peak_half": d.peak_half, "sigma0": d.sigma0,
                "t_center": d.t_center, "phase0": d.phase0}
    if isinstance(d, PulseTrain):
        return {"kind": "train", "pulses": [drive_to_dict(p) for p in d.pulses]}
    raise TypeError(f"not a drive: {d!r}")


def drive_from_dict(spec: dict) -> DriveField:
    kind = spec.get("kind")
    if kind == "cw":
        return CwTone(omega=spec["omega"],
                      amplitude_half=spec["amplitude_half"],
                      phase0=spec.get("phase0", 0.0))
    if kind == "gaussian":
        return GaussianPulse(omega=spec["omega"], peak_half=spec["peak_half"],
                             sigma0=spec["sigma0"], t_center=spec["t_center"],
                             phase0=spec.get("phase0", 0.0))
    if kind == "chirped_gaussian":
        return ChirpedGaussianPulse(omega0_ref=spec["omega"],
                                    peak_half=spec["peak_half"],
                                    sigma0=spec["sigma0"],
                                    t_center=spec["t_center"],
                                    phase0=spec.get("phase0", 0.0))
    if kind == "train":
        return PulseTrain(tuple(drive_from_dict(p) for p in spec["pulses"]))
    raise ValueError(f"unknown drive kind: {kind!r}")


def save_drive(d: DriveField, path) -> None:
    with open(path, "w") as fh:
        json.dump(drive_to_dict(d), fh, indent=2)
        fh.write("\n")


def load_drive(path) -> DriveField:
    with open(path) as fh:
        return drive_from_dict(json.load(fh))
