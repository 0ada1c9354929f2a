"""Unitary propagation of the driven two-level system.

The same physical evolution can be integrated in three frames:

* lab frame (C1, C2): i dC/dt = diag(E1, E2) C + F(t) * off-diagonal,
* interaction frame (c1, c2): c_j = exp(+i E_j t) C_j,
* rotating frame (b1, b2): b1 = exp(-i delta t / 2) c1,
  b2 = exp(+i delta t / 2) c2, defined only for a fixed carrier.

Populations |a1|^2, |a2|^2 are identical in all three frames.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import drives
from .integrate import IntegratorConfig, Trajectory, integrate
from .params import TlsParams

__all__ = [
    "Frame",
    "AmplitudePair",
    "propagate_lab",
    "propagate_interaction",
    "propagate_rotating",
    "transform",
    "populations",
]


class Frame(str, Enum):
    LAB = "lab"
    INTERACTION = "interaction"
    ROTATING = "rotating"
    AVERAGED = "averaged"


@dataclass(frozen=True)
class AmplitudePair:
    """Two complex probability amplitudes in a declared frame."""

    a1: complex
    a2: complex
    frame: Frame = Frame.LAB

    @classmethod
    def pure(cls, a1, a2, frame: Frame = Frame.LAB) -> "AmplitudePair":
        """Construct a normalized pure state (norm forced to exactly 1)."""
        norm = math.sqrt(abs(a1) ** 2 + abs(a2) ** 2)
        if norm == 0:
            raise ValueError("zero state cannot be normalized")
        return cls(complex(a1) / norm, complex(a2) / norm, frame)

    @property
    def norm_sq(self) -> float:
        return abs(self.a1) ** 2 + abs(self.a2) ** 2

    def as_array(self) -> np.ndarray:
        return np.array([self.a1, self.a2], dtype=complex)


def populations(a) -> tuple[float, float]:
    """Occupation probabilities (N1, N2) = (|a1|^2, |a2|^2).

    Accepts an AmplitudePair, a length-2 sequence, or an (n, 2) array
    (returning arrays in that case).
    """
    if isinstance(a, AmplitudePair):
        return (abs(a.a1) ** 2, abs(a.a2) ** 2)
    arr = np.asarray(a)
    n1 = np.abs(arr[..., 0]) ** 2
    n2 = np.abs(arr[..., 1]) ** 2
    return (n1, n2)


def _state_vector(psi0) -> np.ndarray:
    if isinstance(psi0, AmplitudePair):
        return psi0.as_array()
    return np.asarray(psi0, dtype=complex)


def propagate_lab(p: TlsParams, d, psi0, t_span,
                  cfg: IntegratorConfig | None = None) -> Trajectory:
    """Integrate the lab-frame two-level Schroedinger equation.

    i dC1/dt = E1 C1 + F(t) C2,  i dC2/dt = E2 C2 + F(t) C1,
    with E1 = -omega0/2, E2 = +omega0/2.
    """
    e1, e2 = p.energies
    f = drives.field_fn(d)
    y0 = _state_vector(psi0)

    def rhs(t, y):
        ft = f(t)
        return np.array((-1j * (e1 * y[0] + ft * y[1]),
                         -1j * (e2 * y[1] + ft * y[0])))

    return integrate(rhs, y0, t_span, cfg,
                     meta={"frame": Frame.LAB.value,
                           "drive": drives.drive_to_dict(d)})


def propagate_interaction(p: TlsParams, d, c0, t_span,
                          cfg: IntegratorConfig | None = None) -> Trajectory:
    """Integrate the interaction-frame amplitudes (c1, c2).

    i dc1/dt = F(t) exp(-i omega0 t) c2, i dc2/dt = F(t) exp(+i omega0 t) c1.
    Valid for any drive, including chirped pulses.
    """
    w0 = p.omega0
    f = drives.field_fn(d)
    y0 = _state_vector(c0)

    def rhs(t, y):
        ft = f(t)
        ph = cmath.exp(-1j * w0 * t)
        return np.array((-1j * ft * ph * y[1],
                         -1j * ft * y[0] / ph))

    return integrate(rhs, y0, t_span, cfg,
                     meta={"frame": Frame.INTERACTION.value,
                           "drive": drives.drive_to_dict(d)})


def propagate_rotating(p: TlsParams, d, b0, t_span,
                       cfg: IntegratorConfig | None = None,
                       include_counter_rotating: bool = True) -> Trajectory:
    """Integrate the rotating-frame amplitudes (b1, b2) for a fixed carrier.

    i db1/dt = (delta/2) b1 + Omega0(t) (e^{i phi0} + e^{-i(2 w t + phi0)}) b2,
    i db2/dt = -(delta/2) b2 + Omega0(t) (e^{-i phi0} + e^{+i(2 w t + phi0)}) b1.

    ``include_counter_rotating=False`` drops the e^{+-2iwt} terms, which
    turns the system into the first-order averaged (RWA) ODE.
    """
    w = drives.carrier_frequency(d)  # raises ChirpNotSupported for chirp
    delta = w - p.omega0
    hd = 0.5 * delta
    y0 = _state_vector(b0)
    if isinstance(d, drives.PulseTrain):
        def offset(t):
            return drives.phase_offset(d, t)
    else:
        phi_const = drives.phase_offset(d, 0.0)

        def offset(t):
            return phi_const

    if include_counter_rotating:
        def rhs(t, y):
            env = drives.envelope_amplitude(d, t)
            phi = offset(t)
            ep = cmath.exp(1j * phi)
            cr = cmath.exp(-1j * (2.0 * w * t + phi))
            return np.array((-1j * (hd * y[0] + env * (ep + cr) * y[1]),
                             -1j * (-hd * y[1]
                                    + env * (ep + cr).conjugate() * y[0])))
    else:
        def rhs(t, y):
            env = drives.envelope_amplitude(d, t)
            ep = cmath.exp(1j * offset(t))
            return np.array((-1j * (hd * y[0] + env * ep * y[1]),
                             -1j * (-hd * y[1] + env * ep.conjugate() * y[0])))

    return integrate(rhs, y0, t_span, cfg,
                     meta={"frame": Frame.ROTATING.value,
                           "drive": drives.drive_to_dict(d),
                           "counter_rotating": include_counter_rotating})


def _lab_to_interaction_phases(p: TlsParams, t: float) -> tuple[complex, complex]:
    e1, e2 = p.energies
    return cmath.exp(1j * e1 * t), cmath.exp(1j * e2 * t)


def transform(a: AmplitudePair, to_frame: Frame, p: TlsParams, d,
              t: float) -> AmplitudePair:
    """Map amplitudes between lab, interaction, and rotating frames at time t.

    All maps are pure phases, so the norm is preserved exactly.  The
    rotating frame needs a fixed carrier; chirped drives raise
    ChirpNotSupported.
    """
    if a.frame == Frame.AVERAGED or to_frame == Frame.AVERAGED:
        raise ValueError("averaged frame is connected by a near-identity "
                         "map, not a phase; use averaging.reconstruct_b")
    a1, a2 = complex(a.a1), complex(a.a2)
    # go to interaction frame first
    if a.frame == Frame.LAB:
        p1, p2 = _lab_to_interaction_phases(p, t)
        a1, a2 = p1 * a1, p2 * a2
    elif a.frame == Frame.ROTATING:
        delta = drives.carrier_frequency(d) - p.omega0
        a1 = cmath.exp(0.5j * delta * t) * a1
        a2 = cmath.exp(-0.5j * delta * t) * a2
    # then to the target
    if to_frame == Frame.LAB:
        p1, p2 = _lab_to_interaction_phases(p, t)
        a1, a2 = a1 / p1, a2 / p2
    elif to_frame == Frame.ROTATING:
        delta = drives.carrier_frequency(d) - p.omega0
        a1 = cmath.exp(-0.5j * delta * t) * a1
        a2 = cmath.exp(0.5j * delta * t) * a2
    return AmplitudePair(a1, a2, to_frame)
