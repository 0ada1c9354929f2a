"""Closed-form propagators for the rotating-frame amplitudes.

Three levels of approximation:

* first-order averaging, identical to the rotating-wave approximation
  (RWA): half-Rabi frequency Omega = sqrt(Omega0^2 + delta^2/4);
* a naive perturbative correction on top of the RWA, kept because it
  demonstrably fails to reduce the RWA dephasing;
* second-order averaging, which replaces the detuning by
  delta_tilde = delta - Omega0^2/omega (the Bloch-Siegert shift),
  corrects the initial values through the near-identity map
  b = z + eps*W(z, t), and reconstructs the rotating-frame amplitudes
  from the averaged ones with the same map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ResonantDenominator
from .schrodinger import AmplitudePair, Frame

__all__ = [
    "Rwa1Solution",
    "Avg2Solution",
    "rwa_solution",
    "rwa_populations",
    "naive_perturbation_c1",
    "bloch_siegert_detuning",
    "resonance_frequency",
    "avg2_initial",
    "avg2_solution",
    "reconstruct_b",
    "avg2_populations",
]

_DENOM_TOL = 1e-12


@dataclass(frozen=True)
class Rwa1Solution:
    """Parameters of the first-order (RWA) closed form."""

    omega0_half: float
    delta: float

    @property
    def omega_half_rabi(self) -> float:
        return math.sqrt(self.omega0_half ** 2 + 0.25 * self.delta ** 2)


@dataclass(frozen=True)
class Avg2Solution:
    """Coefficients of the second-order averaged closed form.

    z_i(t) = A_i cos(Omega_tilde t) + B_i sin(Omega_tilde t), built on the
    shifted detuning delta_tilde.  For the canonical initial state
    b(0) = (1, 0) the A_i are real and A2/A1 = Omega0/(2 omega) exactly.
    """

    omega0_half: float
    omega: float
    delta: float
    a1: complex
    a2: complex
    b1: complex
    b2: complex

    @property
    def delta_tilde(self) -> float:
        return bloch_siegert_detuning(self.omega0_half, self.omega, self.delta)

    @property
    def omega_tilde(self) -> float:
        return math.sqrt(self.omega0_half ** 2 + 0.25 * self.delta_tilde ** 2)


def _rwa_propagator(omega0_half: float, delta: float, t: float) -> np.ndarray:
    """Exact propagator of the RWA ODE (matrix exponential, 2x2)."""
    om = math.sqrt(omega0_half ** 2 + 0.25 * delta ** 2)
    h = np.array([[0.5 * delta, omega0_half],
                  [omega0_half, -0.5 * delta]], dtype=complex)
    if om == 0.0:
        return np.eye(2, dtype=complex)
    return math.cos(om * t) * np.eye(2) - 1j * math.sin(om * t) / om * h


def rwa_solution(omega0_half: float, delta: float, t,
                 b0=(1.0, 0.0)) -> AmplitudePair:
    """RWA amplitudes at time t for initial rotating-frame state b0.

    For b0 = (1, 0):
    b1 = cos(Omega t) - i (delta / 2 Omega) sin(Omega t),
    b2 = -i (Omega0 / Omega) sin(Omega t).
    """
    if isinstance(b0, AmplitudePair):
        b0 = (b0.a1, b0.a2)
    u = _rwa_propagator(omega0_half, delta, float(t))
    vec = u @ np.asarray(b0, dtype=complex)
    return AmplitudePair(vec[0], vec[1], Frame.ROTATING)


def rwa_populations(omega0_half: float, delta: float, t):
    """RWA occupation probabilities (N1, N2) for the state starting in level 1.

    N1 = cos^2(Omega t) + (delta^2 / 4 Omega^2) sin^2(Omega t),
    N2 = (Omega0^2 / Omega^2) sin^2(Omega t); N1 + N2 = 1 identically.
    Vectorized over t.
    """
    om_sq = omega0_half ** 2 + 0.25 * delta ** 2
    tt = np.asarray(t, dtype=float)
    if om_sq == 0.0:
        n2 = np.zeros_like(tt)
    else:
        om = math.sqrt(om_sq)
        n2 = (omega0_half ** 2 / om_sq) * np.sin(om * tt) ** 2
    n1 = 1.0 - n2
    if np.ndim(t):
        return n1, n2
    return float(n1), float(n2)


def naive_perturbation_c1(omega0_half: float, omega: float, omega0: float, t):
    """First-order iterative correction to c1(t) built on the RWA solution.

    Substitutes the RWA amplitudes back into the exact interaction-frame
    equation and integrates once in closed form.  Kept as a documented
    dead end: it does not reduce the dephasing of the plain RWA.
    Vectorized over t.
    """
    if omega0_half == 0.0:
        return np.ones_like(np.asarray(t, dtype=float), dtype=complex) \
            if np.ndim(t) else 1.0 + 0.0j
    delta = omega - omega0
    om = math.sqrt(omega0_half ** 2 + 0.25 * delta ** 2)
    d1 = 2.0 * om + delta
    d2 = 2.0 * om + 4.0 * omega - delta
    d3 = 2.0 * om - 4.0 * omega + delta
    d4 = 2.0 * om - delta
    for den in (d1, d2, d3, d4):
        if abs(den) < _DENOM_TOL:
            raise ResonantDenominator(
                f"closed-form denominator {den!r} below {_DENOM_TOL}")
    tt = np.asarray(t, dtype=float)
    i_plus = (-(np.exp(1j * (om + 0.5 * delta) * tt) - 1.0) / d1
              - (np.exp(-1j * (om + 2.0 * omega - 0.5 * delta) * tt) - 1.0) / d2)
    i_minus = ((-np.exp(1j * (om - 2.0 * omega + 0.5 * delta) * tt) + 1.0) / d3
               - (np.exp(-1j * (om - 0.5 * delta) * tt) - 1.0) / d4)
    c1 = 1.0 - (omega0_half ** 2 / om) * (i_plus + i_minus)
    return c1 if np.ndim(t) else complex(c1)


def bloch_siegert_detuning(omega0_half: float, omega: float,
                           delta: float) -> float:
    """Shifted detuning delta_tilde = delta - Omega0^2 / omega."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    return delta - omega0_half ** 2 / omega


def resonance_frequency(omega0_half: float, omega0: float) -> float:
    """Carrier frequency at which the shifted detuning vanishes.

    Positive root of omega^2 - omega0*omega - Omega0^2 = 0:
    omega* = (omega0 + sqrt(omega0^2 + 4 Omega0^2)) / 2.
    """
    if omega0 <= 0:
        raise ValueError("omega0 must be > 0")
    return 0.5 * (omega0 + math.sqrt(omega0 ** 2 + 4.0 * omega0_half ** 2))


def _w_matrix(omega0_half: float, omega: float, t: float) -> np.ndarray:
    """Near-identity correction matrix: b = (I + W(t)) z."""
    kappa = omega0_half / (2.0 * omega)
    e = cmath.exp(-2j * omega * t)
    return np.array([[0.0, kappa * e],
                     [-kappa / e, 0.0]], dtype=complex)


def avg2_initial(omega0_half: float, omega: float, delta: float,
                 b0=(1.0, 0.0)) -> Avg2Solution:
    """Averaged-frame coefficients matching rotating-frame initial values.

    Inverts b(0) = z(0) + W(z(0), 0) for z(0) (a 2x2 linear solve) and
    sets the sine coefficients from dz/dt(0) = -i H_tilde z(0).  For
    b0 = (1, 0) this reproduces
    A1 = 1 / (1 + (Omega0/2w)^2), A2 = (Omega0/2w) A1.
    """
    if isinstance(b0, AmplitudePair):
        b0 = (b0.a1, b0.a2)
    b0 = np.asarray(b0, dtype=complex)
    m = np.eye(2, dtype=complex) + _w_matrix(omega0_half, omega, 0.0)
    z0 = np.linalg.solve(m, b0)
    dt_ = bloch_siegert_detuning(omega0_half, omega, delta)
    om_t = math.sqrt(omega0_half ** 2 + 0.25 * dt_ ** 2)
    h = np.array([[0.5 * dt_, omega0_half],
                  [omega0_half, -0.5 * dt_]], dtype=complex)
    if om_t == 0.0:
        b_coef = np.zeros(2, dtype=complex)
    else:
        b_coef = -1j * (h @ z0) / om_t
    return Avg2Solution(omega0_half, omega, delta,
                        z0[0], z0[1], b_coef[0], b_coef[1])


def avg2_solution(omega0_half: float, omega: float, delta: float, t,
                  b0=(1.0, 0.0)):
    """Averaged amplitudes z(t) = A cos(Omega_tilde t) + B sin(Omega_tilde t).

    Scalar t returns an AmplitudePair in the averaged frame; array t
    returns an (n, 2) complex array.
    """
    sol = avg2_initial(omega0_half, omega, delta, b0)
    om_t = sol.omega_tilde
    tt = np.asarray(t, dtype=float)
    c, s = np.cos(om_t * tt), np.sin(om_t * tt)
    z1 = sol.a1 * c + sol.b1 * s
    z2 = sol.a2 * c + sol.b2 * s
    if np.ndim(t):
        return np.stack([z1, z2], axis=-1)
    return AmplitudePair(complex(z1), complex(z2), Frame.AVERAGED)


def reconstruct_b(z, t, omega0_half: float, omega: float):
    """Rotating-frame amplitudes from averaged ones: b = z + W(z, t).

    b1 = z1 + (Omega0/2w) e^{-2iwt} z2, b2 = z2 - (Omega0/2w) e^{+2iwt} z1.
    Vectorized when z is an (n, 2) array and t an (n,) array.
    """
    kappa = omega0_half / (2.0 * omega)
    if isinstance(z, AmplitudePair):
        e = cmath.exp(-2j * omega * t)
        b1 = z.a1 + kappa * e * z.a2
        b2 = z.a2 - kappa * z.a1 / e
        return AmplitudePair(b1, b2, Frame.ROTATING)
    z = np.asarray(z, dtype=complex)
    e = np.exp(-2j * omega * np.asarray(t, dtype=float))
    b1 = z[..., 0] + kappa * e * z[..., 1]
    b2 = z[..., 1] - kappa * z[..., 0] / e
    return np.stack([b1, b2], axis=-1)


def avg2_populations(omega0_half: float, omega: float, delta: float, t,
                     b0=(1.0, 0.0)):
    """Second-order averaged populations |b1|^2, |b2|^2 at time(s) t.

    Raw reconstructed magnitudes; the residual norm ripple of order
    (Omega0/2w)^2 is reported as-is, without renormalization.
    """
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    z = avg2_solution(omega0_half, omega, delta, tt, b0)
    b = reconstruct_b(z, tt, omega0_half, omega)
    n1 = np.abs(b[..., 0]) ** 2
    n2 = np.abs(b[..., 1]) ** 2
    if np.ndim(t):
        return n1, n2
    return float(n1[0]), float(n2[0])
