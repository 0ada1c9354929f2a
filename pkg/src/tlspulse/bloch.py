"""Density-matrix dynamics of the driven two-level system with relaxation.

Three routes:

* full optical Bloch equations in the lab frame (valid for any drive,
  including chirped pulses and trains):
      dDelta/dt = -gamma1 (Delta - Delta0) + 4 Im(sigma) F(t),
      dsigma/dt = -gamma2 sigma + i omega0 sigma - i Delta F(t);
* first-order averaged (RWA) equations in the slowly-varying frame
  sigma = e^{i Phi(t)} sigma_tilde, with instantaneous detuning
  delta(t) = omega(t) - omega0;
* second-order averaged equations, identical except that the detuning is
  shifted to delta(t) - Omega0(t)^2 / omega(t).  For a chirped pulse that
  follows the amplitude-dependent resonance the shifted detuning is
  identically zero.

The averaged trajectories can be lifted back to the full dynamics with
the near-identity correction of the averaging transformation
(:func:`reconstruct_sigma`).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import drives
from .errors import ZeroDissipation
from .integrate import IntegratorConfig, Trajectory, integrate
from .params import TlsParams

__all__ = [
    "BlochState",
    "simulate_bloch_full",
    "simulate_bloch_rwa",
    "simulate_bloch_avg2",
    "bloch_rwa_fixed_point",
    "reconstruct_sigma",
    "bloch_populations",
]


@dataclass(frozen=True)
class BlochState:
    """Population difference and coherence of the two-level system.

    ``delta_pop`` = N1 - N2 (real, |.| <= 1); ``sigma`` is the complex
    coherence.  Physical states satisfy 4|sigma|^2 + delta_pop^2 <= 1.
    """

    delta_pop: float
    sigma: complex = 0.0

    def __post_init__(self):
        if abs(self.delta_pop) > 1.0 + 1e-12:
            raise ValueError("|delta_pop| must not exceed 1")

    def as_array(self) -> np.ndarray:
        return np.array([self.delta_pop, self.sigma], dtype=complex)


def _state_vector(s0) -> np.ndarray:
    if isinstance(s0, BlochState):
        return s0.as_array()
    return np.asarray(s0, dtype=complex)


def bloch_populations(delta_pop):
    """(N1, N2) from the population difference: N1 = (1 + Delta)/2."""
    n1 = 0.5 * (1.0 + np.real(delta_pop))
    return n1, 1.0 - n1


def simulate_bloch_full(p: TlsParams, d, s0, t_span,
                        cfg: IntegratorConfig | None = None) -> Trajectory:
    """Integrate the full driven Bloch equations in the lab frame.

    The state vector is (Delta, sigma) with Delta stored in the real part
    of the first complex component.  At t = 0 the accumulated carrier
    phase vanishes, so ``s0.sigma`` is simultaneously the lab-frame and
    the slowly-varying coherence.
    """
    g1, g2, w0, d0 = p.gamma1, p.gamma2, p.omega0, p.delta0
    f = drives.field_fn(d)
    y0 = _state_vector(s0)

    def rhs(t, y):
        ft = f(t)
        delta = y[0].real
        sigma = y[1]
        return np.array((-g1 * (delta - d0) + 4.0 * sigma.imag * ft,
                         (-g2 + 1j * w0) * sigma - 1j * delta * ft))

    return integrate(rhs, y0, t_span, cfg,
                     meta={"model": "bloch_full",
                           "drive": drives.drive_to_dict(d)})


def _averaged_rhs(p: TlsParams, d, shifted: bool):
    """RHS of the averaged Bloch equations with time-dependent coefficients.

    dDelta/dt = -gamma1 (Delta - Delta0) + 4 Omega0(t) Im(sigma_t e^{-i phi0}),
    dsigma_t/dt = -gamma2 sigma_t - i delta_eff(t) sigma_t
                  - i Omega0(t) Delta e^{i phi0},
    with delta_eff = omega(t) - omega0 (first order) or additionally
    shifted by -Omega0(t)^2/omega(t) (second order).
    """
    g1, g2, w0, d0 = p.gamma1, p.gamma2, p.omega0, p.delta0
    if isinstance(d, drives.PulseTrain):
        def phase_factor(t):
            return cmath.exp(1j * drives.phase_offset(d, t))
    else:
        ep_const = cmath.exp(1j * drives.phase_offset(d, 0.0))

        def phase_factor(t):
            return ep_const

    def rhs(t, y):
        env = drives.envelope_amplitude(d, t)
        w = drives.instantaneous_frequency(d, t)
        delta_eff = w - w0
        if shifted:
            delta_eff -= env * env / w
        delta = y[0].real
        sigma = y[1]
        ep = phase_factor(t)
        return np.array((-g1 * (delta - d0)
                         + 4.0 * env * (sigma * ep.conjugate()).imag,
                         (-g2 - 1j * delta_eff) * sigma - 1j * env * delta * ep))

    return rhs


def simulate_bloch_rwa(p: TlsParams, d, s0, t_span,
                       cfg: IntegratorConfig | None = None) -> Trajectory:
    """First-order averaged (RWA) Bloch dynamics in the slowly-varying frame."""
    rhs = _averaged_rhs(p, d, shifted=False)
    return integrate(rhs, _state_vector(s0), t_span, cfg,
                     meta={"model": "bloch_rwa",
                           "drive": drives.drive_to_dict(d)})


def simulate_bloch_avg2(p: TlsParams, d, s0, t_span,
                        cfg: IntegratorConfig | None = None) -> Trajectory:
    """Second-order averaged Bloch dynamics (Bloch-Siegert shifted detuning)."""
    rhs = _averaged_rhs(p, d, shifted=True)
    return integrate(rhs, _state_vector(s0), t_span, cfg,
                     meta={"model": "bloch_avg2",
                           "drive": drives.drive_to_dict(d)})


def bloch_rwa_fixed_point(omega0_half: float, delta: float, gamma1: float,
                          gamma2: float, delta0: float,
                          phi0: float = 0.0) -> tuple[float, complex]:
    """Stationary point of the first-order averaged Bloch equations.

    Delta* = Delta0 / (1 + 4 Omega0^2 gamma2 / (gamma1 (gamma2^2 + delta^2))),
    sigma* = -i Omega0 Delta0 (gamma2 - i delta) e^{i phi0}
             / (gamma2^2 + delta^2 + 4 Omega0^2 gamma2 / gamma1).
    """
    if gamma1 <= 0 or gamma2 <= 0:
        raise ZeroDissipation("fixed point requires gamma1 > 0 and gamma2 > 0")
    denom = gamma2 ** 2 + delta ** 2
    delta_star = delta0 / (1.0 + 4.0 * omega0_half ** 2 * gamma2
                           / (gamma1 * denom))
    sigma_star = (-1j * omega0_half * delta0 * (gamma2 - 1j * delta)
                  * cmath.exp(1j * phi0)
                  / (denom + 4.0 * omega0_half ** 2 * gamma2 / gamma1))
    return delta_star, sigma_star


def reconstruct_sigma(traj: Trajectory, p: TlsParams, d):
    """Lift an averaged Bloch trajectory back to the full observables.

    The amplitude-level correction b = (1 + w) z, with
    w = kappa [[0, e^{-i theta}], [-e^{+i theta}, 0]],
    kappa = Omega0(t)/2w(t) and theta(t) = 2 Phi(t) + phi(t) (phi the
    drive's effective phase offset), acts on the density matrix as the
    congruence rho -> (1+w) rho (1+w)^dag / trace.  In Bloch variables:
        Delta_full = [(1 - kappa^2) Delta
                      - 4 kappa Re(sigma_t e^{i theta})] / (1 + kappa^2),
        sigma_t_full = [sigma_t + kappa Delta e^{-i theta}
                        - kappa^2 e^{-2 i theta} conj(sigma_t)]
                       / (1 + kappa^2).
    The lab coherence is sigma = e^{i Phi} sigma_t_full.

    Returns a dict with keys t, delta, sigma_tilde, sigma_lab, n1, n2.
    """
    t = traj.times
    delta = traj.states[:, 0].real
    sigma_t = traj.states[:, 1]
    env = np.asarray(drives.envelope_amplitude(d, t), dtype=float)
    w = np.asarray(drives.instantaneous_frequency(d, t), dtype=float)
    phi = np.asarray(drives.accumulated_phase(d, t), dtype=float)
    phi0 = np.asarray(drives.phase_offset(d, t), dtype=float)
    theta = 2.0 * phi + phi0
    kappa = 0.5 * env / w
    norm = 1.0 + kappa ** 2
    delta_full = ((1.0 - kappa ** 2) * delta
                  - 4.0 * kappa * np.real(sigma_t * np.exp(1j * theta))) / norm
    sigma_t_full = (sigma_t + kappa * delta * np.exp(-1j * theta)
                    - kappa ** 2 * np.exp(-2j * theta)
                    * np.conj(sigma_t)) / norm
    sigma_lab = np.exp(1j * phi) * sigma_t_full
    n1 = 0.5 * (1.0 + delta_full)
    return {
        "t": t,
        "delta": delta_full,
        "sigma_tilde": sigma_t_full,
        "sigma_lab": sigma_lab,
        "n1": n1,
        "n2": 1.0 - n1,
    }
