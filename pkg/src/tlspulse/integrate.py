"""Generic ODE engine for small complex/real state vectors.

Two modes:

* ``fixed_rk4`` -- classical 4th-order Runge-Kutta with a constant step
  (default 2**-10, the step used for all reference simulations); the last
  step is shortened to land exactly on the endpoint.
* ``adaptive`` -- high-accuracy DOP853 (scipy) with tight tolerances,
  used as the independent oracle and for smooth parameter sweeps.

Both modes are deterministic: identical inputs give bit-identical
trajectories.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicHermiteSpline

from .errors import NonFiniteState, OutOfRange, StepUnderflow

__all__ = ["IntegratorConfig", "Trajectory", "integrate", "sample"]

DEFAULT_STEP = 2.0 ** -10


@dataclass(frozen=True)
class IntegratorConfig:
    """Integration mode and resolution settings.

    ``record_stride`` (fixed mode) keeps every n-th step; ``None`` picks a
    stride that records at least ~2000 points.  ``record_points`` sets the
    uniform output grid of the adaptive mode.
    """

    mode: str = "fixed_rk4"
    step: float = DEFAULT_STEP
    rel_tol: float = 1e-12
    abs_tol: float = 1e-12
    record_stride: int | None = None
    record_points: int = 2001

    def __post_init__(self):
        if self.mode not in ("fixed_rk4", "adaptive"):
            raise ValueError(f"unknown integrator mode: {self.mode!r}")
        if self.step <= 0:
            raise ValueError("step must be > 0")
        if not (0 < self.rel_tol < 1 and 0 < self.abs_tol < 1):
            raise ValueError("tolerances must lie in (0, 1)")
        if self.record_stride is not None and self.record_stride < 1:
            raise ValueError("record_stride must be a positive integer")
        if self.record_points < 2:
            raise ValueError("record_points must be at least 2")


@dataclass
class Trajectory:
    """Sampled solution on a strictly increasing time grid.

    ``states`` has one row per time; ``derivs`` holds the right-hand side
    at the recorded nodes and feeds the cubic Hermite interpolant used by
    :func:`sample`.
    """

    times: np.ndarray
    states: np.ndarray
    derivs: np.ndarray
    meta: dict = field(default_factory=dict)
    _spline: CubicHermiteSpline | None = field(default=None, repr=False)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.states = np.asarray(self.states)
        self.derivs = np.asarray(self.derivs)
        if len(self.times) != len(self.states):
            raise ValueError("times and states must have equal length")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    def sample(self, t):
        """State at time t by cubic Hermite interpolation; exact at nodes."""
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr < self.times[0]) or np.any(t_arr > self.times[-1]):
            raise OutOfRange(
                f"t={t} outside span [{self.times[0]}, {self.times[-1]}]")
        if self._spline is None:
            self._spline = CubicHermiteSpline(self.times, self.states,
                                              self.derivs, axis=0)
        return self._spline(t)

    def component(self, j: int) -> np.ndarray:
        return self.states[:, j]


def sample(traj: Trajectory, t):
    """Module-level alias for :meth:`Trajectory.sample`."""
    return traj.sample(t)


def _auto_stride(n_steps: int) -> int:
    return max(1, n_steps // 2000)


def integrate(rhs, y0, t_span, cfg: IntegratorConfig | None = None,
              meta: dict | None = None) -> Trajectory:
    """Integrate dy/dt = rhs(t, y) over t_span and record a Trajectory.

    Parameters
    ----------
    rhs : callable(t, y) -> array_like
        Vector field; may return complex values.
    y0 : array_like
        Initial state.
    t_span : (float, float)
        Start and end times, t_a < t_b.
    cfg : IntegratorConfig, optional
        Defaults to fixed-step RK4 with step 2**-10.

    Raises
    ------
    NonFiniteState
        If the state leaves the finite range (rhs blow-up).
    StepUnderflow
        If the adaptive solver cannot advance (step < 1e-14 * span).
    """
    if cfg is None:
        cfg = IntegratorConfig()
    t_a, t_b = float(t_span[0]), float(t_span[1])
    if not t_a < t_b:
        raise ValueError("t_span must satisfy t_a < t_b")
    y0 = np.atleast_1d(np.asarray(y0))
    if np.iscomplexobj(y0):
        y0 = y0.astype(complex)
    else:
        y0 = y0.astype(float)
    base_meta = {"integrator": cfg.mode, "step": cfg.step,
                 "rel_tol": cfg.rel_tol, "abs_tol": cfg.abs_tol}
    if meta:
        base_meta.update(meta)

    if cfg.mode == "fixed_rk4":
        return _integrate_rk4(rhs, y0, t_a, t_b, cfg, base_meta)
    return _integrate_adaptive(rhs, y0, t_a, t_b, cfg, base_meta)


def _integrate_rk4(rhs, y0, t_a, t_b, cfg, meta) -> Trajectory:
    h = cfg.step
    span = t_b - t_a
    n_steps = int(math.ceil(span / h - 1e-12))
    stride = cfg.record_stride or _auto_stride(n_steps)

    times = []
    states = []
    derivs = []
    t = t_a
    y = y0.copy()
    k1 = np.asarray(rhs(t, y))
    times.append(t)
    states.append(y.copy())
    derivs.append(k1)

    for i in range(n_steps):
        hi = h if i < n_steps - 1 else (t_b - t)
        half = 0.5 * hi
        k2 = np.asarray(rhs(t + half, y + half * k1))
        k3 = np.asarray(rhs(t + half, y + half * k2))
        k4 = np.asarray(rhs(t + hi, y + hi * k3))
        y = y + (hi / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        t = t_a + (i + 1) * h if i < n_steps - 1 else t_b
        k1 = np.asarray(rhs(t, y))
        if (i + 1) % stride == 0 or i == n_steps - 1:
            if not np.all(np.isfinite(np.abs(y))):
                raise NonFiniteState(f"state became non-finite at t={t}")
            times.append(t)
            states.append(y.copy())
            derivs.append(k1)

    return Trajectory(np.array(times), np.array(states), np.array(derivs),
                      meta)


def _integrate_adaptive(rhs, y0, t_a, t_b, cfg, meta) -> Trajectory:
    t_eval = np.linspace(t_a, t_b, cfg.record_points)
    sol = solve_ivp(rhs, (t_a, t_b), y0, method="DOP853", t_eval=t_eval,
                    rtol=cfg.rel_tol, atol=cfg.abs_tol)
    if not sol.success:
        msg = sol.message or ""
        if "step size" in msg.lower() or sol.t.size and \
                (t_b - t_a) * 1e-14 > np.min(np.diff(sol.t, prepend=t_a)):
            raise StepUnderflow(msg)
        raise NonFiniteState(msg)
    states = sol.y.T
    if not np.all(np.isfinite(np.abs(states))):
        raise NonFiniteState("adaptive solution contains non-finite values")
    derivs = np.array([rhs(t, y) for t, y in zip(sol.t, states)])
    return Trajectory(sol.t, states, derivs, meta)
