"""Scenario configuration and batch execution.

A scenario bundles the system parameters, one drive, a set of solvers, a
time span, and integrator settings.  Running it emits one CSV per solver
on a shared time grid plus a manifest with checksums, so a fixed
configuration always reproduces byte-identical datasets.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import averaging, bloch, drives, schrodinger
from .datafiles import write_csv, write_manifest
from .errors import ConfigError
from .integrate import IntegratorConfig
from .params import TlsParams

__all__ = ["ScenarioConfig", "run_scenario", "sweep_phase", "sweep_frequency",
           "SOLVERS"]

SOLVERS = ("numeric_full", "numeric_bloch", "rwa", "avg2", "naive")


@dataclass(frozen=True)
class ScenarioConfig:
    system: TlsParams
    drive: drives.DriveField
    solvers: tuple
    span: tuple
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    n_points: int = 2001
    sweep_axis: str | None = None
    sweep_grid: tuple | None = None

    def __post_init__(self):
        if len(self.solvers) == 0:
            raise ConfigError("solvers: at least one solver is required")
        for s in self.solvers:
            if s not in SOLVERS:
                raise ConfigError(f"solvers: unknown solver {s!r}")
        if not (len(self.span) == 2 and self.span[0] < self.span[1]):
            raise ConfigError("span: need [t_a, t_b] with t_a < t_b")
        if self.sweep_axis is not None:
            if self.sweep_axis not in ("phase0", "carrier", "amplitude"):
                raise ConfigError(f"sweep.axis: unknown axis {self.sweep_axis!r}")
            if not self.sweep_grid or not all(
                    np.isfinite(v) for v in self.sweep_grid):
                raise ConfigError("sweep.grid: nonempty finite grid required")

    @classmethod
    def from_dict(cls, spec: dict) -> "ScenarioConfig":
        try:
            system = TlsParams(**spec.get("system", {}))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"system: {exc}") from exc
        if "drive" not in spec:
            raise ConfigError("drive: missing")
        try:
            drv = drives.drive_from_dict(spec["drive"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"drive: {exc}") from exc
        solvers = tuple(spec.get("solvers", ()))
        span = tuple(spec.get("span", ()))
        try:
            integ = IntegratorConfig(**spec.get("integrator", {}))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"integrator: {exc}") from exc
        sweep = spec.get("sweep") or {}
        return cls(system=system, drive=drv, solvers=solvers, span=span,
                   integrator=integ, n_points=int(spec.get("n_points", 2001)),
                   sweep_axis=sweep.get("axis"),
                   sweep_grid=tuple(sweep.get("grid", ())) or None)

    def to_dict(self) -> dict:
        d = {
            "system": {"omega0": self.system.omega0,
                       "gamma1": self.system.gamma1,
                       "gamma2": self.system.gamma2,
                       "delta0": self.system.delta0},
            "drive": drives.drive_to_dict(self.drive),
            "solvers": list(self.solvers),
            "span": list(self.span),
            "integrator": {"mode": self.integrator.mode,
                           "step": self.integrator.step,
                           "rel_tol": self.integrator.rel_tol,
                           "abs_tol": self.integrator.abs_tol},
            "n_points": self.n_points,
        }
        if self.sweep_axis is not None:
            d["sweep"] = {"axis": self.sweep_axis,
                          "grid": list(self.sweep_grid)}
        return d


def _is_unitary(p: TlsParams) -> bool:
    return p.gamma1 == 0.0 and p.gamma2 == 0.0


def _is_cw(d) -> bool:
    return isinstance(d, drives.CwTone)


def _ground_amplitudes():
    return (1.0 + 0.0j, 0.0j)


def _ground_bloch(p: TlsParams) -> bloch.BlochState:
    return bloch.BlochState(1.0, 0.0)


def solver_populations(name: str, cfg: ScenarioConfig,
                       t_grid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ground/excited populations of one solver on the given grid.

    Every solver starts from the ground state N1 = 1.
    """
    p, d = cfg.system, cfg.drive
    span = (float(t_grid[0]), float(t_grid[-1]))
    integ = cfg.integrator
    if integ.mode == "adaptive":
        # align the recording grid with the requested one
        integ = IntegratorConfig(mode="adaptive", rel_tol=integ.rel_tol,
                                 abs_tol=integ.abs_tol,
                                 record_points=len(t_grid))

    if name == "numeric_full":
        if not _is_unitary(p):
            raise ConfigError(
                "solvers: numeric_full is unitary; use numeric_bloch "
                "when gamma1 or gamma2 is nonzero")
        traj = schrodinger.propagate_interaction(p, d, _ground_amplitudes(),
                                                 span, integ)
        states = traj.states if np.array_equal(traj.times, t_grid) \
            else traj.sample(t_grid)
        n1, n2 = schrodinger.populations(states)
        return np.asarray(n1), np.asarray(n2)

    if name == "numeric_bloch":
        traj = bloch.simulate_bloch_full(p, d, _ground_bloch(p), span, integ)
        states = traj.states if np.array_equal(traj.times, t_grid) \
            else traj.sample(t_grid)
        n1, n2 = bloch.bloch_populations(states[:, 0])
        return np.asarray(n1), np.asarray(n2)

    if name == "rwa":
        if _is_cw(d) and _is_unitary(p):
            omega0_half = d.amplitude_half
            delta = d.omega - p.omega0
            return averaging.rwa_populations(omega0_half, delta, t_grid)
        traj = bloch.simulate_bloch_rwa(p, d, _ground_bloch(p), span, integ)
        delta_pop = traj.states[:, 0].real \
            if np.array_equal(traj.times, t_grid) \
            else np.real(traj.sample(t_grid)[:, 0])
        n1, n2 = bloch.bloch_populations(delta_pop)
        return np.asarray(n1), np.asarray(n2)

    if name == "avg2":
        if _is_cw(d) and _is_unitary(p):
            omega0_half = d.amplitude_half
            delta = d.omega - p.omega0
            return averaging.avg2_populations(omega0_half, d.omega, delta,
                                              t_grid)
        traj = bloch.simulate_bloch_avg2(p, d, _ground_bloch(p), span, integ)
        if not np.array_equal(traj.times, t_grid):
            states = traj.sample(t_grid)
            traj = type(traj)(t_grid, states,
                              np.zeros_like(states), traj.meta)
        rec = bloch.reconstruct_sigma(traj, p, d)
        return rec["n1"], rec["n2"]

    if name == "naive":
        if not (_is_cw(d) and _is_unitary(p)):
            raise ConfigError(
                "solvers: naive applies to unitary CW driving only")
        c1 = averaging.naive_perturbation_c1(d.amplitude_half, d.omega,
                                             p.omega0, t_grid)
        n1 = np.abs(c1) ** 2
        return n1, 1.0 - n1

    raise ConfigError(f"solvers: unknown solver {name!r}")


def run_scenario(cfg: ScenarioConfig, out_dir) -> dict:
    """Run every configured solver and emit one CSV per solver + manifest."""
    os.makedirs(out_dir, exist_ok=True)
    t0 = time.perf_counter()
    t_grid = np.linspace(cfg.span[0], cfg.span[1], cfg.n_points)
    paths = []
    for name in cfg.solvers:
        n1, n2 = solver_populations(name, cfg, t_grid)
        path = os.path.join(out_dir, f"{name}.csv")
        write_csv(path, ["t", "n1", "n2"], [t_grid, n1, n2])
        paths.append(path)
    manifest = write_manifest(out_dir, paths, cfg.to_dict(),
                              time.perf_counter() - t0)
    return {"files": paths, "manifest": manifest}


def sweep_phase(cfg: ScenarioConfig, out_dir) -> dict:
    """Final ground population versus carrier phase, one column per solver."""
    os.makedirs(out_dir, exist_ok=True)
    t0 = time.perf_counter()
    if cfg.sweep_axis != "phase0":
        raise ConfigError("sweep.axis: sweep_phase needs axis 'phase0'")
    grid = np.asarray(cfg.sweep_grid, dtype=float)
    t_grid = np.linspace(cfg.span[0], cfg.span[1], cfg.n_points)
    finals = {name: [] for name in cfg.solvers}
    for phi0 in grid:
        swept = ScenarioConfig(
            system=cfg.system, drive=drives.with_phase0(cfg.drive, float(phi0)),
            solvers=cfg.solvers, span=cfg.span, integrator=cfg.integrator,
            n_points=cfg.n_points)
        for name in cfg.solvers:
            n1, _ = solver_populations(name, swept, t_grid)
            finals[name].append(float(n1[-1]))
    path = os.path.join(out_dir, "sweep_phase.csv")
    write_csv(path, ["phi0"] + [f"final_n1_{n}" for n in cfg.solvers],
              [grid] + [np.array(finals[n]) for n in cfg.solvers])
    manifest = write_manifest(out_dir, [path], cfg.to_dict(),
                              time.perf_counter() - t0)
    return {"files": [path], "manifest": manifest, "finals": finals}


def sweep_frequency(cfg: ScenarioConfig, out_dir) -> dict:
    """Peak excited population over the configured span per carrier.

    Runs the exact numeric solver per grid point and reports the carrier
    that maximizes the peak N2 (argmax refined by a parabola through the
    three points around the grid maximum).  Spanning many flops is
    recommended: the recorded maximum then sits on the flop envelope and
    the counter-rotating ripple does not bias the argmax.
    """
    os.makedirs(out_dir, exist_ok=True)
    t0 = time.perf_counter()
    if cfg.sweep_axis != "carrier":
        raise ConfigError("sweep.axis: sweep_frequency needs axis 'carrier'")
    if not _is_cw(cfg.drive):
        raise ConfigError("drive: carrier sweeps use a CW drive")
    grid = np.asarray(cfg.sweep_grid, dtype=float)
    omega0_half = cfg.drive.amplitude_half
    peaks = []
    for w in grid:
        swept = ScenarioConfig(
            system=cfg.system,
            drive=drives.CwTone(omega=float(w),
                                amplitude_half=omega0_half,
                                phase0=cfg.drive.phase0),
            solvers=("numeric_full",), span=cfg.span,
            integrator=cfg.integrator, n_points=cfg.n_points)
        t_grid = np.linspace(cfg.span[0], cfg.span[1], cfg.n_points)
        _, n2 = solver_populations("numeric_full", swept, t_grid)
        peaks.append(float(np.max(n2)))
    peaks = np.array(peaks)
    k = int(np.argmax(peaks))
    argmax = float(grid[k])
    if 0 < k < len(grid) - 1:
        # parabolic refinement of the discrete argmax
        y0, y1, y2 = peaks[k - 1], peaks[k], peaks[k + 1]
        denom = y0 - 2.0 * y1 + y2
        if denom < 0:
            argmax += 0.5 * (y0 - y2) / denom * (grid[k + 1] - grid[k])
    path = os.path.join(out_dir, "sweep_frequency.csv")
    write_csv(path, ["omega", "peak_n2"], [grid, peaks])
    manifest = write_manifest(out_dir, [path], cfg.to_dict(),
                              time.perf_counter() - t0)
    return {"files": [path], "manifest": manifest, "argmax": argmax,
            "peaks": peaks}
