"""Built-in verification suite.

Each check pits an implementation route against an independent one (a
closed form against a numeric integration, a brute-force sweep against
the resonance formula, a designed area against quadrature) at a fixed
tolerance.  The test suite asserts these checks; the ``verify`` CLI
subcommand prints one pass/fail line per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import averaging, bloch, drives, pulsecraft, schrodinger
from .integrate import IntegratorConfig
from .params import TlsParams
from .scenario import ScenarioConfig, sweep_frequency

__all__ = ["CheckResult", "CHECKS", "run_check", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    cid: str
    description: str
    passed: bool
    detail: str


def _adaptive(n_points=2001, rel_tol=1e-11):
    return IntegratorConfig(mode="adaptive", rel_tol=rel_tol, abs_tol=1e-12,
                            record_points=n_points)


def _numeric_n1(p, d, t_grid, rel_tol=1e-11):
    cfg = _adaptive(len(t_grid), rel_tol)
    traj = schrodinger.propagate_interaction(
        p, d, (1.0, 0.0), (float(t_grid[0]), float(t_grid[-1])), cfg)
    n1, _ = schrodinger.populations(traj.states)
    return np.asarray(n1)


def check_norm_conservation() -> CheckResult:
    """c1: fixed-step RK4 keeps the state norm to 1e-8 over t in [0, 2000]."""
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.1)
    cfg = IntegratorConfig(mode="fixed_rk4", step=2.0 ** -10)
    traj = schrodinger.propagate_lab(p, d, (1.0, 0.0), (0.0, 2000.0), cfg)
    norms = np.abs(traj.states[:, 0]) ** 2 + np.abs(traj.states[:, 1]) ** 2
    drift = float(np.max(np.abs(norms - 1.0)))
    return CheckResult("c1", "norm conservation over t in [0, 2000]",
                       drift < 1e-8, f"max |norm-1| = {drift:.3e}")


def check_rwa_closed_form() -> CheckResult:
    """c2: RWA closed form equals the RWA ODE to 1e-7 pointwise."""
    p = TlsParams(omega0=1.0)
    worst = 0.0
    for omega0_half in (0.05, 0.1, 0.3):
        for delta in (0.0, 0.1):
            om = math.sqrt(omega0_half ** 2 + 0.25 * delta ** 2)
            t_end = 3.0 * math.pi / om
            t = np.linspace(0.0, t_end, 2001)
            d = drives.CwTone(omega=p.omega0 + delta,
                              amplitude_half=omega0_half)
            traj = schrodinger.propagate_rotating(
                p, d, (1.0, 0.0), (0.0, t_end), _adaptive(len(t), 1e-12),
                include_counter_rotating=False)
            n1_ode, _ = schrodinger.populations(traj.states)
            n1_cf, _ = averaging.rwa_populations(omega0_half, delta, t)
            worst = max(worst, float(np.max(np.abs(n1_ode - n1_cf))))
    return CheckResult("c2", "RWA closed form vs RWA ODE",
                       worst < 1e-7, f"max |dN1| = {worst:.3e}")


def check_bloch_siegert_resonance(tmp_dir=None) -> CheckResult:
    """c3: brute-force carrier sweep locates the shifted resonance."""
    import tempfile
    omega0_half = 0.1
    target = averaging.resonance_frequency(omega0_half, 1.0)
    # many flops: the recorded maximum then sits on the flop envelope,
    # where the counter-rotating ripple no longer biases the argmax
    span_end = 20.0 * math.pi / omega0_half
    cfg = ScenarioConfig(
        system=TlsParams(omega0=1.0),
        drive=drives.CwTone(omega=1.0, amplitude_half=omega0_half),
        solvers=("numeric_full",), span=(0.0, span_end),
        integrator=_adaptive(), n_points=10001,
        sweep_axis="carrier",
        sweep_grid=tuple(np.linspace(0.995, 1.025, 61)))
    with tempfile.TemporaryDirectory() as td:
        res = sweep_frequency(cfg, tmp_dir or td)
    err = abs(res["argmax"] - target)
    return CheckResult("c3", "Bloch-Siegert resonance from carrier sweep",
                       err < 2e-3,
                       f"argmax = {res['argmax']:.6f}, "
                       f"omega* = {target:.6f}, |diff| = {err:.2e}")


def check_avg2_beats_rwa() -> CheckResult:
    """c4: second-order averaging halves the RWA population error."""
    p = TlsParams(omega0=1.0)
    omega0_half = 0.1
    t = np.linspace(0.0, 3.0 * math.pi / omega0_half, 4001)
    d = drives.CwTone(omega=1.0, amplitude_half=omega0_half)
    n1_num = _numeric_n1(p, d, t)
    n1_rwa, _ = averaging.rwa_populations(omega0_half, 0.0, t)
    n1_avg2, _ = averaging.avg2_populations(omega0_half, 1.0, 0.0, t)
    err_rwa = float(np.max(np.abs(n1_rwa - n1_num)))
    err_avg2 = float(np.max(np.abs(n1_avg2 - n1_num)))
    return CheckResult("c4", "second-order averaging beats RWA",
                       err_avg2 < 0.5 * err_rwa,
                       f"avg2 err = {err_avg2:.3e}, rwa err = {err_rwa:.3e}")


def check_naive_no_improvement() -> CheckResult:
    """c5: the naive perturbative correction does not beat the RWA.

    The comparison targets the flop (slow) dynamics, so all three curves
    are averaged over one counter-rotating ripple period pi/omega before
    locating the first flop minimum; the naive correction's fast ripple
    terms track the numerics pointwise but do not reduce the dephasing
    of the flop envelope.
    """
    p = TlsParams(omega0=1.0)
    omega0_half, omega = 0.1, 1.2
    delta = omega - p.omega0
    om = math.sqrt(omega0_half ** 2 + 0.25 * delta ** 2)
    flop = math.pi / om
    t = np.linspace(0.0, 1.5 * flop, 16001)
    n1_num = _numeric_n1(p, drives.CwTone(omega=omega,
                                          amplitude_half=omega0_half), t)
    n1_rwa, _ = averaging.rwa_populations(omega0_half, delta, t)
    c1 = averaging.naive_perturbation_c1(omega0_half, omega, p.omega0, t)
    n1_naive = np.abs(c1) ** 2

    win = int(round((math.pi / omega) / (t[1] - t[0])))
    kernel = np.full(win, 1.0 / win)
    smooth = lambda y: np.convolve(y, kernel, mode="same")
    s_num, s_rwa, s_naive = smooth(n1_num), smooth(n1_rwa), smooth(n1_naive)

    mask = (t > win * (t[1] - t[0])) & (t < 1.2 * flop)
    k = np.where(mask)[0][int(np.argmin(s_num[mask]))]
    err_naive = abs(s_naive[k] - s_num[k])
    err_rwa = abs(s_rwa[k] - s_num[k])
    return CheckResult("c5", "naive perturbation does not improve on RWA",
                       err_naive >= err_rwa - 1e-12,
                       f"naive err = {err_naive:.3e}, rwa err = {err_rwa:.3e} "
                       f"at flop minimum t = {t[k]:.2f}")


def _train_sample_times(train):
    """Times right after each pulse: inter-pulse midpoints plus span end."""
    centers = [p.t_center for p in train.pulses]
    sigma = train.pulses[-1].sigma0
    times = [0.5 * (a + b) for a, b in zip(centers, centers[1:])]
    times.append(centers[-1] + 8.0 * sigma)
    return times


def check_shaped_train() -> CheckResult:
    """c6: shaped pi-pulse train inverts; avg2 tracks it; RWA breaks down."""
    p = TlsParams(omega0=1.0)
    omega = 1.1
    peak = pulsecraft.shaped_amplitude(omega - p.omega0, omega)
    train = pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(peak, omega), 3)
    t_marks = _train_sample_times(train)
    t = np.linspace(0.0, t_marks[-1], 4001)
    n1_num = _numeric_n1(p, train, t)
    s0 = bloch.BlochState(1.0, 0.0)
    cfg = _adaptive(len(t))
    tr_avg2 = bloch.simulate_bloch_avg2(p, train, s0, (0.0, t[-1]), cfg)
    n1_avg2 = bloch.reconstruct_sigma(tr_avg2, p, train)["n1"]
    tr_rwa = bloch.simulate_bloch_rwa(p, train, s0, (0.0, t[-1]), cfg)
    n1_rwa, _ = bloch.bloch_populations(tr_rwa.states[:, 0])
    n1_rwa = np.asarray(n1_rwa)

    idx = [int(np.argmin(np.abs(t - tm))) for tm in t_marks]
    inv_first = 1.0 - n1_num[idx[0]]
    avg2_gap = max(abs(n1_avg2[i] - n1_num[i]) for i in idx)
    inv_rwa_third = 1.0 - n1_rwa[idx[-1]]
    ok = (inv_first >= 0.985) and (avg2_gap <= 0.02) \
        and (inv_rwa_third < 0.80)
    return CheckResult("c6", "shaped pi-pulse train (inversion/avg2/RWA)",
                       ok,
                       f"numeric inversion after 1st pulse = {inv_first:.4f}, "
                       f"max avg2 gap = {avg2_gap:.4f}, "
                       f"RWA inversion after 3rd = {inv_rwa_third:.4f}")


def check_off_design_trains() -> CheckResult:
    """c7: mis-designed trains transfer only ~40% / ~44% of the population."""
    p = TlsParams(omega0=1.0)
    results = []
    for peak, expect in ((0.1, 0.40), (0.5, 0.44)):
        pulse = pulsecraft.make_pi_pulse(peak, 1.1)
        train = pulsecraft.make_pulse_train(pulse, 3,
                                            spacing=8.0 * pulse.sigma0)
        t_end = _train_sample_times(train)[-1]
        t = np.linspace(0.0, t_end, 2001)
        n1 = _numeric_n1(p, train, t)
        excited = 1.0 - float(n1[-1])
        results.append((peak, excited, expect,
                        abs(excited - expect) <= 0.05))
    ok = all(r[3] for r in results)
    detail = "; ".join(f"peak {r[0]}: excited = {r[1]:.3f} "
                       f"(expected {r[2]:.2f} +- 0.05)" for r in results)
    return CheckResult("c7", "off-design pi-pulse trains", ok, detail)


def _final_n1_phases(p, pulse, phases):
    span = (0.0, pulse.t_center + 8.0 * pulse.sigma0)
    finals = []
    cfg = _adaptive(11, 1e-10)
    for ph in phases:
        d = drives.with_phase0(pulse, float(ph))
        traj = schrodinger.propagate_interaction(p, d, (1.0, 0.0), span, cfg)
        finals.append(float(np.abs(traj.states[-1, 0]) ** 2))
    return np.array(finals)


def check_chirped_pulse_phases() -> CheckResult:
    """c8: chirped pi-pulse inverts at every phase; unchirped does not."""
    p = TlsParams(omega0=1.0)
    peak = 0.4
    phases = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    chirped = pulsecraft.make_chirped_pi_pulse(peak, p.omega0)
    plain = pulsecraft.make_pi_pulse(peak, p.omega0)
    n1_chirp = _final_n1_phases(p, chirped, phases)
    n1_plain = _final_n1_phases(p, plain, phases)
    worst_chirp = float(np.max(n1_chirp))
    spread_plain = float(np.max(n1_plain) - np.min(n1_plain))
    ok = worst_chirp < 0.02 and spread_plain > 0.05
    return CheckResult("c8", "chirped pi-pulse phase robustness", ok,
                       f"max chirped final N1 = {worst_chirp:.4f}, "
                       f"unchirped spread = {spread_plain:.4f}")


def check_bloch_fixed_point() -> CheckResult:
    """c9: averaged Bloch dynamics converge to the closed-form fixed point."""
    p = TlsParams(omega0=1.0, gamma1=0.0002, gamma2=0.02, delta0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.1)
    delta_star, _ = bloch.bloch_rwa_fixed_point(0.1, 0.0, p.gamma1, p.gamma2,
                                                p.delta0)
    traj = bloch.simulate_bloch_rwa(p, d, bloch.BlochState(1.0, 0.0),
                                    (0.0, 2000.0), _adaptive(201))
    gap = abs(float(traj.states[-1, 0].real) - delta_star)
    return CheckResult("c9", "averaged Bloch fixed point", gap < 1e-6,
                       f"Delta* = {delta_star:.6e}, |Delta(T)-Delta*| = "
                       f"{gap:.2e}")


def check_dissipative_chirp() -> CheckResult:
    """c10: with relaxation, chirp still deepens the inversion and the
    corrected avg2 trace tracks the numerics to 0.02."""
    p = TlsParams(omega0=1.0, gamma1=0.0002, gamma2=0.02, delta0=1.0)
    peak = 0.4
    chirped = pulsecraft.make_chirped_pi_pulse(peak, p.omega0)
    plain = pulsecraft.make_pi_pulse(peak, p.omega0)
    span = (0.0, chirped.t_center + 8.0 * chirped.sigma0)
    cfg = _adaptive(4001)
    s0 = bloch.BlochState(1.0, 0.0)
    tr_chirp = bloch.simulate_bloch_full(p, chirped, s0, span, cfg)
    tr_plain = bloch.simulate_bloch_full(p, plain, s0, span, cfg)
    n1_chirp = 0.5 * (1.0 + tr_chirp.states[:, 0].real)
    n1_plain = 0.5 * (1.0 + tr_plain.states[:, 0].real)
    tr_avg2 = bloch.simulate_bloch_avg2(p, chirped, s0, span, cfg)
    n1_avg2 = bloch.reconstruct_sigma(tr_avg2, p, chirped)["n1"]
    deeper = float(np.min(n1_chirp)) < float(np.min(n1_plain))
    gap = float(np.max(np.abs(n1_avg2 - n1_chirp)))
    ok = deeper and gap < 0.02
    return CheckResult("c10", "dissipative chirped-pulse advantage", ok,
                       f"min N1 chirped = {np.min(n1_chirp):.4f}, "
                       f"unchirped = {np.min(n1_plain):.4f}, "
                       f"max avg2 gap = {gap:.4f}")


def check_pulse_areas() -> CheckResult:
    """c11: designed envelope areas equal pi (and multiples for trains)."""
    worst_single = 0.0
    for peak in (0.1, 0.2, 0.3, 0.4, 0.5):
        pulse = pulsecraft.make_pi_pulse(peak, 1.1)
        areas, _, _ = pulsecraft.verify_pulse_area(pulse)
        worst_single = max(worst_single, abs(areas[0] - math.pi))
    train = pulsecraft.make_pulse_train(pulsecraft.make_pi_pulse(0.33, 1.1), 3)
    areas, _, _ = pulsecraft.verify_pulse_area(train)
    cum_err = max(abs(sum(areas[:k + 1]) - (k + 1) * math.pi)
                  for k in range(3))
    ok = worst_single < 1e-6 and cum_err < 3e-6
    return CheckResult("c11", "pi-pulse envelope areas", ok,
                       f"max single |area-pi| = {worst_single:.2e}, "
                       f"max train cumulative error = {cum_err:.2e}")


def check_phase_invariance() -> CheckResult:
    """c12: averaged population dynamics are independent of the drive phase."""
    p = TlsParams(omega0=1.0, gamma1=0.0002, gamma2=0.02, delta0=1.0)
    cfg = IntegratorConfig(mode="fixed_rk4", step=2.0 ** -10)
    worst = 0.0
    for run in (bloch.simulate_bloch_rwa, bloch.simulate_bloch_avg2):
        base = None
        for phi0 in (0.0, 1.234, 0.5 * math.pi):
            d = drives.CwTone(omega=1.05, amplitude_half=0.1, phase0=phi0)
            traj = run(p, d, bloch.BlochState(1.0, 0.0), (0.0, 50.0), cfg)
            delta = traj.states[:, 0].real
            if base is None:
                base = delta
            else:
                worst = max(worst, float(np.max(np.abs(delta - base))))
    return CheckResult("c12", "phase invariance of averaged dynamics",
                       worst < 1e-12, f"max |dDelta| across phases = {worst:.2e}")


CHECKS = {
    "c1": check_norm_conservation,
    "c2": check_rwa_closed_form,
    "c3": check_bloch_siegert_resonance,
    "c4": check_avg2_beats_rwa,
    "c5": check_naive_no_improvement,
    "c6": check_shaped_train,
    "c7": check_off_design_trains,
    "c8": check_chirped_pulse_phases,
    "c9": check_bloch_fixed_point,
    "c10": check_dissipative_chirp,
    "c11": check_pulse_areas,
    "c12": check_phase_invariance,
}


def run_check(cid: str) -> CheckResult:
    return CHECKS[cid]()


def run_all(ids=None, stream=None) -> list[CheckResult]:
    """Run the selected checks (all by default), printing one line each."""
    import sys
    stream = stream or sys.stdout
    results = []
    for cid in ids or CHECKS:
        res = run_check(cid)
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.cid}: {res.description} -- {res.detail}",
              file=stream)
        results.append(res)
    return results
