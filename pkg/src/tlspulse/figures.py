"""Figure-style reference datasets.

Each entry regenerates, as CSV, the data behind one of the reference
comparisons: CW Rabi flopping against the closed forms (fig1-fig3),
chirped-pulse phase robustness (fig4), the dissipative chirped pulse
(fig5), shaped and mis-shaped pi-pulse trains (fig6, fig7), and the
phase-dependence panels (fig8).  A small matplotlib script consuming
only the CSVs is emitted next to each dataset.
"""

from __future__ import annotations

import math
import os
import time

import numpy as np

from . import averaging, bloch, drives, pulsecraft, schrodinger
from .datafiles import write_csv, write_manifest
from .errors import UnknownFigure
from .integrate import IntegratorConfig
from .params import TlsParams

__all__ = ["reproduce_figure", "FIGURES"]


def _numeric_n1(p, d, span, n_points=2001):
    cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-11, abs_tol=1e-12,
                           record_points=n_points)
    traj = schrodinger.propagate_interaction(p, d, (1.0, 0.0), span, cfg)
    n1, _ = schrodinger.populations(traj.states)
    return traj.times, n1


def _final_n1(p, d, span):
    cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-10, abs_tol=1e-12,
                           record_points=11)
    traj = schrodinger.propagate_interaction(p, d, (1.0, 0.0), span, cfg)
    return float(np.abs(traj.states[-1, 0]) ** 2)


def _averaged_pulse_n1(p, d, span, n_points, order):
    s0 = bloch.BlochState(1.0, 0.0)
    cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-11, abs_tol=1e-12,
                           record_points=n_points)
    run = bloch.simulate_bloch_rwa if order == 1 else bloch.simulate_bloch_avg2
    traj = run(p, d, s0, span, cfg)
    if order == 1:
        n1, _ = bloch.bloch_populations(traj.states[:, 0])
        return np.asarray(n1)
    return bloch.reconstruct_sigma(traj, p, d)["n1"]


def _fig1(out):
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.1)
    t, n1 = _numeric_n1(p, d, (0.0, 150.0))
    n1_rwa, _ = averaging.rwa_populations(0.1, 0.0, t)
    write_csv(os.path.join(out, "fig1.csv"),
              ["t", "n1_numeric", "n1_rwa"], [t, n1, n1_rwa])
    return ["fig1.csv"], _plot_lines("fig1", "fig1.csv",
                                     ["n1_numeric", "n1_rwa"],
                                     "ground population")


def _fig2(out):
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.2, amplitude_half=0.1)
    t, n1 = _numeric_n1(p, d, (0.0, 150.0))
    c1 = averaging.naive_perturbation_c1(0.1, 1.2, 1.0, t)
    n1_rwa, _ = averaging.rwa_populations(0.1, 0.2, t)
    write_csv(os.path.join(out, "fig2.csv"),
              ["t", "n1_numeric", "n1_naive", "n1_rwa"],
              [t, n1, np.abs(c1) ** 2, n1_rwa])
    return ["fig2.csv"], _plot_lines("fig2", "fig2.csv",
                                     ["n1_numeric", "n1_naive", "n1_rwa"],
                                     "ground population")


def _fig3(out):
    p = TlsParams(omega0=1.0)
    d = drives.CwTone(omega=1.0, amplitude_half=0.1)
    t, n1 = _numeric_n1(p, d, (0.0, 150.0))
    n1_avg2, _ = averaging.avg2_populations(0.1, 1.0, 0.0, t)
    write_csv(os.path.join(out, "fig3.csv"),
              ["t", "n1_numeric", "n1_avg2"], [t, n1, n1_avg2])
    return ["fig3.csv"], _plot_lines("fig3", "fig3.csv",
                                     ["n1_numeric", "n1_avg2"],
                                     "ground population")


def _fig4(out):
    p = TlsParams(omega0=1.0)
    peak = 0.4
    phases = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    chirped = pulsecraft.make_chirped_pi_pulse(peak, p.omega0)
    plain = pulsecraft.make_pi_pulse(peak, p.omega0)
    span = (0.0, chirped.t_center + 8.0 * chirped.sigma0)
    n1_plain = [_final_n1(p, drives.with_phase0(plain, ph), span)
                for ph in phases]
    n1_chirp = [_final_n1(p, drives.with_phase0(chirped, ph), span)
                for ph in phases]
    # second-order averaging predicts an ideal phase-independent inversion
    n1_avg2 = np.zeros_like(phases)
    write_csv(os.path.join(out, "fig4.csv"),
              ["phi0", "n1_unchirped", "n1_chirped", "n1_avg2"],
              [phases, np.array(n1_plain), np.array(n1_chirp), n1_avg2])
    return ["fig4.csv"], _plot_phase("fig4", "fig4.csv",
                                     ["n1_unchirped", "n1_chirped", "n1_avg2"])


def _fig5(out):
    p = TlsParams(omega0=1.0, gamma1=0.0002, gamma2=0.02)
    peak = 0.4
    chirped = pulsecraft.make_chirped_pi_pulse(peak, p.omega0)
    plain = pulsecraft.make_pi_pulse(peak, p.omega0)
    span = (0.0, chirped.t_center + 8.0 * chirped.sigma0)
    n = 4001
    cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-11, abs_tol=1e-12,
                           record_points=n)
    s0 = bloch.BlochState(1.0, 0.0)
    tr_plain = bloch.simulate_bloch_full(p, plain, s0, span, cfg)
    tr_chirp = bloch.simulate_bloch_full(p, chirped, s0, span, cfg)
    n1_plain, _ = bloch.bloch_populations(tr_plain.states[:, 0])
    n1_chirp, _ = bloch.bloch_populations(tr_chirp.states[:, 0])
    n1_avg2 = _averaged_pulse_n1(p, chirped, span, n, order=2)
    t = tr_plain.times
    write_csv(os.path.join(out, "fig5_population.csv"),
              ["t", "n1_unchirped", "n1_chirped", "n1_avg2_chirped"],
              [t, np.asarray(n1_plain), np.asarray(n1_chirp), n1_avg2])
    field = np.asarray(drives.evaluate_drive(chirped, t))
    env = 2.0 * np.asarray(drives.envelope_amplitude(chirped, t))
    freq = np.asarray(drives.instantaneous_frequency(chirped, t))
    phase_angle = (np.asarray(drives.accumulated_phase(chirped, t))
                   - p.omega0 * t)
    write_csv(os.path.join(out, "fig5_pulse.csv"),
              ["t", "field", "envelope", "inst_freq", "phase_angle"],
              [t, field, env, freq, phase_angle])
    script = _plot_fig5()
    return ["fig5_population.csv", "fig5_pulse.csv"], script


def _pulse_train_figure(out, fig_id, peak, spacing_sigmas=None):
    p = TlsParams(omega0=1.0)
    pulse = pulsecraft.make_pi_pulse(peak, 1.1)
    spacing = (None if spacing_sigmas is None
               else spacing_sigmas * pulse.sigma0)
    train = pulsecraft.make_pulse_train(pulse, 3, spacing=spacing)
    last = train.pulses[-1]
    span = (0.0, last.t_center + 8.0 * last.sigma0)
    n = 4001
    t = np.linspace(span[0], span[1], n)
    _, n1 = _numeric_n1(p, train, span, n)
    n1_rwa = _averaged_pulse_n1(p, train, span, n, order=1)
    n1_avg2 = _averaged_pulse_n1(p, train, span, n, order=2)
    write_csv(os.path.join(out, f"{fig_id}_population.csv"),
              ["t", "n1_numeric", "n1_rwa", "n1_avg2"],
              [t, n1, n1_rwa, n1_avg2])
    field = np.asarray(drives.evaluate_drive(train, t))
    env = 2.0 * np.asarray(drives.envelope_amplitude(train, t))
    write_csv(os.path.join(out, f"{fig_id}_pulse.csv"),
              ["t", "field", "envelope"], [t, field, env])
    _, grid, cum = pulsecraft.verify_pulse_area(train)
    write_csv(os.path.join(out, f"{fig_id}_area.csv"),
              ["t", "area"], [grid, cum])
    files = [f"{fig_id}_population.csv", f"{fig_id}_pulse.csv",
             f"{fig_id}_area.csv"]
    return files, _plot_train(fig_id)


def _fig6(out):
    return _pulse_train_figure(out, "fig6",
                               pulsecraft.shaped_amplitude(0.1, 1.1))


def _fig7(out):
    # tighter spacing than the default: the partial-transfer endpoint of
    # a mis-designed train depends on the inter-pulse carrier phase
    return _pulse_train_figure(out, "fig7", 0.5, spacing_sigmas=8.0)


def _fig8(out):
    p = TlsParams(omega0=1.0)
    omega = 1.1
    phases = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    peaks = {"a": 0.1, "b": pulsecraft.shaped_amplitude(0.1, omega),
             "c": 0.5}
    columns = [phases]
    header = ["phi0"]
    for label, peak in peaks.items():
        pulse = pulsecraft.make_pi_pulse(peak, omega)
        span = (0.0, pulse.t_center + 8.0 * pulse.sigma0)
        finals = [_final_n1(p, drives.with_phase0(pulse, ph), span)
                  for ph in phases]
        header.append(f"n1_{label}_numeric")
        columns.append(np.array(finals))
    write_csv(os.path.join(out, "fig8.csv"), header, columns)
    return ["fig8.csv"], _plot_phase("fig8", "fig8.csv", header[1:])


FIGURES = {
    "fig1": _fig1, "fig2": _fig2, "fig3": _fig3, "fig4": _fig4,
    "fig5": _fig5, "fig6": _fig6, "fig7": _fig7, "fig8": _fig8,
}


def reproduce_figure(fig_id: str, out_dir) -> dict:
    """Emit the dataset(s) and plot script for one reference figure."""
    if fig_id not in FIGURES:
        raise UnknownFigure(f"unknown figure id {fig_id!r}; "
                            f"valid: {sorted(FIGURES)}")
    os.makedirs(out_dir, exist_ok=True)
    t0 = time.perf_counter()
    files, script = FIGURES[fig_id](out_dir)
    script_name = f"plot_{fig_id}.py"
    with open(os.path.join(out_dir, script_name), "w") as fh:
        fh.write(script)
    paths = [os.path.join(out_dir, f) for f in files + [script_name]]
    manifest = write_manifest(out_dir, paths, {"figure": fig_id},
                              time.perf_counter() - t0)
    return {"files": paths, "manifest": manifest}


# ---------------------------------------------------------------------------
# Emitted plot scripts (plain text; read only the CSVs)
# ---------------------------------------------------------------------------

_HEADER = """\
#!/usr/bin/env python3
# Auto-generated plotting script; reads only the CSV files next to it.
import csv

import matplotlib.pyplot as plt


def read_csv(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], rows[1:]
    return {h: [float(r[i]) for r in data] for i, h in enumerate(header)}

"""


def _plot_lines(fig_id, csv_name, series, ylabel):
    lines = "\n".join(
        f"plt.plot(data['t'], data['{s}'], label='{s}')" for s in series)
    return (_HEADER
            + f"data = read_csv('{csv_name}')\n{lines}\n"
            + f"plt.xlabel('t')\nplt.ylabel('{ylabel}')\nplt.legend()\n"
            + f"plt.savefig('{fig_id}.png', dpi=200)\n")


def _plot_phase(fig_id, csv_name, series):
    lines = "\n".join(
        f"plt.plot(data['phi0'], data['{s}'], label='{s}')" for s in series)
    return (_HEADER
            + f"data = read_csv('{csv_name}')\n{lines}\n"
            + "plt.xlabel('pulse phase phi0')\nplt.ylabel('final N1')\n"
            + f"plt.legend()\nplt.savefig('{fig_id}.png', dpi=200)\n")


def _plot_train(fig_id):
    return (_HEADER + f"""\
pop = read_csv('{fig_id}_population.csv')
pulse = read_csv('{fig_id}_pulse.csv')
area = read_csv('{fig_id}_area.csv')

fig, axes = plt.subplots(3, 1, figsize=(7, 9), sharex=True)
for key in ('n1_numeric', 'n1_rwa', 'n1_avg2'):
    axes[0].plot(pop['t'], pop[key], label=key)
axes[0].set_ylabel('N1')
axes[0].legend()
axes[1].plot(pulse['t'], pulse['field'], lw=0.5)
axes[1].plot(pulse['t'], pulse['envelope'])
axes[1].set_ylabel('field')
axes[2].plot(area['t'], area['area'])
axes[2].set_ylabel('accumulated area')
axes[2].set_xlabel('t')
fig.savefig('{fig_id}.png', dpi=200)
""")


def _plot_fig5():
    return (_HEADER + """\
pop = read_csv('fig5_population.csv')
pulse = read_csv('fig5_pulse.csv')

fig, axes = plt.subplots(3, 1, figsize=(7, 9), sharex=True)
for key in ('n1_unchirped', 'n1_chirped', 'n1_avg2_chirped'):
    axes[0].plot(pop['t'], pop[key], label=key)
axes[0].set_ylabel('N1')
axes[0].legend()
axes[1].plot(pulse['t'], pulse['field'], lw=0.5)
axes[1].plot(pulse['t'], pulse['envelope'])
axes[1].set_ylabel('field')
axes[2].plot(pulse['t'], pulse['inst_freq'], label='inst_freq')
axes[2].plot(pulse['t'], pulse['phase_angle'], label='phase_angle')
axes[2].legend()
axes[2].set_xlabel('t')
fig.savefig('fig5.png', dpi=200)
""")
