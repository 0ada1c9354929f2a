"""Command-line interface.

Subcommands::

    tlspulse simulate --config run.json [--out DIR] [overrides]
    tlspulse sweep-phase --config run.json [--out DIR]
    tlspulse sweep-frequency --config run.json [--out DIR]
    tlspulse design-pulse --kind {plain,chirped,shaped} [options]
    tlspulse reproduce figN [--out DIR]
    tlspulse verify [--only c1,c5,...]

Configs are JSON documents matching ``ScenarioConfig.from_dict``; CLI
flags override the corresponding config fields.  The output root is
taken from ``--out``, else the ``TLSPULSE_OUTPUT_ROOT`` environment
variable, else ``./tlspulse_output``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import drives, figures, pulsecraft, scenario, verification
from .errors import ConfigError, TlsPulseError

__all__ = ["main", "build_parser"]

_ENV_OUT = "TLSPULSE_OUTPUT_ROOT"


def _output_dir(args, default_leaf: str) -> str:
    if args.out:
        return args.out
    root = os.environ.get(_ENV_OUT, "tlspulse_output")
    return os.path.join(root, default_leaf)


def _load_config(args) -> scenario.ScenarioConfig:
    try:
        with open(args.config) as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"config: cannot read {args.config}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: invalid JSON: {exc}") from exc
    # flag overrides
    if getattr(args, "solvers", None):
        spec["solvers"] = args.solvers.split(",")
    if getattr(args, "span", None):
        spec["span"] = args.span
    if getattr(args, "n_points", None):
        spec["n_points"] = args.n_points
    if getattr(args, "mode", None):
        spec.setdefault("integrator", {})["mode"] = args.mode
    if getattr(args, "step", None):
        spec.setdefault("integrator", {})["step"] = args.step
    return scenario.ScenarioConfig.from_dict(spec)


def _cmd_simulate(args) -> int:
    cfg = _load_config(args)
    out = _output_dir(args, "simulate")
    res = scenario.run_scenario(cfg, out)
    for path in res["files"]:
        print(path)
    print(res["manifest"])
    return 0


def _cmd_sweep_phase(args) -> int:
    cfg = _load_config(args)
    out = _output_dir(args, "sweep_phase")
    res = scenario.sweep_phase(cfg, out)
    print(res["files"][0])
    print(res["manifest"])
    return 0


def _cmd_sweep_frequency(args) -> int:
    cfg = _load_config(args)
    out = _output_dir(args, "sweep_frequency")
    res = scenario.sweep_frequency(cfg, out)
    print(res["files"][0])
    print(res["manifest"])
    print(f"argmax omega = {res['argmax']:.9g}")
    return 0


def _cmd_design_pulse(args) -> int:
    if args.kind == "plain":
        pulse = pulsecraft.make_pi_pulse(args.peak, args.omega,
                                         phase0=args.phase0)
    elif args.kind == "chirped":
        pulse = pulsecraft.make_chirped_pi_pulse(args.peak, args.omega,
                                                 phase0=args.phase0)
    else:
        pulse = pulsecraft.make_shaped_pi_pulse(args.delta, args.omega,
                                                phase0=args.phase0)
    d = pulse if args.n == 1 else pulsecraft.make_pulse_train(
        pulse, args.n, spacing=args.spacing)
    areas, _, _ = pulsecraft.verify_pulse_area(d)
    out = _output_dir(args, "design_pulse")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "pulse.json")
    drives.save_drive(d, path)
    print(path)
    for k, a in enumerate(areas, start=1):
        print(f"pulse {k}: area = {a:.9f}")
    return 0


def _cmd_reproduce(args) -> int:
    out = _output_dir(args, args.figure)
    res = figures.reproduce_figure(args.figure, out)
    for path in res["files"]:
        print(path)
    print(res["manifest"])
    return 0


def _cmd_verify(args) -> int:
    ids = args.only.split(",") if args.only else None
    if ids:
        unknown = [c for c in ids if c not in verification.CHECKS]
        if unknown:
            raise ConfigError(f"--only: unknown check id(s) {unknown}")
    results = verification.run_all(ids)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlspulse",
        description="Driven two-level-system simulations beyond the RWA")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_opts(p):
        p.add_argument("--config", required=True,
                       help="JSON scenario configuration")
        p.add_argument("--out", help="output directory")
        p.add_argument("--solvers", help="comma-separated solver override")
        p.add_argument("--span", nargs=2, type=float, metavar=("TA", "TB"),
                       help="time span override")
        p.add_argument("--n-points", dest="n_points", type=int,
                       help="output grid size override")
        p.add_argument("--mode", choices=["fixed_rk4", "adaptive"],
                       help="integrator mode override")
        p.add_argument("--step", type=float, help="fixed step override")

    p = sub.add_parser("simulate", help="run configured solvers, emit CSVs")
    add_config_opts(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sweep-phase",
                       help="final ground population vs carrier phase")
    add_config_opts(p)
    p.set_defaults(func=_cmd_sweep_phase)

    p = sub.add_parser("sweep-frequency",
                       help="peak excited population vs carrier frequency")
    add_config_opts(p)
    p.set_defaults(func=_cmd_sweep_frequency)

    p = sub.add_parser("design-pulse", help="design a pi-pulse or train")
    p.add_argument("--kind", choices=["plain", "chirped", "shaped"],
                   required=True)
    p.add_argument("--peak", type=float,
                   help="peak half-amplitude (plain/chirped)")
    p.add_argument("--delta", type=float,
                   help="carrier detuning from resonance (shaped)")
    p.add_argument("--omega", type=float, required=True,
                   help="carrier (plain/shaped) or transition (chirped) "
                        "frequency")
    p.add_argument("--phase0", type=float, default=0.0)
    p.add_argument("--n", type=int, default=1, help="number of pulses")
    p.add_argument("--spacing", type=float,
                   help="center-to-center spacing (default 7.5 sigma0)")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=_cmd_design_pulse)

    p = sub.add_parser("reproduce", help="regenerate a dataset + plot script")
    p.add_argument("figure", choices=sorted(figures.FIGURES),
                   help="figure id")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.add_argument("--only", help="comma-separated check ids (e.g. c1,c4)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "design-pulse":
        if args.kind in ("plain", "chirped") and args.peak is None:
            parser.error("--peak is required for plain/chirped pulses")
        if args.kind == "shaped" and args.delta is None:
            parser.error("--delta is required for shaped pulses")
    try:
        return args.func(args)
    except TlsPulseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
