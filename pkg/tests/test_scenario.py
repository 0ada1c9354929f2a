"""Scenario configs, solver dispatch, and dataset reproducibility."""

import json
import math

import numpy as np
import pytest

from tlspulse import datafiles, drives, scenario
from tlspulse.errors import ConfigError, IoError
from tlspulse.integrate import IntegratorConfig
from tlspulse.params import TlsParams

_CW_SPEC = {
    "system": {"omega0": 1.0},
    "drive": {"kind": "cw", "omega": 1.0, "amplitude_half": 0.1},
    "solvers": ["numeric_full", "rwa", "avg2"],
    "span": [0.0, 40.0],
    "integrator": {"mode": "adaptive", "rel_tol": 1e-10, "abs_tol": 1e-12},
    "n_points": 201,
}


def test_config_round_trip():
    cfg = scenario.ScenarioConfig.from_dict(_CW_SPEC)
    again = scenario.ScenarioConfig.from_dict(cfg.to_dict())
    assert again == cfg


def test_config_errors():
    bad = dict(_CW_SPEC, solvers=[])
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC, solvers=["magic"])
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC, span=[1.0, 0.0])
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC, system={"omega0": -2.0})
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC)
    del bad["drive"]
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC, sweep={"axis": "sideways", "grid": [1.0]})
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)
    bad = dict(_CW_SPEC, sweep={"axis": "carrier", "grid": [float("nan")]})
    with pytest.raises(ConfigError):
        scenario.ScenarioConfig.from_dict(bad)


def test_solver_guards():
    t = np.linspace(0.0, 10.0, 11)
    dissipative = scenario.ScenarioConfig(
        system=TlsParams(omega0=1.0, gamma1=0.001, gamma2=0.01),
        drive=drives.CwTone(omega=1.0, amplitude_half=0.1),
        solvers=("numeric_bloch",), span=(0.0, 10.0))
    with pytest.raises(ConfigError):
        scenario.solver_populations("numeric_full", dissipative, t)
    with pytest.raises(ConfigError):
        scenario.solver_populations("naive", dissipative, t)


def test_solvers_agree_near_resonance():
    cfg = scenario.ScenarioConfig.from_dict(_CW_SPEC)
    t = np.linspace(0.0, 40.0, 201)
    n1_full, _ = scenario.solver_populations("numeric_full", cfg, t)
    n1_bloch, _ = scenario.solver_populations("numeric_bloch", cfg, t)
    n1_avg2, _ = scenario.solver_populations("avg2", cfg, t)
    assert np.max(np.abs(n1_full - n1_bloch)) < 1e-7
    assert np.max(np.abs(n1_full - n1_avg2)) < 0.02


def test_run_scenario_reproducible(tmp_path):
    cfg = scenario.ScenarioConfig.from_dict(_CW_SPEC)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    res1 = scenario.run_scenario(cfg, out1)
    res2 = scenario.run_scenario(cfg, out2)
    assert len(res1["files"]) == 3
    for f1, f2 in zip(res1["files"], res2["files"]):
        assert datafiles.file_sha256(f1) == datafiles.file_sha256(f2)
    manifest = json.loads((out1 / "manifest.json").read_text())
    assert {f["name"] for f in manifest["files"]} == \
        {"numeric_full.csv", "rwa.csv", "avg2.csv"}
    assert manifest["config"]["n_points"] == 201


def test_sweep_phase(tmp_path):
    spec = dict(_CW_SPEC,
                drive={"kind": "gaussian", "omega": 1.0, "peak_half": 0.4,
                       "sigma0": 1.5666426716443749,
                       "t_center": 7.833213358221874},
                solvers=["numeric_full"], span=[0.0, 20.0],
                sweep={"axis": "phase0",
                       "grid": [0.0, 0.5 * math.pi, math.pi]})
    cfg = scenario.ScenarioConfig.from_dict(spec)
    res = scenario.sweep_phase(cfg, tmp_path)
    assert len(res["finals"]["numeric_full"]) == 3
    header = (tmp_path / "sweep_phase.csv").read_text().splitlines()[0]
    assert header == "phi0,final_n1_numeric_full"


def test_sweep_phase_wrong_axis(tmp_path):
    cfg = scenario.ScenarioConfig.from_dict(
        dict(_CW_SPEC, sweep={"axis": "carrier", "grid": [1.0, 1.1]}))
    with pytest.raises(ConfigError):
        scenario.sweep_phase(cfg, tmp_path)
    with pytest.raises(ConfigError):
        scenario.sweep_frequency(scenario.ScenarioConfig.from_dict(
            dict(_CW_SPEC, sweep={"axis": "phase0", "grid": [0.0]})),
            tmp_path)


def test_sweep_frequency_small(tmp_path):
    spec = dict(_CW_SPEC, solvers=["numeric_full"],
                span=[0.0, 20.0 * math.pi / 0.1], n_points=2001,
                sweep={"axis": "carrier", "grid": [0.95, 1.01, 1.07]})
    cfg = scenario.ScenarioConfig.from_dict(spec)
    res = scenario.sweep_frequency(cfg, tmp_path)
    assert res["argmax"] == pytest.approx(1.01, abs=0.02)
    assert len(res["peaks"]) == 3
    # the detuned carriers sit well off the flop maximum
    assert res["peaks"][1] > res["peaks"][0] + 0.02
    assert res["peaks"][1] > res["peaks"][2] + 0.02


def test_write_csv_validation(tmp_path):
    with pytest.raises(ValueError):
        datafiles.write_csv(tmp_path / "x.csv", ["a", "b"], [np.arange(3)])
    with pytest.raises(ValueError):
        datafiles.write_csv(tmp_path / "x.csv", ["a", "b"],
                            [np.arange(3), np.arange(4)])
    with pytest.raises(IoError):
        datafiles.write_csv(tmp_path / "nodir" / "x.csv", ["a"],
                            [np.arange(3)])


def test_csv_full_precision(tmp_path):
    path = tmp_path / "x.csv"
    value = 1.0 / 3.0
    datafiles.write_csv(path, ["v"], [np.array([value])])
    text = path.read_text().splitlines()
    assert float(text[1]) == value
