"""CSV and manifest emission.

All datasets are plain comma-separated text: header row, '.' decimal
separator, 17 significant digits, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import os

import numpy as np

from .errors import IoError
from .integrate import Trajectory

__all__ = ["write_csv", "trajectory_to_csv", "schrodinger_trajectory_to_csv",
           "bloch_trajectory_to_csv", "file_sha256", "write_manifest"]

_FMT = "%.17g"


def write_csv(path, header: list[str], columns: list[np.ndarray]) -> None:
    """Write equal-length columns as CSV with a header row."""
    if len(header) != len(columns):
        raise ValueError("header and column counts differ")
    cols = [np.asarray(c, dtype=float) for c in columns]
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise ValueError("columns must have equal length")
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for i in range(n):
                fh.write(",".join(_FMT % c[i] for c in cols) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def trajectory_to_csv(traj: Trajectory, path) -> None:
    """Generic export: column 1 is time, then one (or re/im pair of)
    column(s) per state component."""
    header = ["t"]
    columns = [traj.times]
    states = traj.states
    for j in range(states.shape[1]):
        col = states[:, j]
        if np.iscomplexobj(col):
            header += [f"re_y{j}", f"im_y{j}"]
            columns += [col.real, col.imag]
        else:
            header.append(f"y{j}")
            columns.append(col)
    write_csv(path, header, columns)


def schrodinger_trajectory_to_csv(traj: Trajectory, path) -> None:
    """Amplitude trajectory export: t, Re/Im of both amplitudes, N1, N2."""
    a1 = traj.states[:, 0]
    a2 = traj.states[:, 1]
    write_csv(path,
              ["t", "re_c1", "im_c1", "re_c2", "im_c2", "n1", "n2"],
              [traj.times, a1.real, a1.imag, a2.real, a2.imag,
               np.abs(a1) ** 2, np.abs(a2) ** 2])


def bloch_trajectory_to_csv(traj: Trajectory, path, envelope=None,
                            inst_freq=None) -> None:
    """Bloch trajectory export with optional drive diagnostics columns."""
    delta = traj.states[:, 0].real
    sigma = traj.states[:, 1]
    n1 = 0.5 * (1.0 + delta)
    header = ["t", "delta", "re_sigma", "im_sigma", "n1", "n2"]
    columns = [traj.times, delta, sigma.real, sigma.imag, n1, 1.0 - n1]
    if envelope is not None:
        header.append("envelope")
        columns.append(np.asarray(envelope))
    if inst_freq is not None:
        header.append("inst_freq")
        columns.append(np.asarray(inst_freq))
    write_csv(path, header, columns)


def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def write_manifest(out_dir, files: list[str], config_echo: dict,
                   wall_time: float) -> str:
    """Write manifest.json listing every emitted file with its checksum."""
    manifest = {
        "config": config_echo,
        "files": [{"name": os.path.basename(f),
                   "sha256": file_sha256(f)} for f in files],
        "wall_time_s": wall_time,
    }
    path = os.path.join(out_dir, "manifest.json")
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return path
