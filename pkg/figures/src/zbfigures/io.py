"""Readers for the diraczb output files (trace CSV, scan CSV, metadata/revival JSON).

Rendering never recomputes physics: everything plotted comes from these
files, and a joint checksum of the inputs is embedded in each image.
"""

import csv
import hashlib
import json
from pathlib import Path

import numpy as np

TRACE_COLUMNS = ["t", "v_x_closed", "v_x_oracle",
                 "autocorr_re", "autocorr_im", "autocorr_abs"]
SCAN_COLUMNS = ["omega", "t_zb", "t_cl", "t_r"]


class InputError(ValueError):
    """Missing or malformed input file."""


def _require(path) -> Path:
    path = Path(path)
    if not path.is_file():
        raise InputError(f"input file not found: {path}")
    return path


def read_trace_csv(path) -> dict[str, np.ndarray]:
    """Columns of a trace CSV; v_x_oracle is NaN where the field is empty."""
    path = _require(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != TRACE_COLUMNS:
            raise InputError(f"{path}: expected trace header {TRACE_COLUMNS}, got {header}")
        rows = [[float(x) if x != "" else np.nan for x in row] for row in reader]
    if not rows:
        raise InputError(f"{path}: trace has no samples")
    data = np.asarray(rows, dtype=float)
    return {name: data[:, i] for i, name in enumerate(TRACE_COLUMNS)}


def read_scan_csv(path) -> dict[str, np.ndarray]:
    path = _require(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != SCAN_COLUMNS:
            raise InputError(f"{path}: expected scan header {SCAN_COLUMNS}, got {header}")
        rows = [[float(x) for x in row] for row in reader]
    if not rows:
        raise InputError(f"{path}: scan has no rows")
    data = np.asarray(rows, dtype=float)
    return {name: data[:, i] for i, name in enumerate(SCAN_COLUMNS)}


def read_metadata(path) -> dict:
    """Run metadata; must carry the time scales used for period markers."""
    path = _require(path)
    try:
        meta = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc
    scales = meta.get("timescales")
    if not isinstance(scales, dict) or not {"t_zb", "t_cl", "t_r"} <= set(scales):
        raise InputError(f"{path}: metadata lacks the timescales block")
    return meta


def read_revivals(path) -> dict:
    path = _require(path)
    report = json.loads(path.read_text())
    if "revivals" not in report:
        raise InputError(f"{path}: revival report lacks the revivals list")
    return report


def joint_checksum(paths) -> str:
    """sha256 over the concatenated digests of every input file."""
    digest = hashlib.sha256()
    for path in paths:
        digest.update(hashlib.sha256(Path(path).read_bytes()).digest())
    return digest.hexdigest()
