"""Command-line entry point: preset/free-form runs and the self-check suite.

`diraczb run` produces deterministic CSV/JSON artifacts in --out-dir:
trace.csv (velocity and autocorrelation samples), revivals.json (when the
sampled window covers the first revival), scan.csv (time scales vs ω, fig4
preset), and metadata.json with every resolved parameter.  Identical
configurations produce bitwise-identical files.

Exit codes: 0 success, 2 usage error, 3 violated numerical contract.
"""

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import detect_revivals, revival_report_json, zb_envelope
from .calibration import calibration
from .dynamics import TimeGrid, sample_trace, write_trace_csv
from .errors import ContractError, CoverageError, SamplingError, TruncationError
from .model import PhysicalParams, build_truncated_model
from .packet import PacketSpec, build_packet, recommend_cutoff
from .presets import PRESET_NAMES, SCAN_PRESET_N0, SCAN_PRESET_NAME, TRACE_PRESETS
from .timescales import compute_timescales, default_scan_omegas, omega_scan, write_scan_csv
from .verification import run_checks

PANEL_SPANS = {"zb": ("t_zb", 6.0), "classical": ("t_cl", 4.0), "revival": ("t_r", 1.2)}
DEFAULT_PANEL = "revival"
SAMPLES_PER_ZB_PERIOD = 24

USAGE_EXIT = 2
CONTRACT_EXIT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diraczb",
        description="Dirac-oscillator trembling-motion traces, time scales, and revival analysis",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="produce trace/scan/revival files")
    run.add_argument("--preset", choices=PRESET_NAMES, help="canonical parameter set")
    run.add_argument("--config", type=Path, help="flat JSON config; flags override it")
    run.add_argument("--omega", type=float, help="oscillator frequency (a.u.)")
    run.add_argument("--n0", type=int, help="packet centre quantum number")
    run.add_argument("--sigma", type=float, help="Gaussian width parameter")
    run.add_argument("--nmax", type=int, help="Fock cutoff (default: recommended)")
    run.add_argument("--panel", choices=sorted(PANEL_SPANS),
                     help="sampling window: zb=[0,6 T_ZB], classical=[0,4 T_CL], "
                          "revival=[0,1.2 T_R] (default: revival)")
    run.add_argument("--t-start", type=float, dest="t_start", help="custom window start")
    run.add_argument("--t-end", type=float, dest="t_end", help="custom window end")
    run.add_argument("--samples", type=int, help="number of grid samples")
    oracle = run.add_mutually_exclusive_group()
    oracle.add_argument("--oracle", dest="oracle", action="store_true", default=None,
                        help="also sample the dense-matrix velocity (default)")
    oracle.add_argument("--no-oracle", dest="oracle", action="store_false",
                        help="skip the dense-matrix column")
    run.add_argument("--out-dir", type=Path, default=Path("."), help="output directory")

    verify = sub.add_parser("verify", help="run the numerical self-check suite")
    vo = verify.add_mutually_exclusive_group()
    vo.add_argument("--oracle", dest="oracle", action="store_true", default=True)
    vo.add_argument("--no-oracle", dest="oracle", action="store_false",
                    help="skip dense-matrix checks (reported as skipped)")
    return parser


_CONFIG_KEYS = ("preset", "omega", "n0", "sigma", "nmax", "panel",
                "t_start", "t_end", "samples", "oracle")


def _resolve(args: argparse.Namespace) -> dict:
    """Merge precedence: defaults < preset < config file < explicit flags."""
    resolved = {key: None for key in _CONFIG_KEYS}
    file_cfg = {}
    if args.config is not None:
        try:
            file_cfg = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read config {args.config}: {exc}") from exc
        unknown = set(file_cfg) - set(_CONFIG_KEYS)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
    preset_name = args.preset or file_cfg.get("preset")
    if preset_name is not None and preset_name not in PRESET_NAMES:
        raise ValueError(f"unknown preset {preset_name!r}")
    if preset_name in TRACE_PRESETS:
        preset = TRACE_PRESETS[preset_name]
        resolved.update(omega=preset.omega, n0=preset.n0, sigma=preset.sigma)
    elif preset_name == SCAN_PRESET_NAME:
        resolved.update(omega=1e3, n0=SCAN_PRESET_N0)
    for key in _CONFIG_KEYS:
        if key == "preset":
            continue
        if file_cfg.get(key) is not None:
            resolved[key] = file_cfg[key]
        flag = getattr(args, key, None)
        if flag is not None:
            resolved[key] = flag
    resolved["mode"] = "scan" if preset_name == SCAN_PRESET_NAME else "trace"
    if resolved["oracle"] is None:
        resolved["oracle"] = True
    for key in ("omega", "n0", "sigma") if resolved["mode"] == "trace" else ("omega", "n0"):
        if resolved[key] is None:
            raise ValueError(f"missing required parameter {key!r} (set a preset or pass flags)")
    return resolved


def _trace_outputs(cfg: dict, out_dir: Path) -> dict:
    params = PhysicalParams(omega=cfg["omega"])
    n0, sigma = cfg["n0"], cfg["sigma"]
    n_max = cfg["nmax"] if cfg["nmax"] is not None else recommend_cutoff(n0, sigma)
    packet = build_packet(PacketSpec(n0=n0, sigma=sigma, n_max=n_max), params)
    scales = compute_timescales(params, n0)

    if cfg["t_start"] is not None or cfg["t_end"] is not None:
        t_start = cfg["t_start"] or 0.0
        if cfg["t_end"] is None:
            raise ValueError("--t-start requires --t-end")
        t_end = cfg["t_end"]
    else:
        quantity, factor = PANEL_SPANS[cfg["panel"] or DEFAULT_PANEL]
        t_start, t_end = 0.0, factor * getattr(scales, quantity)
    n_samples = cfg["samples"] if cfg["samples"] is not None else \
        int(np.ceil((t_end - t_start) / (scales.t_zb / SAMPLES_PER_ZB_PERIOD))) + 1
    grid = TimeGrid(t_start, t_end, n_samples)

    model = build_truncated_model(params, n_max + 2) if cfg["oracle"] else None
    trace = sample_trace(packet, grid, model)
    trace_path = out_dir / "trace.csv"
    write_trace_csv(trace, trace_path)
    outputs = {"trace_csv": trace_path.name}

    search_window = calibration()["search_window_fraction"]
    m_max = int(grid.t_end / (scales.t_r / 2.0 * (1.0 + search_window)))
    if grid.t_start == 0.0 and m_max >= 1:
        env = zb_envelope(trace, scales.t_zb)
        report = detect_revivals(env, scales.t_r, m_max, t_cl=scales.t_cl)
        (out_dir / "revivals.json").write_text(revival_report_json(report) + "\n")
        outputs["revivals_json"] = "revivals.json"

    metadata = {
        "mode": "trace",
        "params": {"mass": params.mass, "light_speed": params.light_speed,
                   "hbar": params.hbar, "omega": params.omega},
        "packet": {"n0": n0, "sigma": sigma, "n_max": n_max,
                   "branch_mix": [float(np.sqrt(0.5)), float(np.sqrt(0.5))]},
        "timescales": asdict(scales),
        "grid": {"t_start": grid.t_start, "t_end": grid.t_end,
                 "n_samples": grid.n_samples},
        "oracle": cfg["oracle"],
        "proportionality_k": trace.metadata["proportionality_k"],
        "revival_threshold": calibration()["revival_threshold"],
        "outputs": outputs,
    }
    return metadata


def _scan_outputs(cfg: dict, out_dir: Path) -> dict:
    params = PhysicalParams(omega=cfg["omega"])
    omegas = default_scan_omegas()
    rows = omega_scan(params, cfg["n0"], omegas)
    write_scan_csv(rows, out_dir / "scan.csv")
    return {
        "mode": "scan",
        "params": {"mass": params.mass, "light_speed": params.light_speed,
                   "hbar": params.hbar},
        "scan": {"n0": cfg["n0"], "omega_min": float(omegas[0]),
                 "omega_max": float(omegas[-1]), "n_points": len(omegas)},
        "outputs": {"scan_csv": "scan.csv"},
    }


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    metadata = _scan_outputs(cfg, out_dir) if cfg["mode"] == "scan" \
        else _trace_outputs(cfg, out_dir)
    metadata["outputs"]["metadata_json"] = "metadata.json"
    (out_dir / "metadata.json").write_text(
        json.dumps(metadata, indent=2, sort_keys=True) + "\n")
    for name in sorted(metadata["outputs"].values()):
        print(f"wrote {out_dir / name}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(include_oracle=args.oracle)
    failed = False
    for res in results:
        print(f"{res.status:4s} {res.name}: {res.detail}")
        failed |= res.status == "FAIL"
    return CONTRACT_EXIT if failed else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_verify(args)
    except (TruncationError, SamplingError, CoverageError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CONTRACT_EXIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
