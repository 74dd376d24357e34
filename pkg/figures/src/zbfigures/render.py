"""Figure builders: stacked velocity-trace panels and the time-scales scan.

Each panel shows the trace over its own window with vertical dotted lines at
integer multiples of that panel's characteristic period, read from the run
metadata.  A joint sha256 of the input files is embedded in the saved image
(PNG text chunk / SVG description) so every figure is traceable to its data.
"""

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .io import (  # noqa: E402
    InputError,
    joint_checksum,
    read_metadata,
    read_revivals,
    read_scan_csv,
    read_trace_csv,
)

#: panel name -> (timescale key, window multiple, marker label)
PANELS = {
    "zb": ("t_zb", 6.0, "T_ZB"),
    "classical": ("t_cl", 4.0, "T_CL"),
    "revival": ("t_r", 1.2, "T_R"),
}

CHECKSUM_KEY = "diraczb-inputs-sha256"


@dataclass(frozen=True)
class FigureSpec:
    """Inputs and layout for a stacked trace figure."""

    trace_csv: Path
    metadata_json: Path
    panels: tuple[str, ...]
    output: Path
    revivals_json: Path | None = None
    markers: dict = field(default_factory=dict)  # panel -> timescale key override

    def __post_init__(self):
        if not self.panels:
            raise InputError("panel list is empty")
        unknown = [p for p in self.panels if p not in PANELS]
        if unknown:
            raise InputError(f"unknown panels {unknown}; choose from {sorted(PANELS)}")


def _marker_positions(period: float, t_lo: float, t_hi: float) -> list[float]:
    k = max(int(t_lo / period) + 1, 1)
    out = []
    while k * period < t_hi:
        out.append(k * period)
        k += 1
    return out


def build_trace_figure(spec: FigureSpec):
    """Assemble the stacked-panel figure; returns (figure, checksum)."""
    trace = read_trace_csv(spec.trace_csv)
    meta = read_metadata(spec.metadata_json)
    scales = meta["timescales"]
    report = read_revivals(spec.revivals_json) if spec.revivals_json else None

    t = trace["t"]
    v = trace["v_x_closed"]
    fig, axes = plt.subplots(len(spec.panels), 1,
                             figsize=(7.0, 2.6 * len(spec.panels)), squeeze=False)
    for ax, panel in zip(axes[:, 0], spec.panels):
        key, multiple, label = PANELS[panel]
        key = spec.markers.get(panel, key)
        period = float(scales[key])
        t_lo, t_hi = float(t[0]), multiple * period
        if t[-1] < t_hi:
            raise InputError(
                f"trace covers t <= {t[-1]:g} but the {panel} panel needs {t_hi:g}"
            )
        sel = (t >= t_lo) & (t <= t_hi)
        ax.plot(t[sel], v[sel], lw=0.5, color="#1f3a6e")
        for pos in _marker_positions(period, t_lo, t_hi):
            ax.axvline(pos, ls=":", lw=0.8, color="0.45")
        ax.set_xlim(t_lo, t_hi)
        ax.set_xlabel("t (a.u.)")
        ax.set_ylabel(r"$\langle v_x \rangle$ (units of c)")
        ax.set_title(f"{panel} panel — dotted lines at multiples of {label}", fontsize=9)
        if panel == "revival" and report is not None:
            for event in report["revivals"]:
                tag = "revival" if event["matched"] else "no revival"
                colour = "#1a7a2f" if event["matched"] else "#a02020"
                ax.annotate(f"m={event['m']}: {tag}",
                            xy=(event["expected_t"], ax.get_ylim()[1]),
                            xytext=(0, -2), textcoords="offset points",
                            ha="center", va="top", fontsize=8, color=colour)
    fig.tight_layout()
    inputs = [spec.trace_csv, spec.metadata_json]
    if spec.revivals_json:
        inputs.append(spec.revivals_json)
    return fig, joint_checksum(inputs)


def _save(fig, output: Path, checksum: str) -> Path:
    output = Path(output)
    metadata = {CHECKSUM_KEY: checksum} if output.suffix.lower() == ".png" \
        else {"Description": f"{CHECKSUM_KEY}={checksum}"}
    fig.savefig(output, dpi=150, metadata=metadata)
    plt.close(fig)
    return output


def render_trace_figure(spec: FigureSpec) -> Path:
    """Render and save the stacked trace figure; returns the output path."""
    fig, checksum = build_trace_figure(spec)
    return _save(fig, spec.output, checksum)


def build_scan_figure(scan_csv, output: Path):
    """Log-log time scales vs oscillator frequency; returns (figure, checksum)."""
    scan = read_scan_csv(scan_csv)
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    style = {"t_zb": ("T_ZB", "o", "#a02020"),
             "t_cl": ("T_CL", "s", "#1a7a2f"),
             "t_r": ("T_R", "^", "#1f3a6e")}
    single = len(scan["omega"]) == 1
    for key, (label, marker, colour) in style.items():
        ax.plot(scan["omega"], scan[key], label=label, color=colour,
                marker=marker if single else None, ls="none" if single else "-",
                ms=6, lw=1.2)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"$\omega$ (a.u.)")
    ax.set_ylabel("time (a.u.)")
    ax.legend()
    ax.set_title("characteristic time scales vs oscillator frequency", fontsize=10)
    fig.tight_layout()
    return fig, joint_checksum([scan_csv])


def render_scan_figure(scan_csv, output) -> Path:
    fig, checksum = build_scan_figure(scan_csv, output)
    return _save(fig, Path(output), checksum)
