"""Canonical parameter presets for the reference runs.

fig1–fig3 are trace presets (increasingly broad packets at ω = 10³ a.u.);
fig4 is the time-scales-vs-frequency scan.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TracePreset:
    omega: float
    n0: int
    sigma: float


TRACE_PRESETS: dict[str, TracePreset] = {
    "fig1": TracePreset(omega=1e3, n0=30, sigma=3.0),
    "fig2": TracePreset(omega=1e3, n0=15, sigma=3.0),
    "fig3": TracePreset(omega=1e3, n0=10, sigma=20.0),
}

SCAN_PRESET_NAME = "fig4"
SCAN_PRESET_N0 = 30

PRESET_NAMES = (*TRACE_PRESETS.keys(), SCAN_PRESET_NAME)
