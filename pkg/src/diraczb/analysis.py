"""Envelope extraction, quasiclassical decay, and revival detection.

The trembling motion is a fast carrier whose amplitude is the quantity of
interest.  The envelope estimator is deliberately transform-free: the trace
is cut into consecutive windows of one carrier period each, and the window
amplitude is half the peak-to-peak swing — exact for a pure cosine up to the
~2% discretization of 20+ samples per cycle.

Per classical period the envelope exhibits a coherence spike that decays
from period to period while dephasing fills the troughs in between; the
per-period *peak* therefore tracks the quasiclassical decay (the per-period
mean actually grows as the troughs fill).  Revival detection compares the
envelope peak near each half-multiple of the revival time against the first
period's peak; the match threshold is calibrated once against the reference
run and frozen in data/calibration.json.
"""

import json
from dataclasses import dataclass

import numpy as np

from .calibration import calibration
from .dynamics import Trace
from .errors import CoverageError, SamplingError

#: Minimum samples per fast-oscillation window for a trustworthy envelope.
MIN_SAMPLES_PER_WINDOW = 20


@dataclass(frozen=True)
class Envelope:
    """Per-window amplitude of the fast oscillation (window width = one
    carrier period, gapless partition of the sampled span)."""

    window_centers: np.ndarray
    amplitudes: np.ndarray
    window_width: float


@dataclass(frozen=True)
class RevivalEvent:
    m: int
    expected_time: float
    detected_time: float
    ratio: float
    matched: bool


@dataclass(frozen=True)
class RevivalReport:
    """Detected envelope regenerations at half-multiples of the revival time."""

    initial_amplitude: float
    threshold: float
    events: tuple[RevivalEvent, ...]

    @property
    def revival_times(self) -> list[float]:
        return [e.detected_time for e in self.events]

    @property
    def recovery_ratios(self) -> list[float]:
        return [e.ratio for e in self.events]

    @property
    def classifications(self) -> list[bool]:
        return [e.matched for e in self.events]


def zb_envelope(trace: Trace, t_zb: float) -> Envelope:
    """Windowed peak-to-peak/2 envelope of the closed-form velocity trace.

    Requires the grid to resolve the carrier: dt <= t_zb/20.  Trailing
    samples that do not fill a whole window are discarded.
    """
    dt = trace.grid.dt
    if dt > t_zb / MIN_SAMPLES_PER_WINDOW:
        raise SamplingError(
            f"grid spacing {dt:g} too coarse: envelope extraction needs "
            f"dt <= t_zb/{MIN_SAMPLES_PER_WINDOW} = {t_zb / MIN_SAMPLES_PER_WINDOW:g}"
        )
    per = int(round(t_zb / dt))
    times = trace.grid.times
    n_windows = len(times) // per
    if n_windows < 1:
        raise CoverageError("trace shorter than a single fast-oscillation window")
    v = trace.v_x_closed[: n_windows * per].reshape(n_windows, per)
    centers = times[: n_windows * per].reshape(n_windows, per).mean(axis=1)
    amplitudes = (v.max(axis=1) - v.min(axis=1)) / 2.0
    return Envelope(window_centers=centers, amplitudes=amplitudes,
                    window_width=per * dt)


def detect_revivals(env: Envelope, t_r: float, m_max: int, *, t_cl: float,
                    threshold: float | None = None,
                    search_window: float | None = None) -> RevivalReport:
    """Locate envelope regenerations at t = m·t_r/2, m = 1..m_max.

    The reference amplitude is the envelope peak within the first classical
    period; each candidate is the envelope maximum within ±search_window
    (fractional) of its expected time, classified as matched when its
    recovery ratio reaches the threshold.  Raises CoverageError rather than
    returning a silently empty report when the envelope stops short.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    threshold = calibration()["revival_threshold"] if threshold is None else threshold
    search_window = (calibration()["search_window_fraction"]
                     if search_window is None else search_window)
    centers, amps = env.window_centers, env.amplitudes
    needed = m_max * t_r / 2.0 * (1.0 + search_window)
    if centers[-1] < needed:
        raise CoverageError(
            f"envelope covers up to t={centers[-1]:g} but detection through "
            f"m={m_max} needs t>={needed:g}"
        )
    first = centers <= centers[0] + t_cl
    if not np.any(first):
        raise CoverageError("envelope does not cover the first classical period")
    initial = float(amps[first].max())
    events = []
    for m in range(1, m_max + 1):
        expected = m * t_r / 2.0
        near = np.abs(centers - expected) <= search_window * expected
        if not np.any(near):
            raise CoverageError(f"no envelope windows within the m={m} search range")
        i = int(np.argmax(amps[near]))
        ratio = float(amps[near][i] / initial)
        events.append(RevivalEvent(
            m=m,
            expected_time=expected,
            detected_time=float(centers[near][i]),
            ratio=ratio,
            matched=ratio >= threshold,
        ))
    return RevivalReport(initial_amplitude=initial, threshold=threshold,
                         events=tuple(events))


def quasiclassical_decay(env: Envelope, t_cl: float, n_periods: int) -> np.ndarray:
    """Envelope peak per classical period, over the first n_periods periods.

    For localized packets the sequence decreases strictly over the first few
    periods; once the quasiclassical modulation has died out it plateaus
    (see decreasing_prefix for the flattening measure).
    """
    if n_periods < 1:
        raise ValueError("n_periods must be >= 1")
    centers, amps = env.window_centers, env.amplitudes
    t0 = centers[0]
    if centers[-1] < t0 + n_periods * t_cl - env.window_width:
        raise CoverageError(
            f"envelope covers up to t={centers[-1]:g} but {n_periods} classical "
            f"periods need t>={t0 + n_periods * t_cl:g}"
        )
    peaks = np.empty(n_periods)
    for k in range(n_periods):
        sel = (centers >= t0 + k * t_cl) & (centers < t0 + (k + 1) * t_cl)
        if not np.any(sel):
            raise CoverageError(f"no envelope windows inside classical period {k}")
        peaks[k] = amps[sel].max()
    return peaks


def decreasing_prefix(values) -> int:
    """Steps taken strictly downhill from the start of the sequence.

    0 flags a non-decreasing start (no quasiclassical modulation at all);
    a broad packet plateaus within a few periods while a localized one keeps
    decaying through the pre-revival regime.
    """
    values = np.asarray(values, dtype=float)
    diffs = np.diff(values)
    down = diffs < 0
    if np.all(down):
        return len(diffs)
    return int(np.argmin(down))


def revival_report_json(report: RevivalReport) -> str:
    """Serialize per the fixed schema: initial_amplitude, revivals[], threshold."""
    payload = {
        "initial_amplitude": report.initial_amplitude,
        "threshold": report.threshold,
        "revivals": [
            {
                "m": e.m,
                "expected_t": e.expected_time,
                "detected_t": e.detected_time,
                "ratio": e.ratio,
                "matched": e.matched,
            }
            for e in report.events
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
