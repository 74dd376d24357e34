"""Self-check suite behind `diraczb verify`.

Each check is a pure function returning a CheckResult; `run_checks` collects
them all.  The reference-value regression compares against the published
values at their printed precision (one unit in the last printed digit),
which a correct build satisfies and a 1% perturbation of c does not.  The
stricter percentage-tolerance variants live in the acceptance test suite.
"""

from dataclasses import dataclass

import numpy as np

from .dynamics import (
    TimeGrid,
    autocorrelation,
    expectation_velocity_y_oracle,
    sample_trace,
    velocity_y,
)
from .model import Branch, PhysicalParams, build_truncated_model, energy, spinor_weights
from .packet import PacketSpec, build_packet, recommend_cutoff
from .presets import TRACE_PRESETS
from .timescales import (
    compute_timescales,
    derivative_consistency_check,
    omega_scan,
    zb_period,
)

#: (label, n0, quantity, printed value, one unit of the last printed digit)
REFERENCE_TIMES = (
    ("n0=30 t_zb", 30, "t_zb", 6.15e-5, 1e-7),
    ("n0=30 t_cl", 30, "t_cl", 8.54e-3, 1e-5),
    ("n0=30 t_r", 30, "t_r", 1.19, 1e-2),
    ("n0=15 t_zb", 15, "t_zb", 8.16e-5, 1e-7),
    ("n0=15 t_cl", 15, "t_cl", 6.4e-3, 1e-4),
    ("n0=15 t_r", 15, "t_r", 0.5, 1e-1),
    ("n0=10 t_zb", 10, "t_zb", 9.46e-5, 1e-7),
    ("n0=10 t_cl", 10, "t_cl", 5.55e-3, 1e-5),
    ("n0=10 t_r", 10, "t_r", 0.33, 1e-2),
)

FREE_LIMIT_ZB = (1.67e-4, 1e-6)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS / FAIL / SKIP
    detail: str


def _result(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, status="PASS" if ok else "FAIL", detail=detail)


def check_reference_times(light_speed: float | None = None) -> CheckResult:
    worst = ("", 0.0)
    ok = True
    for label, n0, quantity, printed, ulp in REFERENCE_TIMES:
        kwargs = {} if light_speed is None else {"light_speed": light_speed}
        params = PhysicalParams(omega=1e3, **kwargs)
        value = getattr(compute_timescales(params, n0), quantity)
        off = abs(value - printed) / ulp
        if off > worst[1]:
            worst = (label, off)
        ok &= off <= 1.0
    params0 = PhysicalParams(omega=0.0, **({} if light_speed is None else {"light_speed": light_speed}))
    free = zb_period(params0, 1)
    ok &= abs(free - FREE_LIMIT_ZB[0]) <= FREE_LIMIT_ZB[1]
    return _result(
        "reference-times",
        ok,
        f"worst deviation {worst[1]:.2f} printed-digit units at {worst[0]}; "
        f"free-limit t_zb={free:.6g}",
    )


def check_spectral_oracle() -> CheckResult:
    params = PhysicalParams(omega=1e3)
    n_max = 60
    model = build_truncated_model(params, n_max)
    evals = np.sort(np.linalg.eigvalsh(model.hamiltonian))
    worst = 0.0
    for n in range(0, n_max - 1):  # guard band: skip n within 2 of the cutoff
        e = energy(params, n, Branch.POSITIVE)
        worst = max(worst, np.min(np.abs(evals - e)) / e)
        if n >= 1:
            worst = max(worst, np.min(np.abs(evals + e)) / e)
    return _result("spectral-oracle", worst < 1e-9,
                   f"max relative eigenvalue error {worst:.3e} (n <= {n_max - 2})")


def _fig1_trace(with_oracle: bool):
    preset = TRACE_PRESETS["fig1"]
    params = PhysicalParams(omega=preset.omega)
    n_max = recommend_cutoff(preset.n0, preset.sigma)
    packet = build_packet(PacketSpec(preset.n0, preset.sigma, n_max), params)
    scales = compute_timescales(params, preset.n0)
    n_samples = int(np.ceil(3.0 * scales.t_cl / (scales.t_zb / 40.0))) + 1
    grid = TimeGrid(0.0, 3.0 * scales.t_cl, n_samples)
    model = build_truncated_model(params, n_max + 2) if with_oracle else None
    return packet, model, sample_trace(packet, grid, model)


def check_proportionality() -> CheckResult:
    _, _, trace = _fig1_trace(with_oracle=True)
    closed, oracle = trace.v_x_closed, trace.v_x_oracle
    mask = np.abs(closed) > 1e-3 * np.max(np.abs(closed))
    ratio = oracle[mask] / closed[mask]
    spread = float(np.ptp(ratio) / abs(np.mean(ratio)))
    return _result(
        "closed-vs-oracle-proportionality",
        spread < 1e-6,
        f"K = {np.mean(ratio):.9g}, relative spread {spread:.3e}",
    )


def check_unitarity() -> CheckResult:
    issues = []
    for name, preset in TRACE_PRESETS.items():
        params = PhysicalParams(omega=preset.omega)
        n_max = recommend_cutoff(preset.n0, preset.sigma)
        packet = build_packet(PacketSpec(preset.n0, preset.sigma, n_max), params)
        if abs(packet.norm - 1.0) > 1e-12:
            issues.append(f"{name}: norm off by {abs(packet.norm - 1.0):.2e}")
        scales = compute_timescales(params, preset.n0)
        ts = np.linspace(0.0, 2.0 * scales.t_cl, 2001)
        a = autocorrelation(packet, ts)
        if abs(a[0] - 1.0) > 1e-12:
            issues.append(f"{name}: |A(0)-1| = {abs(a[0] - 1.0):.2e}")
        if np.max(np.abs(a)) > 1.0 + 1e-10:
            issues.append(f"{name}: |A| exceeds 1 by {np.max(np.abs(a)) - 1.0:.2e}")
        if velocity_y(packet, float(ts[-1])) != 0.0:
            issues.append(f"{name}: closed-form v_y nonzero")
    params = PhysicalParams(omega=1e3)
    ns = np.concatenate([np.arange(0, 101), np.array([10**3, 10**4])])
    worst = max(abs(spinor_weights(params, int(n)).gamma ** 2
                    + spinor_weights(params, int(n)).delta ** 2 - 1.0) for n in ns)
    if worst > 1e-14:
        issues.append(f"spinor weights: gamma^2+delta^2 off by {worst:.2e}")
    return _result("unitarity-normalization", not issues,
                   "; ".join(issues) if issues else "norms, A(t), weights all within tolerance")


def check_velocity_y_oracle() -> CheckResult:
    packet, model, _ = _fig1_trace(with_oracle=True)
    vy0 = abs(expectation_velocity_y_oracle(packet, model, 0.0))
    return _result("velocity-y-oracle-zero", vy0 < 1e-10,
                   f"|<v_y>(0)| = {vy0:.3e} via the matrix route")


def check_ordering_scan() -> CheckResult:
    params = PhysicalParams(omega=1e3)
    rows = omega_scan(params, 30, np.logspace(2, 4, 50))
    ok = all(ts.t_r > ts.t_cl > ts.t_zb for _, ts in rows)
    return _result("timescale-ordering", ok,
                   f"{len(rows)} rows over omega in [1e2, 1e4], n0=30")


def check_taylor_consistency() -> CheckResult:
    worst = 0.0
    for preset in TRACE_PRESETS.values():
        params = PhysicalParams(omega=preset.omega)
        chk = derivative_consistency_check(params, preset.n0)
        worst = max(worst, chk.t_cl_rel_err_analytic, chk.t_r_rel_err_analytic)
        if chk.t_cl_rel_err_fd > 1e-2 or chk.t_r_rel_err_fd > 1e-2:
            return _result("taylor-consistency", False,
                           f"finite-difference route off by >1% at n0={preset.n0}")
    return _result("taylor-consistency", worst < 1e-8,
                   f"analytic-derivative route max relative error {worst:.3e}")


def check_caption_sensitivity() -> CheckResult:
    """The reference-times check must reject a 1% perturbation of c."""
    perturbed = check_reference_times(light_speed=PhysicalParams(omega=1e3).light_speed * 1.01)
    return _result("reference-times-sensitivity", perturbed.status == "FAIL",
                   "1% perturbation of c is detected" if perturbed.status == "FAIL"
                   else "perturbed c slipped through")


def run_checks(include_oracle: bool = True) -> list[CheckResult]:
    results = [
        check_reference_times(),
        check_caption_sensitivity(),
        check_unitarity(),
        check_ordering_scan(),
        check_taylor_consistency(),
    ]
    oracle_checks = (
        ("spectral-oracle", check_spectral_oracle),
        ("closed-vs-oracle-proportionality", check_proportionality),
        ("velocity-y-oracle-zero", check_velocity_y_oracle),
    )
    if include_oracle:
        results.extend(fn() for _, fn in oracle_checks)
    else:
        results.extend(CheckResult(name, "SKIP", "oracle disabled")
                       for name, _ in oracle_checks)
    return results
