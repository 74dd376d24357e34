"""Characteristic times of the packet dynamics and the frequency scan.

A packet centred on level n0 evolves on three nested scales derived from the
Taylor expansion of E_n around n0 (r ≡ 1 + 4ħωn0/(mc²)):

    T_ZB = πħ / E_{n0}            = πħ / (mc² √r)      (trembling motion)
    T_CL = 2πħ / |E'(n0)|         = (π/ω) √r           (quasiclassical period)
    T_R  = 2πħ / (|E''(n0)|/2)    = (π mc²/ħω²) r^{3/2} (amplitude revival)

These obey T_R / T_CL = T_CL / T_ZB = mc² r / (ħω) >= 1 + 4 n0, so the
ordering T_R > T_CL > T_ZB holds for every ω > 0 and n0 >= 1.  At ω = 0 the
classical and revival scales diverge (free-particle limit: the trembling is
transient and never regenerates), which is signalled as a division by zero;
T_ZB stays finite at πħ/mc².
"""

from dataclasses import dataclass, replace

import numpy as np

from .model import Branch, PhysicalParams, energy


@dataclass(frozen=True)
class TimeScales:
    """The three characteristic times, atomic units."""

    t_zb: float
    t_cl: float
    t_r: float


def _radicand(params: PhysicalParams, n0: int) -> float:
    return 1.0 + 4.0 * params.hbar * params.omega * n0 / params.rest_energy


def _require_omega(params: PhysicalParams, what: str) -> None:
    if params.omega == 0:
        raise ZeroDivisionError(f"{what} diverges at omega = 0 (free-particle limit)")


def classical_period(params: PhysicalParams, n0: int) -> float:
    """T_CL = (π/ω) sqrt(1 + 4ħωn0/(mc²))."""
    _require_omega(params, "classical period")
    return float((np.pi / params.omega) * np.sqrt(_radicand(params, n0)))


def revival_time(params: PhysicalParams, n0: int) -> float:
    """T_R = (π mc²/(ħω²)) (1 + 4ħωn0/(mc²))^{3/2}."""
    _require_omega(params, "revival time")
    return float((np.pi * params.rest_energy / (params.hbar * params.omega**2))
                 * _radicand(params, n0) ** 1.5)


def zb_period(params: PhysicalParams, n0: int) -> float:
    """T_ZB = πħ/E_{n0}; finite for every ω >= 0 (shares the energy code path)."""
    return np.pi * params.hbar / energy(params, n0, Branch.POSITIVE)


def compute_timescales(params: PhysicalParams, n0: int) -> TimeScales:
    return TimeScales(
        t_zb=zb_period(params, n0),
        t_cl=classical_period(params, n0),
        t_r=revival_time(params, n0),
    )


@dataclass(frozen=True)
class DerivativeCheck:
    """Cross-validation of the closed periods against dE/dn routes.

    Analytic derivatives of E_n and centred finite differences on the integer
    spectrum must both reproduce T_CL = 2πħ/|E'| and T_R = 4πħ/|E''| (the
    finite-difference route only up to discretization error O(1/n0))."""

    e_prime_analytic: float
    e_double_prime_analytic: float
    e_prime_fd: float
    e_double_prime_fd: float
    t_cl_rel_err_analytic: float
    t_r_rel_err_analytic: float
    t_cl_rel_err_fd: float
    t_r_rel_err_fd: float


def derivative_consistency_check(params: PhysicalParams, n0: int) -> DerivativeCheck:
    _require_omega(params, "derivative consistency check")
    if n0 < 1:
        raise ValueError("n0 must be >= 1 for the centred difference")
    hbar, omega = params.hbar, params.omega
    r = _radicand(params, n0)
    e1 = 2.0 * hbar * omega / np.sqrt(r)
    e2 = -4.0 * hbar**2 * omega**2 / (params.rest_energy * r**1.5)
    e_n = lambda n: energy(params, n, Branch.POSITIVE)  # noqa: E731
    e1_fd = (e_n(n0 + 1) - e_n(n0 - 1)) / 2.0
    e2_fd = e_n(n0 + 1) - 2.0 * e_n(n0) + e_n(n0 - 1)
    t_cl, t_r = classical_period(params, n0), revival_time(params, n0)
    return DerivativeCheck(
        e_prime_analytic=e1,
        e_double_prime_analytic=e2,
        e_prime_fd=e1_fd,
        e_double_prime_fd=e2_fd,
        t_cl_rel_err_analytic=abs(t_cl - 2.0 * np.pi * hbar / abs(e1)) / t_cl,
        t_r_rel_err_analytic=abs(t_r - 4.0 * np.pi * hbar / abs(e2)) / t_r,
        t_cl_rel_err_fd=abs(t_cl - 2.0 * np.pi * hbar / abs(e1_fd)) / t_cl,
        t_r_rel_err_fd=abs(t_r - 4.0 * np.pi * hbar / abs(e2_fd)) / t_r,
    )


def omega_scan(params_template: PhysicalParams, n0: int,
               omegas) -> list[tuple[float, TimeScales]]:
    """One (ω, TimeScales) row per frequency; rows are independent."""
    omegas = np.asarray(omegas, dtype=float)
    if np.any(omegas <= 0):
        raise ValueError("scan frequencies must be strictly positive")
    return [(float(w), compute_timescales(replace(params_template, omega=float(w)), n0))
            for w in omegas]


def default_scan_omegas(n_points: int = 50) -> np.ndarray:
    """Logarithmic ω grid over [1e2, 1e4] bracketing the preset frequency."""
    return np.logspace(2.0, 4.0, n_points)


def write_scan_csv(rows: list[tuple[float, TimeScales]], path) -> None:
    """CSV with header omega,t_zb,t_cl,t_r at full double precision."""
    with open(path, "w", newline="") as fh:
        fh.write("omega,t_zb,t_cl,t_r\n")
        for w, ts in rows:
            fh.write(f"{w:.17g},{ts.t_zb:.17g},{ts.t_cl:.17g},{ts.t_r:.17g}\n")
