"""Time evolution: closed-form velocity series, autocorrelation, matrix oracle.

Closed form.  For the standard packet (equal real weights on both branches,
shared profile c_n), expanding <Ψ(t)| c(σ_x ⊗ 1) |Ψ(t)> over the orthonormal
eigenbasis leaves only Fock-neighbouring pairs (n, n+1) and collapses to a
two-frequency cosine series per pair,

    v_x(t)/c = Σ_n c_n c_{n+1} [ (γ_n γ_{n+1} - δ_n δ_{n+1}) cos((E_n+E_{n+1}) t/ħ)
                               + (γ_n δ_{n+1} - δ_n γ_{n+1}) cos((E_n-E_{n+1}) t/ħ) ].

The first (interbranch) term carries the fast trembling motion at period
πħ/E_{n0}; the second (intrabranch) term is suppressed by the near-equality
of neighbouring mixing angles.  The series is reported in units of c, so the
independent matrix oracle must reproduce it times the single constant K = c;
that proportionality is the package's central cross-check and is enforced in
the acceptance suite.  Commonly quoted variants of the series coefficients
(sums γγ'+δδ', γδ'+δγ' instead of differences) trace back to a sign slip in
the eigenvector pattern and fail the oracle comparison; see the model module
notes and tests.

Oracle.  expectation_velocity_oracle embeds the packet into the dense
Fock ⊗ spinor basis through the eigenvectors, applies the spectral phases
e^{+i E t/ħ}, and evaluates the v_x quadratic form — an independent route
through explicit matrices.

Phases follow the e^{+iEt/ħ} convention throughout; every reported
observable depends on cosines or moduli, so the sign is unobservable.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractError
from .model import (
    Branch,
    TruncatedModel,
    eigenspinor_vector,
    energy,
    velocity_y_matrix,
    xi,
)
from .packet import WavePacket

_CHUNK = 65536


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling grid; t_end > t_start >= 0, n_samples >= 2."""

    t_start: float
    t_end: float
    n_samples: int

    def __post_init__(self):
        if self.t_start < 0:
            raise ValueError("t_start must be >= 0")
        if not self.t_end > self.t_start:
            raise ValueError("t_end must exceed t_start (degenerate grids rejected)")
        if self.n_samples < 2:
            raise ValueError("n_samples must be >= 2")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_samples)

    @property
    def dt(self) -> float:
        return (self.t_end - self.t_start) / (self.n_samples - 1)


@dataclass(frozen=True)
class Trace:
    """Sampled dynamics: closed-form v_x (units of c), optional oracle v_x
    (atomic units), complex autocorrelation, and run metadata (includes the
    fitted proportionality constant K when the oracle column is present)."""

    grid: TimeGrid
    v_x_closed: np.ndarray
    v_x_oracle: np.ndarray | None
    autocorr: np.ndarray
    metadata: dict = field(default_factory=dict)


def _single_state(packet: WavePacket) -> bool:
    return np.count_nonzero(packet.amps_plus) + np.count_nonzero(packet.amps_minus) == 1


def _series_terms(packet: WavePacket):
    """Pairwise weights and angular frequencies of the closed-form series."""
    if not packet.is_default_mix() and not _single_state(packet):
        raise ContractError(
            "closed-form velocity requires the standard equal-branch-mix packet"
        )
    if _single_state(packet):
        # stationary state: no Fock-neighbouring pair, the series vanishes
        zero = np.zeros(0)
        return zero, zero, zero, zero
    params = packet.params
    ns = packet.ns
    c = packet.shared_coefficients()
    x = xi(params, ns)
    gam = np.sqrt(0.5 + x)
    dlt = np.sqrt(0.5 - x)
    e = energy(params, ns)
    w = c[:-1] * c[1:]
    w_fast = w * (gam[:-1] * gam[1:] - dlt[:-1] * dlt[1:])
    w_slow = w * (gam[:-1] * dlt[1:] - dlt[:-1] * gam[1:])
    f_fast = (e[:-1] + e[1:]) / params.hbar
    f_slow = (e[:-1] - e[1:]) / params.hbar
    return w_fast, w_slow, f_fast, f_slow


def _eval_series(w_fast, w_slow, f_fast, f_slow, times: np.ndarray) -> np.ndarray:
    if len(w_fast) == 0:
        return np.zeros(len(times))
    out = np.empty(len(times))
    for i in range(0, len(times), _CHUNK):
        tt = times[i:i + _CHUNK]
        out[i:i + _CHUNK] = (w_fast @ np.cos(f_fast[:, None] * tt[None, :])
                             + w_slow @ np.cos(f_slow[:, None] * tt[None, :]))
    return out


def velocity_x_closed(packet: WavePacket, t):
    """Closed-form <v_x>(t) in units of c; scalar in, scalar out."""
    terms = _series_terms(packet)
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    out = _eval_series(*terms, tt)
    return float(out[0]) if np.ndim(t) == 0 else out


def velocity_y(packet: WavePacket, t) -> float:
    """Closed-form <v_y> of the standard packet: identically 0.

    This is the adopted closed-form convention for the two-branch packet
    family.  The matrix route reproduces it exactly at t = 0 (real state,
    purely imaginary antisymmetric operator); at later times the matrix
    expectation does not vanish, and the x component is the observable this
    package analyses.
    """
    if not packet.is_default_mix() and not _single_state(packet):
        raise ContractError("velocity_y is defined for the standard packet")
    return 0.0


def autocorrelation(packet: WavePacket, t):
    """Overlap A(t) = Σ |a(n,±)|² e^{+i E_n^± t/ħ} of initial and evolved packet.

    For the standard mix this is Σ c_n² cos(E_n t/ħ) up to the weight of the
    dropped (0, negative) entry, whose unpaired phase leaves an imaginary
    part bounded by |a(0,+)|² (zero for well-localized packets).
    """
    params = packet.params
    e = energy(params, packet.ns)
    w_plus = np.abs(packet.amps_plus) ** 2
    w_minus = np.abs(packet.amps_minus) ** 2
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(len(tt), dtype=complex)
    for i in range(0, len(tt), _CHUNK):
        chunk = tt[i:i + _CHUNK]
        ph = np.exp(1j * (e[:, None] * chunk[None, :]) / params.hbar)
        out[i:i + _CHUNK] = w_plus @ ph + w_minus @ np.conj(ph)
    return complex(out[0]) if np.ndim(t) == 0 else out


def evolve_state(packet: WavePacket, t: float) -> WavePacket:
    """Apply the spectral phases e^{+i E_n^± t/ħ}; norm is preserved exactly."""
    params = packet.params
    e = energy(params, packet.ns)
    ph = np.exp(1j * e * t / params.hbar)
    return WavePacket(
        params=params,
        ns=packet.ns,
        amps_plus=packet.amps_plus * ph,
        amps_minus=packet.amps_minus * np.conj(ph),
    )


def _eigenbasis_embedding(packet: WavePacket, model: TruncatedModel):
    """Columns U of eigenvectors for every populated (n, branch), with
    amplitudes a and signed energies E."""
    if model.n_max < packet.n_max + 2:
        raise ValueError(
            f"cutoff mismatch: oracle needs model.n_max >= packet cutoff + 2 "
            f"({model.n_max} < {packet.n_max + 2})"
        )
    params = packet.params
    cols, amps, ens = [], [], []
    for i, n in enumerate(packet.ns):
        n = int(n)
        cols.append(eigenspinor_vector(params, n, Branch.POSITIVE, model.n_max))
        amps.append(packet.amps_plus[i])
        ens.append(energy(params, n))
        if n >= 1:
            cols.append(eigenspinor_vector(params, n, Branch.NEGATIVE, model.n_max))
            amps.append(packet.amps_minus[i])
            ens.append(-energy(params, n))
    return np.array(cols).T, np.array(amps, dtype=complex), np.array(ens)


def _oracle_expectation(operator: np.ndarray, u: np.ndarray, amps: np.ndarray,
                        energies: np.ndarray, hbar: float, times: np.ndarray) -> np.ndarray:
    out = np.empty(len(times))
    for i in range(0, len(times), _CHUNK):
        tt = times[i:i + _CHUNK]
        phased = amps[:, None] * np.exp(1j * energies[:, None] * tt[None, :] / hbar)
        psi = u @ phased
        vals = np.einsum("it,it->t", np.conj(psi), operator @ psi)
        if np.max(np.abs(vals.imag)) > 1e-10 * max(1.0, float(np.max(np.abs(vals.real)))):
            raise ContractError("oracle expectation acquired a non-real value")
        out[i:i + _CHUNK] = vals.real
    return out


def expectation_velocity_oracle(packet: WavePacket, model: TruncatedModel, t):
    """<Ψ(t)| v_x |Ψ(t)> through the dense matrices, in atomic units."""
    u, amps, ens = _eigenbasis_embedding(packet, model)
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    out = _oracle_expectation(model.velocity_x, u, amps, ens, packet.params.hbar, tt)
    return float(out[0]) if np.ndim(t) == 0 else out


def expectation_velocity_y_oracle(packet: WavePacket, model: TruncatedModel, t):
    """<Ψ(t)| v_y |Ψ(t)> through the dense matrices, in atomic units."""
    u, amps, ens = _eigenbasis_embedding(packet, model)
    vy = velocity_y_matrix(packet.params, model.n_max)
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    out = _oracle_expectation(vy, u, amps, ens, packet.params.hbar, tt)
    return float(out[0]) if np.ndim(t) == 0 else out


def fit_proportionality(v_closed: np.ndarray, v_oracle: np.ndarray) -> float | None:
    """Constant K with v_oracle = K * v_closed, fitted at the largest sample."""
    i = int(np.argmax(np.abs(v_closed)))
    if v_closed[i] == 0.0:
        return None
    return float(v_oracle[i] / v_closed[i])


def sample_trace(packet: WavePacket, grid: TimeGrid,
                 model: TruncatedModel | None = None) -> Trace:
    """Evaluate the closed form, the autocorrelation, and (optionally) the
    matrix oracle on every grid point.  Samples are independent pointwise
    evaluations, so refining the grid never changes shared time points."""
    times = grid.times
    v_closed = _eval_series(*_series_terms(packet), times)
    acorr = autocorrelation(packet, times)
    v_oracle = None
    k = None
    if model is not None:
        u, amps, ens = _eigenbasis_embedding(packet, model)
        v_oracle = _oracle_expectation(model.velocity_x, u, amps, ens,
                                       packet.params.hbar, times)
        k = fit_proportionality(v_closed, v_oracle)
    params = packet.params
    metadata = {
        "mass": params.mass,
        "light_speed": params.light_speed,
        "hbar": params.hbar,
        "omega": params.omega,
        "packet_n_max": packet.n_max,
        "proportionality_k": k,
    }
    return Trace(grid=grid, v_x_closed=v_closed, v_x_oracle=v_oracle,
                 autocorr=acorr, metadata=metadata)


def write_trace_csv(trace: Trace, path) -> None:
    """CSV with header t,v_x_closed,v_x_oracle,autocorr_re,autocorr_im,autocorr_abs.

    Values carry 17 significant digits; the oracle field is empty when the
    trace was sampled without a model.
    """
    times = trace.grid.times
    with open(path, "w", newline="") as fh:
        fh.write("t,v_x_closed,v_x_oracle,autocorr_re,autocorr_im,autocorr_abs\n")
        for i, t in enumerate(times):
            oracle = "" if trace.v_x_oracle is None else f"{trace.v_x_oracle[i]:.17g}"
            a = trace.autocorr[i]
            fh.write(f"{t:.17g},{trace.v_x_closed[i]:.17g},{oracle},"
                     f"{a.real:.17g},{a.imag:.17g},{abs(a):.17g}\n")
