"""Localized two-branch wave packets in the energy eigenbasis.

A packet holds complex amplitudes over (n, branch) pairs.  The standard
construction distributes a shared Gaussian profile

    c_n ∝ exp(-(n - n0)^2 / (2σ))

over both branches with weights (1/√2, 1/√2).  The profile is always
renormalized numerically so the total packet norm is exactly 1 (the
continuum-style prefactor sqrt(1/(π√σ)) leaves Σ c_n² ≈ 1/√π, not 1).
The non-existent (0, negative) entry is silently dropped and its weight
reabsorbed by the final renormalization.
"""

from dataclasses import dataclass

import numpy as np

from .errors import TruncationError
from .model import Branch, PhysicalParams

TAIL_TOLERANCE = 1e-12

_DEFAULT_MIX = (1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0))


@dataclass(frozen=True)
class PacketSpec:
    """Recipe for a Gaussian two-branch packet."""

    n0: int
    sigma: float
    n_max: int
    branch_mix: tuple[complex, complex] = _DEFAULT_MIX

    def __post_init__(self):
        if self.n0 < 1:
            raise ValueError("n0 must be >= 1")
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")
        if self.n_max <= self.n0:
            raise ValueError("n_max must exceed n0")
        total = abs(self.branch_mix[0]) ** 2 + abs(self.branch_mix[1]) ** 2
        if abs(total - 1.0) > 1e-12:
            raise ValueError("branch mix weights must satisfy |b+|^2 + |b-|^2 = 1")


def _tail_mass(n0: int, sigma: float, n_max: int) -> float:
    """Population fraction of the full Gaussian profile left beyond n_max."""
    reach = n_max + max(int(np.ceil(12.0 * np.sqrt(sigma))), 60)
    ns = np.arange(0, reach + 1)
    w = np.exp(-((ns - n0) ** 2) / sigma)
    return float(w[ns > n_max].sum() / w.sum())


def gaussian_coefficients(spec: PacketSpec) -> np.ndarray:
    """Renormalized profile c_n, n = 0..n_max, with Σ c_n² = 1.

    Raises TruncationError if the Gaussian mass beyond n_max exceeds
    TAIL_TOLERANCE.
    """
    if _tail_mass(spec.n0, spec.sigma, spec.n_max) > TAIL_TOLERANCE:
        raise TruncationError(
            f"tail mass beyond n_max={spec.n_max} exceeds {TAIL_TOLERANCE:g}; "
            f"raise the cutoff (recommend_cutoff suggests {recommend_cutoff(spec.n0, spec.sigma)})"
        )
    ns = np.arange(0, spec.n_max + 1)
    c = np.exp(-((ns - spec.n0) ** 2) / (2.0 * spec.sigma))
    return c / np.sqrt(np.sum(c**2))


def recommend_cutoff(n0: int, sigma: float) -> int:
    """Smallest n_max = n0 + k·√σ (integer k) with tail mass < TAIL_TOLERANCE.

    Never returns less than n0 + 10.
    """
    if n0 < 1:
        raise ValueError("n0 must be >= 1")
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    step = np.sqrt(sigma)
    k = 1
    while True:
        n_max = n0 + int(np.ceil(k * step))
        if _tail_mass(n0, sigma, n_max) < TAIL_TOLERANCE:
            break
        k += 1
    return max(n_max, n0 + 10)


@dataclass(frozen=True)
class WavePacket:
    """Amplitudes over (n, branch), unit norm, no (0, negative) entry.

    Internally stored as aligned arrays over n = ns[0]..ns[-1]; amps_minus[i]
    is zero wherever the negative branch does not exist.  Immutable.
    """

    params: PhysicalParams
    ns: np.ndarray
    amps_plus: np.ndarray
    amps_minus: np.ndarray

    def __post_init__(self):
        if abs(self.norm - 1.0) > 1e-12:
            raise ValueError(f"packet norm {self.norm!r} deviates from 1 beyond 1e-12")
        if self.ns[0] == 0 and self.amps_minus[0] != 0:
            raise ValueError("the (0, negative) state does not exist")

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps_plus) ** 2)
                             + np.sum(np.abs(self.amps_minus) ** 2)))

    @property
    def n_max(self) -> int:
        return int(self.ns[-1])

    @property
    def coefficients(self) -> dict:
        """Map (n, Branch) -> amplitude, omitting exact zeros."""
        out = {}
        for i, n in enumerate(self.ns):
            if self.amps_plus[i] != 0:
                out[(int(n), Branch.POSITIVE)] = complex(self.amps_plus[i])
            if self.amps_minus[i] != 0:
                out[(int(n), Branch.NEGATIVE)] = complex(self.amps_minus[i])
        return out

    def amplitude(self, n: int, branch: Branch) -> complex:
        i = int(n - self.ns[0])
        if i < 0 or i >= len(self.ns):
            return 0.0j
        return complex(self.amps_plus[i] if branch is Branch.POSITIVE else self.amps_minus[i])

    @classmethod
    def from_amplitudes(cls, params: PhysicalParams, entries: dict) -> "WavePacket":
        """Build a packet from a {(n, Branch): amplitude} map (renormalized)."""
        if not entries:
            raise ValueError("empty amplitude map")
        for (n, branch) in entries:
            if n < 0 or (n == 0 and branch is Branch.NEGATIVE):
                raise ValueError(f"invalid state ({n}, {branch})")
        top = max(n for n, _ in entries)
        ns = np.arange(0, top + 1)
        plus = np.zeros(top + 1, dtype=complex)
        minus = np.zeros(top + 1, dtype=complex)
        for (n, branch), a in entries.items():
            (plus if branch is Branch.POSITIVE else minus)[n] = a
        scale = np.sqrt(np.sum(np.abs(plus) ** 2) + np.sum(np.abs(minus) ** 2))
        if scale == 0:
            raise ValueError("all amplitudes vanish")
        return cls(params=params, ns=ns, amps_plus=plus / scale, amps_minus=minus / scale)

    def is_default_mix(self, tol: float = 1e-12) -> bool:
        """True for the standard packet: real non-negative equal branch weights."""
        if np.any(np.abs(self.amps_plus.imag) > tol) or np.any(np.abs(self.amps_minus.imag) > tol):
            return False
        if np.any(self.amps_plus.real < -tol):
            return False
        start = 1 if self.ns[0] == 0 else 0
        return bool(np.all(np.abs(self.amps_plus[start:] - self.amps_minus[start:]) <= tol))

    def shared_coefficients(self) -> np.ndarray:
        """√2 · (positive-branch amplitudes), the effective Gaussian profile.

        Only meaningful for default-mix packets; callers must check
        is_default_mix() first.
        """
        return np.sqrt(2.0) * self.amps_plus.real


def build_packet(spec: PacketSpec, params: PhysicalParams) -> WavePacket:
    """Distribute the Gaussian profile over both branches and normalize.

    amplitude(n, ±) = branch_mix± · c_n, except (0, negative) which is
    dropped; the final renormalization restores unit norm.
    """
    c = gaussian_coefficients(spec)
    ns = np.arange(0, spec.n_max + 1)
    plus = np.asarray(spec.branch_mix[0], dtype=complex) * c
    minus = np.asarray(spec.branch_mix[1], dtype=complex) * c
    minus = minus.copy()
    minus[0] = 0.0
    scale = np.sqrt(np.sum(np.abs(plus) ** 2) + np.sum(np.abs(minus) ** 2))
    return WavePacket(params=params, ns=ns, amps_plus=plus / scale, amps_minus=minus / scale)
