"""Spectrum, eigenbasis, and truncated matrix model of the (2+1)-D Dirac oscillator.

The Dirac oscillator couples a two-component spinor to a single Fock ladder.
In the product basis {|n> ⊗ |upper>, |n> ⊗ |lower>} the Hamiltonian is

    H = [[ m c^2,              2 c sqrt(m ω ħ) a⁺ ],
         [ 2 c sqrt(m ω ħ) a,  -m c^2             ]]

with the standard ladder convention <n-1|a|n> = sqrt(n).  Each pair
(|n, upper>, |n-1, lower>) with n >= 1 spans an invariant 2x2 block with
eigenvalues ±E_n,

    E_n = m c^2 sqrt(1 + 4 ħ ω n / (m c^2)),

while |0, upper> is a lone level at +m c^2 (the negative branch does not
exist at n = 0).  The mixing weight of a block is

    ξ_n = 1 / (2 sqrt(1 + 4 ħ ω n / (m c^2))),
    γ_n = sqrt(1/2 + ξ_n),   δ_n = sqrt(1/2 - ξ_n),

and the orthonormal eigenvectors are

    φ_n^+ = γ_n |n, upper> + δ_n |n-1, lower>,
    φ_n^- = -δ_n |n, upper> + γ_n |n-1, lower>.

The lower-component signs are fixed by requiring H φ = E φ with the ladder
convention above; the variant with a negated lower component on the positive
branch satisfies neither the eigenvalue equation nor cross-branch
orthogonality (see tests), so it is not used.

Velocity operators follow from v_j = i[H, r_j]/ħ: in 2+1 dimensions
v_x = c (σ_x ⊗ 1) and v_y = c (σ_y ⊗ 1) on the spinor index.
"""

import enum
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 137.035999  # atomic units

#: Spinor component indices within a Fock level.
UPPER, LOWER = 0, 1

_MAX_FOCK_CUTOFF = 10**6


class Branch(enum.Enum):
    """Sign of the energy eigenvalue attached to a quantum number n."""

    POSITIVE = 1
    NEGATIVE = -1

    @property
    def sign(self) -> int:
        return self.value


@dataclass(frozen=True)
class PhysicalParams:
    """Model constants in atomic units (m = ħ = e = 1, c ≈ 137.036)."""

    omega: float
    mass: float = 1.0
    light_speed: float = SPEED_OF_LIGHT
    hbar: float = 1.0

    def __post_init__(self):
        if not (self.mass > 0 and self.light_speed > 0 and self.hbar > 0):
            raise ValueError("mass, light_speed and hbar must be positive")
        if self.omega < 0:
            raise ValueError("omega must be non-negative")
        if not np.isfinite(self.rest_energy):
            raise ValueError("rest energy m*c^2 must be finite")

    @property
    def rest_energy(self) -> float:
        """Rest energy m c^2."""
        return self.mass * self.light_speed**2


@dataclass(frozen=True)
class SpinorWeights:
    """Eigenvector mixing amplitudes (γ_n, δ_n), with γ² + δ² = 1."""

    gamma: float
    delta: float


def _radicand(params: PhysicalParams, n):
    """1 + 4 ħ ω n / (m c^2) for scalar or array n."""
    n = np.asarray(n, dtype=float)
    return 1.0 + 4.0 * params.hbar * params.omega * n / params.rest_energy


def _check_n(n, branch: Branch = Branch.POSITIVE) -> None:
    n = np.asarray(n)
    if np.any(n < 0):
        raise ValueError("quantum number n must be >= 0")
    if branch is Branch.NEGATIVE and np.any(n < 1):
        raise ValueError("the negative branch does not exist at n = 0")


def energy(params: PhysicalParams, n, branch: Branch = Branch.POSITIVE):
    """Energy eigenvalue ±m c^2 sqrt(1 + 4ħωn/(mc^2)).

    Accepts a scalar or array n; the positive branch is strictly increasing
    in n, and E_n^- = -E_n^+ exactly (electron-hole symmetry).
    """
    _check_n(n, branch)
    e = params.rest_energy * np.sqrt(_radicand(params, n))
    e = branch.sign * e
    return float(e) if np.isscalar(n) or np.ndim(n) == 0 else e


def xi(params: PhysicalParams, n):
    """Mixing weight ξ_n = 1/(2 sqrt(1 + 4ħωn/(mc^2))) ∈ (0, 1/2]."""
    _check_n(n)
    x = 0.5 / np.sqrt(_radicand(params, n))
    return float(x) if np.isscalar(n) or np.ndim(n) == 0 else x


def spinor_weights(params: PhysicalParams, n: int) -> SpinorWeights:
    """Amplitudes γ_n = sqrt(1/2 + ξ_n), δ_n = sqrt(1/2 - ξ_n)."""
    x = xi(params, n)
    return SpinorWeights(gamma=float(np.sqrt(0.5 + x)), delta=float(np.sqrt(0.5 - x)))


def eigenspinor(params: PhysicalParams, n: int, branch: Branch):
    """Eigenvector components as (fock_index, spinor_component, amplitude) entries.

    Positive branch: γ_n on (|n>, upper) and δ_n on (|n-1>, lower); negative
    branch: -δ_n on (|n>, upper) and γ_n on (|n-1>, lower).  At n = 0 only
    the positive branch exists and is the bare (|0>, upper) state.
    """
    _check_n(n, branch)
    w = spinor_weights(params, n)
    if n == 0:
        return ((0, UPPER, 1.0),)
    if branch is Branch.POSITIVE:
        return ((n, UPPER, w.gamma), (n - 1, LOWER, w.delta))
    return ((n, UPPER, -w.delta), (n - 1, LOWER, w.gamma))


def basis_index(n: int, component: int) -> int:
    """Flattened index of |n> ⊗ |component| in the dense model: 2n + component."""
    if component not in (UPPER, LOWER):
        raise ValueError("component must be UPPER (0) or LOWER (1)")
    return 2 * n + component


def eigenspinor_vector(params: PhysicalParams, n: int, branch: Branch, n_max: int) -> np.ndarray:
    """Dense embedding of eigenspinor(n, branch) into the 2(n_max+1) basis."""
    if n > n_max:
        raise ValueError(f"n={n} exceeds the Fock cutoff n_max={n_max}")
    v = np.zeros(2 * (n_max + 1))
    for fock, comp, amp in eigenspinor(params, n, branch):
        v[basis_index(fock, comp)] = amp
    return v


@dataclass(frozen=True)
class TruncatedModel:
    """Dense Hermitian matrices over the Fock ⊗ spinor basis, index = 2n + component.

    Immutable once built; eigenvalues of `hamiltonian` reproduce the analytic
    spectrum for every retained block (the truncation leaves a single
    spurious eigenvalue -mc^2 from the uncoupled |n_max, lower> state).
    """

    params: PhysicalParams
    n_max: int
    hamiltonian: np.ndarray
    velocity_x: np.ndarray

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 1)


def build_truncated_model(params: PhysicalParams, n_max: int) -> TruncatedModel:
    """Assemble the truncated Hamiltonian and v_x = c(σ_x ⊗ 1) matrices."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > _MAX_FOCK_CUTOFF:
        raise ValueError(f"n_max={n_max} exceeds the guard limit {_MAX_FOCK_CUTOFF}")
    dim = 2 * (n_max + 1)
    h = np.zeros((dim, dim))
    vx = np.zeros((dim, dim))
    rest = params.rest_energy
    coupling = 2.0 * params.light_speed * np.sqrt(params.mass * params.omega * params.hbar)
    for n in range(n_max + 1):
        iu, il = basis_index(n, UPPER), basis_index(n, LOWER)
        h[iu, iu] = rest
        h[il, il] = -rest
        vx[iu, il] = params.light_speed
        vx[il, iu] = params.light_speed
    for n in range(1, n_max + 1):
        iu, il = basis_index(n, UPPER), basis_index(n - 1, LOWER)
        h[iu, il] = coupling * np.sqrt(n)
        h[il, iu] = coupling * np.sqrt(n)
    return TruncatedModel(params=params, n_max=n_max, hamiltonian=h, velocity_x=vx)


def velocity_y_matrix(params: PhysicalParams, n_max: int) -> np.ndarray:
    """Dense v_y = c(σ_y ⊗ 1) in the same basis ordering (complex Hermitian)."""
    dim = 2 * (n_max + 1)
    vy = np.zeros((dim, dim), dtype=complex)
    for n in range(n_max + 1):
        iu, il = basis_index(n, UPPER), basis_index(n, LOWER)
        vy[iu, il] = -1j * params.light_speed
        vy[il, iu] = 1j * params.light_speed
    return vy
