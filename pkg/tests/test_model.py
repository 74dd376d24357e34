import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diraczb import (
    LOWER,
    UPPER,
    Branch,
    PhysicalParams,
    basis_index,
    build_truncated_model,
    eigenspinor,
    eigenspinor_vector,
    energy,
    spinor_weights,
    velocity_y_matrix,
    xi,
)

OMEGAS = st.floats(min_value=1.0, max_value=1e5)


def test_params_validation():
    with pytest.raises(ValueError):
        PhysicalParams(omega=-1.0)
    with pytest.raises(ValueError):
        PhysicalParams(omega=1.0, mass=0.0)
    p = PhysicalParams(omega=0.0)
    assert p.rest_energy > 0 and np.isfinite(p.rest_energy)


def test_rest_energy_published_value():
    p = PhysicalParams(omega=1e3, light_speed=137.036)
    assert abs(p.rest_energy - 18778.87) < 0.01


def test_energy_ground_state_is_rest_energy(params1000):
    assert energy(params1000, 0) == params1000.rest_energy
    # independent of omega at n = 0
    assert energy(PhysicalParams(omega=5.0), 0) == PhysicalParams(omega=5.0).rest_energy


def test_energy_reference_point(params1000):
    # n=30 at omega=1e3: rest energy times sqrt(7.3902...)
    e = energy(params1000, 30)
    assert abs(e - 5.105e4) / 5.105e4 < 2e-4
    radicand = (e / params1000.rest_energy) ** 2
    assert abs(radicand - 7.3902) < 1e-3


def test_energy_branch_symmetry_exact(params1000):
    for n in [1, 2, 17, 100, 4096]:
        assert energy(params1000, n, Branch.NEGATIVE) == -energy(params1000, n, Branch.POSITIVE)


def test_energy_negative_branch_at_zero_rejected(params1000):
    with pytest.raises(ValueError):
        energy(params1000, 0, Branch.NEGATIVE)
    with pytest.raises(ValueError):
        eigenspinor(params1000, 0, Branch.NEGATIVE)


@given(omega=OMEGAS)
@settings(max_examples=30, deadline=None)
def test_energy_monotone_in_n(omega):
    params = PhysicalParams(omega=omega)
    e = energy(params, np.arange(0, 200))
    assert np.all(np.diff(e) > 0)


def test_free_limit(params1000):
    params0 = PhysicalParams(omega=0.0)
    for n in [0, 1, 50]:
        assert energy(params0, n) == params0.rest_energy
        assert xi(params0, n) == 0.5


def test_xi_values(params1000):
    assert xi(params1000, 0) == 0.5
    assert abs(xi(params1000, 30) - 0.18393) < 5e-6
    vals = xi(params1000, np.arange(0, 500))
    assert np.all(np.diff(vals) < 0)
    assert np.all((vals > 0) & (vals <= 0.5))


def test_spinor_weights_reference(params1000):
    w0 = spinor_weights(params1000, 0)
    assert (w0.gamma, w0.delta) == (1.0, 0.0)
    w30 = spinor_weights(params1000, 30)
    assert abs(w30.gamma - 0.8269) < 2e-4
    assert abs(w30.delta - 0.5623) < 2e-4


@given(n=st.integers(min_value=0, max_value=10**4), omega=OMEGAS)
@settings(max_examples=80, deadline=None)
def test_spinor_weights_normalized(n, omega):
    w = spinor_weights(PhysicalParams(omega=omega), n)
    assert abs(w.gamma**2 + w.delta**2 - 1.0) < 1e-14
    assert 1.0 / np.sqrt(2.0) <= w.gamma <= 1.0
    assert 0.0 <= w.delta <= 1.0 / np.sqrt(2.0)


def test_eigenspinor_ground_state(params1000):
    assert eigenspinor(params1000, 0, Branch.POSITIVE) == ((0, UPPER, 1.0),)


def test_eigenspinor_unit_norm_and_orthogonal(params1000):
    for n in [1, 5, 42, 300]:
        plus = dict(((f, c), a) for f, c, a in eigenspinor(params1000, n, Branch.POSITIVE))
        minus = dict(((f, c), a) for f, c, a in eigenspinor(params1000, n, Branch.NEGATIVE))
        assert abs(sum(a * a for a in plus.values()) - 1.0) < 1e-14
        assert abs(sum(a * a for a in minus.values()) - 1.0) < 1e-14
        overlap = sum(plus[k] * minus[k] for k in plus)
        assert overlap == 0.0


def test_eigen_equation_against_dense_matrix(params1000):
    n_max = 20
    model = build_truncated_model(params1000, n_max)
    for n in range(0, n_max - 1):
        for branch in (Branch.POSITIVE, Branch.NEGATIVE):
            if n == 0 and branch is Branch.NEGATIVE:
                continue
            v = eigenspinor_vector(params1000, n, branch, n_max)
            e = energy(params1000, n, branch)
            assert np.max(np.abs(model.hamiltonian @ v - e * v)) < 1e-9 * abs(e)


def test_matrices_hermitian(params1000):
    model = build_truncated_model(params1000, 12)
    assert np.array_equal(model.hamiltonian, model.hamiltonian.T)
    assert np.array_equal(model.velocity_x, model.velocity_x.T)
    vy = velocity_y_matrix(params1000, 12)
    assert np.allclose(vy, vy.conj().T, atol=0)


def test_spectrum_matches_formula(params1000):
    n_max = 30
    model = build_truncated_model(params1000, n_max)
    evals = np.sort(np.linalg.eigvalsh(model.hamiltonian))
    for n in range(0, n_max - 1):
        e = energy(params1000, n)
        assert np.min(np.abs(evals - e)) < 1e-10 * e
        if n >= 1:
            assert np.min(np.abs(evals + e)) < 1e-10 * e


def test_smallest_model_block_eigenvalues():
    params = PhysicalParams(omega=1e3)
    model = build_truncated_model(params, 1)
    evals = np.sort(np.linalg.eigvalsh(model.hamiltonian))
    e1 = np.sqrt(params.rest_energy**2
                 + 4.0 * params.light_speed**2 * params.mass * params.omega * params.hbar)
    assert np.min(np.abs(evals - e1)) < 1e-12 * e1
    assert np.min(np.abs(evals + e1)) < 1e-12 * e1


def test_velocity_couples_only_neighbouring_levels(params1000):
    n_max = 15
    model = build_truncated_model(params1000, n_max)
    states = []
    for n in range(0, n_max + 1):
        states.append((n, eigenspinor_vector(params1000, n, Branch.POSITIVE, n_max)))
        if n >= 1:
            states.append((n, eigenspinor_vector(params1000, n, Branch.NEGATIVE, n_max)))
    for ni, vi in states:
        for nj, vj in states:
            element = vi @ model.velocity_x @ vj
            if abs(ni - nj) != 1:
                assert abs(element) < 1e-12 * params1000.light_speed


def test_velocity_operator_norm_is_c(params1000):
    model = build_truncated_model(params1000, 10)
    evals = np.linalg.eigvalsh(model.velocity_x)
    assert abs(evals.min() + params1000.light_speed) < 1e-12
    assert abs(evals.max() - params1000.light_speed) < 1e-12


def test_model_guards(params1000):
    with pytest.raises(ValueError):
        build_truncated_model(params1000, 0)
    with pytest.raises(ValueError):
        build_truncated_model(params1000, 10**6 + 1)
    with pytest.raises(ValueError):
        basis_index(3, 2)
    with pytest.raises(ValueError):
        eigenspinor_vector(params1000, 11, Branch.POSITIVE, 10)


def test_basis_index_layout():
    assert basis_index(0, UPPER) == 0
    assert basis_index(0, LOWER) == 1
    assert basis_index(7, UPPER) == 14
