"""Dense brute-force path: density matrices, PT, Jacobi eigensolver, ladders."""

import cmath
import math

import numpy as np
import pytest

from paircoherent import (
    SchmidtState,
    dense_density,
    hermitian_eigenvalues,
    joint_variance,
    ladder_expectation,
    pair_coherent,
    partial_transpose,
    pt_spectrum,
    squeezed_vacuum,
    variances_from_ladders,
)
from paircoherent.errors import DomainError
from paircoherent.oracle import DenseOperator


def i0_series(x, terms=200):
    return math.fsum(
        math.exp(2.0 * k * math.log(x / 2.0) - 2.0 * math.lgamma(k + 1))
        for k in range(terms)) if x > 0 else 1.0


def i1_series(x, terms=200):
    return math.fsum(
        math.exp((2.0 * k + 1) * math.log(x / 2.0)
                 - math.lgamma(k + 1) - math.lgamma(k + 2))
        for k in range(terms)) if x > 0 else 0.0


def fixed_cut_pair_coherent(zeta: complex, n_max: int) -> SchmidtState:
    """Pair-coherent coefficients zeta^n/n!, truncated at exactly n_max."""
    n = np.arange(n_max + 1)
    lf = np.array([math.lgamma(k + 1) for k in n])
    mags = np.exp(n * math.log(abs(zeta)) - lf) if zeta != 0 else (n == 0).astype(float)
    coeffs = mags * np.exp(1j * cmath.phase(complex(zeta)) * n)
    return SchmidtState.from_coefficients(coeffs)


def test_dense_density_vacuum():
    op = dense_density(pair_coherent(0.0))
    assert op.matrix.shape == (1, 1)
    assert op.matrix[0, 0] == 1.0


def test_dense_density_structure():
    state = pair_coherent(1.0)
    op = dense_density(state)
    side = state.truncation + 1
    assert op.matrix.shape == (side * side, side * side)
    assert np.trace(op.matrix) == pytest.approx(1.0, abs=1e-12)
    assert np.trace(op.matrix @ op.matrix).real == pytest.approx(1.0, abs=1e-10)
    # entry ((n,n),(m,m)) = c_n conj(c_m); all others zero
    c = state.coefficients
    dense = op.matrix.reshape(side, side, side, side)
    for n in range(side):
        for m in range(side):
            assert dense[n, n, m, m] == pytest.approx(c[n] * np.conj(c[m]), abs=1e-15)
    mask = np.zeros((side, side, side, side), dtype=bool)
    idx = np.arange(side)
    mask[idx[:, None], idx[:, None], idx[None, :], idx[None, :]] = True
    assert np.all(np.abs(dense[~mask]) == 0.0)


def test_dense_density_capacity():
    with pytest.raises(DomainError):
        dense_density(squeezed_vacuum(0.96))  # truncation > 199 per mode


def test_partial_transpose_involution_and_diagonal():
    op = dense_density(pair_coherent(0.8 * cmath.exp(0.4j)))
    pt = partial_transpose(op)
    np.testing.assert_array_equal(partial_transpose(pt).matrix, op.matrix)
    np.testing.assert_array_equal(np.diag(pt.matrix), np.diag(op.matrix))
    # Hermiticity and trace preserved
    assert np.max(np.abs(pt.matrix - pt.matrix.conj().T)) < 1e-15
    assert np.trace(pt.matrix) == pytest.approx(np.trace(op.matrix), abs=1e-14)


def test_partial_transpose_nonzero_pattern():
    state = pair_coherent(1.0)
    side = state.truncation + 1
    pt = partial_transpose(dense_density(state)).matrix.reshape(side, side, side, side)
    nonzero = np.argwhere(np.abs(pt) > 0)
    # exactly the ((n,m),(m,n)) positions of the PT form
    assert nonzero.shape[0] == side**2
    for n1, m1, n2, m2 in nonzero:
        assert n1 == m2 and m1 == n2


def test_jacobi_identity_matrix():
    eigs = hermitian_eigenvalues(np.eye(3, dtype=complex))
    np.testing.assert_allclose(eigs, [1.0, 1.0, 1.0], atol=1e-14)


def test_jacobi_2x2_block():
    c = 0.3 - 0.7j
    block = np.array([[0.0, c], [np.conj(c), 0.0]])
    eigs = hermitian_eigenvalues(block)
    np.testing.assert_allclose(eigs, [-abs(c), abs(c)], atol=1e-13)


def test_jacobi_random_hermitian_vs_numpy():
    rng = np.random.default_rng(123)
    g = rng.standard_normal((30, 30)) + 1j * rng.standard_normal((30, 30))
    h = 0.5 * (g + g.conj().T)
    eigs = hermitian_eigenvalues(h)
    np.testing.assert_allclose(eigs, np.linalg.eigvalsh(h), atol=1e-10)


def test_jacobi_rejects_non_hermitian():
    with pytest.raises(DomainError):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


@pytest.mark.parametrize("zeta", [0.25, 0.5, 1.0, 2.0])
def test_oracle_equivalence_n12(zeta):
    state = fixed_cut_pair_coherent(zeta, 12)
    dense = hermitian_eigenvalues(partial_transpose(dense_density(state)))
    analytic = np.sort(pt_spectrum(state).eigenvalues())
    padded = np.zeros(dense.size)
    padded[: analytic.size] = analytic
    np.testing.assert_allclose(dense, np.sort(padded), atol=1e-10)
    assert float(np.sum(dense)) == pytest.approx(1.0, abs=1e-10)


def test_pt_eigenvector_relation():
    # rho_PT (|n,m> +- e^{-i theta}|m,n>)/sqrt(2) = lambda_+- x vector
    state = pair_coherent(0.9 * cmath.exp(0.6j))
    side = state.truncation + 1
    pt = partial_transpose(dense_density(state)).matrix
    c = state.coefficients
    for n, m in [(0, 1), (1, 3), (2, 5)]:
        theta = np.angle(c[n] * np.conj(c[m]))
        lam = abs(c[n]) * abs(c[m])
        vec = np.zeros(side * side, dtype=complex)
        vec[n * side + m] = 1.0 / math.sqrt(2.0)
        vec[m * side + n] = np.exp(-1j * theta) / math.sqrt(2.0)
        np.testing.assert_allclose(pt @ vec, lam * vec, atol=1e-10)
        vec[m * side + n] *= -1.0
        np.testing.assert_allclose(pt @ vec, -lam * vec, atol=1e-10)
    # diagonal eigenvectors |n,n>
    for n in (0, 2):
        vec = np.zeros(side * side, dtype=complex)
        vec[n * side + n] = 1.0
        np.testing.assert_allclose(pt @ vec, abs(c[n]) ** 2 * vec, atol=1e-12)


def test_ladder_vacuum():
    assert ladder_expectation(pair_coherent(0.0), "a+a") == 0.0


@pytest.mark.parametrize("zeta", [1.0, 0.5 * cmath.exp(1.1j), 2.0])
def test_ladder_ab_eigenvalue(zeta):
    value = ladder_expectation(pair_coherent(zeta), "ab")
    assert abs(value - complex(zeta)) < 1e-12


def test_ladder_number_bessel_ratio():
    value = ladder_expectation(pair_coherent(1.0), "a+a")
    expected = i1_series(2.0) / i0_series(2.0)
    assert value.real == pytest.approx(expected, abs=1e-10)
    assert value.real == pytest.approx(0.6978, abs=1e-4)
    direct = float(np.sum(np.arange(12) * pair_coherent(1.0).truncated(11).probabilities))
    assert value.real == pytest.approx(direct, abs=1e-12)


def test_ladder_daggered_words():
    state = pair_coherent(0.7 * cmath.exp(0.2j))
    ab = ladder_expectation(state, "ab")
    abdag = ladder_expectation(state, "a+b+")
    assert abdag == pytest.approx(np.conj(ab), abs=1e-14)
    assert ladder_expectation(state, "a†b†") == abdag
    assert ladder_expectation(state, "ab+") == pytest.approx(0.0, abs=1e-14)
    assert ladder_expectation(state, "a") == pytest.approx(0.0, abs=1e-14)
    assert ladder_expectation(state, "") == pytest.approx(1.0, abs=1e-14)


def test_ladder_word_validation():
    state = pair_coherent(0.5)
    with pytest.raises(DomainError):
        ladder_expectation(state, "aab")
    with pytest.raises(DomainError):
        ladder_expectation(state, "c")


def test_variances_from_ladders_match_fock_sums():
    rng = np.random.default_rng(424242)
    for _ in range(30):
        mod = rng.uniform(0.0, 3.0)
        phi = rng.uniform(-math.pi, math.pi)
        m = rng.choice([-1.0, 1.0]) * rng.uniform(0.25, 2.5)
        state = pair_coherent(mod * cmath.exp(1j * phi))
        ladder = variances_from_ladders(state, m)
        fock = joint_variance(state, m)
        assert ladder[0] == pytest.approx(fock[0], abs=1e-10)
        assert ladder[1] == pytest.approx(fock[1], abs=1e-10)


def test_variances_from_ladders_domain():
    with pytest.raises(DomainError):
        variances_from_ladders(pair_coherent(1.0), 0.0)


def test_eigenvalue_sum_preserved():
    for zeta in (0.25, 0.5, 1.0, 2.0):
        state = fixed_cut_pair_coherent(zeta, 12)
        eigs = hermitian_eigenvalues(partial_transpose(dense_density(state)))
        assert float(np.sum(eigs)) == pytest.approx(1.0, abs=1e-10)


def test_dense_operator_dimension_property():
    op = dense_density(pair_coherent(1.0).truncated(3))
    assert isinstance(op, DenseOperator)
    assert op.dimension == 16
