import numpy as np
import pytest

from mhdenclose.errors import NotPositiveDefinite
from mhdenclose.linalg import (
    HermitianMatrix,
    cholesky,
    eig_generalized,
    eig_hermitian,
    eigvals_generalized,
    eigvals_hermitian,
)


def random_hermitian(rng, n, complex_=True):
    a = rng.standard_normal((n, n))
    if complex_:
        a = a + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


def random_spd(rng, n, complex_=True):
    a = rng.standard_normal((n, n))
    if complex_:
        a = a + 1j * rng.standard_normal((n, n))
    return a @ a.conj().T + n * np.eye(n)


class TestHermitianMatrix:
    def test_symmetrized_on_construction(self):
        a = np.array([[1.0, 2.0 + 1e-14], [2.0, 3.0]])
        h = HermitianMatrix(a)
        assert np.array_equal(h.entries, h.entries.T)
        assert h.n == 2

    def test_real_input_stays_real(self):
        h = HermitianMatrix(np.eye(3))
        assert not np.iscomplexobj(h.entries)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            HermitianMatrix(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            HermitianMatrix(np.zeros((2, 3)))


class TestCholesky:
    def test_identity(self):
        assert np.allclose(cholesky(np.eye(3)), np.eye(3))

    def test_diagonal(self):
        L = cholesky(np.diag([4.0, 9.0]))
        assert np.allclose(L, np.diag([2.0, 3.0]))

    def test_complex_reconstruction(self):
        b = np.array([[2.0, 1j], [-1j, 2.0]])
        L = cholesky(b)
        assert np.max(np.abs(L @ L.conj().T - b)) <= 1e-14
        assert np.allclose(np.triu(L, 1), 0)
        assert np.all(np.diag(L).real > 0)
        assert np.max(np.abs(np.diag(L).imag)) == 0

    def test_failing_pivot_index(self):
        # 3rd pivot fails: leading 2x2 block is fine, full matrix is not PD.
        b = np.diag([1.0, 1.0, -1.0])
        with pytest.raises(NotPositiveDefinite) as exc:
            cholesky(b)
        assert exc.value.pivot == 3


class TestEigHermitian:
    def test_diagonal(self):
        dec = eig_hermitian(np.diag([3.0, 2.0]))
        assert np.allclose(dec.values, [2.0, 3.0])

    def test_complex_2x2_characteristic_roots(self):
        # det([[2-l, i], [-i, 2-l]]) = (2-l)^2 - 1 -> l = 1, 3.
        a = np.array([[2.0, 1j], [-1j, 2.0]])
        dec = eig_hermitian(a)
        assert np.allclose(dec.values, [1.0, 3.0], atol=1e-14)

    def test_shift_identity(self):
        rng = np.random.default_rng(7)
        a = random_hermitian(rng, 12)
        c = 2.75
        v0 = eigvals_hermitian(a)
        v1 = eigvals_hermitian(a + c * np.eye(12))
        assert np.allclose(v1, v0 + c, atol=1e-12)

    def test_values_ascending_and_residual(self):
        rng = np.random.default_rng(3)
        a = random_hermitian(rng, 25)
        dec = eig_hermitian(a)
        assert np.all(np.diff(dec.values) >= -1e-13)
        norm_a = np.linalg.norm(a, 2)
        for k in range(25):
            res = np.linalg.norm(a @ dec.vectors[:, k] - dec.values[k] * dec.vectors[:, k])
            assert res <= 1e-10 * (norm_a + abs(dec.values[k]))


class TestEigGeneralized:
    def test_diagonal_ratio(self):
        vals = eigvals_generalized(np.eye(2), np.diag([2.0, 4.0]))
        assert np.allclose(vals, [0.25, 0.5])

    def test_identity_pencil(self):
        rng = np.random.default_rng(11)
        b = random_spd(rng, 8)
        vals = eigvals_generalized(b, b)
        assert np.allclose(vals, 1.0, atol=1e-12)

    def test_2x2_closed_form(self):
        vals = eigvals_generalized(np.array([[0.0, 1.0], [1.0, 0.0]]), np.eye(2))
        assert np.allclose(vals, [-1.0, 1.0], atol=1e-14)

    def test_non_spd_metric_raises_with_pivot(self):
        a = np.eye(2)
        b = np.diag([1.0, -1.0])
        with pytest.raises(NotPositiveDefinite) as exc:
            eig_generalized(a, b)
        assert exc.value.pivot == 2


class TestProperties:
    """Randomized invariants (n <= 50)."""

    def test_trace_equals_eigenvalue_sum(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            n = int(rng.integers(1, 51))
            a = random_hermitian(rng, n, complex_=bool(rng.integers(0, 2)))
            vals = eigvals_hermitian(a)
            tr = np.trace(a).real
            assert abs(tr - vals.sum()) <= 1e-10 * max(1.0, abs(tr))

    def test_generalized_matches_explicit_cholesky_reduction(self):
        rng = np.random.default_rng(22)
        for _ in range(10):
            n = int(rng.integers(2, 51))
            a = random_hermitian(rng, n)
            b = random_spd(rng, n)
            vals = eigvals_generalized(a, b)
            L = cholesky(b)
            y = np.linalg.solve(L, a)
            c = np.linalg.solve(L, y.conj().T).conj().T
            ref = np.linalg.eigvalsh((c + c.conj().T) / 2)
            scale = np.max(np.abs(ref)) + 1.0
            assert np.max(np.abs(vals - ref)) <= 1e-10 * scale

    def test_eigenvector_b_orthonormality(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            n = int(rng.integers(2, 51))
            a = random_hermitian(rng, n)
            b = random_spd(rng, n)
            dec = eig_generalized(a, b)
            gram = dec.vectors.conj().T @ b @ dec.vectors
            assert np.max(np.abs(gram - np.eye(n))) <= 1e-10
