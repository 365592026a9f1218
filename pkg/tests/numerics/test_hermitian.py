"""Tests for dense Hermitian linear algebra."""
import numpy as np
import pytest

from blaschke_pick.errors import NotPositiveDefinite, Singular
from blaschke_pick.numerics import (
    cholesky,
    condition_estimate,
    ensure_hermitian,
    hermitian_det,
    is_positive_definite,
    is_psd,
    matrix_rank,
    min_eigenvalue,
    numerical_rank,
    solve_hermitian,
)

PD = np.array([[4.0, 1 - 1j, 0.5], [1 + 1j, 3.0, 0.2j], [0.5, -0.2j, 2.0]])


class TestEnsureHermitian:
    """Test validation of Hermitian input."""

    def test_returns_symmetrized_copy(self):
        """Test that tiny asymmetry is averaged away."""
        a = PD.copy()
        a[0, 1] += 1e-14
        h = ensure_hermitian(a)
        assert np.allclose(h, h.conj().T, atol=0.0)

    def test_rejects_non_square(self):
        """Test that a rectangular matrix is rejected."""
        with pytest.raises(ValueError, match="square"):
            ensure_hermitian(np.ones((2, 3)))

    def test_rejects_non_hermitian(self):
        """Test that a genuinely asymmetric matrix is rejected."""
        with pytest.raises(ValueError, match="not Hermitian"):
            ensure_hermitian(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_non_finite(self):
        """Test that NaN entries are rejected."""
        with pytest.raises(ValueError, match="non-finite"):
            ensure_hermitian(np.array([[1.0, np.nan], [np.nan, 1.0]]))


class TestCholesky:
    """Test the pivot-checked Cholesky factorization."""

    def test_reconstructs_matrix(self):
        """Test that L L* reproduces a positive definite matrix."""
        lower = cholesky(PD)
        assert np.allclose(lower @ lower.conj().T, PD, atol=1e-12)
        assert np.allclose(np.triu(lower, 1), 0.0)

    def test_failing_pivot_index_is_one_based(self):
        """Test that the failing pivot is reported 1-based."""
        singular = np.array([[1.0, 1.0], [1.0, 1.0]])
        with pytest.raises(NotPositiveDefinite) as exc:
            cholesky(singular)
        assert exc.value.index == 2

    def test_indefinite_first_pivot(self):
        """Test that a negative first diagonal entry fails at pivot 1."""
        with pytest.raises(NotPositiveDefinite) as exc:
            cholesky(np.array([[-1.0, 0.0], [0.0, 1.0]]))
        assert exc.value.index == 1

    def test_is_positive_definite(self):
        """Test the boolean wrapper."""
        assert is_positive_definite(PD)
        assert not is_positive_definite(np.array([[1.0, 2.0], [2.0, 1.0]]))


class TestSolveHermitian:
    """Test solving Hermitian systems."""

    def test_positive_definite_solve(self):
        """Test the Cholesky path."""
        b = np.array([1.0, 2j, -1.0])
        x = solve_hermitian(PD, b)
        assert np.allclose(PD @ x, b, atol=1e-12)

    def test_indefinite_solve_uses_ldl(self):
        """Test that an indefinite nonsingular system is still solved."""
        h = np.array([[1.0, 2.0], [2.0, 1.0]])
        b = np.array([1.0, 0.0])
        x = solve_hermitian(h, b)
        assert np.allclose(h @ x, b, atol=1e-12)

    def test_singular_raises(self):
        """Test that an exactly singular matrix raises Singular."""
        with pytest.raises(Singular):
            solve_hermitian(np.zeros((2, 2)), np.ones(2))

    def test_length_mismatch(self):
        """Test that a wrong right-hand side length is rejected."""
        with pytest.raises(ValueError, match="right-hand side"):
            solve_hermitian(PD, np.ones(2))


class TestSpectralHelpers:
    """Test determinant, rank and PSD helpers."""

    def test_det_matches_numpy(self):
        """Test the determinant of a positive definite matrix."""
        assert hermitian_det(PD) == pytest.approx(np.linalg.det(PD).real, rel=1e-12)

    def test_det_of_indefinite(self):
        """Test the determinant through the LDL path."""
        assert hermitian_det(np.array([[1.0, 2.0], [2.0, 1.0]])) == pytest.approx(-3.0)

    def test_numerical_rank(self):
        """Test rank of a rank-one outer product."""
        v = np.array([1.0, 1j, 2.0])
        assert numerical_rank(np.outer(v, v.conj())) == 1
        assert numerical_rank(np.zeros((3, 3))) == 0

    def test_numerical_rank_rejects_bad_tolerance(self):
        """Test that the relative tolerance must lie in (0, 1)."""
        with pytest.raises(ValueError):
            numerical_rank(PD, rel_tol=2.0)

    def test_matrix_rank_rectangular(self):
        """Test singular-value rank of a non-square matrix."""
        a = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]])
        assert matrix_rank(a) == 1

    def test_psd(self):
        """Test PSD classification of singular and indefinite matrices."""
        assert is_psd(np.array([[1.0, 1.0], [1.0, 1.0]]))
        assert not is_psd(np.array([[1.0, 2.0], [2.0, 1.0]]))
        assert min_eigenvalue(np.diag([3.0, -2.0])) == pytest.approx(-2.0)

    def test_condition_estimate(self):
        """Test condition numbers of diagonal and singular matrices."""
        assert condition_estimate(np.diag([1.0, 4.0])) == pytest.approx(4.0)
        assert condition_estimate(np.zeros((2, 2))) is None
