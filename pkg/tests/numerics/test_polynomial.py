"""Tests for complex polynomials and root finding."""
import numpy as np
import pytest

from blaschke_pick.errors import DegenerateInput
from blaschke_pick.numerics import ComplexPolynomial, poly_roots


def _sorted(values):
    return sorted(np.asarray(values, dtype=complex).tolist(), key=lambda z: (round(z.real, 6), z.imag))


class TestComplexPolynomial:
    """Test polynomial construction and arithmetic."""

    def test_trailing_zeros_trimmed(self):
        """Test that top coefficients below the drop tolerance are removed."""
        p = ComplexPolynomial(np.array([1.0, 2.0, 0.0, 0.0]))
        assert p.degree == 1
        assert p.coefficients.tolist() == [1.0, 2.0]

    def test_zero_polynomial(self):
        """Test the zero polynomial has degree -1."""
        p = ComplexPolynomial(np.zeros(3))
        assert p.is_zero
        assert p.degree == -1

    def test_non_finite_rejected(self):
        """Test that NaN coefficients are rejected."""
        with pytest.raises(ValueError):
            ComplexPolynomial(np.array([1.0, np.nan]))

    def test_from_roots_and_evaluation(self):
        """Test that from_roots vanishes at its roots and carries the leading factor."""
        roots = [0.5, -0.25j, 1 + 1j]
        p = ComplexPolynomial.from_roots(roots, leading=2j)
        assert p.degree == 3
        assert p.leading == pytest.approx(2j)
        assert np.allclose(p(np.array(roots)), 0.0, atol=1e-12)

    def test_multiplication_and_scalar(self):
        """Test product with another polynomial and with a scalar on either side."""
        p = ComplexPolynomial(np.array([1.0, 1.0]))
        q = ComplexPolynomial(np.array([-1.0, 1.0]))
        assert (p * q).coefficients.tolist() == [-1.0, 0.0, 1.0]
        assert (p * 2.0).coefficients.tolist() == [2.0, 2.0]
        assert (3.0 * p).coefficients.tolist() == [3.0, 3.0]

    def test_add_and_subtract(self):
        """Test addition and subtraction of different degrees."""
        p = ComplexPolynomial(np.array([1.0, 2.0, 3.0]))
        q = ComplexPolynomial(np.array([1.0]))
        assert (p + q).coefficients.tolist() == [2.0, 2.0, 3.0]
        assert (p - p).is_zero

    def test_derivative(self):
        """Test the derivative of z^3 + 2z."""
        p = ComplexPolynomial(np.array([0.0, 2.0, 0.0, 1.0]))
        assert p.derivative().coefficients.tolist() == [2.0, 0.0, 3.0]
        assert ComplexPolynomial.constant(5.0).derivative().is_zero

    def test_deflate_exact_root(self):
        """Test synthetic division by a root leaves no remainder."""
        p = ComplexPolynomial.from_roots([1j, 2.0, -0.5])
        quotient, remainder = p.deflate(2.0)
        assert abs(remainder) < 1e-12
        assert quotient.degree == 2
        assert np.allclose(quotient(np.array([1j, -0.5])), 0.0, atol=1e-12)

    def test_deflate_non_root(self):
        """Test that the remainder equals p(root)."""
        p = ComplexPolynomial(np.array([1.0, 0.0, 1.0]))
        _, remainder = p.deflate(2.0)
        assert remainder == pytest.approx(5.0)

    def test_reversed_conjugate(self):
        """Test z^d conj(p(1/conj z)) on a linear polynomial."""
        p = ComplexPolynomial(np.array([1j, 2.0]))
        assert np.allclose(p.reversed_conjugate(1).coefficients, [2.0, -1j])


class TestPolyRoots:
    """Test the Aberth root finder with companion fallback."""

    def test_linear(self):
        """Test the closed form for degree one."""
        roots = poly_roots(ComplexPolynomial(np.array([-2.0, 4.0])))
        assert np.allclose(roots, [0.5])

    @pytest.mark.parametrize("degree", [2, 4, 7])
    def test_recovers_known_roots(self, degree):
        """Test that roots of a product of linear factors are recovered."""
        rng = np.random.default_rng(degree)
        expected = rng.uniform(-1, 1, degree) + 1j * rng.uniform(-1, 1, degree)
        found = poly_roots(ComplexPolynomial.from_roots(expected))
        for r in expected:
            assert np.min(np.abs(found - r)) < 1e-8

    def test_constant_rejected(self):
        """Test that constants have no roots."""
        with pytest.raises(DegenerateInput):
            poly_roots(ComplexPolynomial.constant(3.0))

    def test_zero_rejected(self):
        """Test that the zero polynomial is rejected."""
        with pytest.raises(DegenerateInput):
            poly_roots(ComplexPolynomial(np.zeros(2)))
