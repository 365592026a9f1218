"""Tests for rational functions."""
import numpy as np
import pytest

from blaschke_pick.errors import PoleAtPoint
from blaschke_pick.numerics import ComplexPolynomial, RationalFunction


class TestRationalFunction:
    """Test evaluation and derivatives of polynomial ratios."""

    def test_zero_denominator_rejected(self):
        """Test that an identically zero denominator is rejected."""
        with pytest.raises(ValueError):
            RationalFunction.from_coefficients([1.0], [0.0])

    def test_identity_and_constant(self):
        """Test the two trivial constructors."""
        assert RationalFunction.identity()(0.3 + 0.4j) == pytest.approx(0.3 + 0.4j)
        assert RationalFunction.constant(1j)(5.0) == pytest.approx(1j)
        assert RationalFunction.identity().degree == 1

    def test_from_roots(self):
        """Test zeros, poles and scale of from_roots."""
        f = RationalFunction.from_roots([0.5], [2.0], scale=-1.0)
        assert f(0.5) == pytest.approx(0.0)
        assert f(0.0) == pytest.approx(-0.25)

    def test_pole_raises(self):
        """Test that evaluating at a pole raises PoleAtPoint."""
        f = RationalFunction.from_coefficients([1.0], [-1.0, 1.0])
        with pytest.raises(PoleAtPoint):
            f(1.0)

    def test_vectorized_evaluation(self):
        """Test evaluation on an array."""
        f = RationalFunction.from_coefficients([0.0, 1.0], [2.0])
        assert np.allclose(f(np.array([1.0, 2.0])), [0.5, 1.0])

    def test_derivative_matches_finite_difference(self):
        """Test the quotient rule against a central difference."""
        f = RationalFunction.from_coefficients([1.0, 2j, 1.0], [3.0, -1.0])
        z, h = 0.2 + 0.1j, 1e-6
        numeric = (f(z + h) - f(z - h)) / (2 * h)
        assert f.derivative(z) == pytest.approx(numeric, rel=1e-6)

    def test_blaschke_factor_is_unimodular(self):
        """Test max_modulus_deviation on a single Blaschke factor."""
        a = 0.3 - 0.2j
        f = RationalFunction(
            ComplexPolynomial(np.array([-a, 1.0])), ComplexPolynomial(np.array([1.0, -np.conj(a)]))
        )
        assert f.max_modulus_deviation() < 1e-13
        assert len(f.circle_values(64)) == 64
