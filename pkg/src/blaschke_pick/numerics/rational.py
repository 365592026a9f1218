# blaschke_pick/numerics/rational.py
"""Ratios of complex polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
import numpy.typing as npt

from ..errors import PoleAtPoint
from .polynomial import ComplexPolynomial

# A denominator value at or below this fraction of the coefficient norm is a pole.
POLE_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """f(z) = numerator(z) / denominator(z)."""

    numerator: ComplexPolynomial
    denominator: ComplexPolynomial

    def __post_init__(self):
        """Validate RationalFunction fields."""
        if not isinstance(self.numerator, ComplexPolynomial):
            object.__setattr__(self, "numerator", ComplexPolynomial(self.numerator))
        if not isinstance(self.denominator, ComplexPolynomial):
            object.__setattr__(self, "denominator", ComplexPolynomial(self.denominator))
        if self.denominator.is_zero:
            raise ValueError("denominator must not be identically zero")

    # ------------------------------------------------------------------ #
    # Factory helpers
    # ------------------------------------------------------------------ #
    @classmethod
    def constant(cls, value: complex) -> "RationalFunction":
        return cls(ComplexPolynomial.constant(value), ComplexPolynomial.constant(1.0))

    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls(ComplexPolynomial(np.array([0.0, 1.0])), ComplexPolynomial.constant(1.0))

    @classmethod
    def from_coefficients(
        cls, numerator: Sequence[complex], denominator: Sequence[complex]
    ) -> "RationalFunction":
        return cls(ComplexPolynomial(np.asarray(numerator)), ComplexPolynomial(np.asarray(denominator)))

    @classmethod
    def from_roots(
        cls, zeros: Sequence[complex], poles: Sequence[complex], scale: complex = 1.0
    ) -> "RationalFunction":
        """scale · Π(z − zeros) / Π(z − poles)."""
        return cls(
            ComplexPolynomial.from_roots(zeros, leading=scale),
            ComplexPolynomial.from_roots(poles),
        )

    # ------------------------------------------------------------------ #
    # Evaluation
    # ------------------------------------------------------------------ #
    @property
    def degree(self) -> int:
        """max(deg N, deg D), without cancelling common factors."""
        return max(self.numerator.degree, self.denominator.degree, 0)

    def _checked_denominator(self, z) -> np.ndarray:
        den = np.asarray(self.denominator(z))
        if np.any(np.abs(den) <= POLE_TOL * self.denominator.norm):
            raise PoleAtPoint(f"denominator vanishes at {z}")
        return den

    def __call__(self, z: Union[complex, npt.ArrayLike]):
        den = self._checked_denominator(z)
        value = self.numerator(z) / den
        return complex(value) if np.ndim(value) == 0 else value

    def derivative(self, z: Union[complex, npt.ArrayLike]):
        """f'(z) = (N'D - ND') / D^2."""
        den = self._checked_denominator(z)
        num = self.numerator(z)
        value = (self.numerator.derivative()(z) * den - num * self.denominator.derivative()(z)) / den**2
        return complex(value) if np.ndim(value) == 0 else value

    def circle_values(self, samples: int, jitter: float = 1e-7) -> npt.NDArray[np.complex128]:
        """Values at ``samples`` uniform points of the unit circle.

        Samples that land on a pole are nudged forward by ``jitter`` radians.
        """
        theta = 2.0 * np.pi * np.arange(samples) / samples
        z = np.exp(1j * theta)
        den = self.denominator(z)
        bad = np.abs(den) <= POLE_TOL * self.denominator.norm
        if np.any(bad):
            z = np.where(bad, np.exp(1j * (theta + jitter)), z)
            den = self.denominator(z)
        return self.numerator(z) / den

    def max_modulus_deviation(self, samples: int = 1024) -> float:
        """max over circle samples of ||f| - 1|."""
        return float(np.max(np.abs(np.abs(self.circle_values(samples)) - 1.0)))

    def __repr__(self) -> str:
        return (
            f"RationalFunction(numerator={self.numerator.coefficients.tolist()}, "
            f"denominator={self.denominator.coefficients.tolist()})"
        )
