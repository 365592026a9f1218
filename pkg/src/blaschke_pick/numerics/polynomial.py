# blaschke_pick/numerics/polynomial.py
"""Complex polynomials in ascending coefficient order and their roots."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
import numpy.polynomial.polynomial as npoly
import numpy.typing as npt

from ..errors import DegenerateInput
from ..settings import ROOT_MAX_ITER

logger = logging.getLogger(__name__)

# Coefficients below this fraction of the largest one are treated as zero when
# the degree is read off.
DROP_TOL = 1e-14

ArrayOrScalar = Union[complex, npt.NDArray[np.complex128]]


@dataclass(frozen=True, eq=False)
class ComplexPolynomial:
    """p(z) = c[0] + c[1] z + ... + c[d] z^d with trailing zeros trimmed.

    The zero polynomial is stored as ``[0]`` and has degree -1.
    """

    coefficients: npt.NDArray[np.complex128]

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=np.complex128)).copy()
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        mags = np.abs(c)
        top = float(mags.max(initial=0.0))
        if top == 0.0:
            c = np.zeros(1, dtype=np.complex128)
        else:
            keep = np.nonzero(mags > DROP_TOL * top)[0]
            c = c[: keep[-1] + 1]
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    # ------------------------------------------------------------------ #
    # Factory helpers
    # ------------------------------------------------------------------ #
    @classmethod
    def constant(cls, value: complex) -> "ComplexPolynomial":
        return cls(np.array([value]))

    @classmethod
    def from_roots(cls, roots, leading: complex = 1.0) -> "ComplexPolynomial":
        """Monic polynomial with the given roots, scaled by ``leading``."""
        roots = np.asarray(roots, dtype=np.complex128)
        if roots.size == 0:
            return cls.constant(leading)
        return cls(leading * npoly.polyfromroots(roots))

    # ------------------------------------------------------------------ #
    # Properties
    # ------------------------------------------------------------------ #
    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0] == 0

    @property
    def leading(self) -> complex:
        return complex(self.coefficients[-1])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def padded(self, length: int) -> npt.NDArray[np.complex128]:
        """Coefficients zero-padded to ``length`` entries."""
        out = np.zeros(max(length, len(self.coefficients)), dtype=np.complex128)
        out[: len(self.coefficients)] = self.coefficients
        return out

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #
    def __call__(self, z: ArrayOrScalar) -> ArrayOrScalar:
        return npoly.polyval(z, self.coefficients)

    def derivative(self) -> "ComplexPolynomial":
        if self.degree < 1:
            return ComplexPolynomial.constant(0)
        return ComplexPolynomial(npoly.polyder(self.coefficients))

    def __mul__(self, other: Union["ComplexPolynomial", complex]) -> "ComplexPolynomial":
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(npoly.polymul(self.coefficients, other.coefficients))
        return ComplexPolynomial(self.coefficients * complex(other))

    __rmul__ = __mul__

    def __add__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return ComplexPolynomial(npoly.polyadd(self.coefficients, other.coefficients))

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return ComplexPolynomial(npoly.polysub(self.coefficients, other.coefficients))

    def reversed_conjugate(self, degree: int) -> "ComplexPolynomial":
        """z^degree * conj(p(1/conj z)), the self-inversive partner of p."""
        return ComplexPolynomial(np.conj(self.padded(degree + 1)[::-1]))

    def deflate(self, root: complex) -> Tuple["ComplexPolynomial", complex]:
        """Divide by (z - root) with synthetic division.

        Returns:
            The quotient and the discarded remainder p(root).
        """
        c = self.coefficients
        d = len(c) - 1
        if d < 1:
            return ComplexPolynomial.constant(0), complex(c[0])
        quotient = np.empty(d, dtype=np.complex128)
        quotient[d - 1] = c[d]
        for k in range(d - 1, 0, -1):
            quotient[k - 1] = c[k] + root * quotient[k]
        remainder = complex(c[0] + root * quotient[0])
        return ComplexPolynomial(quotient), remainder


def _initial_guesses(monic: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    d = len(monic) - 1
    # Fujiwara-type radius bound on the root moduli.
    ratios = [abs(monic[d - k]) ** (1.0 / k) for k in range(1, d + 1)]
    radius = max(2.0 * max(ratios), 1e-3)
    angles = 2.0 * np.pi * np.arange(d) / d + 0.4
    return 0.5 * radius * np.exp(1j * angles)


def _aberth(monic: npt.NDArray[np.complex128], max_iter: int):
    dmonic = npoly.polyder(monic)
    z = _initial_guesses(monic)
    for iteration in range(1, max_iter + 1):
        val = npoly.polyval(z, monic)
        vald = npoly.polyval(z, dmonic)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            acc = inv.sum(axis=1)
            denom = vald - val * acc
            denom = np.where(denom == 0, 1.0, denom)
            delta = -val / denom
        if not np.all(np.isfinite(delta)):
            return z, False, iteration
        z = z + delta
        # cubic convergence: a correction this small leaves only rounding error
        if np.all(np.abs(delta) <= 1e-13 * (1.0 + np.abs(z))):
            return z, True, iteration
    return z, False, max_iter


def poly_roots(p: ComplexPolynomial, max_iter: int = ROOT_MAX_ITER) -> npt.NDArray[np.complex128]:
    """All roots of ``p`` by Aberth-Ehrlich iteration.

    Falls back to the eigenvalues of the companion matrix when the iteration
    stagnates or a root fails the residual check ``|p(r)| <= 1e-8 * ||p||``.

    Raises:
        DegenerateInput: If ``p`` is the zero polynomial or a constant.
    """
    if p.is_zero:
        raise DegenerateInput("all coefficients are below the drop tolerance")
    if p.degree < 1:
        raise DegenerateInput("polynomial has no roots (degree 0)")
    monic = p.coefficients / p.leading
    if p.degree == 1:
        return np.array([-monic[0]], dtype=np.complex128)

    roots, converged, iterations = _aberth(monic, max_iter)
    residual_ok = converged and bool(
        np.all(np.abs(p(roots)) <= 1e-8 * p.norm * np.maximum(1.0, np.abs(roots)) ** p.degree)
    )
    if residual_ok:
        logger.debug("Aberth converged in %d iterations (degree %d)", iterations, p.degree)
        return roots
    logger.debug("Aberth stagnated after %d iterations, using companion matrix", iterations)
    return npoly.polyroots(p.coefficients).astype(np.complex128)
