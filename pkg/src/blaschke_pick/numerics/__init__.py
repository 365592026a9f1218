# blaschke_pick/numerics/__init__.py
"""Dense complex linear algebra, polynomials and rational functions."""

from .hermitian import (
    HermitianMatrix,
    cholesky,
    condition_estimate,
    eigenvalues,
    ensure_hermitian,
    hermitian_det,
    is_positive_definite,
    is_psd,
    matrix_rank,
    min_eigenvalue,
    numerical_rank,
    solve_hermitian,
)
from .polynomial import ComplexPolynomial, poly_roots
from .rational import RationalFunction

__all__ = [
    "HermitianMatrix",
    "cholesky",
    "condition_estimate",
    "eigenvalues",
    "ensure_hermitian",
    "hermitian_det",
    "is_positive_definite",
    "is_psd",
    "matrix_rank",
    "min_eigenvalue",
    "numerical_rank",
    "solve_hermitian",
    "ComplexPolynomial",
    "poly_roots",
    "RationalFunction",
]
