# blaschke_pick/numerics/hermitian.py
"""Dense complex Hermitian linear algebra.

Pick and Schwarz-Pick matrices are small (order n - 1 for n interpolation
nodes), so everything here works on dense ``numpy`` arrays and leans on
``scipy.linalg`` for the pivoted factorizations.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np
import numpy.typing as npt
import scipy.linalg

from ..errors import NotPositiveDefinite, Singular
from ..settings import PIVOT_TOL, PSD_TOL, RANK_TOL

logger = logging.getLogger(__name__)

HermitianMatrix = npt.NDArray[np.complex128]

_HERMITIAN_ATOL = 1e-12


def ensure_hermitian(a: npt.ArrayLike, atol: float = _HERMITIAN_ATOL) -> HermitianMatrix:
    """Validate ``a`` as a Hermitian matrix and return its symmetrized copy.

    The asymmetry check is absolute for entries of order one and scales with
    the largest entry beyond that.

    Raises:
        ValueError: If ``a`` is not square, not finite, or not Hermitian.
    """
    h = np.array(a, dtype=np.complex128, copy=True)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("matrix has non-finite entries")
    if h.size == 0:
        return h
    scale = max(1.0, float(np.max(np.abs(h))))
    asym = float(np.max(np.abs(h - h.conj().T)))
    if asym > atol * scale:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    return (h + h.conj().T) / 2


def cholesky(h: npt.ArrayLike, pivot_tol: float = PIVOT_TOL) -> npt.NDArray[np.complex128]:
    """Lower Cholesky factor ``L`` with ``L @ L.conj().T == h``.

    A pivot at or below ``pivot_tol`` times the largest diagonal entry counts
    as failure, so nearly singular matrices are rejected rather than factored.

    Raises:
        NotPositiveDefinite: With the 1-based index of the failing pivot.
    """
    h = ensure_hermitian(h)
    n = h.shape[0]
    diag = h.diagonal().real
    threshold = pivot_tol * max(float(diag.max(initial=0.0)), 0.0)
    lower = np.zeros_like(h)
    for j in range(n):
        pivot = diag[j] - float(np.sum(np.abs(lower[j, :j]) ** 2))
        if pivot <= threshold:
            raise NotPositiveDefinite(j + 1, pivot)
        root = np.sqrt(pivot)
        lower[j, j] = root
        if j + 1 < n:
            lower[j + 1 :, j] = (h[j + 1 :, j] - lower[j + 1 :, :j] @ lower[j, :j].conj()) / root
    return lower


def is_positive_definite(h: npt.ArrayLike, pivot_tol: float = PIVOT_TOL) -> bool:
    try:
        cholesky(h, pivot_tol)
    except NotPositiveDefinite:
        return False
    return True


def _ldl(h: HermitianMatrix):
    lu, d, perm = scipy.linalg.ldl(h, lower=True, hermitian=True)
    return lu, d, perm


def solve_hermitian(
    h: npt.ArrayLike, b: npt.ArrayLike, pivot_tol: float = PIVOT_TOL
) -> npt.NDArray[np.complex128]:
    """Solve ``h x = b`` for Hermitian ``h``.

    Positive definite systems go through :func:`cholesky`; anything else is
    handled by a Bunch-Kaufman LDLᴴ factorization.

    Raises:
        Singular: If a pivot block of the LDLᴴ factorization is numerically zero.
    """
    h = ensure_hermitian(h)
    rhs = np.asarray(b, dtype=np.complex128)
    if rhs.shape[0] != h.shape[0]:
        raise ValueError(f"right-hand side has length {rhs.shape[0]}, expected {h.shape[0]}")
    try:
        lower = cholesky(h, pivot_tol)
    except NotPositiveDefinite as e:
        logger.debug("Cholesky failed at pivot %d, using LDL^H", e.index)
    else:
        y = scipy.linalg.solve_triangular(lower, rhs, lower=True)
        return scipy.linalg.solve_triangular(lower.conj().T, y, lower=False)

    lu, d, perm = _ldl(h)
    block_eigs = np.abs(scipy.linalg.eigvalsh(d))
    scale = float(block_eigs.max(initial=0.0))
    if scale == 0.0 or float(block_eigs.min()) <= pivot_tol * scale:
        raise Singular("matrix is singular to working precision")
    tri = lu[perm]
    y = scipy.linalg.solve_triangular(tri, rhs[perm], lower=True, unit_diagonal=True)
    z = np.linalg.solve(d, y)
    x = np.empty_like(z)
    x[perm] = scipy.linalg.solve_triangular(
        tri.conj().T, z, lower=False, unit_diagonal=True
    )
    return x


def hermitian_det(h: npt.ArrayLike) -> float:
    """Real determinant of a Hermitian matrix, computed from a factorization."""
    h = ensure_hermitian(h)
    if h.shape[0] == 0:
        return 1.0
    try:
        lower = cholesky(h)
    except NotPositiveDefinite:
        pass
    else:
        return float(np.prod(lower.diagonal().real) ** 2)

    _, d, _ = _ldl(h)
    value = complex(np.linalg.det(d))
    if abs(value.imag) > 1e-10 * max(1.0, abs(value)):
        logger.warning("determinant has imaginary residue %.3e", value.imag)
    return value.real


def eigenvalues(h: npt.ArrayLike) -> npt.NDArray[np.float64]:
    return scipy.linalg.eigvalsh(ensure_hermitian(h))


def numerical_rank(h: npt.ArrayLike, rel_tol: float = RANK_TOL) -> int:
    """Count eigenvalues with ``|λ| > rel_tol * max|λ|``; the zero matrix has rank 0."""
    if not 0.0 < rel_tol < 1.0:
        raise ValueError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    eigs = np.abs(eigenvalues(h))
    top = float(eigs.max(initial=0.0))
    if top == 0.0:
        return 0
    return int(np.count_nonzero(eigs > rel_tol * top))


def matrix_rank(a: npt.ArrayLike, rel_tol: float = RANK_TOL) -> int:
    """Singular-value rank of a general (possibly rectangular) matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.size == 0:
        return 0
    s = scipy.linalg.svdvals(m)
    top = float(s.max(initial=0.0))
    if top == 0.0:
        return 0
    return int(np.count_nonzero(s > rel_tol * top))


def min_eigenvalue(h: npt.ArrayLike) -> float:
    eigs = eigenvalues(h)
    return float(eigs.min()) if eigs.size else 0.0


def is_psd(h: npt.ArrayLike, tol: float = PSD_TOL) -> bool:
    """True when every eigenvalue is at least ``-tol`` times the largest magnitude."""
    eigs = eigenvalues(h)
    if eigs.size == 0:
        return True
    top = float(np.abs(eigs).max())
    return bool(eigs.min() >= -tol * top)


def condition_estimate(h: npt.ArrayLike) -> Optional[float]:
    """2-norm condition number, or None for a singular matrix."""
    s = scipy.linalg.svdvals(np.asarray(h, dtype=np.complex128))
    if s.size == 0 or s.min() == 0.0:
        return None
    return float(s.max() / s.min())
