# blaschke_pick/pick.py
"""Pick and Schwarz-Pick matrices, Stein identities and matrix classification.

The Pick matrix of a problem uses the first n - 1 node/target pairs; the last
pair (tₙ, wₙ) is the normalization point of the parametrization.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt
import scipy.linalg

from .errors import (
    ClassificationTooLarge,
    NotAdmissible,
    NotBlaschke,
    NotPositiveDefinite,
    NotUnimodular,
    NumericalFailure,
)
from .numerics import RationalFunction, cholesky, eigenvalues, ensure_hermitian, numerical_rank
from .problem import BoundaryData, GammaTuple, UnitPoint
from .settings import CLASSIFY_MAX_ORDER, NODE_SEPARATION, PIVOT_TOL, PSD_TOL, RANK_TOL

logger = logging.getLogger(__name__)

_BOUNDARY_TOL = 1e-10
# Largest ||f| - 1| on the circle accepted before a Schwarz-Pick matrix is built.
_UNIMODULAR_PRECHECK = 1e-6


# ──────────────────────────────────────────────────────────────────────────────
# Models
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True, eq=False)
class SteinData:
    """T = diag(t₁..t_{n−1}), E = all-ones column, M = (w₁..w_{n−1})ᵀ."""

    T: npt.NDArray[np.complex128]
    E: npt.NDArray[np.complex128]
    M: npt.NDArray[np.complex128]

    @classmethod
    def from_data(cls, data: BoundaryData) -> "SteinData":
        m = data.n - 1
        return cls(
            T=np.diag(data.t[:m]),
            E=np.ones((m, 1), dtype=np.complex128),
            M=data.w[:m].reshape(m, 1),
        )


@dataclass(frozen=True, eq=False)
class XYColumns:
    """Columns X = (x₁..x_{n−1}) and Y = (y₁..y_{n−1}) with |xᵢ| = |yᵢ| ≠ 0.

    ``modulus_gap`` is max ||xᵢ| − |yᵢ|| relative to max |xᵢ|.
    """

    x: npt.NDArray[np.complex128]
    y: npt.NDArray[np.complex128]
    modulus_gap: float = 0.0


class MatrixClass(str, Enum):
    POSITIVE_DEFINITE = "positive_definite"
    SINGULAR_SATURATED = "singular_saturated"
    # a PSD matrix is minimally positive exactly when it is singular and saturated
    MINIMALLY_POSITIVE = "singular_saturated"
    SINGULAR_NOT_SATURATED = "singular_not_saturated"
    INDEFINITE = "indefinite"


# ──────────────────────────────────────────────────────────────────────────────
# Pick matrices
# ──────────────────────────────────────────────────────────────────────────────
def pick_kernel(
    t_rows: npt.ArrayLike, w_rows: npt.ArrayLike, t_cols: npt.ArrayLike, w_cols: npt.ArrayLike
) -> npt.NDArray[np.complex128]:
    """Block of entries (1 − wᵢ w̄ⱼ) / (1 − tᵢ t̄ⱼ).

    Entries whose nodes coincide are left as NaN for the caller to replace.
    """
    t_rows = np.asarray(t_rows, dtype=np.complex128)
    w_rows = np.asarray(w_rows, dtype=np.complex128)
    t_cols = np.asarray(t_cols, dtype=np.complex128)
    w_cols = np.asarray(w_cols, dtype=np.complex128)
    num = 1.0 - np.outer(w_rows, w_cols.conj())
    den = 1.0 - np.outer(t_rows, t_cols.conj())
    coincident = np.abs(np.subtract.outer(t_rows, t_cols)) <= NODE_SEPARATION
    with np.errstate(divide="ignore", invalid="ignore"):
        block = num / np.where(coincident, 1.0, den)
    block[coincident] = np.nan
    return block


def pick_matrix(data: BoundaryData, gamma: GammaTuple) -> npt.NDArray[np.complex128]:
    """Pick matrix of order n − 1 with diagonal γ."""
    gamma.check_length(data)
    m = data.n - 1
    t, w = data.t[:m], data.w[:m]
    p = pick_kernel(t, w, t, w)
    np.fill_diagonal(p, gamma.as_array())
    return ensure_hermitian(p)


def diagonally_dominant_gamma(data: BoundaryData) -> GammaTuple:
    """All entries 1 + the largest off-diagonal absolute row sum.

    The resulting Pick matrix is strictly diagonally dominant, hence admissible.
    """
    m = data.n - 1
    t, w = data.t[:m], data.w[:m]
    p = pick_kernel(t, w, t, w)
    np.fill_diagonal(p, 0.0)
    bound = float(np.abs(p).sum(axis=1).max(initial=0.0))
    return GammaTuple(tuple([1.0 + bound] * m))


def admissible_factor(
    data: BoundaryData, gamma: GammaTuple, pivot_tol: float = PIVOT_TOL
) -> Tuple[npt.NDArray[np.complex128], npt.NDArray[np.complex128]]:
    """The Pick matrix and its Cholesky factor.

    Raises:
        NotAdmissible: If the Pick matrix is not positive definite.
    """
    p = pick_matrix(data, gamma)
    try:
        lower = cholesky(p, pivot_tol)
    except NotPositiveDefinite as e:
        raise NotAdmissible(
            f"gamma {list(gamma.values)} is not admissible: Pick matrix fails at pivot {e.index}",
            index=e.index,
        ) from e
    return p, lower


def is_admissible(data: BoundaryData, gamma: GammaTuple) -> bool:
    try:
        admissible_factor(data, gamma)
    except NotAdmissible:
        return False
    return True


def _cho_solve(lower: npt.NDArray[np.complex128], b: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    y = scipy.linalg.solve_triangular(lower, b, lower=True)
    return scipy.linalg.solve_triangular(lower.conj().T, y, lower=False)


def stein_residual(data: BoundaryData, gamma: GammaTuple) -> float:
    """‖P − T P T* − (E E* − M M*)‖∞; small for every positive γ."""
    p = pick_matrix(data, gamma)
    s = SteinData.from_data(data)
    residual = p - s.T @ p @ s.T.conj().T - (s.E @ s.E.conj().T - s.M @ s.M.conj().T)
    return float(np.linalg.norm(residual, np.inf))


def xy_columns(data: BoundaryData, gamma: GammaTuple) -> XYColumns:
    """X = (I − tₙT*) P⁻¹ (tₙI − T)⁻¹ E and Y likewise with M in place of E.

    Raises:
        NotAdmissible: If γ is not admissible.
    """
    _, lower = admissible_factor(data, gamma)
    m = data.n - 1
    t, w, tn = data.t[:m], data.w[:m], data.nodes[-1]
    scale = 1.0 - tn * t.conj()
    x = scale * _cho_solve(lower, 1.0 / (tn - t))
    y = scale * _cho_solve(lower, w / (tn - t))

    size = float(np.max(np.abs(x)))
    gap = float(np.max(np.abs(np.abs(x) - np.abs(y)))) / size
    if gap > 1e-8 or float(np.min(np.abs(x))) <= 1e-12 * size:
        logger.warning("|x_i| = |y_i| != 0 violated (relative gap %.3e, scale %.3e)", gap, size)
    return XYColumns(x=x, y=y, modulus_gap=gap)


def inverse_stein_residual(data: BoundaryData, gamma: GammaTuple) -> Tuple[float, float]:
    """‖P⁻¹ − T* P⁻¹ T − (X X* − Y Y*)‖∞ together with ‖P⁻¹‖∞."""
    _, lower = admissible_factor(data, gamma)
    m = data.n - 1
    p_inv = _cho_solve(lower, np.eye(m, dtype=np.complex128))
    cols = xy_columns(data, gamma)
    t = np.diag(data.t[:m])
    x, y = cols.x.reshape(m, 1), cols.y.reshape(m, 1)
    residual = p_inv - t.conj().T @ p_inv @ t - (x @ x.conj().T - y @ y.conj().T)
    return float(np.linalg.norm(residual, np.inf)), float(np.linalg.norm(p_inv, np.inf))


# ──────────────────────────────────────────────────────────────────────────────
# Schwarz-Pick matrices
# ──────────────────────────────────────────────────────────────────────────────
def _point_value(t: Union[complex, UnitPoint]) -> complex:
    return complex(t)


def boundary_derivative(f: RationalFunction, t: Union[complex, UnitPoint]) -> float:
    """|f′(t)| at a boundary point, computed as t·f′(t)·conj(f(t)).

    Raises:
        PoleAtPoint: If f has a pole at t.
        NotBlaschke: If the angular derivative is negative.
    """
    t = _point_value(t)
    value = t * f.derivative(t) * np.conj(f(t))
    if abs(value.imag) > 1e-9 * max(1.0, abs(value)):
        raise NumericalFailure(
            f"angular derivative at {t} has imaginary part {value.imag:.3e}; f is not unimodular there"
        )
    if value.real < -1e-9 * max(1.0, abs(value)):
        raise NotBlaschke("negative_angular_derivative", f"t f'(t) conj f(t) = {value.real:.6g} < 0 at {t}")
    return max(float(value.real), 0.0)


def schwarz_pick_matrix(f: RationalFunction, points: Sequence[Union[complex, UnitPoint]]) -> npt.NDArray[np.complex128]:
    """Schwarz-Pick matrix of f at points of the closed disk.

    Boundary diagonal entries are t f′(t) conj(f(t)); interior ones are
    (1 − |f(z)|²)/(1 − |z|²).

    Raises:
        NotUnimodular: If f is not unimodular on the circle.
        PoleAtPoint: If f has a pole at one of the points.
    """
    z = np.array([_point_value(p) for p in points], dtype=np.complex128)
    if np.any(np.abs(z) > 1.0 + _BOUNDARY_TOL):
        raise ValueError("points must lie in the closed unit disk")
    separation = np.abs(np.subtract.outer(z, z)) + np.eye(len(z))
    if np.any(separation <= NODE_SEPARATION):
        raise ValueError("points must be pairwise distinct")
    deviation = f.max_modulus_deviation()
    if deviation > _UNIMODULAR_PRECHECK:
        raise NotUnimodular(deviation)

    fz = np.asarray(f(z), dtype=np.complex128).reshape(-1)
    matrix = pick_kernel(z, fz, z, fz)
    on_circle = np.abs(np.abs(z) - 1.0) <= _BOUNDARY_TOL
    for k in range(len(z)):
        if on_circle[k]:
            value = z[k] * f.derivative(z[k]) * np.conj(fz[k])
            if abs(value.imag) > 1e-9 * max(1.0, abs(value)):
                logger.warning("boundary diagonal %d has imaginary part %.3e", k + 1, value.imag)
            matrix[k, k] = value.real
        else:
            matrix[k, k] = (1.0 - abs(fz[k]) ** 2) / (1.0 - abs(z[k]) ** 2)
    return (matrix + matrix.conj().T) / 2


# ──────────────────────────────────────────────────────────────────────────────
# Classification
# ──────────────────────────────────────────────────────────────────────────────
def _principal_pd(h: npt.NDArray[np.complex128], index: Tuple[int, ...], floor: float) -> bool:
    sub = h[np.ix_(index, index)]
    return bool(eigenvalues(sub).min() > floor)


def saturation_witness(
    h: npt.ArrayLike, rel_tol: float = RANK_TOL, max_order: int = CLASSIFY_MAX_ORDER
) -> Optional[Tuple[int, ...]]:
    """First r×r principal index set (1-based) that is not positive definite.

    r is the numerical rank; None means every such submatrix is positive
    definite, i.e. the matrix is saturated.
    """
    h = ensure_hermitian(h)
    n = h.shape[0]
    if n > max_order:
        raise ClassificationTooLarge(f"saturation check enumerates subsets; order {n} exceeds {max_order}")
    r = numerical_rank(h, rel_tol) if n else 0
    if r == 0:
        return None
    floor = rel_tol * float(np.abs(eigenvalues(h)).max())
    for index in itertools.combinations(range(n), r):
        if not _principal_pd(h, index, floor):
            return tuple(i + 1 for i in index)
    return None


def classify(h: npt.ArrayLike, rel_tol: float = RANK_TOL, psd_tol: float = PSD_TOL) -> MatrixClass:
    h = ensure_hermitian(h)
    n = h.shape[0]
    if n > CLASSIFY_MAX_ORDER:
        raise ClassificationTooLarge(f"classify supports order <= {CLASSIFY_MAX_ORDER}, got {n}")
    try:
        cholesky(h)
        return MatrixClass.POSITIVE_DEFINITE
    except NotPositiveDefinite:
        pass
    eigs = eigenvalues(h)
    top = float(np.abs(eigs).max(initial=0.0))
    if eigs.size and eigs.min() < -psd_tol * top:
        return MatrixClass.INDEFINITE
    if saturation_witness(h, rel_tol) is None:
        return MatrixClass.SINGULAR_SATURATED
    return MatrixClass.SINGULAR_NOT_SATURATED


# ──────────────────────────────────────────────────────────────────────────────
# Singular extension
# ──────────────────────────────────────────────────────────────────────────────
def _last_row(data: BoundaryData) -> npt.NDArray[np.complex128]:
    m = data.n - 1
    return pick_kernel(data.t[m:], data.w[m:], data.t[:m], data.w[:m]).reshape(m)


def singular_extension_gamma_n(data: BoundaryData, gamma: GammaTuple) -> float:
    """γₙ = F P⁻¹ F* with F = (p_{n,1}, …, p_{n,n−1}).

    Appending γₙ to the diagonal turns the n×n Pick matrix into a singular
    positive semidefinite matrix of rank n − 1.
    """
    _, lower = admissible_factor(data, gamma)
    row = _last_row(data)
    value = complex(row @ _cho_solve(lower, row.conj()))
    return float(value.real)


def extended_pick_matrix(data: BoundaryData, gamma: GammaTuple) -> npt.NDArray[np.complex128]:
    """The n×n Pick matrix with the singular extension on its last diagonal entry."""
    gamma_n = singular_extension_gamma_n(data, gamma)
    t, w = data.t, data.w
    p = pick_kernel(t, w, t, w)
    np.fill_diagonal(p, list(gamma.values) + [gamma_n])
    return ensure_hermitian(p)
