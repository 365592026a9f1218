# blaschke_pick/reduction.py
"""Solutions below degree n − 1.

A non-constant interpolant of degree ≤ n − 2 exists exactly when some three
distinct targets are oriented on the circle like their nodes. When they are,
:func:`reducing_gamma` builds an admissible γ whose Δ has a zero, so the
parametrized interpolant drops a degree. Independently, a Hankel-type block
of the Pick kernel bounds the degree of any rational interpolant from below,
and a homogeneous linear system produces the candidate of that degree.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
import scipy.linalg

from .blaschke import is_blaschke_certificate
from .errors import (
    ConstantProblem,
    DuplicatePoint,
    NoOrientedTriple,
    NotAdmissible,
    NotPositiveDefinite,
    NumericalFailure,
)
from .numerics import RationalFunction, cholesky, matrix_rank, solve_hermitian
from .parametrization import delta
from .pick import pick_kernel
from .problem import BoundaryData, GammaTuple, is_constant_problem
from .settings import DELTA_ZERO_TOL, NODE_SEPARATION, RANK_TOL

logger = logging.getLogger(__name__)

# |G| below this counts as a degenerate (non-distinct) triple.
ORIENTATION_TOL = 1e-12
MAX_SCALE = 2.0**60
_INTERPOLATION_TOL = 1e-8
UNIQUENESS_NOTE = "at most one rational function of this degree interpolates the data (advisory)"


# ──────────────────────────────────────────────────────────────────────────────
# Models
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class OrientationReport:
    """Orientation of the nodes and of the targets at one index triple (1-based)."""

    triple: Tuple[int, int, int]
    g_nodes: float
    g_targets: float

    @property
    def same_orientation(self) -> bool:
        return (
            abs(self.g_nodes) > ORIENTATION_TOL
            and abs(self.g_targets) > ORIENTATION_TOL
            and self.g_targets * self.g_nodes > 0
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "triple": list(self.triple),
            "G_nodes": self.g_nodes,
            "G_targets": self.g_targets,
            "same_orientation": self.same_orientation,
        }


@dataclass(frozen=True, eq=False)
class ReducedSolution:
    """An admissible γ whose interpolant has degree ≤ n − 2.

    ``data`` and ``gamma`` are in the working order, where the oriented triple
    occupies the last three positions; ``permutation`` (1-based) maps working
    positions to original indices. ``original_gamma`` lists γ by original
    node, with None at the node that plays the role of tₙ.
    """

    data: BoundaryData
    gamma: GammaTuple
    permutation: Tuple[int, ...]
    triple: Tuple[int, int, int]
    original_gamma: Tuple[Optional[float], ...]
    doubling_steps: int
    scale: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "triple": list(self.triple),
            "permutation": list(self.permutation),
            "gamma": list(self.gamma.values),
            "original_gamma": list(self.original_gamma),
            "doubling_steps": self.doubling_steps,
            "scale": self.scale,
        }


@dataclass(frozen=True, eq=False)
class MinDegreeCandidate:
    """Rational interpolant of the lower-bound degree, with its certification."""

    q: int
    f: RationalFunction
    null_dimension: int
    interpolation_residual: float
    is_blaschke: bool
    note: str = UNIQUENESS_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "numerator": self.f.numerator.coefficients.tolist(),
            "denominator": self.f.denominator.coefficients.tolist(),
            "null_dimension": self.null_dimension,
            "interpolation_residual": self.interpolation_residual,
            "is_blaschke": self.is_blaschke,
            "note": self.note,
        }


# ──────────────────────────────────────────────────────────────────────────────
# Orientation
# ──────────────────────────────────────────────────────────────────────────────
def orientation_G(z1: complex, z2: complex, z3: complex) -> float:
    """G = −i(1 − z₁z̄₂)(1 − z₂z̄₃)(1 − z₃z̄₁); positive iff (z₁, z₂, z₃) runs counter-clockwise.

    Raises:
        DuplicatePoint: If two of the points coincide.
    """
    z = [complex(v) for v in (z1, z2, z3)]
    for a, b in itertools.combinations(range(3), 2):
        if abs(z[a] - z[b]) <= NODE_SEPARATION:
            raise DuplicatePoint(f"points {a + 1} and {b + 1} coincide")
    g = -1j * (1 - z[0] * z[1].conjugate()) * (1 - z[1] * z[2].conjugate()) * (1 - z[2] * z[0].conjugate())
    if abs(g.imag) > ORIENTATION_TOL * max(1.0, abs(g)):
        logger.warning("orientation value has imaginary residue %.3e", g.imag)
    return float(g.real)


def _g_or_zero(z1: complex, z2: complex, z3: complex) -> float:
    try:
        return orientation_G(z1, z2, z3)
    except DuplicatePoint:
        return 0.0


def orientation_report(data: BoundaryData, triple: Tuple[int, int, int]) -> OrientationReport:
    i, j, k = (x - 1 for x in triple)
    t, w = data.nodes, data.targets
    return OrientationReport(
        triple=tuple(triple),
        g_nodes=orientation_G(t[i], t[j], t[k]),
        g_targets=_g_or_zero(w[i], w[j], w[k]),
    )


def orientation_evidence(data: BoundaryData) -> List[OrientationReport]:
    """Reports for every triple i < j < k, in lexicographic order."""
    return [
        orientation_report(data, (i + 1, j + 1, k + 1))
        for i, j, k in itertools.combinations(range(data.n), 3)
    ]


def exists_degree_n_minus_2(data: BoundaryData) -> Optional[Tuple[int, int, int]]:
    """First triple (1-based, lexicographic) of distinct targets oriented like their nodes.

    The test is the sign of p_ij p_jk p_ki = G(wᵢ, wⱼ, w_k)/G(tᵢ, tⱼ, t_k).

    Raises:
        ConstantProblem: If every target is the same.
    """
    if is_constant_problem(data) is not None:
        raise ConstantProblem("all targets coincide; the constant function is the only solution")
    t, w = data.t, data.w
    p = pick_kernel(t, w, t, w)
    for i, j, k in itertools.combinations(range(data.n), 3):
        product = p[i, j] * p[j, k] * p[k, i]
        if product.real > ORIENTATION_TOL and _g_or_zero(w[i], w[j], w[k]) != 0.0:
            logger.debug("oriented triple (%d, %d, %d), product %.6g", i + 1, j + 1, k + 1, product.real)
            return (i + 1, j + 1, k + 1)
    return None


# ──────────────────────────────────────────────────────────────────────────────
# Degree reduction
# ──────────────────────────────────────────────────────────────────────────────
def _working_order(n: int, triple: Tuple[int, int, int]) -> Tuple[int, ...]:
    rest = [k for k in range(1, n + 1) if k not in triple]
    return tuple(rest + list(triple))


def _try_scale(p: npt.NDArray[np.complex128], scale: float, q: float) -> Optional[List[float]]:
    """γ for one value of the large diagonal, or None if a side condition fails."""
    n = p.shape[0]
    m3 = n - 3
    a, b, c = n - 3, n - 2, n - 1
    bv, cv, dv = p[:m3, a], p[:m3, b], p[:m3, c]
    p_ba, p_ac, p_bc = p[b, a], p[a, c], p[b, c]

    if m3 == 0:
        x = 0.0
        ctc, coupling = 0.0, p_ba
    else:
        p3 = p[:m3, :m3].copy()
        np.fill_diagonal(p3, scale)
        try:
            cholesky(p3)
        except NotPositiveDefinite:
            return None
        if (bv.conj() @ solve_hermitian(p3, bv)).real >= q / 3.0:
            return None
        shifted = p3 - np.outer(dv, cv.conj()) / p_bc
        try:
            rhs = scipy.linalg.solve(shifted, bv - dv * p_ba / p_bc)
        except (np.linalg.LinAlgError, scipy.linalg.LinAlgError):
            return None
        if not np.all(np.isfinite(rhs)):
            return None
        xc = complex((bv.conj() - (p_ac / p_bc) * cv.conj()) @ rhs)
        if abs(xc) >= q / 3.0:
            return None
        if abs(xc.imag) > 1e-8 * max(1.0, abs(xc)):
            logger.warning("reduction coupling X has imaginary part %.3e", xc.imag)
        x = xc.real
        ctc = float((cv.conj() @ solve_hermitian(p3, cv)).real)
        coupling = p_ba - cv.conj() @ solve_hermitian(p3, bv)

    gamma_a = q + x
    gamma_b = ctc + (3.0 / q) * abs(coupling) ** 2 + 1.0
    return [scale] * m3 + [gamma_a, gamma_b]


def reducing_gamma(data: BoundaryData, threshold: float = DELTA_ZERO_TOL) -> ReducedSolution:
    """Admissible γ with Δ_{n−1} = 0 after moving an oriented triple to the end.

    The first n − 3 diagonal entries start at 10 · max|p_ij| and double until
    the Schur-complement side conditions hold.

    Raises:
        ConstantProblem: If every target is the same.
        NoOrientedTriple: If no target triple shares its nodes' orientation.
        NumericalFailure: If the diagonal would have to exceed 2⁶⁰.
    """
    triple = exists_degree_n_minus_2(data)
    if triple is None:
        raise NoOrientedTriple(orientation_evidence(data))
    permutation = _working_order(data.n, triple)
    work = data.permuted(permutation)

    t, w = work.t, work.w
    p = pick_kernel(t, w, t, w)
    n = work.n
    a, b, c = n - 3, n - 2, n - 1
    q_complex = p[b, a] * p[a, c] / p[b, c]
    q = float(q_complex.real)
    if q <= 0.0:
        raise NumericalFailure(f"orientation product q = {q_complex} is not positive")

    off_diag = np.abs(p[~np.eye(n, dtype=bool)])
    scale = 10.0 * float(off_diag.max())
    steps = 0
    while scale <= MAX_SCALE:
        values = _try_scale(p, scale, q)
        if values is not None:
            gamma = GammaTuple(tuple(values))
            try:
                d = delta(work, gamma, threshold)
            except NotAdmissible:
                logger.debug("scale %.3g gives a non-admissible gamma", scale)
            else:
                if (n - 2) in d.zero_set:
                    logger.debug("reduction settled after %d doublings at scale %.3g", steps, scale)
                    return ReducedSolution(
                        data=work,
                        gamma=gamma,
                        permutation=permutation,
                        triple=triple,
                        original_gamma=tuple(permute_back(values + [None], permutation)),
                        doubling_steps=steps,
                        scale=scale,
                    )
                logger.debug("scale %.3g leaves |delta_%d| = %.3e", scale, n - 1, abs(d.values[n - 2]))
        scale *= 2.0
        steps += 1
    raise NumericalFailure(f"no reducing gamma found below scale {MAX_SCALE:.3g}")


# ──────────────────────────────────────────────────────────────────────────────
# Minimal degree
# ──────────────────────────────────────────────────────────────────────────────
def min_degree_lower_bound(data: BoundaryData, rel_tol: float = RANK_TOL) -> int:
    """Rank of [(1 − wᵢw̄_{r+j})/(1 − tᵢt̄_{r+j})]ᵢ,ⱼ₌₁..ᵣ with r = ⌊n/2⌋.

    No rational interpolant has degree below this value.
    """
    r = data.n // 2
    t, w = data.t, data.w
    block = pick_kernel(t[:r], w[:r], t[r : 2 * r], w[r : 2 * r])
    return matrix_rank(block, rel_tol)


def _vandermonde(z: npt.NDArray[np.complex128], degree: int) -> npt.NDArray[np.complex128]:
    return np.vander(z, degree + 1, increasing=True)


def min_degree_candidate(data: BoundaryData, rel_tol: float = RANK_TOL) -> Optional[MinDegreeCandidate]:
    """Solve a₀ + … + a_q tᵢ^q = wᵢ (b₀ + … + b_q tᵢ^q) for q = :func:`min_degree_lower_bound`.

    Returns None when q > (n − 1)/2, when the null space is not one
    dimensional, when the denominator vanishes at a node, or when the ratio
    fails the interpolation re-check.
    """
    q = min_degree_lower_bound(data, rel_tol)
    if 2 * q > data.n - 1:
        logger.debug("lower bound %d exceeds (n - 1)/2 for n = %d", q, data.n)
        return None
    t, w = data.t, data.w
    powers = _vandermonde(t, q)
    system = np.hstack([powers, -w[:, None] * powers])
    basis = scipy.linalg.null_space(system, rcond=rel_tol)
    if basis.shape[1] != 1:
        logger.debug("null space has dimension %d", basis.shape[1])
        return None
    coeffs = basis[:, 0]
    num, den = coeffs[: q + 1], coeffs[q + 1 :]
    den_at_nodes = np.abs(powers @ den)
    if float(den_at_nodes.min()) <= 1e-8 * float(np.linalg.norm(den)):
        logger.debug("candidate cancels at a node")
        return None
    f = RationalFunction.from_coefficients(num, den)
    residual = float(np.max(np.abs(f(t) - w)))
    if residual > _INTERPOLATION_TOL:
        logger.debug("candidate misses the data by %.3e", residual)
        return None
    return MinDegreeCandidate(
        q=q,
        f=f,
        null_dimension=1,
        interpolation_residual=residual,
        is_blaschke=is_blaschke_certificate(f, data),
    )


def permute_back(values: Sequence[Any], permutation: Sequence[int]) -> List[Any]:
    """Undo :meth:`BoundaryData.permuted` on a per-node list."""
    out: List[Any] = [None] * len(permutation)
    for pos, original in enumerate(permutation):
        out[original - 1] = values[pos]
    return out
