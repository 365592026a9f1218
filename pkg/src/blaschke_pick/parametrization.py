# blaschke_pick/parametrization.py
"""Linear-fractional parametrization of all interpolants of degree ≤ n − 1.

For an admissible γ the coefficient matrix Θ(z) maps the unimodular value wₙ
to the interpolant

    f(z) = (θ₁₁(z) wₙ + θ₁₂(z)) / (θ₂₁(z) wₙ + θ₂₂(z)).

The production path does not go through Θ: it solves P Δ = 𝐩ₙ once and
builds numerator and denominator polynomials directly from Δ. Nodes tᵢ with
Δᵢ = 0 are common roots of both polynomials and are divided out, which is
exactly where the degree drops and where |f′(tᵢ)| falls short of γᵢ.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .blaschke import factorize
from .errors import ConstantProblem, NotASolution, PoleAtNode, PoleAtPoint
from .numerics import ComplexPolynomial, RationalFunction, solve_hermitian
from .pick import admissible_factor, boundary_derivative, pick_kernel, xy_columns
from .problem import BoundaryData, GammaTuple
from .settings import DELTA_ZERO_TOL, PIVOT_TOL, POLE_EXCLUSION

logger = logging.getLogger(__name__)

J = np.diag([1.0, -1.0]).astype(np.complex128)

_INTERPOLATION_TOL = 1e-8


# ──────────────────────────────────────────────────────────────────────────────
# Models
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class ThetaValue:
    """Entries of Θ(z) at one point."""

    t11: complex
    t12: complex
    t21: complex
    t22: complex

    @property
    def matrix(self) -> npt.NDArray[np.complex128]:
        return np.array([[self.t11, self.t12], [self.t21, self.t22]], dtype=np.complex128)

    @property
    def det(self) -> complex:
        return self.t11 * self.t22 - self.t12 * self.t21

    def apply(self, w: complex) -> complex:
        """Linear-fractional image (θ₁₁w + θ₁₂)/(θ₂₁w + θ₂₂)."""
        return (self.t11 * w + self.t12) / (self.t21 * w + self.t22)


@dataclass(frozen=True)
class DeltaVector:
    """Δ = P⁻¹𝐩ₙ together with the indices (0-based) declared zero.

    Δᵢ joins the zero set when |Δᵢ| ≤ threshold · max(1, ‖Δ‖∞).
    """

    values: Tuple[complex, ...]
    zero_set: Tuple[int, ...]
    threshold: float = DELTA_ZERO_TOL

    @classmethod
    def from_values(cls, values: npt.ArrayLike, threshold: float = DELTA_ZERO_TOL) -> "DeltaVector":
        v = np.asarray(values, dtype=np.complex128).reshape(-1)
        cutoff = threshold * max(1.0, float(np.max(np.abs(v), initial=0.0)))
        zero_set = tuple(int(i) for i in np.flatnonzero(np.abs(v) <= cutoff))
        if zero_set:
            logger.debug("delta zero set (1-based): %s", [i + 1 for i in zero_set])
        return cls(tuple(complex(x) for x in v), zero_set, threshold)

    @property
    def as_array(self) -> npt.NDArray[np.complex128]:
        return np.array(self.values, dtype=np.complex128)

    @property
    def zero_indices(self) -> List[int]:
        """1-based zero set for reports."""
        return [i + 1 for i in self.zero_set]


@dataclass(frozen=True, eq=False)
class InterpolantFamily:
    """The interpolant f_γ for one admissible γ and everything used to build it."""

    data: BoundaryData
    gamma: GammaTuple
    delta: DeltaVector
    f: RationalFunction
    predicted_degree: int
    deflation_remainders: Tuple[float, ...] = field(default_factory=tuple)

    def interpolation_residual(self) -> float:
        return float(np.max(np.abs(self.f(self.data.t) - self.data.w)))


@dataclass(frozen=True)
class NodeAttainment:
    """Whether |f′(tᵢ)| reaches γᵢ at node ``index`` (1-based)."""

    index: int
    attained: bool
    derivative: float
    gamma: float
    # γᵢ − 1/(P⁻¹)ᵢᵢ, the value taken when the bound is not attained
    shortfall_value: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "attained": self.attained,
            "derivative": self.derivative,
            "gamma": self.gamma,
            "shortfall_value": self.shortfall_value,
        }


@dataclass(frozen=True)
class RecoveredGamma:
    """γ reproducing a given interpolant; ``unique`` only when deg f = n − 1."""

    gamma: GammaTuple
    degree: int
    unique: bool


@dataclass(frozen=True)
class IdentityResiduals:
    """Relative residuals of the two J-identities and |det Θ(z) − 1|."""

    kernel: float
    dual_kernel: float
    determinant: float


# ──────────────────────────────────────────────────────────────────────────────
# Coefficients
# ──────────────────────────────────────────────────────────────────────────────
def pn_column(data: BoundaryData) -> npt.NDArray[np.complex128]:
    """Entries (1 − wᵢw̄ₙ)/(1 − tᵢt̄ₙ), i = 1..n−1."""
    m = data.n - 1
    return pick_kernel(data.t[:m], data.w[:m], data.t[m:], data.w[m:]).reshape(m)


def delta(
    data: BoundaryData, gamma: GammaTuple, threshold: float = DELTA_ZERO_TOL, pivot_tol: float = PIVOT_TOL
) -> DeltaVector:
    """Solve P Δ = 𝐩ₙ.

    Raises:
        NotAdmissible: If γ is not admissible.
    """
    p, _ = admissible_factor(data, gamma, pivot_tol)
    return DeltaVector.from_values(solve_hermitian(p, pn_column(data)), threshold)


def _check_off_poles(data: BoundaryData, z: complex) -> None:
    for k, t in enumerate(data.nodes[:-1], start=1):
        if abs(z - t) <= POLE_EXCLUSION:
            raise PoleAtNode(k)


def theta(data: BoundaryData, gamma: GammaTuple, z: complex) -> ThetaValue:
    """Θ(z) = I + Σ (z − tₙ)/((1 − z t̄ᵢ)(1 − tₙ t̄ᵢ)) · [1; w̄ᵢ][xᵢ, −yᵢ].

    Raises:
        NotAdmissible: If γ is not admissible.
        PoleAtNode: If z is within the exclusion radius of t₁..t_{n−1}.
    """
    z = complex(z)
    _check_off_poles(data, z)
    cols = xy_columns(data, gamma)
    m = data.n - 1
    t, w, tn = data.t[:m], data.w[:m], data.nodes[-1]
    weight = (z - tn) / ((1.0 - z * t.conj()) * (1.0 - tn * t.conj()))
    left = np.vstack([np.ones(m), w.conj()]) * weight
    right = np.vstack([cols.x, -cols.y]).T
    value = np.eye(2, dtype=np.complex128) + left @ right
    return ThetaValue(*(complex(v) for v in value.reshape(-1)))


def evaluate_theta_form(data: BoundaryData, gamma: GammaTuple, z: complex) -> complex:
    """f_γ(z) computed from Θ(z); the reference path for the polynomial form."""
    return theta(data, gamma, z).apply(data.targets[-1])


def theta_identity_residuals(
    data: BoundaryData, gamma: GammaTuple, z: complex, zeta: complex
) -> IdentityResiduals:
    """Residuals of

        (J − Θ(z) J Θ(ζ)*)/(1 − zζ̄) = [E*; M*](I − zT*)⁻¹P⁻¹(I − ζ̄T)⁻¹[E M]
        (J − Θ(ζ)* J Θ(z))/(1 − zζ̄) = [X*; −Y*](I − ζ̄T)⁻¹P(I − zT*)⁻¹[X −Y]

    each relative to max(1, ‖right side‖), together with |det Θ(z) − 1|.
    """
    z, zeta = complex(z), complex(zeta)
    gap = 1.0 - z * zeta.conjugate()
    if abs(gap) <= POLE_EXCLUSION:
        raise ValueError("z * conj(zeta) must differ from 1")
    p, _ = admissible_factor(data, gamma)
    m = data.n - 1
    p_inv = solve_hermitian(p, np.eye(m, dtype=np.complex128))
    cols = xy_columns(data, gamma)
    t, w = data.t[:m], data.w[:m]
    left_z = 1.0 / (1.0 - z * t.conj())
    right_zeta = 1.0 / (1.0 - zeta.conjugate() * t)

    th_z = theta(data, gamma, z).matrix
    th_zeta = theta(data, gamma, zeta).matrix

    em_rows = np.vstack([np.ones(m), w.conj()])
    kernel_rhs = (em_rows * left_z) @ p_inv @ (em_rows.conj().T * right_zeta[:, None])
    kernel_lhs = (J - th_z @ J @ th_zeta.conj().T) / gap

    xy = np.vstack([cols.x, -cols.y]).T
    dual_rhs = (xy.conj().T * right_zeta) @ p @ (xy * left_z[:, None])
    dual_lhs = (J - th_zeta.conj().T @ J @ th_z) / gap

    def relative(lhs, rhs) -> float:
        return float(np.max(np.abs(lhs - rhs)) / max(1.0, float(np.max(np.abs(rhs)))))

    return IdentityResiduals(
        kernel=relative(kernel_lhs, kernel_rhs),
        dual_kernel=relative(dual_lhs, dual_rhs),
        determinant=abs(ThetaValue(*th_z.reshape(-1)).det - 1.0),
    )


# ──────────────────────────────────────────────────────────────────────────────
# The interpolant
# ──────────────────────────────────────────────────────────────────────────────
def _one_minus(t: complex) -> ComplexPolynomial:
    """The linear polynomial 1 − z t̄."""
    return ComplexPolynomial(np.array([1.0, -np.conj(t)]))


def family_from_delta(data: BoundaryData, gamma: GammaTuple, delta_vector: DeltaVector) -> InterpolantFamily:
    """Clear the denominators 1 − z t̄ᵢ and divide out the nodes with Δᵢ = 0.

    With Υ = Π(1 − z t̄ᵢ) and Υᵢ = Υ/(1 − z t̄ᵢ):

        N = wₙ [Υ − (1 − z t̄ₙ) Σ Δᵢ Υᵢ]
        D = Υ − (1 − z t̄ₙ) Σ w̄ᵢ wₙ Δᵢ Υᵢ
    """
    m = data.n - 1
    t, w = data.nodes[:m], data.targets[:m]
    tn, wn = data.nodes[-1], data.targets[-1]
    d = delta_vector.values

    upsilon = ComplexPolynomial.constant(1.0)
    for ti in t:
        upsilon = upsilon * _one_minus(ti)
    num_sum = ComplexPolynomial.constant(0.0)
    den_sum = ComplexPolynomial.constant(0.0)
    for i in range(m):
        partial = ComplexPolynomial.constant(1.0)
        for j in range(m):
            if j != i:
                partial = partial * _one_minus(t[j])
        num_sum = num_sum + partial * d[i]
        den_sum = den_sum + partial * (np.conj(w[i]) * wn * d[i])

    outer = _one_minus(tn)
    numerator = (upsilon - outer * num_sum) * wn
    denominator = upsilon - outer * den_sum

    remainders = []
    for i in delta_vector.zero_set:
        numerator, r_num = numerator.deflate(t[i])
        denominator, r_den = denominator.deflate(t[i])
        remainder = max(abs(r_num), abs(r_den))
        logger.debug("deflated node %d, remainder %.3e", i + 1, remainder)
        remainders.append(remainder)

    return InterpolantFamily(
        data=data,
        gamma=gamma,
        delta=delta_vector,
        f=RationalFunction(numerator, denominator),
        predicted_degree=m - len(delta_vector.zero_set),
        deflation_remainders=tuple(remainders),
    )


def interpolant(
    data: BoundaryData, gamma: GammaTuple, threshold: float = DELTA_ZERO_TOL, pivot_tol: float = PIVOT_TOL
) -> InterpolantFamily:
    """The Blaschke product f_γ with f_γ(tᵢ) = wᵢ for i = 1..n.

    Raises:
        NotAdmissible: If γ is not admissible.
    """
    family = family_from_delta(data, gamma, delta(data, gamma, threshold, pivot_tol))
    logger.debug("interpolant built: predicted degree %d", family.predicted_degree)
    return family


def attainment(family: InterpolantFamily) -> List[NodeAttainment]:
    """|f′(tᵢ)| against γᵢ for i = 1..n−1.

    The bound is attained exactly off the zero set; on it the derivative is
    γᵢ − 1/(P⁻¹)ᵢᵢ.
    """
    data, gamma = family.data, family.gamma
    m = data.n - 1
    inverse_diag: Optional[npt.NDArray[np.float64]] = None
    if family.delta.zero_set:
        p, _ = admissible_factor(data, gamma)
        inverse_diag = solve_hermitian(p, np.eye(m, dtype=np.complex128)).diagonal().real

    report = []
    for i in range(m):
        attained = i not in family.delta.zero_set
        shortfall = None if attained else gamma[i] - 1.0 / float(inverse_diag[i])
        report.append(
            NodeAttainment(
                index=i + 1,
                attained=attained,
                derivative=boundary_derivative(family.f, data.nodes[i]),
                gamma=gamma[i],
                shortfall_value=shortfall,
            )
        )
    return report


def recover_gamma(f: RationalFunction, data: BoundaryData, tol: float = _INTERPOLATION_TOL) -> RecoveredGamma:
    """γ for which :func:`interpolant` reproduces f.

    γᵢ = |f′(tᵢ)|. When deg f = k < n − 1 the representation is not unique;
    the returned tuple raises the last n − 1 − k entries by one.

    Raises:
        NotASolution: If f misses an interpolation condition or has degree above n − 1.
        NotBlaschke: If f is not a finite Blaschke product.
        ConstantProblem: If f is constant.
    """
    try:
        residual = float(np.max(np.abs(f(data.t) - data.w)))
    except PoleAtPoint as e:
        raise NotASolution(f"f has a pole at a node: {e}") from e
    if residual > tol:
        raise NotASolution(f"f misses the interpolation conditions by {residual:.3e}")

    k = factorize(f).degree
    m = data.n - 1
    if k == 0:
        raise ConstantProblem("a constant function has no gamma representation")
    if k > m:
        raise NotASolution(f"f has degree {k}, above n - 1 = {m}")

    values = [boundary_derivative(f, t) for t in data.nodes[:m]]
    for i in range(k, m):
        values[i] += 1.0
    return RecoveredGamma(gamma=GammaTuple(tuple(values)), degree=k, unique=k == m)
