# blaschke_pick/special.py
"""Closed-form interpolant families.

Each family here is computed without the general Hermitian solve and serves
as an independent check of :mod:`blaschke_pick.parametrization`:

* three nodes, with the degree-one solutions when the targets are oriented
  like the nodes,
* all targets but the last equal (Δ is explicit because P is diagonal), with
  the equivalent construction from the Clark measure at the common value,
* boundary fixed points wᵢ = tᵢ, with the Cowen-Pommerenke relation between
  the boundary derivatives.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from .errors import (
    ConstantProblem,
    NoHyperbolicPoint,
    NoOrientedTriple,
    NotAdmissible,
    NotASolution,
    PatternMismatch,
)
from .numerics import ComplexPolynomial, RationalFunction
from .parametrization import DeltaVector, InterpolantFamily, family_from_delta
from .pick import boundary_derivative, is_admissible, pick_kernel
from .problem import BoundaryData, GammaTuple, is_constant_problem
from .reduction import orientation_evidence
from .settings import DELTA_ZERO_TOL, UNIMODULAR_TOL

logger = logging.getLogger(__name__)

_EQUALITY_TOL = 1e-7
_GAMMA_ONE_TOL = 1e-12


def _one_minus(t: complex) -> ComplexPolynomial:
    return ComplexPolynomial(np.array([1.0, -np.conj(t)]))


def _kernel(data: BoundaryData) -> npt.NDArray[np.complex128]:
    t, w = data.t, data.w
    return pick_kernel(t, w, t, w)


# ──────────────────────────────────────────────────────────────────────────────
# Three points
# ──────────────────────────────────────────────────────────────────────────────
def _require_three(data: BoundaryData) -> None:
    if data.n != 3:
        raise ValueError(f"three-point formulas need n = 3, got {data.n}")
    if is_constant_problem(data) is not None:
        raise ConstantProblem("all three targets coincide")


def three_point_critical_gammas(data: BoundaryData) -> Tuple[Optional[float], Optional[float]]:
    """(γ̃₁, γ̃₂) = (p₂₁p₁₃/p₂₃, p₁₂p₂₃/p₁₃).

    Setting γ₂ = γ̃₂ makes Δ₁ vanish, γ₁ = γ̃₁ makes Δ₂ vanish. Both are
    positive exactly for oriented targets; an entry is None when its
    denominator is zero.
    """
    _require_three(data)
    p = _kernel(data)
    g1 = None if abs(p[1, 2]) == 0.0 else complex(p[1, 0] * p[0, 2] / p[1, 2]).real
    g2 = None if abs(p[0, 2]) == 0.0 else complex(p[0, 1] * p[1, 2] / p[0, 2]).real
    return g1, g2


def three_point(data: BoundaryData, gamma: GammaTuple) -> InterpolantFamily:
    """The degree ≤ 2 interpolant with Δ from the 2×2 Cramer formulas.

    Raises:
        ConstantProblem: If all targets coincide.
        NotAdmissible: If γ₁γ₂ ≤ |p₁₂|².
    """
    _require_three(data)
    gamma.check_length(data)
    p = _kernel(data)
    g1, g2 = gamma.values
    det = g1 * g2 - abs(p[0, 1]) ** 2
    if det <= 0.0:
        raise NotAdmissible(f"gamma1 * gamma2 = {g1 * g2:.6g} does not exceed |p12|^2 = {abs(p[0, 1]) ** 2:.6g}")
    d1 = (g2 * p[0, 2] - p[0, 1] * p[1, 2]) / det
    d2 = (g1 * p[1, 2] - p[1, 0] * p[0, 2]) / det
    return family_from_delta(data, gamma, DeltaVector.from_values([d1, d2], DELTA_ZERO_TOL))


def three_point_degree_one(data: BoundaryData, anchor: int = 2) -> RationalFunction:
    """The unique degree-one interpolant of oriented three-point data.

    ``anchor = 2`` uses the form obtained with γ₂ = γ̃₂ (built from the pairs
    1-2 and 1-3); ``anchor = 1`` the form obtained with γ₁ = γ̃₁ (pairs 2-1
    and 2-3). Both define the same function.

    Raises:
        NoOrientedTriple: If the targets are not oriented like the nodes.
    """
    _require_three(data)
    if anchor not in (1, 2):
        raise ValueError(f"anchor must be 1 or 2, got {anchor}")
    g1, g2 = three_point_critical_gammas(data)
    if g1 is None or g2 is None or g1 <= 0.0 or g2 <= 0.0:
        raise NoOrientedTriple(orientation_evidence(data))
    p = _kernel(data)
    t, w = data.nodes, data.targets
    if anchor == 2:
        near, far = _one_minus(t[1]) * p[0, 1], _one_minus(t[2]) * p[0, 2]
        other = w[1]
    else:
        near, far = _one_minus(t[0]) * p[1, 0], _one_minus(t[2]) * p[1, 2]
        other = w[0]
    numerator = near - far
    denominator = near * np.conj(w[2]) - far * np.conj(other)
    return RationalFunction(numerator, denominator)


# ──────────────────────────────────────────────────────────────────────────────
# All targets but one equal
# ──────────────────────────────────────────────────────────────────────────────
def _common_target(data: BoundaryData) -> complex:
    """The shared value of w₁..w_{n−1}."""
    u = data.targets[0]
    if any(abs(w - u) > UNIMODULAR_TOL for w in data.targets[:-1]):
        raise PatternMismatch("targets w_1..w_{n-1} are not all equal")
    return u


def uniform_target(data: BoundaryData, gamma: GammaTuple) -> InterpolantFamily:
    """Interpolant when w₁ = … = w_{n−1}; every positive γ is admissible.

    The targets are rotated so the common value is 1, Δᵢ = p_{i,n}/γᵢ is used
    directly, and the result is rotated back. If wₙ also equals the common
    value, every Δᵢ vanishes and the interpolant is that constant.

    Raises:
        PatternMismatch: If w₁..w_{n−1} are not all equal.
    """
    gamma.check_length(data)
    u = _common_target(data)
    rotated = data.rotated_targets(np.conj(u))
    m = data.n - 1
    t, tn, wn = rotated.t[:m], rotated.nodes[-1], rotated.targets[-1]
    values = (1.0 - np.conj(wn)) / (gamma.as_array() * (1.0 - t * np.conj(tn)))
    family = family_from_delta(rotated, gamma, DeltaVector.from_values(values, DELTA_ZERO_TOL))
    f = RationalFunction(family.f.numerator * u, family.f.denominator)
    return InterpolantFamily(
        data=data,
        gamma=gamma,
        delta=family.delta,
        f=f,
        predicted_degree=family.predicted_degree,
        deflation_remainders=family.deflation_remainders,
    )


@dataclass(frozen=True, eq=False)
class ClarkForm:
    """Boundary representation of an interpolant through its Clark measure at 1.

    With point masses 1/γᵢ at t₁..t_{n−1},

        (1 + f)/(1 − f) = Φ(z) + ic,  Φ(z) = ½ Σ γᵢ⁻¹ (tᵢ + z)/(tᵢ − z),

    and f = ((1 − Φ)𝓔 + Φ)/(−Φ𝓔 + 1 + Φ) with 𝓔 = (ic − 1)/(ic + 1).
    Values are for the targets rotated by ``rotation``⁻¹.
    """

    nodes: Tuple[complex, ...]
    masses: Tuple[float, ...]
    last_node: complex
    last_target: complex
    rotation: complex
    unimodular_constant: complex
    phase_constant: float

    def potential(self, z: complex) -> complex:
        """Φ(z)."""
        t = np.array(self.nodes)
        return complex(0.5 * np.sum(np.array(self.masses) * (t + z) / (t - z)))

    def partial_fraction_residual(self, z: complex) -> float:
        """|Φ(z) − Φ(tₙ) − Σ (1 − z t̄ₙ)/(γᵢ(1 − z t̄ᵢ)(1 − tᵢ t̄ₙ))|."""
        t, m, tn = np.array(self.nodes), np.array(self.masses), self.last_node
        expected = np.sum(m * (1 - z * np.conj(tn)) / ((1 - z * t.conj()) * (1 - t * np.conj(tn))))
        return abs(self.potential(z) - self.potential(tn) - expected)

    def to_rational(self) -> RationalFunction:
        """f as a polynomial ratio, rotated back to the original targets.

        With B = Π(tᵢ − z) and A = ½ Σ γᵢ⁻¹ (tᵢ + z) Πⱼ≠ᵢ (tⱼ − z), Φ = A/B.
        """
        factors = [ComplexPolynomial(np.array([t, -1.0])) for t in self.nodes]
        b = ComplexPolynomial.constant(1.0)
        for factor in factors:
            b = b * factor
        a = ComplexPolynomial.constant(0.0)
        for i, (t, mass) in enumerate(zip(self.nodes, self.masses)):
            term = ComplexPolynomial(np.array([t, 1.0])) * (0.5 * mass)
            for j, factor in enumerate(factors):
                if j != i:
                    term = term * factor
            a = a + term
        e = self.unimodular_constant
        numerator = ((b - a) * e + a) * self.rotation
        denominator = b + a - a * e
        return RationalFunction(numerator, denominator)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "masses": list(self.masses),
            "phase_constant": self.phase_constant,
            "unimodular_constant": {"re": self.unimodular_constant.real, "im": self.unimodular_constant.imag},
        }


def clark_measure(data: BoundaryData, gamma: GammaTuple) -> ClarkForm:
    """Clark data of the interpolant with |f′(tᵢ)| = γᵢ for w₁ = … = w_{n−1}.

    Raises:
        PatternMismatch: If w₁..w_{n−1} are not all equal.
        ConstantProblem: If wₙ equals the common value too.
    """
    gamma.check_length(data)
    u = _common_target(data)
    wn = data.targets[-1] * np.conj(u)
    if abs(wn - 1.0) <= UNIMODULAR_TOL:
        raise ConstantProblem("all targets coincide; the Clark form degenerates")
    partial = ClarkForm(
        nodes=tuple(data.nodes[:-1]),
        masses=tuple(1.0 / g for g in gamma.values),
        last_node=data.nodes[-1],
        last_target=complex(wn),
        rotation=complex(u),
        unimodular_constant=1.0,
        phase_constant=0.0,
    )
    phi = partial.potential(data.nodes[-1])
    e = ((1.0 + phi) * wn - phi) / (phi * wn + 1.0 - phi)
    c = 1j * (1.0 + e) / (e - 1.0)
    if abs(c.imag) > 1e-9 * max(1.0, abs(c)):
        logger.warning("Clark phase constant has imaginary part %.3e", c.imag)
    return ClarkForm(
        nodes=partial.nodes,
        masses=partial.masses,
        last_node=partial.last_node,
        last_target=partial.last_target,
        rotation=partial.rotation,
        unimodular_constant=complex(e),
        phase_constant=float(c.real),
    )


def clark_form(data: BoundaryData, gamma: GammaTuple) -> RationalFunction:
    """The uniform-target interpolant built from its Clark measure."""
    return clark_measure(data, gamma).to_rational()


# ──────────────────────────────────────────────────────────────────────────────
# Boundary fixed points
# ──────────────────────────────────────────────────────────────────────────────
class FixedPointCaseId(str, Enum):
    ALL_ABOVE_ONE = "all_above_one"
    ONE_EQUAL_ONE = "one_equal_one"
    ONE_BELOW_ONE = "one_below_one"


@dataclass(frozen=True)
class FixedPointCase:
    """Admissibility case of γ for fixed-point data.

    ``denjoy_wolff_index`` is 1-based; None when f is the identity.
    ``identity_residual`` is |Σ 1/(|f′(tᵢ)| − 1) + 1| over all n nodes with
    the measured f′(tₙ), and ``derivative_residual`` is |f′(tₙ) − γₙ|.
    """

    case_id: FixedPointCaseId
    gamma: GammaTuple
    denjoy_wolff_index: Optional[int]
    gamma_n: float
    identity_residual: float = 0.0
    derivative_residual: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case_id.value,
            "denjoy_wolff_index": self.denjoy_wolff_index,
            "gamma_n": self.gamma_n,
            "identity_residual": self.identity_residual,
            "derivative_residual": self.derivative_residual,
        }


def fixed_point_pick_det(gamma: Sequence[float]) -> float:
    """det(Γ + EE*) = Π(γᵢ − 1) + Σⱼ Πᵢ≠ⱼ(γᵢ − 1), valid also when some γᵢ = 1."""
    shifted = [float(g) - 1.0 for g in gamma]
    total = math.prod(shifted)
    for j in range(len(shifted)):
        total += math.prod(s for i, s in enumerate(shifted) if i != j)
    return total


def _closed_form_case(gamma: GammaTuple) -> Tuple[Optional[FixedPointCaseId], Optional[int]]:
    """Case and 0-based special index from the γ pattern alone; None if inadmissible."""
    ones = [i for i, g in enumerate(gamma) if abs(g - 1.0) <= _GAMMA_ONE_TOL * max(1.0, g)]
    below = [i for i, g in enumerate(gamma) if g < 1.0 and i not in ones]
    if len(ones) + len(below) >= 2:
        return None, None
    if ones:
        return FixedPointCaseId.ONE_EQUAL_ONE, ones[0]
    if not below:
        return FixedPointCaseId.ALL_ABOVE_ONE, None
    s = sum(1.0 / (g - 1.0) for g in gamma)
    if s < -1.0:
        return FixedPointCaseId.ONE_BELOW_ONE, below[0]
    return None, None


def fixed_point_family(
    nodes: Sequence[complex], gamma: GammaTuple
) -> Tuple[InterpolantFamily, FixedPointCase]:
    """Interpolant with f(tᵢ) = tᵢ for every node and |f′(tᵢ)| = γᵢ for i < n.

    Raises:
        NotAdmissible: If two entries are ≤ 1, or one is below 1 with
            Σ 1/(γᵢ − 1) ≥ −1.
    """
    data = BoundaryData(tuple(nodes), tuple(nodes))
    gamma.check_length(data)
    admissible = is_admissible(data, gamma)
    case_id, special = _closed_form_case(gamma)
    if (case_id is not None) != admissible:
        logger.warning(
            "closed-form fixed-point case %s disagrees with Cholesky (admissible=%s)", case_id, admissible
        )
    if not admissible:
        raise NotAdmissible(f"gamma {list(gamma.values)} is not admissible for fixed-point data")
    if case_id is None:
        case_id = FixedPointCaseId.ONE_BELOW_ONE if any(g < 1.0 for g in gamma) else FixedPointCaseId.ALL_ABOVE_ONE
        special = next((i for i, g in enumerate(gamma) if g < 1.0), None)

    m = data.n - 1
    if case_id is FixedPointCaseId.ONE_EQUAL_ONE:
        values = np.zeros(m, dtype=np.complex128)
        values[special] = 1.0
        family = InterpolantFamily(
            data=data,
            gamma=gamma,
            delta=DeltaVector.from_values(values, DELTA_ZERO_TOL),
            f=RationalFunction.identity(),
            predicted_degree=1,
        )
        return family, FixedPointCase(case_id, gamma, None, 1.0)

    t, tn = data.nodes[:m], data.nodes[-1]
    shifted = gamma.as_array() - 1.0
    s = float(np.sum(1.0 / shifted))
    weights = (1.0 - tn * np.conj(np.array(t))) / shifted

    upsilon = ComplexPolynomial.constant(1.0)
    for ti in t:
        upsilon = upsilon * _one_minus(ti)
    weighted = ComplexPolynomial.constant(0.0)
    for i in range(m):
        partial = ComplexPolynomial.constant(weights[i])
        for j in range(m):
            if j != i:
                partial = partial * _one_minus(t[j])
        weighted = weighted + partial
    z = ComplexPolynomial(np.array([0.0, 1.0]))
    f = RationalFunction(upsilon * tn + z * weighted, upsilon + weighted)

    delta_values = 1.0 / ((1.0 + s) * shifted)
    gamma_n = s / (1.0 + s)
    measured = boundary_derivative(f, tn)
    identity_residual = abs(s + 1.0 / (measured - 1.0) + 1.0)
    derivative_residual = abs(measured - gamma_n)
    if identity_residual > 1e-8 * max(1.0, abs(s)):
        logger.warning("derivative identity off by %.3e", identity_residual)
    if derivative_residual > 1e-7 * max(1.0, gamma_n):
        logger.warning("f'(t_n) = %.12g but the closed form gives %.12g", measured, gamma_n)

    if case_id is FixedPointCaseId.ALL_ABOVE_ONE:
        dw_index = data.n
    else:
        dw_index = special + 1
        derivative = boundary_derivative(f, data.nodes[special])
        if derivative >= 1.0:
            logger.warning("expected an attracting point at node %d, f' = %.12g", dw_index, derivative)

    family = InterpolantFamily(
        data=data,
        gamma=gamma,
        delta=DeltaVector.from_values(delta_values, DELTA_ZERO_TOL),
        f=f,
        predicted_degree=m,
    )
    return family, FixedPointCase(case_id, gamma, dw_index, gamma_n, identity_residual, derivative_residual)


@dataclass(frozen=True)
class CowenPommerenkeResult:
    """Both sides of Σᵢ≠ₕ 1/(f′(tᵢ) − 1) ≤ f′(tₕ)/(1 − f′(tₕ)); h is 1-based."""

    lhs: float
    rhs: float
    equality: bool
    hyperbolic_index: int
    derivatives: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equality": self.equality,
            "hyperbolic_index": self.hyperbolic_index,
        }


def cowen_pommerenke_check(f: RationalFunction, nodes: Sequence[complex]) -> CowenPommerenkeResult:
    """Compare both sides of the Cowen-Pommerenke inequality at boundary fixed points.

    The hyperbolic point is the node with the smallest derivative below 1.
    Equality is expected exactly when f has degree len(nodes) − 1.

    Raises:
        NotASolution: If some node is not fixed by f.
        NoHyperbolicPoint: If every derivative is at least 1.
    """
    t = np.array([complex(v) for v in nodes], dtype=np.complex128)
    miss = float(np.max(np.abs(f(t) - t)))
    if miss > 1e-8:
        raise NotASolution(f"nodes are not fixed points of f (max miss {miss:.3e})")
    derivatives = [boundary_derivative(f, v) for v in t]
    candidates: List[int] = [i for i, d in enumerate(derivatives) if d < 1.0 - _GAMMA_ONE_TOL]
    if not candidates:
        raise NoHyperbolicPoint("every boundary derivative is at least 1")
    h = min(candidates, key=lambda i: derivatives[i])
    with np.errstate(divide="ignore"):
        lhs = float(sum(np.float64(1.0) / (np.float64(d) - 1.0) for i, d in enumerate(derivatives) if i != h))
    rhs = derivatives[h] / (1.0 - derivatives[h])
    equality = abs(lhs - rhs) <= _EQUALITY_TOL * max(1.0, abs(rhs))
    return CowenPommerenkeResult(
        lhs=lhs, rhs=rhs, equality=equality, hyperbolic_index=h + 1, derivatives=tuple(derivatives)
    )
