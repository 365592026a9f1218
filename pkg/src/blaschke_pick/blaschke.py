# blaschke_pick/blaschke.py
"""Finite Blaschke products: evaluation, degree, factorization and certificates.

Three independent checks are offered for a rational unimodular function:
the winding number of its boundary values, an explicit factorization
``c · Π (z − aᵢ)/(1 − āᵢ z)``, and positivity of its boundary Schwarz-Pick
matrix.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from .errors import NotBlaschke, NotUnimodular, NumericalFailure
from .numerics import ComplexPolynomial, RationalFunction, is_psd, poly_roots
from .pick import schwarz_pick_matrix
from .problem import BoundaryData, UnitPoint
from .settings import MIN_SAMPLES, PSD_TOL, TRACE_SAMPLES

logger = logging.getLogger(__name__)

# Numerator and denominator roots closer than this (relative) are cancelled.
PAIRING_TOL = 1e-7
# Zeros must stay this far inside the unit circle.
INTERIOR_MARGIN = 1e-12
# Largest ||f| - 1| tolerated before a winding number is taken.
WINDING_PRECHECK = 1e-6
_MAX_ARG_STEP = math.pi / 4
_BASE_GRID = 256
_MAX_GRID = 2**22
# Roots closer than this to the circle get a cluster of extra angles.
_SHARP_DISTANCE = 0.25
_GEOMETRIC_RATIO = 1.1
_MIN_FEATURE = 1e-14

__all__ = [
    "RationalFunction",
    "BlaschkeFactorization",
    "evaluate",
    "unimodularity_check",
    "winding_degree",
    "factorize",
    "expand",
    "is_blaschke_certificate",
]


@dataclass(frozen=True, eq=False)
class BlaschkeFactorization:
    """f(z) = c · Π (z − aᵢ)/(1 − āᵢ z) with |c| = 1 and every |aᵢ| < 1."""

    constant: UnitPoint
    zeros: Tuple[complex, ...] = ()

    def __post_init__(self):
        """Validate BlaschkeFactorization fields."""
        if not isinstance(self.constant, UnitPoint):
            object.__setattr__(self, "constant", UnitPoint(self.constant))
        zeros = tuple(complex(a) for a in self.zeros)
        for k, a in enumerate(zeros, start=1):
            if abs(a) > 1.0 - INTERIOR_MARGIN:
                raise ValueError(f"zero {k} = {a} is not inside the unit disk")
        object.__setattr__(self, "zeros", zeros)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def to_rational(self) -> RationalFunction:
        return expand(self)

    def to_dict(self) -> Dict[str, Any]:
        c = self.constant.value
        return {
            "constant": {"re": c.real, "im": c.imag},
            "zeros": [{"re": a.real, "im": a.imag} for a in self.zeros],
            "degree": self.degree,
        }


def expand(factorization: BlaschkeFactorization) -> RationalFunction:
    """Multiply out the product form into one polynomial ratio."""
    numerator = ComplexPolynomial.from_roots(factorization.zeros, factorization.constant.value)
    denominator = ComplexPolynomial.constant(1.0)
    for a in factorization.zeros:
        denominator = denominator * ComplexPolynomial(np.array([1.0, -np.conj(a)]))
    return RationalFunction(numerator, denominator)


# ──────────────────────────────────────────────────────────────────────────────
# Evaluation and boundary behaviour
# ──────────────────────────────────────────────────────────────────────────────
def evaluate(f: RationalFunction, z: complex) -> complex:
    """f(z); raises PoleAtPoint where the denominator vanishes."""
    return complex(f(complex(z)))


def unimodularity_check(f: RationalFunction, samples: int = TRACE_SAMPLES) -> float:
    """max ||f(e^{iθ})| − 1| over ``samples`` uniform angles."""
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be at least {MIN_SAMPLES}, got {samples}")
    return f.max_modulus_deviation(samples)


def _sharp_features(f: RationalFunction) -> List[Tuple[float, float]]:
    """(angle, distance to the circle) of the uncancelled roots near the circle."""
    zeros, poles = _cancel_common(_roots(f.numerator), _roots(f.denominator))
    features = []
    for r in zeros + poles:
        distance = abs(1.0 - abs(r))
        if distance < _SHARP_DISTANCE:
            features.append((float(np.angle(r)), max(distance, _MIN_FEATURE)))
    return features


def _winding_grid(features: Sequence[Tuple[float, float]], samples: int) -> npt.NDArray[np.float64]:
    """Uniform angles plus geometric clusters around each sharp feature.

    A root at distance d from the circle turns the argument by almost 2π
    within O(d) of its angle; the cluster spacing grows from d/8 by a fixed
    ratio, so every step of the argument stays small however close d is to 0.
    """
    refine = max(samples // _BASE_GRID, 1)
    parts = [2.0 * math.pi * np.arange(samples) / samples]
    for phi, d in features:
        count = refine * int(math.ceil(math.log(8.0 * math.pi / d) / math.log(_GEOMETRIC_RATIO))) + 2
        offsets = np.geomspace(d / 8.0, math.pi, count)
        core = np.linspace(-d / 8.0, d / 8.0, 16 * refine + 1)
        parts.extend([phi + core, phi + offsets, phi - offsets])
    return np.unique(np.mod(np.concatenate(parts), 2.0 * math.pi))


def winding_degree(f: RationalFunction) -> int:
    """Winding number of θ ↦ f(e^{iθ}) about the origin.

    The argument is summed over a grid that is uniform away from the roots
    of f and clustered around roots close to the circle. The grid is refined
    until no step turns the argument by π/4 or more.

    Raises:
        NotUnimodular: If f is not unimodular on the circle.
        NumericalFailure: If the grid cannot be refined enough.
    """
    deviation = f.max_modulus_deviation()
    if deviation > WINDING_PRECHECK:
        raise NotUnimodular(deviation)
    features = _sharp_features(f)
    samples = _BASE_GRID
    while samples <= _MAX_GRID:
        theta = _winding_grid(features, samples)
        values = np.asarray(f(np.exp(1j * theta)))
        steps = np.angle(np.roll(values, -1) / values)
        if float(np.max(np.abs(steps))) < _MAX_ARG_STEP:
            turns = float(np.sum(steps)) / (2.0 * math.pi)
            logger.debug(
                "winding number %.6f on %d angles (%d near-circle roots)", turns, theta.size, len(features)
            )
            return int(round(turns))
        samples *= 2
    raise NumericalFailure(f"argument increments stayed above pi/4 at {_MAX_GRID} samples")


# ──────────────────────────────────────────────────────────────────────────────
# Factorization
# ──────────────────────────────────────────────────────────────────────────────
def _roots(p: ComplexPolynomial) -> List[complex]:
    if p.degree < 1:
        return []
    return [complex(r) for r in poly_roots(p)]


def _cancel_common(zeros: List[complex], poles: List[complex]) -> Tuple[List[complex], List[complex]]:
    zeros, poles = list(zeros), list(poles)
    kept: List[complex] = []
    for a in zeros:
        if poles:
            gaps = [abs(a - b) for b in poles]
            k = int(np.argmin(gaps))
            if gaps[k] <= PAIRING_TOL * max(1.0, abs(a)):
                logger.debug("cancelling common root %s", a)
                poles.pop(k)
                continue
        kept.append(a)
    return kept, poles


def _match_reflections(zeros: Sequence[complex], poles: Sequence[complex]) -> bool:
    reflections = [1.0 / np.conj(a) for a in zeros if abs(a) > INTERIOR_MARGIN]
    if len(reflections) != len(poles):
        return False
    remaining = list(poles)
    for r in reflections:
        gaps = [abs(r - b) for b in remaining]
        k = int(np.argmin(gaps))
        if gaps[k] > PAIRING_TOL * max(1.0, abs(r)):
            return False
        remaining.pop(k)
    return True


def factorize(f: RationalFunction) -> BlaschkeFactorization:
    """Write f as a finite Blaschke product.

    Common numerator/denominator roots are cancelled first. The remaining
    zeros must lie in the open disk, the poles must be their reflections
    1/āᵢ, and the coefficients must satisfy the self-inversive relation
    bᵢ = κ · conj(a_{q−i}) with |κ| = 1.

    Raises:
        NotBlaschke: Naming the first failing criterion.
    """
    zeros, poles = _cancel_common(_roots(f.numerator), _roots(f.denominator))

    outside = [a for a in zeros if abs(a) >= 1.0 - INTERIOR_MARGIN]
    if outside:
        raise NotBlaschke("zero_outside_disk", f"zeros not inside the unit disk: {outside}")
    if not _match_reflections(zeros, poles):
        raise NotBlaschke("pole_not_reflection", "poles are not the reflections 1/conj(a) of the zeros")

    q = len(zeros)
    numerator = ComplexPolynomial.from_roots(zeros, f.numerator.leading)
    denominator = ComplexPolynomial.from_roots(poles, f.denominator.leading)
    alpha = numerator.padded(q + 1)
    beta = denominator.padded(q + 1)
    mirrored = np.conj(alpha[::-1])
    kappa = complex(np.vdot(beta, mirrored) / np.vdot(beta, beta))
    residual = float(np.linalg.norm(kappa * beta - mirrored))
    if residual > PAIRING_TOL * float(np.linalg.norm(alpha)):
        raise NotBlaschke("self_inversive", f"coefficient relation fails by {residual:.3e}")
    if abs(abs(kappa) - 1.0) > PAIRING_TOL:
        raise NotBlaschke("unimodular_constant", f"|c| = {abs(kappa):.12g}, expected 1")

    c = alpha[q] / beta[0]
    return BlaschkeFactorization(constant=UnitPoint(c / abs(c)), zeros=tuple(zeros))


def is_blaschke_certificate(f: RationalFunction, data: BoundaryData, tol: float = PSD_TOL) -> bool:
    """True when the boundary Schwarz-Pick matrix of f at the nodes is PSD.

    Raises:
        PoleAtPoint: If f has a pole at a node.
    """
    try:
        matrix = schwarz_pick_matrix(f, data.nodes)
    except NotUnimodular as e:
        logger.debug("certificate rejected: %s", e)
        return False
    return is_psd(matrix, tol)
