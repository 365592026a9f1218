"""
Core blaschke-pick pipelines.

Turns a problem (file, dict or BoundaryData) plus a choice of γ into a
certified Blaschke interpolant and the report the command-line front end
prints: ``solve`` for a given γ, ``reduce_degree`` for a degree ≤ n − 2 solution,
``trace`` for circle samples, ``mindegree`` for the rank bound and its
candidate, and ``random_check`` for a seeded self-check.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import numpy.typing as npt

from .blaschke import factorize, is_blaschke_certificate, unimodularity_check, winding_degree
from .errors import (
    BlaschkePickError,
    ConstantProblem,
    InvalidArgument,
    InvalidGamma,
    NoOrientedTriple,
    NotBlaschke,
    NumericalFailure,
)
from .numerics import RationalFunction, condition_estimate
from .parametrization import InterpolantFamily, attainment, interpolant, theta_identity_residuals
from .pick import (
    boundary_derivative,
    diagonally_dominant_gamma,
    inverse_stein_residual,
    pick_matrix,
    stein_residual,
)
from .problem import BoundaryData, GammaTuple, is_constant_problem, load_problem
from .reduction import min_degree_candidate, min_degree_lower_bound, reducing_gamma
from .settings import Settings
from .special import fixed_point_family

logger = logging.getLogger(__name__)

GammaSpec = Union[Sequence[float], str, None]

# Every emitted interpolant is re-checked against these.
REVALIDATION_TOL = 1e-9
_FIXED_POINT_TOL = 1e-12


# ──────────────────────────────────────────────────────────────────────────────
# Configuration
# ──────────────────────────────────────────────────────────────────────────────
@dataclass
class SolveConfig:
    """Configuration for one pipeline run."""

    problem: Union[Dict[str, Any], BoundaryData, str, Path]
    gamma: GammaSpec = None
    settings: Settings = field(default_factory=Settings)

    def __post_init__(self):
        """Load the problem if it is a file path or a parsed dict.

        Raises:
            FileNotFoundError: If the file doesn't exist
            InvalidArgument: If the file is not JSON
            ValidationError: If the content violates the problem schema
        """
        if isinstance(self.problem, (str, Path, dict)):
            self.problem = load_problem(self.problem)
        elif not isinstance(self.problem, BoundaryData):
            raise TypeError(f"problem must be a path, dict or BoundaryData, got {type(self.problem).__name__}")

    @property
    def data(self) -> BoundaryData:
        return self.problem


def resolve_gamma(data: BoundaryData, gamma: GammaSpec) -> GammaTuple:
    """Turn the ``--gamma`` value into a GammaTuple aligned with the nodes.

    None and ``"auto"`` both give the diagonally dominant choice.

    Raises:
        InvalidGamma: If the entries are not positive or their count is not n − 1.
    """
    if gamma is None or (isinstance(gamma, str) and gamma.strip().lower() == "auto"):
        resolved = diagonally_dominant_gamma(data)
        logger.debug("auto gamma: %s", resolved.values[0])
        return resolved
    if isinstance(gamma, str):
        try:
            gamma = [float(v) for v in gamma.split(",")]
        except ValueError as e:
            raise InvalidGamma(f"--gamma must be 'auto' or comma-separated numbers, got {gamma!r}") from e
    resolved = GammaTuple(tuple(gamma))
    resolved.check_length(data)
    return resolved


# ──────────────────────────────────────────────────────────────────────────────
# Reports
# ──────────────────────────────────────────────────────────────────────────────
@dataclass
class SolveReport:
    """Everything ``solve`` and ``reduce`` print for one interpolant.

    Per-node lists follow the order of ``labels``, the 1-based indices of the
    nodes in the problem file.
    """

    command: str
    n: int
    labels: List[int]
    numerator: List[complex]
    denominator: List[complex]
    predicted_degree: int
    winding_degree: int
    residuals: List[float]
    derivatives: List[Dict[str, Any]]
    gamma: Optional[List[float]] = None
    delta: List[complex] = field(default_factory=list)
    zero_set: List[int] = field(default_factory=list)
    factorization: Optional[Dict[str, Any]] = None
    certificates: Dict[str, Any] = field(default_factory=dict)
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def revalidated(self) -> bool:
        return bool(self.certificates.get("revalidated", False))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "n": self.n,
            "labels": self.labels,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "predicted_degree": self.predicted_degree,
            "winding_degree": self.winding_degree,
            "residuals": self.residuals,
            "derivatives": self.derivatives,
            "gamma": self.gamma,
            "delta": self.delta,
            "zero_set": self.zero_set,
            "factorization": self.factorization,
            "certificates": self.certificates,
            "extra": self.extra,
        }


@dataclass
class MinDegreeReport:
    """Lower bound q on the degree of any rational interpolant and its candidate."""

    q: int
    n: int
    candidate: Optional[Dict[str, Any]] = None
    certified: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"q": self.q, "n": self.n, "candidate": self.candidate, "certified": self.certified}


@dataclass
class CheckReport:
    """Summary of a seeded randomized self-check."""

    count: int
    seed: int
    max_nodes: int
    max_interpolation_residual: float = 0.0
    max_unimodularity: float = 0.0
    max_identity_residual: float = 0.0
    max_stein_residual: float = 0.0
    degree_failures: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "seed": self.seed,
            "max_nodes": self.max_nodes,
            "max_interpolation_residual": self.max_interpolation_residual,
            "max_unimodularity": self.max_unimodularity,
            "max_identity_residual": self.max_identity_residual,
            "max_stein_residual": self.max_stein_residual,
            "degree_failures": self.degree_failures,
            "failures": self.failures,
            "passed": self.passed,
        }


# ──────────────────────────────────────────────────────────────────────────────
# Report assembly
# ──────────────────────────────────────────────────────────────────────────────
def _coefficients(f: RationalFunction) -> Dict[str, List[complex]]:
    return {
        "numerator": [complex(c) for c in f.numerator.coefficients],
        "denominator": [complex(c) for c in f.denominator.coefficients],
    }


def _residuals(f: RationalFunction, data: BoundaryData) -> List[float]:
    return [float(v) for v in np.abs(f(data.t) - data.w)]


def _certify(f: RationalFunction, data: BoundaryData, predicted: int, settings: Settings) -> Dict[str, Any]:
    """Factorization, unimodularity, winding and Schwarz-Pick verdicts of f.

    Raises:
        NumericalFailure: If f misses a node, leaves the circle or its winding
            number disagrees with the predicted degree.
    """
    certificates: Dict[str, Any] = {}
    try:
        factorization = factorize(f).to_dict()
    except NotBlaschke as e:
        logger.warning("interpolant failed factorization: %s", e)
        factorization = None
        certificates["factorization_failure"] = e.to_dict()
    certificates["unimodularity"] = unimodularity_check(f, settings.samples)
    winding = winding_degree(f)
    certificates["schwarz_pick_psd"] = is_blaschke_certificate(f, data)
    residual = max(_residuals(f, data))
    certificates["interpolation_residual"] = residual
    certificates["revalidated"] = bool(
        residual <= REVALIDATION_TOL
        and certificates["unimodularity"] <= REVALIDATION_TOL
        and winding == predicted
    )
    if not certificates["revalidated"]:
        details = dict(certificates, winding_degree=winding, predicted_degree=predicted)
        raise NumericalFailure(
            f"interpolant failed re-validation: residual {residual:.3e}, "
            f"unimodularity {certificates['unimodularity']:.3e}, winding {winding} vs predicted {predicted}",
            details,
        )
    return {"factorization": factorization, "winding": winding, "certificates": certificates}


def _fixed_point_extra(family: InterpolantFamily) -> Optional[Dict[str, Any]]:
    """Closed-form fixed-point case when every target equals its node."""
    data = family.data
    if any(abs(w - t) > _FIXED_POINT_TOL for t, w in zip(data.nodes, data.targets)):
        return None
    _, case = fixed_point_family(data.nodes, family.gamma)
    derivatives = list(family.gamma.values) + [boundary_derivative(family.f, data.nodes[-1])]
    if any(abs(g - 1.0) <= _FIXED_POINT_TOL for g in derivatives):
        identity_sum = None
    else:
        identity_sum = sum(1.0 / (g - 1.0) for g in derivatives)
    payload = case.to_dict()
    payload["derivative_identity_sum"] = identity_sum
    return payload


def family_report(
    family: InterpolantFamily,
    command: str,
    settings: Settings,
    labels: Optional[Sequence[int]] = None,
) -> SolveReport:
    """Build the report for an interpolant of the general parametrization."""
    data, gamma, f = family.data, family.gamma, family.f
    checked = _certify(f, data, family.predicted_degree, settings)

    derivatives = [node.to_dict() for node in attainment(family)]
    derivatives.append(
        {
            "index": data.n,
            "attained": None,
            "derivative": boundary_derivative(f, data.nodes[-1]),
            "gamma": None,
            "shortfall_value": None,
        }
    )
    certificates = checked["certificates"]
    certificates["stein_residual"] = stein_residual(data, gamma)
    certificates["inverse_stein_residual"], certificates["inverse_norm"] = inverse_stein_residual(data, gamma)
    certificates["pick_condition"] = condition_estimate(pick_matrix(data, gamma))
    if family.deflation_remainders:
        certificates["deflation_remainders"] = list(family.deflation_remainders)

    report = SolveReport(
        command=command,
        n=data.n,
        labels=list(labels) if labels is not None else list(range(1, data.n + 1)),
        predicted_degree=family.predicted_degree,
        winding_degree=checked["winding"],
        residuals=_residuals(f, data),
        derivatives=derivatives,
        gamma=list(gamma.values),
        delta=list(family.delta.values),
        zero_set=family.delta.zero_indices,
        factorization=checked["factorization"],
        certificates=certificates,
        **_coefficients(f),
    )
    fixed_point = _fixed_point_extra(family)
    if fixed_point is not None:
        report.extra["fixed_point"] = fixed_point
    return report


def constant_report(data: BoundaryData, command: str, settings: Settings) -> SolveReport:
    """The degree-zero solution when every target coincides."""
    f = RationalFunction.constant(data.targets[0])
    checked = _certify(f, data, 0, settings)
    return SolveReport(
        command=command,
        n=data.n,
        labels=list(range(1, data.n + 1)),
        predicted_degree=0,
        winding_degree=checked["winding"],
        residuals=_residuals(f, data),
        derivatives=[
            {"index": k, "attained": None, "derivative": 0.0, "gamma": None, "shortfall_value": None}
            for k in range(1, data.n + 1)
        ],
        factorization=checked["factorization"],
        certificates=checked["certificates"],
        extra={"constant": True},
        **_coefficients(f),
    )


# ──────────────────────────────────────────────────────────────────────────────
# Pipelines
# ──────────────────────────────────────────────────────────────────────────────
def solve(config: SolveConfig) -> SolveReport:
    """
    Interpolant of degree ≤ n − 1 for the configured γ.

    Args:
        config: SolveConfig with the problem and the γ choice

    Returns:
        SolveReport with the certified interpolant

    Raises:
        InvalidGamma: If γ is malformed
        NotAdmissible: If γ is not admissible
    """
    data = config.data
    if is_constant_problem(data) is not None:
        logger.info("constant problem; returning the constant interpolant")
        return constant_report(data, "solve", config.settings)
    gamma = resolve_gamma(data, config.gamma)
    family = interpolant(data, gamma, config.settings.delta_tol, config.settings.pivot_tol)
    logger.info("solved n=%d with predicted degree %d", data.n, family.predicted_degree)
    return family_report(family, "solve", config.settings)


def reduce_degree(config: SolveConfig) -> SolveReport:
    """
    Interpolant of degree ≤ n − 2 through an oriented target triple.

    Raises:
        ConstantProblem: If every target coincides
        NoOrientedTriple: If no target triple is oriented like its nodes
    """
    data = config.data
    if is_constant_problem(data) is not None:
        raise ConstantProblem("reduction needs a non-constant problem")
    if data.n < 3:
        raise NoOrientedTriple([])
    reduced = reducing_gamma(data, config.settings.delta_tol)
    family = interpolant(reduced.data, reduced.gamma, config.settings.delta_tol, config.settings.pivot_tol)
    report = family_report(family, "reduce", config.settings, labels=reduced.permutation)
    report.extra["reduction"] = reduced.to_dict()
    logger.info("reduced to degree %d via triple %s", family.predicted_degree, reduced.triple)
    return report


def build_function(config: SolveConfig) -> RationalFunction:
    """The interpolant ``solve`` would report, without the certificates."""
    data = config.data
    common = is_constant_problem(data)
    if common is not None:
        return RationalFunction.constant(common.value)
    return interpolant(
        data, resolve_gamma(data, config.gamma), config.settings.delta_tol, config.settings.pivot_tol
    ).f


def trace(config: SolveConfig, samples: Optional[int] = None) -> npt.NDArray[np.float64]:
    """Rows (θ, Re f, Im f, |f|, arg f) at ``samples`` uniform angles in [0, 2π).

    arg f is unwrapped, so over one circuit it gains 2π times the degree.
    """
    samples = samples or config.settings.samples
    settings = config.settings.override(samples=samples)
    f = build_function(config)
    theta = 2.0 * np.pi * np.arange(settings.samples) / settings.samples
    values = f.circle_values(settings.samples)
    return np.column_stack(
        [theta, values.real, values.imag, np.abs(values), np.unwrap(np.angle(values))]
    )


def mindegree(config: SolveConfig) -> MinDegreeReport:
    """Rank lower bound q and, when it exists, the degree-q candidate."""
    data = config.data
    q = min_degree_lower_bound(data, config.settings.rank_tol)
    candidate = min_degree_candidate(data, config.settings.rank_tol)
    if candidate is None:
        return MinDegreeReport(q=q, n=data.n)
    return MinDegreeReport(q=q, n=data.n, candidate=candidate.to_dict(), certified=candidate.is_blaschke)


# ──────────────────────────────────────────────────────────────────────────────
# Randomized self-check
# ──────────────────────────────────────────────────────────────────────────────
def random_problem(rng: np.random.Generator, n: int) -> BoundaryData:
    """Random nodes on a jittered grid and uniformly random targets."""
    jitter = rng.uniform(0.0, 1.0, size=n)
    rotation = rng.uniform(0.0, 2.0 * math.pi)
    node_angles = 2.0 * math.pi * (np.arange(n) + 0.5 * jitter) / n + rotation
    target_angles = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return BoundaryData.from_angles(node_angles.tolist(), target_angles.tolist())


def random_admissible_gamma(rng: np.random.Generator, data: BoundaryData) -> GammaTuple:
    """Diagonally dominant γ with each entry scaled by a random factor in [1, 2)."""
    base = diagonally_dominant_gamma(data).as_array()
    return GammaTuple(tuple((base * (1.0 + rng.uniform(0.0, 1.0, size=base.size))).tolist()))


def _random_interior(rng: np.random.Generator) -> complex:
    return complex(0.5 * math.sqrt(rng.uniform()) * np.exp(2j * math.pi * rng.uniform()))


def random_check(
    count: int = 20, seed: int = 0, max_nodes: int = 8, settings: Optional[Settings] = None
) -> CheckReport:
    """
    Solve ``count`` random problems and check the interpolant invariants.

    Args:
        count: Number of random problems
        seed: Seed of the numpy Generator
        max_nodes: Largest n drawn (n is uniform in 3..max_nodes)
        settings: Tolerances; defaults to Settings()

    Returns:
        CheckReport with the worst residuals and any failing instances
    """
    if count < 1:
        raise InvalidArgument(f"count must be positive, got {count}")
    if max_nodes < 3:
        raise InvalidArgument(f"max_nodes must be at least 3, got {max_nodes}")
    settings = settings or Settings()
    rng = np.random.default_rng(seed)
    report = CheckReport(count=count, seed=seed, max_nodes=max_nodes)

    for k in range(count):
        n = int(rng.integers(3, max_nodes + 1))
        data = random_problem(rng, n)
        gamma = random_admissible_gamma(rng, data)
        try:
            family = interpolant(data, gamma, settings.delta_tol, settings.pivot_tol)
            residual = family.interpolation_residual()
            unimodular = unimodularity_check(family.f, settings.samples)
            winding = winding_degree(family.f)
            identities = theta_identity_residuals(data, gamma, _random_interior(rng), _random_interior(rng))
            stein = stein_residual(data, gamma)
        except BlaschkePickError as e:
            logger.warning("random instance %d failed: %s", k, e)
            report.failures.append({"instance": k, "n": n, "error": e.to_dict()})
            continue

        identity = max(identities.kernel, identities.dual_kernel, identities.determinant)
        report.max_interpolation_residual = max(report.max_interpolation_residual, residual)
        report.max_unimodularity = max(report.max_unimodularity, unimodular)
        report.max_identity_residual = max(report.max_identity_residual, identity)
        report.max_stein_residual = max(report.max_stein_residual, stein)
        degree_ok = winding == family.predicted_degree
        if not degree_ok:
            report.degree_failures += 1
        if not degree_ok or max(residual, unimodular, identity) > REVALIDATION_TOL:
            report.failures.append(
                {
                    "instance": k,
                    "n": n,
                    "interpolation_residual": residual,
                    "unimodularity": unimodular,
                    "identity_residual": identity,
                    "winding_degree": winding,
                    "predicted_degree": family.predicted_degree,
                }
            )
    logger.info("random check: %d instances, %d failures", count, len(report.failures))
    return report
