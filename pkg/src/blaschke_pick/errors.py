# blaschke_pick/errors.py
"""Exception hierarchy shared by the library and the command-line front end."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence


class BlaschkePickError(Exception):
    """Base class for every error raised by blaschke-pick."""

    kind = "error"

    def to_dict(self) -> Dict[str, Any]:
        """JSON payload written to stderr by the CLI."""
        return {"error": self.kind, "message": str(self)}


# ──────────────────────────────────────────────────────────────────────────────
# Linear algebra
# ──────────────────────────────────────────────────────────────────────────────
class NotPositiveDefinite(BlaschkePickError):
    """Cholesky met a pivot at or below tolerance.

    ``index`` is the 1-based position of the failing pivot.
    """

    kind = "not_positive_definite"

    def __init__(self, index: int, pivot: float):
        super().__init__(f"matrix is not positive definite: pivot {index} = {pivot:.3e}")
        self.index = index
        self.pivot = pivot

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["index"] = self.index
        return payload


class Singular(BlaschkePickError):
    kind = "singular"


class DegenerateInput(BlaschkePickError, ValueError):
    kind = "degenerate_input"


class NumericalFailure(BlaschkePickError):
    """A numerical procedure did not reach its stated accuracy.

    ``details`` holds the measured values and is merged into the payload.
    """

    kind = "numerical_failure"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.details:
            payload["details"] = self.details
        return payload


class ClassificationTooLarge(BlaschkePickError, ValueError):
    kind = "classification_too_large"


# ──────────────────────────────────────────────────────────────────────────────
# Problem validation
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Violation:
    """One broken invariant of a boundary interpolation problem."""

    kind: str
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class DuplicateNode(Violation):
    i: int = 0
    j: int = 0


@dataclass(frozen=True)
class NotUnimodularValue(Violation):
    index: int = 0
    which: str = "nodes"


@dataclass(frozen=True)
class LengthMismatch(Violation):
    n_nodes: int = 0
    n_targets: int = 0


@dataclass(frozen=True)
class TooFewPoints(Violation):
    n: int = 0


@dataclass(frozen=True)
class NonFinite(Violation):
    index: int = 0
    which: str = "nodes"


class ValidationError(BlaschkePickError, ValueError):
    """Raised with the complete list of violations found in a problem."""

    kind = "validation_error"

    def __init__(self, violations: Sequence[Violation]):
        self.violations: List[Violation] = list(violations)
        summary = "; ".join(v.detail for v in self.violations) or "invalid problem"
        super().__init__(summary)

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["violations"] = [v.to_dict() for v in self.violations]
        return payload


class InvalidGamma(BlaschkePickError, ValueError):
    kind = "invalid_gamma"


class InvalidArgument(BlaschkePickError, ValueError):
    """A file, flag or setting supplied by the caller is unusable."""

    kind = "invalid_argument"


class ConstantProblem(BlaschkePickError, ValueError):
    """All targets coincide; the only solution is the constant function."""

    kind = "constant_problem"


class PatternMismatch(BlaschkePickError, ValueError):
    kind = "pattern_mismatch"


class DuplicatePoint(BlaschkePickError, ValueError):
    kind = "duplicate_point"


# ──────────────────────────────────────────────────────────────────────────────
# Interpolation
# ──────────────────────────────────────────────────────────────────────────────
class NotAdmissible(BlaschkePickError):
    """The Pick matrix built from the chosen diagonal is not positive definite."""

    kind = "not_admissible"

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.index is not None:
            payload["index"] = self.index
        return payload


class PoleAtPoint(BlaschkePickError):
    kind = "pole_at_point"


class PoleAtNode(BlaschkePickError):
    kind = "pole_at_node"

    def __init__(self, index: int):
        super().__init__(f"evaluation point coincides with node {index}")
        self.index = index


class NotUnimodular(BlaschkePickError):
    kind = "not_unimodular"

    def __init__(self, deviation: float):
        super().__init__(f"function is not unimodular on the circle (deviation {deviation:.3e})")
        self.deviation = deviation


class NotBlaschke(BlaschkePickError):
    """A rational function failed one of the finite Blaschke product criteria."""

    kind = "not_blaschke"

    def __init__(self, criterion: str, message: str = ""):
        super().__init__(message or criterion)
        self.criterion = criterion

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["criterion"] = self.criterion
        return payload


class NotASolution(BlaschkePickError):
    kind = "not_a_solution"


class NoOrientedTriple(BlaschkePickError):
    """No three distinct targets share the orientation of their nodes."""

    kind = "no_oriented_triple"

    def __init__(self, evidence: Sequence[Any] = ()):
        super().__init__("no target triple has the orientation of its nodes")
        self.evidence = list(evidence)

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["evidence"] = [
            item.to_dict() if hasattr(item, "to_dict") else item for item in self.evidence
        ]
        return payload


class NoHyperbolicPoint(BlaschkePickError):
    kind = "no_hyperbolic_point"
