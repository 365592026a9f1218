# blaschke_pick/problem/models.py
"""Data models for the boundary interpolation problem."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import InvalidGamma, ValidationError
from .validation import modulus_violations, validate


# ──────────────────────────────────────────────────────────────────────────────
# Points and data
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class UnitPoint:
    """A point of the unit circle, renormalized to exact unit modulus."""

    value: complex

    def __post_init__(self):
        """Validate UnitPoint fields."""
        v = complex(self.value)
        violations = modulus_violations([v], "point")
        if violations:
            raise ValidationError(violations)
        object.__setattr__(self, "value", v / abs(v))

    @classmethod
    def from_angle(cls, theta: float) -> "UnitPoint":
        return cls(cmath.exp(1j * theta))

    @property
    def angle(self) -> float:
        return math.atan2(self.value.imag, self.value.real)

    def __complex__(self) -> complex:
        return self.value


def _normalized(values: Sequence[Any]) -> Tuple[complex, ...]:
    out = []
    for v in values:
        c = complex(v)
        out.append(c / abs(c))
    return tuple(out)


@dataclass(frozen=True)
class BoundaryData:
    """Distinct unimodular nodes t₁..tₙ with unimodular targets w₁..wₙ.

    Construction validates every invariant and renormalizes all values to
    exact unit modulus; a :class:`ValidationError` lists everything wrong.
    """

    nodes: Tuple[complex, ...]
    targets: Tuple[complex, ...]

    def __post_init__(self):
        """Validate and normalize BoundaryData fields."""
        nodes = tuple(complex(v) for v in self.nodes)
        targets = tuple(complex(v) for v in self.targets)
        validate(nodes, targets)
        object.__setattr__(self, "nodes", _normalized(nodes))
        object.__setattr__(self, "targets", _normalized(targets))

    @classmethod
    def from_angles(cls, node_angles: Sequence[float], target_angles: Sequence[float]) -> "BoundaryData":
        return cls(
            tuple(cmath.exp(1j * a) for a in node_angles),
            tuple(cmath.exp(1j * a) for a in target_angles),
        )

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def t(self) -> npt.NDArray[np.complex128]:
        return np.array(self.nodes, dtype=np.complex128)

    @property
    def w(self) -> npt.NDArray[np.complex128]:
        return np.array(self.targets, dtype=np.complex128)

    @property
    def node_points(self) -> Tuple[UnitPoint, ...]:
        return tuple(UnitPoint(v) for v in self.nodes)

    @property
    def target_points(self) -> Tuple[UnitPoint, ...]:
        return tuple(UnitPoint(v) for v in self.targets)

    def permuted(self, permutation: Sequence[int]) -> "BoundaryData":
        """Reorder so that entry k of the result is entry ``permutation[k]`` (1-based)."""
        if sorted(permutation) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {list(permutation)}")
        return BoundaryData(
            tuple(self.nodes[p - 1] for p in permutation),
            tuple(self.targets[p - 1] for p in permutation),
        )

    def rotated_targets(self, u: complex) -> "BoundaryData":
        """Same nodes, every target multiplied by the unimodular ``u``."""
        return BoundaryData(self.nodes, tuple(u * w for w in self.targets))

    def to_dict(self) -> Dict[str, List[Dict[str, float]]]:
        return {
            "nodes": [{"re": v.real, "im": v.imag} for v in self.nodes],
            "targets": [{"re": v.real, "im": v.imag} for v in self.targets],
        }


# ──────────────────────────────────────────────────────────────────────────────
# Free parameter
# ──────────────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class GammaTuple:
    """Positive diagonal entries γ₁..γ_{n−1} of the Pick matrix."""

    values: Tuple[float, ...]

    def __post_init__(self):
        """Validate GammaTuple fields."""
        try:
            values = tuple(float(v) for v in self.values)
        except (TypeError, ValueError) as e:
            raise InvalidGamma(f"gamma entries must be real numbers: {e}") from e
        if not values:
            raise InvalidGamma("gamma must have at least one entry")
        for k, v in enumerate(values, start=1):
            if not math.isfinite(v) or v <= 0.0:
                raise InvalidGamma(f"gamma[{k}] must be a positive finite number, got {v}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array(self.values, dtype=np.float64)

    def check_length(self, data: BoundaryData) -> None:
        if len(self.values) != data.n - 1:
            raise InvalidGamma(f"gamma needs {data.n - 1} entries for n = {data.n}, got {len(self.values)}")


