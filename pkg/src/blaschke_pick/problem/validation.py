# blaschke_pick/problem/validation.py
"""Invariant checks for boundary interpolation data."""
from __future__ import annotations

import cmath
import math
from typing import Any, List, Optional, Sequence

from ..errors import (
    DuplicateNode,
    LengthMismatch,
    NonFinite,
    NotUnimodularValue,
    TooFewPoints,
    ValidationError,
    Violation,
)
from ..settings import NODE_SEPARATION, UNIMODULAR_TOL


def modulus_violations(values: Sequence[complex], which: str) -> List[Violation]:
    found: List[Violation] = []
    for k, v in enumerate(values, start=1):
        if not cmath.isfinite(v):
            found.append(
                NonFinite(kind="non_finite", detail=f"{which}[{k}] is not finite", index=k, which=which)
            )
        elif abs(abs(v) - 1.0) > UNIMODULAR_TOL:
            found.append(
                NotUnimodularValue(
                    kind="not_unimodular",
                    detail=f"{which}[{k}] has modulus {abs(v):.12g}",
                    index=k,
                    which=which,
                )
            )
    return found


def find_violations(nodes: Sequence[Any], targets: Sequence[Any]) -> List[Violation]:
    """Every broken invariant of the problem ``f(nodes[i]) = targets[i]``."""
    t = [complex(v) for v in nodes]
    w = [complex(v) for v in targets]
    found: List[Violation] = []
    if len(t) != len(w):
        found.append(
            LengthMismatch(
                kind="length_mismatch",
                detail=f"{len(t)} nodes but {len(w)} targets",
                n_nodes=len(t),
                n_targets=len(w),
            )
        )
    if len(t) < 2:
        found.append(TooFewPoints(kind="too_few_points", detail=f"need n >= 2, got {len(t)}", n=len(t)))
    found.extend(modulus_violations(t, "nodes"))
    found.extend(modulus_violations(w, "targets"))

    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if not (cmath.isfinite(t[i]) and cmath.isfinite(t[j])):
                continue
            if abs(t[i] - t[j]) <= NODE_SEPARATION:
                found.append(
                    DuplicateNode(
                        kind="duplicate_node",
                        detail=f"nodes {i + 1} and {j + 1} coincide",
                        i=i + 1,
                        j=j + 1,
                    )
                )
    return found


def validate(nodes: Any, targets: Optional[Sequence[Any]] = None) -> None:
    """Raise :class:`ValidationError` listing every violation, or return None.

    Accepts either the two raw sequences or a single object exposing
    ``nodes`` and ``targets`` (a :class:`BoundaryData`).
    """
    if targets is None:
        nodes, targets = nodes.nodes, nodes.targets
    violations = find_violations(nodes, targets)
    if violations:
        raise ValidationError(violations)


def argument(z: complex) -> float:
    """Argument of ``z`` in [0, 2π)."""
    theta = math.atan2(z.imag, z.real) % (2.0 * math.pi)
    # atan2 of a point just below the positive axis can round up to 2π
    return 0.0 if theta >= 2.0 * math.pi - 1e-15 else theta
