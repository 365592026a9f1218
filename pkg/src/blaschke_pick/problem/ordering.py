# blaschke_pick/problem/ordering.py
"""Canonical orientation and the degenerate constant problem."""
from __future__ import annotations

from typing import Optional, Tuple

from ..settings import UNIMODULAR_TOL
from .models import BoundaryData, UnitPoint
from .validation import argument


def sort_ccw(data: BoundaryData) -> Tuple[BoundaryData, Tuple[int, ...]]:
    """Reorder the nodes counter-clockwise by argument in [0, 2π).

    Targets follow their nodes. The returned 1-based permutation satisfies
    ``sorted.nodes[k] == data.nodes[permutation[k] - 1]``.
    """
    order = sorted(range(data.n), key=lambda k: argument(data.nodes[k]))
    permutation = tuple(k + 1 for k in order)
    return data.permuted(permutation), permutation


def is_ccw_sorted(data: BoundaryData) -> bool:
    angles = [argument(t) for t in data.nodes]
    return all(a < b for a, b in zip(angles, angles[1:]))


def is_constant_problem(data: BoundaryData) -> Optional[UnitPoint]:
    """The common target when every target coincides with the first, else None."""
    w0 = data.targets[0]
    if all(abs(w - w0) <= UNIMODULAR_TOL for w in data.targets[1:]):
        return UnitPoint(w0)
    return None
