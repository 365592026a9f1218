"""
Problem data model for blaschke-pick
"""

from .models import BoundaryData, GammaTuple, UnitPoint
from .ordering import is_ccw_sorted, is_constant_problem, sort_ccw
from .validation import argument, find_violations, validate
from .loader import ProblemFile, load_problem, parse_point

__all__ = [
    "BoundaryData",
    "GammaTuple",
    "UnitPoint",
    "argument",
    "find_violations",
    "validate",
    "is_ccw_sorted",
    "is_constant_problem",
    "sort_ccw",
    "ProblemFile",
    "load_problem",
    "parse_point",
]
