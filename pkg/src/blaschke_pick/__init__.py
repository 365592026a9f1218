"""
blaschke-pick - boundary Nevanlinna-Pick interpolation by finite Blaschke products.

Given distinct unimodular nodes t₁..tₙ and unimodular targets w₁..wₙ, builds
every Blaschke product of degree ≤ n − 1 with f(tᵢ) = wᵢ from a choice of
boundary derivatives γ, certifies the result, and finds lower-degree
solutions when they exist.
"""

__version__ = "0.1.0"

from .blaschke import (
    BlaschkeFactorization,
    evaluate,
    expand,
    factorize,
    is_blaschke_certificate,
    unimodularity_check,
    winding_degree,
)
from .core import (
    CheckReport,
    MinDegreeReport,
    SolveConfig,
    SolveReport,
    mindegree,
    random_check,
    reduce_degree,
    solve,
    trace,
)
from .errors import BlaschkePickError
from .numerics import ComplexPolynomial, RationalFunction
from .parametrization import InterpolantFamily, attainment, delta, interpolant, recover_gamma, theta
from .pick import classify, is_admissible, pick_matrix, schwarz_pick_matrix
from .problem import BoundaryData, GammaTuple, UnitPoint, load_problem
from .reduction import exists_degree_n_minus_2, min_degree_candidate, min_degree_lower_bound, reducing_gamma
from .settings import Settings
from .special import (
    clark_form,
    cowen_pommerenke_check,
    fixed_point_family,
    three_point,
    uniform_target,
)

__all__ = [
    "__version__",
    # Problem data
    "BoundaryData",
    "GammaTuple",
    "UnitPoint",
    "load_problem",
    # Numerics
    "ComplexPolynomial",
    "RationalFunction",
    # Pick matrices
    "pick_matrix",
    "is_admissible",
    "classify",
    "schwarz_pick_matrix",
    # Parametrization
    "InterpolantFamily",
    "delta",
    "theta",
    "interpolant",
    "attainment",
    "recover_gamma",
    # Blaschke products
    "BlaschkeFactorization",
    "evaluate",
    "expand",
    "factorize",
    "is_blaschke_certificate",
    "unimodularity_check",
    "winding_degree",
    # Lower degree
    "exists_degree_n_minus_2",
    "reducing_gamma",
    "min_degree_lower_bound",
    "min_degree_candidate",
    # Closed forms
    "three_point",
    "uniform_target",
    "clark_form",
    "fixed_point_family",
    "cowen_pommerenke_check",
    # Pipelines
    "SolveConfig",
    "SolveReport",
    "MinDegreeReport",
    "CheckReport",
    "solve",
    "reduce_degree",
    "trace",
    "mindegree",
    "random_check",
    # Configuration and errors
    "Settings",
    "BlaschkePickError",
]
