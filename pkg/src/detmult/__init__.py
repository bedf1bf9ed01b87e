"""Exact multiplicities of determinantal ideals.

j-multiplicity, epsilon-multiplicity, and fiber-cone degree of the ideals
of t-minors of generic and generic-symmetric matrices and of t-pfaffians
of generic skew-symmetric matrices, computed exactly via polytope
integrals, together with brute-force combinatorial oracles and several
independent cross-checks (a closed scroll formula, a Selberg-type
identity, and a power-series method for submaximal minors).
"""

from .errors import DomainError, ScaleError
from .multiplicity import (
    BOTH,
    MultiplicityReport,
    compute_report,
    epsilon_multiplicity,
    fiber_degree,
    j_multiplicity,
    j_series_submaximal,
    leading_constant,
    scroll_j,
    selberg_identity,
)
from .oracle import (
    ConvergenceReport,
    ConvergenceSample,
    convergence_report,
    epsilon_estimate,
    j_estimate,
    layer_count,
)
from .problem import GENERIC, PFAFFIAN, SYMMETRIC, MatrixKind, ProblemSpec
from .simplex_integrate import (
    LINEAR_FORMS,
    MONOMIAL,
    IntegralResult,
    integrate_factors_over_polytope,
    integrate_over_polytope,
    integrate_over_simplex,
)
from .tableaux import (
    EPS_LAYER,
    J_LAYER,
    RowCounts,
    Shape,
    W,
    count_tableaux_bruteforce,
    in_closure_power,
    in_diagram_layer,
    in_symbolic_power,
    standard_monomial_count,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ScaleError",
    "MatrixKind",
    "ProblemSpec",
    "GENERIC",
    "SYMMETRIC",
    "PFAFFIAN",
    "MultiplicityReport",
    "compute_report",
    "j_multiplicity",
    "epsilon_multiplicity",
    "fiber_degree",
    "leading_constant",
    "scroll_j",
    "selberg_identity",
    "j_series_submaximal",
    "BOTH",
    "MONOMIAL",
    "LINEAR_FORMS",
    "IntegralResult",
    "integrate_over_simplex",
    "integrate_over_polytope",
    "integrate_factors_over_polytope",
    "Shape",
    "RowCounts",
    "W",
    "count_tableaux_bruteforce",
    "standard_monomial_count",
    "in_symbolic_power",
    "in_closure_power",
    "in_diagram_layer",
    "J_LAYER",
    "EPS_LAYER",
    "layer_count",
    "j_estimate",
    "epsilon_estimate",
    "convergence_report",
    "ConvergenceReport",
    "ConvergenceSample",
]
