"""Exact j-multiplicity, epsilon-multiplicity, and fiber-cone degree of
determinantal ideals, plus the scroll closed formula, the Selberg-type
closed-form identity, and the series method for submaximal minors.

All three quantities come from integrals of a product of linear forms over
an ordered region (see polyforms/polytopes): j and the fiber degree use
the (m*-1)-dimensional slice after eliminating the largest variable;
epsilon uses the full-dimensional saturation region.  The j value is
checked to be a positive integer at runtime and the package fails loudly
if the pipeline ever produces anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .errors import DomainError, ScaleError
from .exactnum import binomial
from .polyforms import integrand_factors
from .polytopes import ordered_epsilon_region, ordered_slice_region
from .problem import GENERIC, SYMMETRIC, MatrixKind, ProblemSpec
from .simplex_integrate import (
    LINEAR_FORMS,
    MONOMIAL,
    integrate_factors_over_polytope,
)

BOTH = "both"

SERIES_MAX_M = 4
SERIES_MAX_N = 7


@dataclass(frozen=True)
class MultiplicityReport:
    j: Fraction
    epsilon: Fraction
    fiber_degree: Fraction
    c: Fraction
    valid_range: bool
    notes: str


def leading_constant(spec: ProblemSpec) -> Fraction:
    """The combinatorial prefactor of the integral formulas."""
    if not spec.valid_range:
        raise DomainError(f"no leading constant for {spec.describe()}")
    kind = spec.kind
    if kind.kind == GENERIC:
        m, n = kind.m, kind.n
        den = 1
        for k in range(n - m, n):
            den *= factorial(k)
        for k in range(1, m + 1):
            den *= factorial(k)
        return Fraction(factorial(m * n - 1), den)
    if kind.kind == SYMMETRIC:
        n = kind.n
        den = 1
        for k in range(1, n + 1):
            den *= factorial(k)
        return Fraction(2 ** (n * (n - 1) // 2) * factorial(n * (n + 1) // 2 - 1), den)
    n = kind.n
    den = factorial(n // 2)
    for k in range(1, n):
        den *= factorial(k)
    return Fraction(factorial(n * (n - 1) // 2 - 1), den)


def j_multiplicity(spec: ProblemSpec, engine: str = MONOMIAL) -> Fraction:
    """j of the ideal of t-minors (t-pfaffians); zero when the analytic
    spread is not maximal (t at or above the kind's bound)."""
    if not spec.valid_range:
        return Fraction(0)
    value = leading_constant(spec) * spec.t * _slice_integral(spec, engine)
    if value.denominator != 1 or value <= 0:
        raise AssertionError(
            f"j-multiplicity pipeline produced {value} for {spec.describe()}; "
            "expected a positive integer"
        )
    return value


def epsilon_multiplicity(spec: ProblemSpec, engine: str = MONOMIAL) -> Fraction:
    """epsilon of the ideal; zero outside the valid range of t."""
    if not spec.valid_range:
        return Fraction(0)
    c = leading_constant(spec)
    region = ordered_epsilon_region(spec.mstar, spec.t)
    factors, sym = integrand_factors(spec)
    value = c * spec.ring_dim * sym * _integrate(factors, region, engine)
    if value <= 0:
        raise AssertionError(
            f"epsilon pipeline produced {value} for {spec.describe()}"
        )
    return value


def fiber_degree(spec: ProblemSpec, engine: str = MONOMIAL) -> Fraction:
    """Degree of the fiber cone (algebra of minors); equals j/t on the
    valid range.  At t equal to the bound the generic fiber cone is the
    Grassmannian coordinate ring, whose degree this package does not
    compute; the symmetric and skew-symmetric fiber cones degenerate to
    polynomial rings of degree 1."""
    if spec.t >= spec.upper:
        if spec.kind.kind == GENERIC and spec.t == spec.upper:
            raise DomainError(
                "fiber cone at t = m is the Grassmannian coordinate ring; "
                "its degree is out of scope"
            )
        if spec.t == spec.upper:
            return Fraction(1)
        raise DomainError(f"t={spec.t} exceeds the maximal minor size {spec.upper}")
    return leading_constant(spec) * _slice_integral(spec, engine)


def compute_report(spec: ProblemSpec, engine: str = MONOMIAL) -> MultiplicityReport:
    """All three quantities for one spec.  The slice integral is computed
    once; j = t * fiber_degree holds exactly by construction on the valid
    range, and the ordered-region/epsilon-region computations stay
    independent."""
    if not spec.valid_range:
        note = (
            f"t={spec.t} is outside 0 < t < {spec.upper}: analytic spread "
            "is not maximal, j and epsilon vanish"
        )
        return MultiplicityReport(
            j=Fraction(0),
            epsilon=Fraction(0),
            fiber_degree=Fraction(0),
            c=Fraction(0),
            valid_range=False,
            notes=note,
        )
    c = leading_constant(spec)
    fiber = leading_constant(spec) * _slice_integral(spec, engine)
    j = spec.t * fiber
    if j.denominator != 1 or j <= 0:
        raise AssertionError(f"non-integer j-multiplicity {j} for {spec.describe()}")
    eps = epsilon_multiplicity(spec, engine)
    return MultiplicityReport(
        j=j, epsilon=eps, fiber_degree=fiber, c=c, valid_range=True, notes=""
    )


def scroll_j(parts) -> int:
    """Closed formula for the j-multiplicity of the 2-minor ideal defining
    the rational normal scroll with block sizes a_1 <= ... <= a_d."""
    parts = [int(a) for a in parts]
    if not parts or any(a < 1 for a in parts):
        raise DomainError(f"scroll blocks must be positive integers: {parts}")
    d = len(parts)
    c = sum(parts)
    if c < d + 3:
        return 0
    if c == d + 3:
        return 2 * (binomial(2 * c - 4, c - 2) - binomial(2 * c - 4, c - 1))
    total = sum(binomial(c + d - 1, c - j) for j in range(2, c - d))
    return 2 * (total - binomial(c + d - 1, c - 1) * (c - d - 2))


def selberg_identity(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Selberg-type closed form: the ordered-region
    integral of (z_1...z_m)^{n-m} prod (z_j - z_i)^2 over {z >= 0,
    sum(z) <= 1}, symmetrized by m!, against the factorial quotient."""
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    region = _ordered_corner_region(m)
    factors = _selberg_factors(m, n)
    lhs = factorial(m) * integrate_factors_over_polytope(factors, region).value
    den = factorial(n * m)
    num = 1
    for k in range(n - m, n):
        num *= factorial(k)
    for k in range(1, m + 1):
        num *= factorial(k)
    return lhs, Fraction(num, den)


def j_series_submaximal(m: int, n: int) -> Fraction:
    """j-multiplicity of the (m-1)-minors of a generic m x n matrix via
    the power-series method: a signed sum of multinomial terms over pairs
    of m x m matrices (a, b) with zero diagonals, row sums of a equal to
    n - m, and b_pq + b_qp = 2 off the diagonal.  A validation path, not
    the default pipeline."""
    if not 2 <= m <= n:
        raise DomainError(f"need 2 <= m <= n, got m={m}, n={n}")
    if m > SERIES_MAX_M or n > SERIES_MAX_N:
        raise ScaleError(f"series enumeration refused for m={m}, n={n}")
    pairs = [(p, q) for p in range(m) for q in range(p + 1, m)]
    row_fills = list(_compositions(n - m, m - 1))
    total = Fraction(0)
    fact = [factorial(k) for k in range(2 * (m - 1) + (n - m) * m + 1)]
    for b_choice in product([(0, 2), (1, 1), (2, 0)], repeat=len(pairs)):
        b = [[0] * m for _ in range(m)]
        for (p, q), (bpq, bqp) in zip(pairs, b_choice):
            b[p][q] = bpq
            b[q][p] = bqp
        for a_rows in product(row_fills, repeat=m):
            a = [[0] * m for _ in range(m)]
            for i, fill in enumerate(a_rows):
                k = 0
                for j in range(m):
                    if j != i:
                        a[i][j] = fill[k]
                        k += 1
            term = Fraction(1)
            for j in range(m):
                colsum = sum(a[i][j] + b[i][j] for i in range(m))
                sign = -1 if sum(b[i][j] for i in range(j)) % 2 else 1
                num = sign * fact[colsum]
                den = 1
                for i in range(m):
                    den *= fact[a[i][j]] * fact[b[i][j]]
                term *= Fraction(num, den)
            total += term
    den = 1
    for i in range(1, m):
        den *= (n - i) ** i
    for k in range(1, m + 1):
        den *= factorial(k)
    prefactor = Fraction((m - 1) * 2 ** (m * (m - 1) // 2), den)
    return prefactor * total


# ---------------------------------------------------------------------------


def _slice_integral(spec: ProblemSpec, engine: str) -> Fraction:
    """m*! times the ordered-slice integral of the integrand, with the
    largest coordinate eliminated."""
    factors, sym = integrand_factors(spec)
    eliminated = [(f.eliminate_last(spec.t), e) for f, e in factors]
    region = ordered_slice_region(spec.mstar, spec.t)
    return sym * _integrate(eliminated, region, engine)


def _integrate(factors, region, engine: str) -> Fraction:
    if engine == BOTH:
        a = integrate_factors_over_polytope(factors, region, MONOMIAL)
        b = integrate_factors_over_polytope(factors, region, LINEAR_FORMS)
        if a.value != b.value:
            raise AssertionError(
                f"integration engines disagree: {a.value} != {b.value}"
            )
        return a.value
    return integrate_factors_over_polytope(factors, region, engine).value


def _ordered_corner_region(m: int):
    from .polytopes import HPolytope

    rows = []
    normal = [Fraction(0)] * m
    normal[0] = Fraction(-1)
    rows.append((tuple(normal), Fraction(0)))
    for i in range(m - 1):
        normal = [Fraction(0)] * m
        normal[i] = Fraction(1)
        normal[i + 1] = Fraction(-1)
        rows.append((tuple(normal), Fraction(0)))
    rows.append((tuple(Fraction(1) for _ in range(m)), Fraction(1)))
    return HPolytope.from_rows(rows, m)


def _selberg_factors(m: int, n: int):
    from .polyforms import LinearForm

    factors = []
    if n > m:
        for i in range(m):
            factors.append((LinearForm.variable(m, i), n - m))
    for i in range(m):
        for j in range(i + 1, m):
            factors.append((LinearForm.difference(m, j, i), 2))
    return factors


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


__all__ = [
    "MatrixKind",
    "ProblemSpec",
    "MultiplicityReport",
    "leading_constant",
    "j_multiplicity",
    "epsilon_multiplicity",
    "fiber_degree",
    "compute_report",
    "scroll_j",
    "selberg_identity",
    "j_series_submaximal",
]
