"""Exact integration of polynomials over simplices and triangulated
polytopes.

Two independent engines are provided:

* the monomial engine pulls the integrand back to the standard simplex and
  integrates term by term with the Dirichlet formula
  int x^a dx = prod(a_i!) / (d + sum(a))!;
* the linear-forms engine never leaves barycentric coordinates: each form
  is replaced by its values at the simplex vertices, the product is
  expanded in barycentric monomials, and
  int prod(lambda_i^{k_i}) = d! vol(s) prod(k_i!) / (d + sum(k))!.

The engines share no expansion code at the simplex level, so exact
agreement between them is a strong check on both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial, lcm

from .errors import DomainError
from .polyforms import FactorList, Polynomial, affine_pullback
from .polytopes import HPolytope, Simplex, triangulate

MONOMIAL = "monomial"
LINEAR_FORMS = "linear_forms"


@dataclass(frozen=True)
class IntegralResult:
    value: Fraction
    engine: str
    simplex_count: int


def monomial_over_standard_simplex(a, d: int) -> Fraction:
    """int over {x >= 0, sum(x) <= 1} of x^a dx."""
    a = tuple(int(e) for e in a)
    if len(a) != d or any(e < 0 for e in a):
        raise DomainError(f"bad exponent tuple {a} for dimension {d}")
    num = 1
    for e in a:
        num *= factorial(e)
    return Fraction(num, factorial(d + sum(a)))


def integrate_over_simplex(p: Polynomial, s: Simplex) -> Fraction:
    """Exact integral of p over s (monomial engine, general polynomials)."""
    pulled, jacobian = affine_pullback(p, s)
    d = s.dim
    total = Fraction(0)
    for exps, coeff in pulled.terms.items():
        total += coeff * monomial_over_standard_simplex(exps, d)
    return jacobian * total


def integrate_over_polytope(p: Polynomial, h: HPolytope) -> IntegralResult:
    """Integrate a general polynomial over a bounded full-dimensional
    polytope by summing over its pulling triangulation."""
    tri = triangulate(h)
    value = sum((integrate_over_simplex(p, s) for s in tri.simplices), Fraction(0))
    return IntegralResult(value, MONOMIAL, len(tri.simplices))


def linear_forms_over_simplex(factors: FactorList, s: Simplex) -> Fraction:
    """Exact integral of prod(form^exponent) over s via vertex values.

    A single power l^M uses the closed composition sum
    d! vol(s) M!/(M+d)! sum_{|k|=M} prod l(v_i)^{k_i}; general products
    expand in barycentric coordinates with each form keeping its own
    exponent (no multinomial splitting of the product into pure powers).
    """
    d = s.dim
    factors = [(f, int(e)) for f, e in factors if e > 0]
    if any(f.nvars != d for f, _ in factors):
        raise DomainError("form/simplex dimension mismatch")
    vol = s.volume
    if not factors:
        return vol
    values = [tuple(f.evaluate(v) for v in s.vertices) for f, _ in factors]
    if len(factors) == 1:
        (_, m), vals = factors[0], values[0]
        acc = Fraction(0)
        for k in _compositions(m, d + 1):
            term = Fraction(1)
            for v, e in zip(vals, k):
                if e:
                    term *= v**e
            acc += term
        return factorial(d) * vol * Fraction(factorial(m), factorial(m + d)) * acc

    # integer-scaled barycentric expansion
    scale = 1
    int_values = []
    for vals, (_, e) in zip(values, factors):
        den = reduce(lcm, (v.denominator for v in vals), 1)
        int_values.append(tuple(int(v * den) for v in vals))
        scale *= den**e
    poly: dict[tuple[int, ...], int] = {(0,) * (d + 1): 1}
    total_deg = 0
    for vals, (_, e) in zip(int_values, factors):
        for _ in range(e):
            poly = _mul_linear(poly, vals)
        total_deg += e
    acc = 0
    for k, coeff in poly.items():
        prod = coeff
        for e in k:
            if e > 1:
                prod *= factorial(e)
        acc += prod
    return factorial(d) * vol * Fraction(acc, scale * factorial(total_deg + d))


def integrate_factors_over_polytope(
    factors: FactorList, h: HPolytope, engine: str = MONOMIAL
) -> IntegralResult:
    """Integrate a product of linear forms over a triangulated polytope.

    This is the production path of the multiplicity pipeline: the factored
    representation lets each engine expand per simplex without ever
    forming the globally expanded integrand more than once.
    """
    if engine not in (MONOMIAL, LINEAR_FORMS):
        raise DomainError(f"unknown integration engine {engine!r}")
    tri = triangulate(h)
    if engine == LINEAR_FORMS:
        value = sum(
            (linear_forms_over_simplex(factors, s) for s in tri.simplices),
            Fraction(0),
        )
    else:
        value = sum(
            (_factors_over_simplex_dirichlet(factors, s) for s in tri.simplices),
            Fraction(0),
        )
    return IntegralResult(value, engine, len(tri.simplices))


# ---------------------------------------------------------------------------


def _factors_over_simplex_dirichlet(factors: FactorList, s: Simplex) -> Fraction:
    """Monomial engine specialized to factored integrands: pull each linear
    form back to the standard simplex, expand the product in the simplex
    coordinates with integer arithmetic, then apply the Dirichlet formula."""
    d = s.dim
    factors = [(f, int(e)) for f, e in factors if e > 0]
    v0 = s.vertices[0]
    columns = [tuple(v[i] - v0[i] for i in range(d)) for v in s.vertices[1:]]
    jacobian = abs(s.edge_determinant())
    scale = 1
    pulled = []
    total_deg = 0
    for form, e in factors:
        const = form.constant + sum(c * x for c, x in zip(form.coefficients, v0))
        coeffs = [
            sum(form.coefficients[i] * columns[j][i] for i in range(d))
            for j in range(d)
        ]
        den = reduce(lcm, (c.denominator for c in [const] + coeffs), 1)
        pulled.append((tuple(int(c * den) for c in [const] + coeffs), e))
        scale *= den**e
        total_deg += e
    poly: dict[tuple[int, ...], int] = {(0,) * d: 1}
    for affine, e in pulled:
        for _ in range(e):
            poly = _mul_affine(poly, affine)
    # sum coeff * prod(a_i!) / (d + deg)! over a common denominator
    top = d + total_deg
    top_fact = factorial(top)
    acc = 0
    for exps, coeff in poly.items():
        deg = sum(exps)
        term = coeff
        for e in exps:
            if e > 1:
                term *= factorial(e)
        # rising product (d+deg+1) ... (d+total_deg)
        for k in range(d + deg + 1, top + 1):
            term *= k
        acc += term
    return jacobian * Fraction(acc, scale * top_fact)


def _mul_affine(poly: dict, affine: tuple[int, ...]) -> dict:
    """Multiply an integer-coefficient polynomial by const + sum(c_j x_j),
    where affine = (const, c_1, ..., c_d)."""
    out: dict[tuple[int, ...], int] = {}
    const = affine[0]
    for exps, coeff in poly.items():
        if const:
            key = exps
            out[key] = out.get(key, 0) + coeff * const
        for j, c in enumerate(affine[1:]):
            if c:
                key = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
                out[key] = out.get(key, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def _mul_linear(poly: dict, coeffs: tuple[int, ...]) -> dict:
    """Multiply a homogeneous integer polynomial in barycentric variables
    by sum(c_i lambda_i)."""
    out: dict[tuple[int, ...], int] = {}
    for exps, coeff in poly.items():
        for i, c in enumerate(coeffs):
            if c:
                key = exps[:i] + (exps[i] + 1,) + exps[i + 1 :]
                out[key] = out.get(key, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def _compositions(total: int, parts: int):
    """All tuples of nonnegative ints of given length summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
