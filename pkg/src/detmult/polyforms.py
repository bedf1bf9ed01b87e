"""Sparse multivariate polynomials over exact rationals, linear forms, and
construction of the multiplicity integrands.

A monomial is an exponent tuple (one nonnegative integer per variable); a
polynomial maps exponent tuples to nonzero Fraction coefficients.  The
integrands here are products of linear forms restricted to the ordered
cone z_1 <= ... <= z_m, which removes the absolute values and lets one
code path serve the generic, symmetric, and skew-symmetric cases alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .exactnum import format_rational
from .linalg import det
from .polytopes import Simplex
from .problem import GENERIC, PFAFFIAN, SYMMETRIC, ProblemSpec

Exponent = tuple[int, ...]


class Polynomial:
    """Sparse polynomial with Fraction coefficients; zero terms are never
    stored."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent tuple {exps} for {nvars} variables")
            clean[exps] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Polynomial(self.nvars, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def evaluate(self, point) -> Fraction:
        point = [Fraction(x) for x in point]
        if len(point) != self.nvars:
            raise DomainError("evaluation point has wrong length")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value *= x**e
            total += value
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            factors = [format_rational(coeff)]
            factors += [
                f"z{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self})"

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other)!r}")
        if other.nvars != self.nvars:
            raise DomainError("polynomials have different variable counts")
        return other


@dataclass(frozen=True)
class LinearForm:
    """constant + sum(coefficients[i] * z_i)."""

    constant: Fraction
    coefficients: tuple[Fraction, ...]

    @classmethod
    def make(cls, constant, coefficients) -> "LinearForm":
        return cls(Fraction(constant), tuple(Fraction(c) for c in coefficients))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LinearForm":
        return cls.make(0, [1 if i == index else 0 for i in range(nvars)])

    @classmethod
    def difference(cls, nvars: int, j: int, i: int) -> "LinearForm":
        """z_j - z_i."""
        coeffs = [Fraction(0)] * nvars
        coeffs[j] += 1
        coeffs[i] -= 1
        return cls.make(0, coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def evaluate(self, point) -> Fraction:
        return self.constant + sum(
            c * Fraction(x) for c, x in zip(self.coefficients, point)
        )

    def eliminate_last(self, t) -> "LinearForm":
        """Substitute z_last := t - (z_1 + ... + z_{last-1})."""
        last = self.coefficients[-1]
        return LinearForm.make(
            self.constant + last * Fraction(t),
            [c - last for c in self.coefficients[:-1]],
        )

    def to_polynomial(self) -> Polynomial:
        n = self.nvars
        terms = {(0,) * n: self.constant}
        for i, c in enumerate(self.coefficients):
            terms[tuple(1 if k == i else 0 for k in range(n))] = c
        return Polynomial(n, terms)


FactorList = list[tuple[LinearForm, int]]


def product_of_linear_forms(factors: FactorList) -> Polynomial:
    """Fully expand prod(form_i ** exponent_i)."""
    if not factors:
        raise DomainError("empty factor list (variable count is ambiguous)")
    nvars = factors[0][0].nvars
    result = Polynomial.constant(nvars, 1)
    for form, exponent in factors:
        if form.nvars != nvars:
            raise DomainError("linear forms have mismatched variable counts")
        if exponent < 0:
            raise DomainError("negative exponent in product of linear forms")
        result = result * (form.to_polynomial() ** exponent)
    return result


def integrand_factors(spec: ProblemSpec) -> tuple[FactorList, int]:
    """The multiplicity integrand on the ordered cone z_1 <= ... <= z_m*,
    as linear-form factors, plus the m*! factor undoing the restriction.

    generic m x n:   (z_1...z_m)^(n-m) * prod_{i<j} (z_j - z_i)^2
    symmetric n x n: prod_{i<j} (z_j - z_i)
    skew n x n:      (z_1...z_m*)^(2 delta) * prod_{i<j} (z_j - z_i)^4
    """
    if not spec.valid_range:
        raise DomainError(
            f"no integrand for {spec.describe()}: requires 0 < t < {spec.upper} "
            "(analytic spread is not maximal otherwise)"
        )
    m = spec.mstar
    kind = spec.kind
    factors: FactorList = []
    if kind.kind == GENERIC:
        coord_exp, diff_exp = kind.n - kind.m, 2
    elif kind.kind == SYMMETRIC:
        coord_exp, diff_exp = 0, 1
    elif kind.kind == PFAFFIAN:
        coord_exp, diff_exp = 2 * kind.delta, 4
    else:  # pragma: no cover - MatrixKind validates
        raise DomainError(f"unknown kind {kind.kind!r}")
    if coord_exp:
        for i in range(m):
            factors.append((LinearForm.variable(m, i), coord_exp))
    for i in range(m):
        for j in range(i + 1, m):
            factors.append((LinearForm.difference(m, j, i), diff_exp))
    return factors, factorial(m)


def build_integrand(spec: ProblemSpec) -> tuple[Polynomial, int]:
    """Expanded ordered-cone integrand and its m*! symmetrization factor."""
    factors, sym = integrand_factors(spec)
    return product_of_linear_forms(factors), sym


def eliminate_slice_variable(p: Polynomial, t) -> Polynomial:
    """Substitute z_m := t - (z_1 + ... + z_{m-1}) and expand, realizing
    integration over the slice sum(z) = t as Lebesgue integration over the
    coordinate projection."""
    if p.nvars < 1:
        raise DomainError("cannot eliminate from a polynomial in 0 variables")
    n = p.nvars - 1
    sub = Polynomial.constant(n, t) - sum(
        (Polynomial.variable(n, i) for i in range(n)), Polynomial.zero(n)
    )
    powers = {0: Polynomial.constant(n, 1)}
    max_e = max((e[-1] for e in p.terms), default=0)
    for k in range(1, max_e + 1):
        powers[k] = powers[k - 1] * sub
    result = Polynomial.zero(n)
    for exps, coeff in p.terms.items():
        base = Polynomial(n, {exps[:-1]: coeff})
        result = result + base * powers[exps[-1]]
    return result


def affine_pullback(p: Polynomial, s: Simplex) -> tuple[Polynomial, Fraction]:
    """Compose p with the affine map sending the standard simplex onto s
    (origin to vertex 0, e_i to vertex i); returns the composed polynomial
    and the absolute determinant of the linear part."""
    d = s.dim
    if p.nvars != d:
        raise DomainError("polynomial/simplex dimension mismatch")
    v0 = s.vertices[0]
    columns = [tuple(v[i] - v0[i] for i in range(d)) for v in s.vertices[1:]]
    jacobian = abs(det([[columns[j][i] for j in range(d)] for i in range(d)]))
    if jacobian == 0:
        raise DomainError("degenerate simplex (zero jacobian)")
    # coordinate i of the map, as a polynomial in the new variables
    coord = [
        LinearForm.make(v0[i], [columns[j][i] for j in range(d)]).to_polynomial()
        for i in range(d)
    ]
    power_cache: list[dict[int, Polynomial]] = [
        {0: Polynomial.constant(d, 1)} for _ in range(d)
    ]

    def coord_power(i: int, e: int) -> Polynomial:
        cache = power_cache[i]
        while e not in cache:
            k = max(cache)
            cache[k + 1] = cache[k] * coord[i]
        return cache[e]

    result = Polynomial.zero(d)
    for exps, coeff in p.terms.items():
        term = Polynomial.constant(d, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * coord_power(i, e)
        result = result + term
    return result, jacobian
