"""Brute-force layer counting by shape enumeration, and Riemann-style
convergence reports witnessing that the normalized counts approach the
exact integral values.

Shapes are enumerated through their row-count vectors (r_1, ..., r_m*),
which is polynomial-size state: for the j-layer the box total is pinned to
a window of width t, so the innermost count r_1 ranges over at most t
values per choice of the higher rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, ScaleError
from .multiplicity import epsilon_multiplicity, j_multiplicity
from .problem import ProblemSpec
from .tableaux import EPS_LAYER, J_LAYER, RowCounts, standard_monomial_count

ORACLE_MAX_WEIGHT = 500  # cap on t*(s+1)
ORACLE_MAX_MSTAR = 5


@dataclass(frozen=True)
class ConvergenceSample:
    s: int
    count: int
    estimate: Fraction
    ratio_to_exact: Fraction | None


@dataclass(frozen=True)
class ConvergenceReport:
    spec: ProblemSpec
    quantity: str  # "j" or "eps"
    samples: tuple[ConvergenceSample, ...]


def layer_count(spec: ProblemSpec, s: int, layer: str) -> int:
    """Number of standard monomials in the requested filtration layer at
    power s+1: shapes passing the diagram criterion, weighted by the
    standard-monomial count of the kind."""
    if s < 0:
        raise DomainError(f"need s >= 0, got {s}")
    if layer not in (J_LAYER, EPS_LAYER):
        raise DomainError(f"unknown layer {layer!r}")
    if not spec.valid_range:
        raise DomainError(f"oracle requires a valid spec, got {spec.describe()}")
    t = spec.t
    m = spec.mstar
    cap = t * (s + 1)
    if cap > ORACLE_MAX_WEIGHT or m > ORACLE_MAX_MSTAR:
        raise ScaleError(
            f"layer enumeration refused: t(s+1)={cap} (cap {ORACLE_MAX_WEIGHT}), "
            f"m*={m} (cap {ORACLE_MAX_MSTAR})"
        )
    kind = spec.kind
    slack = (t - 1) * (s + 1)
    lower = t * s if layer == J_LAYER else 0
    total = 0
    # enumerate (r_2, ..., r_m); r_1 then ranges over an interval
    for high in _high_rows(m, cap):
        weight = sum(i * x for i, x in enumerate(high, start=2))
        nrows = sum(high)
        # condition (3) does not involve r_1: each extra box of size 1
        # raises both the row count and the box total by one
        if nrows > weight - slack:
            continue
        r1_lo = max(0, lower - weight)
        r1_hi = cap - 1 - weight
        for r1 in range(r1_lo, r1_hi + 1):
            total += standard_monomial_count(kind, RowCounts((r1,) + high))
    return total


def j_estimate(spec: ProblemSpec, s: int) -> Fraction:
    """(d-1)! * layer_count(s, j_layer) / s^(d-1)."""
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    d = spec.ring_dim
    return Fraction(
        factorial(d - 1) * layer_count(spec, s, J_LAYER), s ** (d - 1)
    )


def epsilon_estimate(spec: ProblemSpec, s: int) -> Fraction:
    """d! * layer_count(s-1, eps_layer) / s^d (the saturation layer at
    power s, following the definition's s+1 indexing)."""
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    d = spec.ring_dim
    return Fraction(factorial(d) * layer_count(spec, s - 1, EPS_LAYER), s**d)


def convergence_report(
    spec: ProblemSpec,
    s_values,
    quantity: str = "j",
    exact: Fraction | None = None,
) -> ConvergenceReport:
    """Estimates at increasing s, with exact ratios when the integral
    pipeline value is available."""
    s_values = [int(s) for s in s_values]
    if any(b <= a for a, b in zip(s_values, s_values[1:])):
        raise DomainError(f"s values must be strictly increasing: {s_values}")
    if quantity not in ("j", "eps"):
        raise DomainError(f"unknown quantity {quantity!r}")
    if exact is None and spec.valid_range and s_values:
        exact = (
            j_multiplicity(spec) if quantity == "j" else epsilon_multiplicity(spec)
        )
    samples = []
    for s in s_values:
        if quantity == "j":
            count = layer_count(spec, s, J_LAYER)
            estimate = Fraction(
                factorial(spec.ring_dim - 1) * count, s ** (spec.ring_dim - 1)
            )
        else:
            count = layer_count(spec, s - 1, EPS_LAYER)
            estimate = Fraction(factorial(spec.ring_dim) * count, s**spec.ring_dim)
        ratio = estimate / exact if exact else None
        samples.append(ConvergenceSample(s, count, estimate, ratio))
    return ConvergenceReport(spec, quantity, tuple(samples))


def _high_rows(m: int, cap: int):
    """All (r_2, ..., r_m) with sum(i * r_i) < cap."""
    if m == 1:
        yield ()
        return

    def rec(index: int, budget: int):
        # index runs m, m-1, ..., 2; builds the tuple back to front
        if index == 1:
            yield ()
            return
        for r in range(budget // index + 1):
            for rest in rec(index - 1, budget - index * r):
                yield rest + (r,)

    yield from rec(m, cap - 1)
