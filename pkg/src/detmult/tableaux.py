"""Young-diagram shapes, the closed tableau-counting polynomial, brute-force
enumeration oracles, and the shape-level membership predicates for symbolic
powers, integral-closure powers, and the j/epsilon filtration layers.

Shapes are weakly decreasing part vectors (a_1 >= ... >= a_p >= 1); the
equivalent row-count encoding (r_1, ..., r_m) records how many parts equal
each value, with partial sums B_i = r_m + ... + r_{m-i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, ScaleError
from .problem import GENERIC, PFAFFIAN, SYMMETRIC, MatrixKind

J_LAYER = "j_layer"
EPS_LAYER = "eps_layer"

BRUTE_FORCE_MAX_BOXES = 16
BRUTE_FORCE_MAX_ALPHABET = 8


@dataclass(frozen=True)
class Shape:
    """Weakly decreasing positive parts; the empty shape is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise DomainError(f"shape parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError(f"shape parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Shape":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def boxes(self) -> int:
        return sum(self.parts)

    @property
    def nrows(self) -> int:
        return len(self.parts)

    def row_counts(self, m: int) -> "RowCounts":
        if self.parts and self.parts[0] > m:
            raise DomainError(f"shape {self.parts} has a part exceeding {m}")
        r = [0] * m
        for p in self.parts:
            r[p - 1] += 1
        return RowCounts(tuple(r))


@dataclass(frozen=True)
class RowCounts:
    """r[i-1] = number of parts equal to i, for i = 1..m."""

    r: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.r):
            raise DomainError(f"row counts must be nonnegative: {self.r}")

    @property
    def m(self) -> int:
        return len(self.r)

    @property
    def boxes(self) -> int:
        return sum(i * x for i, x in enumerate(self.r, start=1))

    @property
    def nrows(self) -> int:
        return sum(self.r)

    def partial_sums(self) -> tuple[int, ...]:
        """B_i = r_m + ... + r_{m-i+1}, weakly increasing, B_m = nrows."""
        out = []
        acc = 0
        for x in reversed(self.r):
            acc += x
            out.append(acc)
        return tuple(out)

    def shape(self) -> Shape:
        parts = []
        for i in range(self.m, 0, -1):
            parts.extend([i] * self.r[i - 1])
        return Shape(tuple(parts))


def W(n: int, rc: RowCounts) -> int:
    """Number of standard tableaux on {1,...,n} (rows strictly increasing,
    columns nondecreasing) of the shape encoded by rc, via the closed
    product formula in the partial sums B_i."""
    m = rc.m
    if n < m:
        raise DomainError(f"alphabet size {n} smaller than part bound {m}")
    b = rc.partial_sums()
    num = 1
    for i in range(1, m + 1):
        for offset in range(n - m):
            num *= b[i - 1] + i + offset
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            num *= b[j - 1] - b[i - 1] + j - i
    den = 1
    for k in range(n - m, n):
        den *= factorial(k)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise AssertionError(f"tableau count is not integral: {value}")
    return int(value)


def count_tableaux_bruteforce(shape: Shape, n: int) -> int:
    """Exhaustively count standard fillings of the shape with entries in
    {1,...,n}; an oracle, capped at desk scale."""
    if shape.boxes > BRUTE_FORCE_MAX_BOXES or n > BRUTE_FORCE_MAX_ALPHABET:
        raise ScaleError(
            f"brute-force tableau count refused: {shape.boxes} boxes, n={n}"
        )
    parts = shape.parts
    if not parts:
        return 1
    rows: list[list[int]] = [[0] * p for p in parts]

    def fill(i: int, j: int) -> int:
        if i == len(parts):
            return 1
        ni, nj = (i, j + 1) if j + 1 < parts[i] else (i + 1, 0)
        lo = rows[i][j - 1] + 1 if j > 0 else 1  # strict along the row
        if i > 0 and j < parts[i - 1]:
            lo = max(lo, rows[i - 1][j])  # nondecreasing down the column
        total = 0
        for v in range(lo, n + 1):
            rows[i][j] = v
            total += fill(ni, nj)
        return total

    return fill(0, 0)


def standard_monomial_count(kind: MatrixKind, rc: RowCounts) -> int:
    """Number of standard monomials of the given (reduced) shape:
    a product of two tableau counts in the generic case, a doubled-shape
    count in the symmetric case, and an interleaved even-shape count in
    the skew-symmetric case."""
    bound = kind.part_bound
    if rc.m > bound:
        raise DomainError(
            f"row counts allow parts up to {rc.m}, kind bound is {bound}"
        )
    r = rc.r + (0,) * (bound - rc.m)
    if kind.kind == GENERIC:
        padded = RowCounts(r)
        return W(kind.m, padded) * W(kind.n, padded)
    if kind.kind == SYMMETRIC:
        return W(kind.n, RowCounts(tuple(2 * x for x in r)))
    # skew-symmetric: rows of length 2i, giving interleaved counts
    interleaved: list[int] = []
    for x in r:
        interleaved.extend([0, x])
    if kind.n % 2 == 1:
        interleaved.append(0)
    return W(kind.n, RowCounts(tuple(interleaved)))


def in_symbolic_power(shape: Shape, t: int, r: int, kind: MatrixKind) -> bool:
    """Shape criterion for membership in the r-th symbolic power of the
    ideal of t-minors (t-pfaffians): all parts within the kind's bound and
    sum(max(0, a_i - t + 1)) >= r."""
    if t < 1 or r < 0:
        raise DomainError(f"need t >= 1 and r >= 0, got t={t}, r={r}")
    bound = kind.part_bound
    if any(a > bound for a in shape.parts):
        return False
    return sum(max(0, a - t + 1) for a in shape.parts) >= r


def in_closure_power(shape: Shape, t: int, s_pow: int, kind: MatrixKind) -> bool:
    """Membership in the integral closure of the s-th ordinary power, via
    the intersection of symbolic powers."""
    if t < 1 or s_pow < 1:
        raise DomainError(f"need t >= 1 and s >= 1, got t={t}, s={s_pow}")
    if kind.kind == PFAFFIAN:
        half = kind.n // 2
        j0 = max(1, half - s_pow * (half - t))
    else:
        j0 = 1
    return all(
        in_symbolic_power(shape, j, (t - j + 1) * s_pow, kind)
        for j in range(j0, t + 1)
    )


def in_diagram_layer(
    shape: Shape, t: int, s_pow: int, layer: str, kind: MatrixKind
) -> bool:
    """Shape criterion for the filtration layers at power s_pow + 1.

    eps_layer: parts bounded by m*, sum(a) < t(s_pow+1), and
               nrows <= sum(a) - (t-1)(s_pow+1).
    j_layer:   additionally t*s_pow <= sum(a).

    The conditions apply to the reduced parts for all three kinds (the
    doubling/interleaving only enters the counting).  The empty shape is
    a valid layer element exactly when the inequalities admit it (only at
    t = 1: the unit monomial survives in R/I^{s+1}).
    """
    if t < 1 or s_pow < 0:
        raise DomainError(f"need t >= 1 and s >= 0, got t={t}, s={s_pow}")
    if layer not in (J_LAYER, EPS_LAYER):
        raise DomainError(f"unknown layer {layer!r}")
    bound = kind.mstar
    if any(a > bound for a in shape.parts):
        return False
    total = shape.boxes
    if total >= t * (s_pow + 1):
        return False
    if layer == J_LAYER and total < t * s_pow:
        return False
    return shape.nrows <= total - (t - 1) * (s_pow + 1)
