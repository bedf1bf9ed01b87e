"""Rational H-polytopes: the ordered integration regions, exact vertex
enumeration, deterministic pulling triangulations, and exact volume.

All coordinates are Fractions.  The polytopes arising in the multiplicity
pipeline are small (dimension <= 7, around 2m+2 facets), so vertex
enumeration by exhaustive row subsets is both simple and fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import DomainError
from .exactnum import format_rational
from .linalg import affine_rank, det, solve

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class HPolytope:
    """Intersection of halfspaces <normal, x> <= offset."""

    rows: tuple[tuple[Point, Fraction], ...]
    dim: int

    @classmethod
    def from_rows(cls, rows, dim: int) -> "HPolytope":
        frozen = []
        for normal, offset in rows:
            normal = tuple(Fraction(x) for x in normal)
            if len(normal) != dim:
                raise DomainError("inequality normal has wrong length")
            frozen.append((normal, Fraction(offset)))
        return cls(tuple(frozen), dim)

    def contains(self, point) -> bool:
        point = tuple(Fraction(x) for x in point)
        return all(_dot(n, point) <= b for n, b in self.rows)

    def to_jsonable(self) -> dict:
        return {
            "dim": self.dim,
            "inequalities": [
                [format_rational(x) for x in normal] + [format_rational(offset)]
                for normal, offset in self.rows
            ],
        }


@dataclass(frozen=True)
class Simplex:
    """dim+1 affinely independent rational points in dim-space."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        d = self.dim
        if any(len(v) != d for v in self.vertices):
            raise DomainError("simplex vertices have inconsistent dimension")
        if self.edge_determinant() == 0:
            raise DomainError("degenerate simplex (affinely dependent vertices)")

    @classmethod
    def from_points(cls, points) -> "Simplex":
        return cls(tuple(tuple(Fraction(x) for x in p) for p in points))

    @classmethod
    def standard(cls, d: int) -> "Simplex":
        verts = [tuple(Fraction(0) for _ in range(d))]
        for i in range(d):
            verts.append(tuple(Fraction(1 if j == i else 0) for j in range(d)))
        return cls(tuple(verts))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def edge_determinant(self) -> Fraction:
        v0 = self.vertices[0]
        rows = [[v[i] - v0[i] for i in range(self.dim)] for v in self.vertices[1:]]
        return det(rows)

    @property
    def volume(self) -> Fraction:
        return abs(self.edge_determinant()) / factorial(self.dim)

    def to_jsonable(self) -> list:
        return [[format_rational(x) for x in v] for v in self.vertices]


@dataclass(frozen=True)
class Triangulation:
    simplices: tuple[Simplex, ...]
    source: HPolytope

    @property
    def total_volume(self) -> Fraction:
        return sum((s.volume for s in self.simplices), Fraction(0))

    def to_jsonable(self) -> dict:
        return {
            "polytope": self.source.to_jsonable(),
            "simplices": [s.to_jsonable() for s in self.simplices],
        }


def ordered_slice_region(m: int, t: int) -> HPolytope:
    """The ordered hypersimplex slice, with the largest coordinate
    eliminated: {0 <= z_1 <= ... <= z_{m-1} <= z_m <= 1} where
    z_m = t - (z_1 + ... + z_{m-1}).  Lives in m-1 variables.
    """
    if not 0 < t < m:
        raise DomainError(f"slice region needs 0 < t < m, got t={t}, m={m}")
    d = m - 1
    rows = []
    rows.append((_unit(d, 0, -1), Fraction(0)))  # 0 <= z_1
    for i in range(d - 1):  # z_i <= z_{i+1}
        normal = [Fraction(0)] * d
        normal[i] = Fraction(1)
        normal[i + 1] = Fraction(-1)
        rows.append((tuple(normal), Fraction(0)))
    # z_{m-1} <= z_m = t - sum  ->  sum + z_{m-1} <= t
    normal = [Fraction(1)] * d
    normal[d - 1] = Fraction(2)
    rows.append((tuple(normal), Fraction(t)))
    # z_m <= 1  ->  t - sum <= 1  ->  -sum <= 1 - t
    rows.append((tuple(Fraction(-1) for _ in range(d)), Fraction(1 - t)))
    return HPolytope.from_rows(rows, d)


def ordered_epsilon_region(m: int, t: int) -> HPolytope:
    """The ordered saturation region {0 <= z_1 <= ... <= z_m <= 1,
    z_m + t - 1 <= sum(z) <= t} in m variables (z_m plays the role of the
    maximum)."""
    if not 0 < t < m:
        raise DomainError(f"epsilon region needs 0 < t < m, got t={t}, m={m}")
    rows = []
    rows.append((_unit(m, 0, -1), Fraction(0)))  # 0 <= z_1
    for i in range(m - 1):  # z_i <= z_{i+1}
        normal = [Fraction(0)] * m
        normal[i] = Fraction(1)
        normal[i + 1] = Fraction(-1)
        rows.append((tuple(normal), Fraction(0)))
    rows.append((_unit(m, m - 1, 1), Fraction(1)))  # z_m <= 1
    # z_m + t - 1 <= sum(z)  ->  -z_1 - ... - z_{m-1} <= 1 - t
    normal = [Fraction(-1)] * m
    normal[m - 1] = Fraction(0)
    rows.append((tuple(normal), Fraction(1 - t)))
    rows.append((tuple(Fraction(1) for _ in range(m)), Fraction(t)))  # sum <= t
    return HPolytope.from_rows(rows, m)


def enumerate_vertices(h: HPolytope) -> list[Point]:
    """Exact vertex set, deduplicated and lexicographically sorted.

    Raises DomainError for unbounded input; an empty polytope gives [].
    """
    verts = _raw_vertices(h.rows, h.dim)
    if _recession_cone_nontrivial(h.rows, h.dim):
        if verts or _feasible(h.rows, h.dim):
            raise DomainError("polytope is unbounded")
        return []
    return verts


def triangulate(h: HPolytope, pull: str = "lexmin") -> Triangulation:
    """Deterministic pulling triangulation of a bounded full-dimensional
    polytope.  `pull` selects the pulled vertex (lexmin or lexmax) and
    exists so tests can verify that the total volume is seed-independent.
    """
    verts = enumerate_vertices(h)
    if not verts:
        raise DomainError("cannot triangulate an empty polytope")
    if affine_rank(verts) != h.dim:
        raise DomainError(
            "polytope is not full-dimensional; eliminate variables upstream"
        )
    pick = min if pull == "lexmin" else max
    cells = _pull_triangulate(verts, h.rows, h.dim, pick)
    return Triangulation(tuple(Simplex.from_points(c) for c in cells), h)


def volume(h: HPolytope) -> Fraction:
    """Exact Lebesgue volume via triangulation."""
    return triangulate(h).total_volume


# ---------------------------------------------------------------------------


def _unit(d, i, sign):
    normal = [Fraction(0)] * d
    normal[i] = Fraction(sign)
    return tuple(normal)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _raw_vertices(rows, dim) -> list[Point]:
    seen = set()
    for subset in combinations(range(len(rows)), dim):
        matrix = [rows[i][0] for i in subset]
        rhs = [rows[i][1] for i in subset]
        point = solve(matrix, rhs)
        if point is None:
            continue
        point = tuple(point)
        if point in seen:
            continue
        if all(_dot(n, point) <= b for n, b in rows):
            seen.add(point)
    return sorted(seen)


def _recession_cone_nontrivial(rows, dim) -> bool:
    """True iff {y : Ay <= 0} contains a nonzero vector."""
    cone_rows = [(normal, Fraction(0)) for normal, _ in rows]
    box = list(cone_rows)
    for i in range(dim):
        box.append((_unit(dim, i, 1), Fraction(1)))
        box.append((_unit(dim, i, -1), Fraction(1)))
    origin = tuple(Fraction(0) for _ in range(dim))
    return any(v != origin for v in _raw_vertices(box, dim))


def _feasible(rows, dim) -> bool:
    """Exact Fourier-Motzkin feasibility test."""
    system = [list(normal) + [offset] for normal, offset in rows]
    for var in range(dim):
        lower, upper, rest = [], [], []
        for row in system:
            coeff = row[var]
            if coeff > 0:
                upper.append([x / coeff for x in row])
            elif coeff < 0:
                lower.append([x / -coeff for x in row])
            else:
                rest.append(row)
        system = rest
        for lo in lower:
            for up in upper:
                system.append([a + b for a, b in zip(lo, up)])
    return all(row[-1] >= 0 for row in system)


def _pull_triangulate(face_verts, rows, k, pick) -> list[list[Point]]:
    """Recursive pulling triangulation of a k-dimensional face given by its
    vertex set.  Facets are discovered as tight sets of the H-rows."""
    if len(face_verts) == k + 1:
        return [list(face_verts)]
    apex = pick(face_verts)
    cells = []
    seen = set()
    for normal, offset in rows:
        tight = [v for v in face_verts if _dot(normal, v) == offset]
        if apex in tight or len(tight) < k:
            continue
        key = frozenset(tight)
        if key in seen:
            continue
        seen.add(key)
        if affine_rank(tight) != k - 1:
            continue
        for cell in _pull_triangulate(sorted(tight), rows, k - 1, pick):
            cells.append([apex] + cell)
    return cells
