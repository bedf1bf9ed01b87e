"""Matrix-kind and problem descriptors shared by the whole pipeline."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

GENERIC = "generic"
SYMMETRIC = "symmetric"
PFAFFIAN = "pfaffian"


@dataclass(frozen=True)
class MatrixKind:
    """A family of matrices of indeterminates: generic m x n, symmetric
    n x n, or skew-symmetric n x n (whose ideals are generated by
    pfaffians)."""

    kind: str
    m: int | None
    n: int

    def __post_init__(self):
        if self.kind == GENERIC:
            if self.m is None or not (1 <= self.m <= self.n):
                raise DomainError(
                    f"generic kind needs 1 <= m <= n, got m={self.m}, n={self.n}"
                )
        elif self.kind in (SYMMETRIC, PFAFFIAN):
            if self.m is not None:
                raise DomainError(f"{self.kind} kind takes only n")
            if self.n < 2:
                raise DomainError(f"{self.kind} kind needs n >= 2, got n={self.n}")
        else:
            raise DomainError(f"unknown matrix kind {self.kind!r}")

    @classmethod
    def generic(cls, m: int, n: int) -> "MatrixKind":
        return cls(GENERIC, m, n)

    @classmethod
    def symmetric(cls, n: int) -> "MatrixKind":
        return cls(SYMMETRIC, None, n)

    @classmethod
    def pfaffian(cls, n: int) -> "MatrixKind":
        return cls(PFAFFIAN, None, n)

    @property
    def part_bound(self) -> int:
        """Largest admissible part of a shape (minor/pfaffian size bound)."""
        if self.kind == GENERIC:
            return self.m
        if self.kind == SYMMETRIC:
            return self.n
        return self.n // 2

    @property
    def mstar(self) -> int:
        """Number of integration variables."""
        return self.part_bound

    @property
    def ring_dim(self) -> int:
        """Dimension of the ambient polynomial ring."""
        if self.kind == GENERIC:
            return self.m * self.n
        if self.kind == SYMMETRIC:
            return self.n * (self.n + 1) // 2
        return self.n * (self.n - 1) // 2

    @property
    def delta(self) -> int:
        """Parity indicator used by the skew-symmetric integrand."""
        if self.kind == PFAFFIAN:
            return self.n % 2
        return 0

    def describe(self) -> str:
        if self.kind == GENERIC:
            return f"generic {self.m}x{self.n}"
        return f"{self.kind} {self.n}x{self.n}"


@dataclass(frozen=True)
class ProblemSpec:
    """A matrix kind together with the minor (or pfaffian) size t.

    The multiplicity formulas require 0 < t < bound, where the bound is m
    for generic, n for symmetric, and floor(n/2) for skew-symmetric
    matrices.  Specs with t at or above the bound are representable (the
    multiplicities are then 0); t < 1 is rejected outright.
    """

    kind: MatrixKind
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise DomainError(f"minor size t must be positive, got {self.t}")

    @property
    def upper(self) -> int:
        """Exclusive upper bound on t for nonzero multiplicities."""
        return self.kind.part_bound

    @property
    def valid_range(self) -> bool:
        return 0 < self.t < self.upper

    @property
    def mstar(self) -> int:
        return self.kind.mstar

    @property
    def ring_dim(self) -> int:
        return self.kind.ring_dim

    @property
    def delta(self) -> int:
        return self.kind.delta

    def describe(self) -> str:
        return f"{self.kind.describe()}, t={self.t}"
