"""Exact rational scalars and combinatorial integers.

The universal scalar type of the package is :class:`fractions.Fraction`,
re-exported here as ``Rational``.  Fractions are always kept in canonical
form (positive denominator, gcd 1), compare exactly, and serialize as
"p/q" with the denominator omitted when it is 1 -- which is precisely the
wire format used by the CLI and the result cache.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

Rational = Fraction


def factorial(k: int) -> int:
    """k! for k >= 0."""
    if k < 0:
        raise DomainError(f"factorial of negative integer {k}")
    return math.factorial(k)


def binomial(a: int, b: int) -> int:
    """C(a, b), with the convention that out-of-range b gives 0."""
    if a < 0:
        raise DomainError(f"binomial with negative upper index {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def parse_rational(text: str) -> Rational:
    """Parse "p/q", "-3", "0" etc. into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(x: Rational) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    return str(Fraction(x))
