from fractions import Fraction

import pytest

from detmult.errors import DomainError
from detmult.exactnum import binomial, factorial, format_rational, parse_rational


def test_factorial_small():
    assert [factorial(k) for k in range(6)] == [1, 1, 2, 6, 24, 120]


def test_factorial_negative_rejected():
    with pytest.raises(DomainError):
        factorial(-1)


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(5, 5) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("0") == 0


def test_format_rational_roundtrip():
    for value in [Fraction(341, 16), Fraction(-2, 3), Fraction(5), Fraction(0)]:
        assert parse_rational(format_rational(value)) == value


def test_format_integer_has_no_slash():
    assert format_rational(Fraction(64)) == "64"
