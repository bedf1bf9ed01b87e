import pytest

from detmult.errors import DomainError
from detmult.problem import MatrixKind, ProblemSpec


def test_generic_validation():
    kind = MatrixKind.generic(3, 5)
    assert kind.part_bound == 3
    assert kind.mstar == 3
    assert kind.ring_dim == 15
    with pytest.raises(DomainError):
        MatrixKind.generic(5, 3)
    with pytest.raises(DomainError):
        MatrixKind.generic(0, 3)


def test_symmetric_dimensions():
    kind = MatrixKind.symmetric(4)
    assert kind.part_bound == 4
    assert kind.ring_dim == 10
    assert kind.mstar == 4


def test_pfaffian_dimensions():
    even = MatrixKind.pfaffian(6)
    odd = MatrixKind.pfaffian(7)
    assert even.mstar == 3 and even.ring_dim == 15 and even.delta == 0
    assert odd.mstar == 3 and odd.ring_dim == 21 and odd.delta == 1


def test_spec_rejects_nonpositive_t():
    with pytest.raises(DomainError):
        ProblemSpec(MatrixKind.generic(3, 4), 0)
    with pytest.raises(DomainError):
        ProblemSpec(MatrixKind.generic(3, 4), -2)


def test_valid_range_windows():
    assert ProblemSpec(MatrixKind.generic(3, 4), 2).valid_range
    assert not ProblemSpec(MatrixKind.generic(3, 4), 3).valid_range
    assert ProblemSpec(MatrixKind.symmetric(4), 3).valid_range
    assert not ProblemSpec(MatrixKind.symmetric(4), 4).valid_range
    assert ProblemSpec(MatrixKind.pfaffian(6), 2).valid_range
    assert not ProblemSpec(MatrixKind.pfaffian(6), 3).valid_range


def test_describe_mentions_parameters():
    text = ProblemSpec(MatrixKind.generic(3, 4), 2).describe()
    assert "3" in text and "4" in text and "2" in text
