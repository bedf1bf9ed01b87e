from fractions import Fraction

import pytest

from detmult.errors import DomainError, ScaleError
from detmult.multiplicity import (
    BOTH,
    compute_report,
    epsilon_multiplicity,
    fiber_degree,
    j_multiplicity,
    j_series_submaximal,
    leading_constant,
    scroll_j,
    selberg_identity,
)
from detmult.problem import MatrixKind, ProblemSpec


def test_leading_constant_values():
    # generic 2x2: 3!/(1! 2! 1! 2!) = 3/2 ... times 2 = 3
    assert leading_constant(ProblemSpec(MatrixKind.generic(2, 2), 1)) == 3
    assert leading_constant(ProblemSpec(MatrixKind.symmetric(2), 1)) == 2
    assert leading_constant(ProblemSpec(MatrixKind.pfaffian(4), 1)) == 5


def test_smallest_generic_case():
    spec = ProblemSpec(MatrixKind.generic(2, 2), 1)
    assert j_multiplicity(spec) == 1
    assert epsilon_multiplicity(spec) == 1
    assert fiber_degree(spec) == 1


def test_known_generic_values():
    assert j_multiplicity(ProblemSpec(MatrixKind.generic(3, 3), 2)) == 2
    assert epsilon_multiplicity(ProblemSpec(MatrixKind.generic(3, 3), 2)) == Fraction(1, 2)
    assert j_multiplicity(ProblemSpec(MatrixKind.generic(3, 4), 2)) == 64
    assert epsilon_multiplicity(ProblemSpec(MatrixKind.generic(3, 4), 2)) == Fraction(341, 16)


def test_symmetric_and_pfaffian_smallest():
    assert j_multiplicity(ProblemSpec(MatrixKind.symmetric(2), 1)) == 1
    assert j_multiplicity(ProblemSpec(MatrixKind.pfaffian(4), 1)) == 1
    assert j_multiplicity(ProblemSpec(MatrixKind.pfaffian(5), 1)) == 1


def test_invalid_range_gives_zero_with_note():
    report = compute_report(ProblemSpec(MatrixKind.generic(3, 5), 3))
    assert report.j == 0 and report.epsilon == 0
    assert not report.valid_range
    assert report.notes


def test_fiber_degree_edge_cases():
    # generic maximal minors: refused (Grassmannian degree is out of scope)
    with pytest.raises(DomainError):
        fiber_degree(ProblemSpec(MatrixKind.generic(3, 5), 3))
    # symmetric and pfaffian fiber cones at the bound are polynomial rings
    assert fiber_degree(ProblemSpec(MatrixKind.symmetric(3), 3)) == 1
    assert fiber_degree(ProblemSpec(MatrixKind.pfaffian(6), 3)) == 1
    with pytest.raises(DomainError):
        fiber_degree(ProblemSpec(MatrixKind.generic(3, 5), 4))


def test_j_equals_t_times_fiber_degree():
    for spec in (
        ProblemSpec(MatrixKind.generic(3, 5), 2),
        ProblemSpec(MatrixKind.symmetric(4), 2),
        ProblemSpec(MatrixKind.pfaffian(7), 2),
    ):
        assert j_multiplicity(spec) == spec.t * fiber_degree(spec)


def test_report_consistency():
    spec = ProblemSpec(MatrixKind.generic(3, 4), 2)
    report = compute_report(spec)
    assert report.j == 64
    assert report.epsilon == Fraction(341, 16)
    assert report.j == spec.t * report.fiber_degree
    assert report.c == leading_constant(spec)


def test_both_engines_agree_end_to_end():
    spec = ProblemSpec(MatrixKind.generic(3, 4), 2)
    assert j_multiplicity(spec, BOTH) == 64
    assert epsilon_multiplicity(spec, BOTH) == Fraction(341, 16)


def test_scroll_values():
    assert scroll_j([4]) == 4
    assert scroll_j([3, 2]) == 10
    # below the threshold sum(a) < d + 3 the ideal is of linear type
    assert scroll_j([1]) == 0
    assert scroll_j([1, 1, 1]) == 0
    assert scroll_j([2, 1]) == 0


def test_scroll_rejects_bad_blocks():
    with pytest.raises(DomainError):
        scroll_j([])
    with pytest.raises(DomainError):
        scroll_j([2, 0])


def test_selberg_small():
    for m in range(1, 4):
        for n in range(m, 6):
            lhs, rhs = selberg_identity(m, n)
            assert lhs == rhs


def test_selberg_rejects_bad_input():
    with pytest.raises(DomainError):
        selberg_identity(3, 2)


def test_series_smallest():
    assert j_series_submaximal(2, 2) == 1
    assert j_series_submaximal(2, 3) == j_multiplicity(
        ProblemSpec(MatrixKind.generic(2, 3), 1)
    )


def test_series_scale_guard():
    with pytest.raises(ScaleError):
        j_series_submaximal(5, 8)
