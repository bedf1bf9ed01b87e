from fractions import Fraction

import pytest

from detmult.errors import DomainError
from detmult.polytopes import (
    HPolytope,
    Simplex,
    enumerate_vertices,
    ordered_epsilon_region,
    ordered_slice_region,
    triangulate,
    volume,
)


def cube(d):
    rows = []
    for i in range(d):
        normal = [Fraction(0)] * d
        normal[i] = Fraction(1)
        rows.append((tuple(normal), Fraction(1)))
        rows.append((tuple(-x for x in normal), Fraction(0)))
    return HPolytope.from_rows(rows, d)


def test_simplex_volume():
    assert Simplex.standard(3).volume == Fraction(1, 6)
    s = Simplex.from_points([(0, 0), (2, 0), (0, 2)])
    assert s.volume == 2


def test_degenerate_simplex_rejected():
    with pytest.raises(DomainError):
        Simplex.from_points([(0, 0), (1, 1), (2, 2)])


def test_cube_vertices_and_volume():
    for d in (1, 2, 3, 4):
        verts = enumerate_vertices(cube(d))
        assert len(verts) == 2**d
        assert volume(cube(d)) == 1


def test_unbounded_detected():
    h = HPolytope.from_rows([((Fraction(-1), Fraction(0)), Fraction(0))], 2)
    with pytest.raises(DomainError):
        enumerate_vertices(h)


def test_empty_polytope():
    h = HPolytope.from_rows(
        [
            ((Fraction(1),), Fraction(0)),
            ((Fraction(-1),), Fraction(-1)),  # x >= 1 and x <= 0
        ],
        1,
    )
    assert enumerate_vertices(h) == []


def test_triangulation_volume_is_pull_independent():
    for h in (cube(3), ordered_epsilon_region(3, 2), ordered_slice_region(4, 2)):
        lo = triangulate(h, pull="lexmin").total_volume
        hi = triangulate(h, pull="lexmax").total_volume
        assert lo == hi == volume(h)


def test_triangulation_simplices_cover_sample_points():
    h = ordered_epsilon_region(3, 2)
    tri = triangulate(h)
    for s in tri.simplices:
        centroid = [
            sum(v[i] for v in s.vertices) / Fraction(len(s.vertices))
            for i in range(h.dim)
        ]
        assert h.contains(centroid)


def test_slice_region_volume():
    # ordered slice for m=2, t=1: {0 <= z1 <= 1/2} has length 1/2
    assert volume(ordered_slice_region(2, 1)) == Fraction(1, 2)


def test_epsilon_region_volume():
    # m=2, t=1: {0 <= z1 <= z2 <= 1, z2 <= z1 + z2 <= 1}; half the unit
    # simplex, area 1/4
    assert volume(ordered_epsilon_region(2, 1)) == Fraction(1, 4)


def test_slice_region_rejects_bad_t():
    with pytest.raises(DomainError):
        ordered_slice_region(3, 3)
    with pytest.raises(DomainError):
        ordered_epsilon_region(3, 0)


def test_ordered_regions_scale():
    # ordered regions for all feasible (m, t) up to m=5 are bounded,
    # full-dimensional, and triangulate consistently
    for m in range(2, 6):
        for t in range(1, m):
            for region in (ordered_slice_region(m, t), ordered_epsilon_region(m, t)):
                tri = triangulate(region)
                assert tri.total_volume > 0
