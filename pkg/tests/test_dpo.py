from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dponiche.dpo import Dpo, DuplicatePointError, PointSet, UnknownVertexError, build_dpo
from dponiche.geom import Point

coords = st.fractions(min_value=-5, max_value=5, max_denominator=3)
point_lists = st.lists(st.builds(Point, coords, coords), min_size=0, max_size=10,
                       unique=True)


def ids(d, *pts):
    return [d.point_set.index_of(Point(*p)) for p in pts]


def test_build_dpo_arcs_example():
    d = build_dpo([Point(0, 0), Point(1, 2), Point(2, 1)])
    v0, v1, v2 = ids(d, (0, 0), (1, 2), (2, 1))
    assert sorted(d.arcs()) == sorted([(v1, v0), (v2, v0)])


def test_single_vertex_has_no_arcs():
    d = build_dpo([Point(0, 0)])
    assert list(d.arcs()) == []


def test_duplicate_points_rejected():
    with pytest.raises(DuplicatePointError):
        build_dpo([Point(0, 0), Point(0, 0)])


def test_prey_of_examples():
    d = build_dpo([Point(0, 0), Point(1, 2), Point(2, 1)])
    v0, v1, v2 = ids(d, (0, 0), (1, 2), (2, 1))
    assert d.prey_of(v1) == {v0}
    assert d.prey_of(v0) == frozenset()
    assert d.prey_of(v2) == {v0}


def test_predators_of_examples():
    d = build_dpo([Point(0, 0), Point(1, 2), Point(2, 1)])
    v0, v1, v2 = ids(d, (0, 0), (1, 2), (2, 1))
    assert d.predators_of(v0) == {v1, v2}
    assert d.predators_of(v1) == frozenset()
    chain = build_dpo([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert chain.predators_of(0) == {1, 2}


def test_common_prey_predator_examples():
    d = build_dpo([Point(0, 0), Point(1, 2), Point(2, 1)])
    v0, v1, v2 = ids(d, (0, 0), (1, 2), (2, 1))
    assert d.has_common_prey(v1, v2)
    assert not d.has_common_predator(v1, v2)
    two = build_dpo([Point(0, 0), Point(1, 1)])
    assert not two.has_common_prey(0, 1)
    assert not two.has_common_predator(0, 1)


def test_unknown_vertex_errors():
    d = build_dpo([Point(0, 0)])
    with pytest.raises(UnknownVertexError):
        d.prey_of(1)
    with pytest.raises(UnknownVertexError):
        d.point_set.index_of(Point(9, 9))


def test_common_prey_requires_distinct_vertices():
    d = build_dpo([Point(0, 0), Point(1, 1)])
    with pytest.raises(ValueError):
        d.has_common_prey(0, 0)


def test_scaled_coords_preserve_comparisons():
    pts = [Point(Fraction(1, 3), 2), Point(Fraction(1, 2), Fraction(5, 3)),
           Point(0, 0)]
    ps = PointSet(pts)
    x1, x2 = ps.scaled_coords()
    for i, p in enumerate(ps.points):
        for j, q in enumerate(ps.points):
            assert (p.x1 < q.x1) == (x1[i] < x1[j])
            assert (p.x2 < q.x2) == (x2[i] < x2[j])
    assert all(isinstance(v, int) for v in x1 + x2)


@given(point_lists)
def test_arc_transitivity(pts):
    d = Dpo(PointSet(pts))
    arcs = set(d.arcs())
    for v, x in arcs:
        for x2, w in arcs:
            if x2 == x:
                assert (v, w) in arcs


@given(point_lists)
def test_region_test_equals_prey_intersection(pts):
    d = Dpo(PointSet(pts))
    for u in range(d.n):
        for v in range(u + 1, d.n):
            assert d.has_common_prey(u, v) == bool(d.prey_of(u) & d.prey_of(v))
            assert d.has_common_predator(u, v) == bool(
                d.predators_of(u) & d.predators_of(v)
            )


@given(point_lists, st.randoms())
def test_vertex_ids_invariant_under_permutation(pts, rng):
    shuffled = list(pts)
    rng.shuffle(shuffled)
    assert PointSet(pts).points == PointSet(shuffled).points
