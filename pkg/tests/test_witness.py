from fractions import Fraction

import pytest

from dponiche.derive import niche_graph
from dponiche.dpo import Dpo, build_dpo
from dponiche.geom import Point
from dponiche.graphalg import find_hole, is_interval, verify_induced_cycle
from dponiche.witness import (
    CertificationError,
    NonLatticePointError,
    certify_witness,
    cycle_violations,
    diagonal_triple,
    path_family,
    path_sequence,
    witness_niche_graph,
    witness_points,
    zigzag_strip,
)

from oracles import brute_induced_cycles

F = Fraction


def P(x, y):
    return Point(F(x), F(y))


def pts(*pairs):
    return frozenset(P(x, y) for x, y in pairs)


def test_diagonal_triple_examples():
    assert diagonal_triple(P(0, 4)) == pts((-1, 3), (0, 4), (1, 5))
    assert diagonal_triple(P(3, 1)) == pts((2, 0), (3, 1), (4, 2))
    assert diagonal_triple(P(5, 1)) == pts((4, 0), (5, 1), (6, 2))
    with pytest.raises(NonLatticePointError):
        diagonal_triple(Point(F(1, 3), 2))


def test_zigzag_strip_examples():
    lattice, offsets = zigzag_strip(2)
    assert lattice == pts((0, 1), (1, 2))
    assert offsets == frozenset()

    lattice, offsets = zigzag_strip(4)
    assert lattice == pts((0, 3), (1, 2), (2, 1), (1, 4), (2, 3), (3, 2))
    assert offsets == pts(
        (F(2, 3), F(8, 3)), (F(4, 3), F(10, 3)),
        (F(5, 3), F(5, 3)), (F(7, 3), F(7, 3)),
    )

    lattice, offsets = zigzag_strip(3)
    assert lattice == pts((0, 2), (1, 1), (1, 3), (2, 2))
    assert offsets == pts((F(2, 3), F(5, 3)), (F(4, 3), F(7, 3)))

    with pytest.raises(ValueError):
        zigzag_strip(1)


def test_path_sequence_examples():
    assert path_sequence(4) == (
        P(2, 1), P(1, 2), P(0, 3), P(0, 4), P(1, 4), P(2, 3), P(3, 2),
    )
    assert path_sequence(2) == (P(0, 1), P(0, 2), P(1, 2))
    assert path_sequence(3) == (P(1, 1), P(0, 2), P(0, 3), P(1, 3), P(2, 2))
    with pytest.raises(ValueError):
        path_sequence(1)


def test_witness_points_n8_exact():
    b = witness_points(8)
    assert len(b.point_set) == 16
    assert b.tail_triple == pts((2, 0), (3, 1), (4, 2))
    assert b.head_triple == pts((-1, 3), (0, 4), (1, 5))
    assert b.cycle == (
        P(2, 1), P(1, 2), P(0, 3), P(0, 4), P(1, 4), P(2, 3), P(3, 2), P(3, 1),
    )


def test_witness_points_n9_exact():
    b = witness_points(9)
    assert len(b.point_set) == 16
    assert b.tail_triple == pts((4, 0), (5, 1), (6, 2))
    assert b.head_triple == pts((-1, 3), (0, 4), (1, 5))
    assert b.cycle == (
        P(2, 1), P(1, 2), P(0, 3), P(0, 4), P(1, 4), P(2, 3), P(3, 2),
        P(6, 2), P(5, 1),
    )


def test_witness_points_n4():
    b = witness_points(4)
    assert set(b.point_set) == pts(
        (-1, 1), (0, 2), (1, 3), (0, 0), (1, 1), (2, 2), (0, 1), (1, 2),
    )
    assert b.cycle == (P(0, 1), P(0, 2), P(1, 2), P(1, 1))


def test_witness_points_rejects_small_n():
    with pytest.raises(ValueError):
        witness_points(3)


@pytest.mark.parametrize("n", range(4, 21))
def test_part_sizes_and_disjointness(n):
    b = witness_points(n)
    k = n // 2
    assert len(b.strip_lattice) == 2 * (k - 1)
    assert len(b.strip_offsets) == (2 * (k - 2) if k >= 3 else 0)
    assert len(b.head_triple) == len(b.tail_triple) == 3
    parts = (b.head_triple, b.tail_triple, b.strip_lattice, b.strip_offsets)
    assert sum(map(len, parts)) == len(b.point_set) == 4 * k
    assert frozenset().union(*parts) == set(b.point_set)
    assert len(b.cycle) == n


@pytest.mark.parametrize("n", range(4, 21, 2))
def test_even_families_certify(n):
    cert = certify_witness(n)
    assert len(cert.cycle) == n
    graph = witness_niche_graph(n)
    ids = [cert.bundle.point_set.index_of(p) for p in cert.cycle]
    assert verify_induced_cycle(graph, ids)
    # every edge witness is a genuine common prey/predator
    for w in cert.edge_witnesses:
        if w.kind == "prey":
            assert w.witness.x1 < min(w.u.x1, w.v.x1)
            assert w.witness.x2 < min(w.u.x2, w.v.x2)
        else:
            assert w.witness.x1 > max(w.u.x1, w.v.x1)
            assert w.witness.x2 > max(w.u.x2, w.v.x2)
    assert len(cert.non_edge_tokens) == n * (n - 1) // 2 - n


def test_even_witness_niche_graph_is_not_interval():
    for n in (4, 8, 12):
        graph = witness_niche_graph(n)
        assert not is_interval(graph)
        hole = find_hole(graph)
        assert hole is not None and len(hole) >= 4


def test_certificate_edge_witnesses_n8():
    cert = certify_witness(8)
    by_pair = {frozenset((w.u, w.v)): w for w in cert.edge_witnesses}
    w = by_pair[frozenset((P(0, 3), P(0, 4)))]
    assert (w.kind, w.witness) == ("predator", P(1, 5))
    w = by_pair[frozenset((P(0, 4), P(1, 4)))]
    assert (w.kind, w.witness) == ("prey", P(-1, 3))


def test_certificate_edge_witnesses_n4():
    cert = certify_witness(4)
    assert [w.witness for w in cert.edge_witnesses] == [
        P(1, 3), P(-1, 1), P(0, 0), P(2, 2),
    ]
    assert [w.kind for w in cert.edge_witnesses] == [
        "predator", "prey", "prey", "predator",
    ]


def test_non_edge_tokens_describe_empty_regions():
    cert = certify_witness(8)
    points = cert.bundle.point_set.points
    for t in cert.non_edge_tokens:
        assert not any(p.x1 < t.below.x1 and p.x2 < t.below.x2 for p in points)
        assert not any(p.x1 > t.above.x1 and p.x2 > t.above.x2 for p in points)


# The odd families, as constructed, do NOT contain their declared cycle as
# an induced subgraph: the strip's off-lattice points are common prey of an
# interior cycle vertex and the tail cap.  The tests below pin that defect
# exactly so any change in behavior is caught.


@pytest.mark.parametrize("n", range(5, 22, 2))
def test_odd_families_fail_certification(n):
    with pytest.raises(CertificationError):
        certify_witness(n)


def test_odd_defect_is_the_expected_chord_n9():
    violations = cycle_violations(9)
    assert (P(2, 3), P(6, 2), "chord") in violations
    # the chord's unique witness is the off-lattice strip point (5/3, 5/3)
    b = witness_points(9)
    w = Point(F(5, 3), F(5, 3))
    assert w in set(b.point_set)
    assert w.x1 < 2 and w.x2 < 2


@pytest.mark.parametrize("n", (5, 7, 9))
def test_odd_families_contain_no_induced_cycle_of_length_n(n):
    graph = witness_niche_graph(n)
    assert brute_induced_cycles(graph.adj, n) == []


@pytest.mark.parametrize("k", range(2, 11))
def test_strip_sequence_is_induced_path_in_path_family(k):
    family = path_family(k)
    graph = niche_graph(Dpo(family))
    seq = [family.index_of(p) for p in path_sequence(k)]
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            expected = j - i == 1
            assert (seq[j] in graph.adj[seq[i]]) == expected


@pytest.mark.parametrize("k", range(2, 17))
def test_even_tail_center_neighbors_among_cycle_candidates(k):
    # Restricted to the strip sequence plus the tail, the cap's middle point
    # neighbors exactly the strip ends and its own triple mates; this is the
    # working core of the even construction.
    b = witness_points(2 * k)
    d = build_dpo(b.point_set.points)
    graph = niche_graph(d)
    v = d.point_set.index_of(P(k - 1, 1))
    actual = {d.point_set.points[u] for u in graph.adj[v]}
    allowed = set(path_sequence(k)) | b.tail_triple
    assert actual & allowed == {
        P(k - 2, 0), P(k, 2), P(k - 2, 1), P(k - 1, 2),
    }
