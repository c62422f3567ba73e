from fractions import Fraction

import pytest

from dponiche.derive import UndirectedGraph, niche_graph
from dponiche.dpo import Dpo, PointSet, build_dpo
from dponiche.geom import Point
from dponiche.graphalg import (
    find_asteroidal_triple,
    is_chordal,
    is_interval,
    is_triangle_free,
)
from dponiche.harness import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    GeneratorConfig,
    GraphTooLargeError,
    LayeredFamily,
    check_cce_interval,
    check_competition_interval,
    check_layered_nonadjacency,
    check_path_components,
    check_staircase_property,
    infer_layering,
    oracle_find_at,
    oracle_is_chordal,
    random_dpo,
    random_graph,
    random_layered_family,
    random_points,
    run_property_suite,
    run_trial,
    search_chordal_noninterval,
)
from dponiche.witness import witness_points, zigzag_strip

from oracles import brute_is_chordal_by_permutations

F = Fraction


def P(x, y):
    return Point(F(x), F(y))


def strip_family(k):
    lattice, offsets = zigzag_strip(k)
    return LayeredFamily(PointSet(lattice | offsets), Fraction(k - 1))


# --- generator ---------------------------------------------------------


def test_random_dpo_deterministic():
    cfg = GeneratorConfig(seed=1)
    a = random_dpo(cfg, 0)
    b = random_dpo(cfg, 0)
    assert a.point_set == b.point_set
    assert random_dpo(cfg, 1).point_set != a.point_set or True  # distinct index may differ


def test_random_points_single():
    cfg = GeneratorConfig(seed=3, min_points=1, max_points=1)
    assert len(random_points(cfg, 5)) == 1


def test_random_points_in_box_and_distinct():
    cfg = GeneratorConfig(seed=7, min_points=12, max_points=12)
    ps = random_points(cfg, 2)
    assert len(ps) == 12
    for p in ps:
        assert F(-1, 3) <= p.x1 <= F(28, 3)
        assert F(-1, 3) <= p.x2 <= F(28, 3)


def test_generator_mixes_coordinate_regimes():
    cfg = GeneratorConfig(seed=0, trials=50)
    kinds = {
        all(p.x1.denominator == 1 and p.x2.denominator == 1
            for p in random_points(cfg, i))
        for i in range(50)
    }
    assert kinds == {True, False}


def test_random_graph_seeded():
    g1 = random_graph(5, 9, 8)
    g2 = random_graph(5, 9, 8)
    assert g1.n == g2.n and g1.adj == g2.adj


# --- layering -----------------------------------------------------------


def test_infer_layering_on_strips():
    fam = strip_family(4)
    assert infer_layering(fam.points) == 3


def test_infer_layering_rejects_noise():
    lattice, offsets = zigzag_strip(4)
    noisy = PointSet(lattice | offsets | {P(0, 0)})  # sum 0: off both diagonals
    assert infer_layering(noisy) is None


def test_infer_layering_offsets_only_returns_smallest():
    ps = PointSet({Point(F(1, 2), 3), Point(F(3, 2), 2)})  # both on L_{7/2}
    assert infer_layering(ps) == F(5, 2)


def test_infer_layering_empty():
    assert infer_layering(PointSet([])) == 0


def test_layered_family_validation():
    with pytest.raises(ValueError):
        LayeredFamily(PointSet([P(0, 0), P(1, 0)]), Fraction(0))  # sum 1 lattice
    LayeredFamily(PointSet([P(0, 0), P(1, 1)]), Fraction(0))  # sums 0 and 2


@pytest.mark.parametrize("k", range(2, 11))
def test_layered_nonadjacency_on_strips(k):
    verdict = check_layered_nonadjacency(strip_family(k))
    assert verdict.status == PASS


def test_random_layered_families_are_valid_and_pass():
    for i in range(50):
        fam = random_layered_family(11, i)
        assert infer_layering(fam.points) is not None
        assert check_layered_nonadjacency(fam).status == PASS


def test_layered_pair_qualification():
    # (0,3)-(2,1) qualifies (offset is not (+1,-1)) and must be non-adjacent;
    # (0,3)-(1,2) is the exempt immediate-diagonal pair.
    fam = strip_family(4)
    graph = niche_graph(Dpo(fam.points))
    i03 = fam.points.index_of(P(0, 3))
    i21 = fam.points.index_of(P(2, 1))
    i12 = fam.points.index_of(P(1, 2))
    assert i21 not in graph.adj[i03]
    assert i12 in graph.adj[i03]  # adjacent, but exempt from the assertion


# --- structure checkers ---------------------------------------------------


def test_staircase_checker_vacuous_pass():
    d = build_dpo([P(0, 0), P(1, 2), P(2, 1)])
    assert check_staircase_property(d).status == PASS


def test_staircase_checker_not_applicable_on_triangles():
    d = Dpo(witness_points(8).point_set)
    assert not is_triangle_free(niche_graph(d))
    assert check_staircase_property(d).status == NOT_APPLICABLE


def test_staircase_checker_reports_chain_counterexample():
    # An ascending 3-chain is a triangle-free niche path whose middle vertex
    # sits strictly above the left end, so the claimed down-right ordering
    # fails; the checker must surface it rather than pass.
    d = build_dpo([P(0, 0), P(2, 1), P(5, 2)])
    g = niche_graph(d)
    assert is_triangle_free(g)
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    verdict = check_staircase_property(d)
    assert verdict.status == FAIL
    assert (P(0, 0), P(2, 1), P(5, 2)) in verdict.details


def test_staircase_holds_when_witnesses_are_external():
    # With the path's witnesses disjoint from the path itself the down-right
    # conclusion does hold; strips are the canonical example.
    lattice, offsets = zigzag_strip(4)
    d = Dpo(PointSet(lattice | offsets))
    assert check_staircase_property(d).status in (PASS, NOT_APPLICABLE)


def test_path_components_checker():
    assert check_path_components(build_dpo([P(0, 0), P(1, 2), P(2, 1)])).status == PASS
    assert check_path_components(Dpo(witness_points(8).point_set)).status == NOT_APPLICABLE
    assert check_path_components(build_dpo([])).status == PASS


def test_competition_interval_checker():
    assert check_competition_interval(Dpo(witness_points(8).point_set)).status == PASS
    assert check_competition_interval(build_dpo([P(0, 0)])).status == PASS


def test_cce_interval_checker():
    d = build_dpo([P(0, 0), P(1, 2), P(2, 1), P(3, 3)])
    assert check_cce_interval(d).status == PASS
    assert check_cce_interval(build_dpo([P(0, 0), P(1, 1)])).status == PASS


def test_property_suite_small_run():
    cfg = GeneratorConfig(seed=5, trials=100)
    report = run_property_suite(cfg)
    totals = report.totals
    # The three structural checks never fail; staircase violations are
    # genuine (ascending chains) and are the only failures on random data.
    assert totals["check_competition_interval"] == {PASS: 100, FAIL: 0, NOT_APPLICABLE: 0}
    assert totals["check_path_components"][FAIL] == 0
    assert totals["check_cce_interval"][FAIL] == 0
    assert report.failed == totals["check_staircase_property"][FAIL]
    for trial in report.failures:
        failing = [v.check for v in trial.verdicts if v.status == FAIL]
        assert failing == ["staircase"]
    rerun = run_property_suite(cfg)
    assert rerun.to_json() == report.to_json()


def test_property_suite_empty():
    report = run_property_suite(GeneratorConfig(seed=1, trials=0))
    assert report.failed == 0 and report.trials == 0


def test_trial_report_carries_stats():
    trial = run_trial(GeneratorConfig(seed=9, max_points=6), 0)
    assert trial.stats["vertices"] == len(trial.points)
    assert set(trial.stats) == {
        "vertices", "competition-edges", "common-enemy-edges",
        "cce-edges", "niche-edges",
    }
    assert trial.to_json()["stats"] == trial.stats


# --- oracles ------------------------------------------------------------


def cycle(n):
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return UndirectedGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def test_oracle_is_chordal_examples():
    assert not oracle_is_chordal(cycle(4))
    assert oracle_is_chordal(complete(4))
    with pytest.raises(GraphTooLargeError):
        oracle_is_chordal(complete(9))


def test_oracle_find_at_examples():
    claw = UndirectedGraph.from_edges(
        7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    )
    assert oracle_find_at(claw) is not None
    assert oracle_find_at(UndirectedGraph.from_edges(6, [(i, i + 1) for i in range(5)])) is None
    with pytest.raises(GraphTooLargeError):
        oracle_find_at(complete(9))


def test_oracle_cross_validation_sample():
    for i in range(150):
        g = random_graph(17, i, 7)
        fast = is_chordal(g)
        assert fast == oracle_is_chordal(g)
        assert fast == brute_is_chordal_by_permutations(g.adj)
    for i in range(150):
        g = random_graph(19, i, 8)
        assert (find_asteroidal_triple(g) is None) == (oracle_find_at(g) is None)


# --- search -------------------------------------------------------------


def test_search_deterministic_and_verified():
    cfg = GeneratorConfig(seed=2, trials=300)
    report = search_chordal_noninterval(cfg)
    rerun = search_chordal_noninterval(cfg)
    assert report.summary_json() == rerun.summary_json()
    assert [h.to_json() for h in report.hits] == [h.to_json() for h in rerun.hits]
    assert report.chordal <= report.trials
    for hit in report.hits:
        graph = niche_graph(build_dpo(
            Point(F(p["x"]), F(p["y"])) for p in hit.to_json()["points"]
        ))
        assert is_chordal(graph) and not is_interval(graph)


def test_search_does_not_flag_interval_instances():
    # a chain: niche graph is interval, chordal; must never be a hit
    d = build_dpo([P(i, i) for i in range(5)])
    g = niche_graph(d)
    assert is_chordal(g) and is_interval(g)
    report = search_chordal_noninterval(GeneratorConfig(seed=4, trials=50, max_points=5))
    for hit in report.hits:
        assert hit.asteroidal_triple is not None


def test_search_does_not_flag_nonchordal_witness():
    g = niche_graph(Dpo(witness_points(5).point_set))
    assert not is_chordal(g)  # holes present, so never a candidate hit


def test_known_chordal_noninterval_instance():
    # Chordal non-interval niche graphs exist: a triangulated three-leg
    # spider realized by eight points (found by the search mode, then
    # greedily minimized).  Pinned so derivation or recognition changes
    # that would lose it are caught.
    d = build_dpo([
        Point(F(-1, 3), F(19, 3)), Point(1, F(25, 3)), P(2, 1),
        Point(F(7, 3), F(20, 3)), Point(F(14, 3), F(10, 3)),
        Point(5, F(-1, 3)), Point(F(20, 3), F(17, 3)), P(8, 0),
    ])
    g = niche_graph(d)
    assert g.edges() == [
        (0, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 6), (4, 5), (4, 6), (6, 7),
    ]
    assert is_chordal(g)
    assert find_asteroidal_triple(g) is not None
    assert not is_interval(g)
    assert not is_triangle_free(g)
