"""Property harness: seeded random instances, structure checkers for the
derived graphs, definitional oracles, and the chordal-but-not-interval
search.

Every instance is a pure function of (seed, index), so failures and hits
replay exactly; aggregation is order-insensitive counts plus sorted lists,
so running trials concurrently cannot change a report.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from dponiche.derive import (
    UndirectedGraph,
    cce_graph,
    competition_graph,
    derive_all,
    niche_graph,
)
from dponiche.dpo import Dpo, PointSet
from dponiche.geom import Point, diagonal_sum, is_lattice, render_rational, staircase
from dponiche.graphalg import (
    AsteroidalTriple,
    components_are_paths,
    find_asteroidal_triple,
    find_hole,
    find_triangle,
    has_induced_c4,
    is_chordal,
    is_interval,
    is_triangle_free,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

THIRD = Fraction(1, 3)
_OFFSETS = (Fraction(-1, 3), Fraction(0), Fraction(1, 3))


class GraphTooLargeError(ValueError):
    """The exhaustive oracle was asked about a graph beyond its size cap."""


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded instance generator settings; (seed, index) fixes an instance."""

    seed: int = 0
    min_points: int = 2
    max_points: int = 12
    coord_min: int = 0
    coord_max: int = 9
    third_offsets: bool = True
    trials: int = 10_000


def _trial_rng(cfg: GeneratorConfig, index: int) -> random.Random:
    # String seeding hashes with sha512, so instances are stable across
    # platforms and interpreter runs.
    return random.Random(f"{cfg.seed}:{index}")


def random_points(cfg: GeneratorConfig, index: int) -> PointSet:
    """The deterministic point set for trial `index`."""
    rng = _trial_rng(cfg, index)
    count = rng.randint(cfg.min_points, cfg.max_points)
    use_thirds = cfg.third_offsets and rng.random() < 0.5
    span = cfg.coord_max - cfg.coord_min + 1
    capacity = (3 * span) ** 2 if use_thirds else span**2
    count = min(count, capacity)
    points: set[Point] = set()
    while len(points) < count:
        x = Fraction(rng.randint(cfg.coord_min, cfg.coord_max))
        y = Fraction(rng.randint(cfg.coord_min, cfg.coord_max))
        if use_thirds:
            x += rng.choice(_OFFSETS)
            y += rng.choice(_OFFSETS)
        points.add(Point(x, y))
    return PointSet(points)


def random_dpo(cfg: GeneratorConfig, index: int) -> Dpo:
    return Dpo(random_points(cfg, index))


def random_graph(seed: int, index: int, max_vertices: int) -> UndirectedGraph:
    """A seeded Erdos-Renyi-style graph for oracle cross-validation."""
    rng = random.Random(f"graph:{seed}:{index}")
    n = rng.randint(1, max_vertices)
    p = rng.uniform(0.1, 0.9)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return UndirectedGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Layered families


@dataclass(frozen=True)
class LayeredFamily:
    """A point set whose lattice points sit on two diagonals c and c+2 and
    whose off-lattice points sit strictly between them."""

    points: PointSet
    c: Fraction

    def __post_init__(self):
        if not _layering_valid(self.points, self.c):
            raise ValueError(f"points are not layered around c={self.c}")


def _layering_valid(points: PointSet, c: Fraction) -> bool:
    for p in points:
        s = diagonal_sum(p)
        if is_lattice(p):
            if s != c and s != c + 2:
                return False
        elif not c < s < c + 2:
            return False
    return True


def infer_layering(points: PointSet) -> Fraction | None:
    """A c making the points a LayeredFamily, or None.

    Candidates are s, s-1, s-2 for every diagonal sum s occurring in the
    set; the smallest valid candidate is returned, which makes the choice
    deterministic even when no lattice point pins c down.
    """
    if not len(points):
        return Fraction(0)
    sums = sorted({diagonal_sum(p) for p in points})
    candidates = sorted({s - d for s in sums for d in (2, 1, 0)})
    for c in candidates:
        if _layering_valid(points, c):
            return c
    return None


def random_layered_family(seed: int, index: int) -> LayeredFamily:
    """A deterministic valid layered family: lattice points on the diagonals
    c and c+2, third-offset points strictly between."""
    rng = random.Random(f"layered:{seed}:{index}")
    c = rng.randint(-5, 5)
    points: set[Point] = set()
    for _ in range(rng.randint(1, 5)):
        x = rng.randint(-4, 4)
        points.add(Point(x, c - x))
    for _ in range(rng.randint(1, 5)):
        x = rng.randint(-4, 4)
        points.add(Point(x, c + 2 - x))
    for _ in range(rng.randint(0, 5)):
        x = rng.randint(-4, 4)
        if rng.random() < 0.5:
            points.add(Point(x + THIRD, c - x + THIRD))
        else:
            points.add(Point(x - THIRD, c + 2 - x - THIRD))
    return LayeredFamily(PointSet(points), Fraction(c))


# ---------------------------------------------------------------------------
# Checkers: each returns a Verdict whose details replay the violation.


@dataclass(frozen=True)
class Verdict:
    check: str
    status: str
    details: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "details": [list(map(str, d)) if isinstance(d, tuple) else str(d)
                        for d in self.details],
        }


def check_layered_nonadjacency(family: LayeredFamily) -> Verdict:
    """Lattice points of a layered family are niche-adjacent only to their
    immediate down-right diagonal neighbor (offset exactly (+1, -1))."""
    graph = niche_graph(Dpo(family.points))
    points = family.points.points
    lattice_ids = [i for i, p in enumerate(points) if is_lattice(p)]
    violations = []
    for u in lattice_ids:
        for v in lattice_ids:
            pu, pv = points[u], points[v]
            if u == v or pu.x1 > pv.x1:
                continue
            exempt = pu.x1 + 1 == pv.x1 and pu.x2 - 1 == pv.x2
            if not exempt and v in graph.adj[u]:
                violations.append((pu, pv))
    status = PASS if not violations else FAIL
    return Verdict("layered-nonadjacency", status, tuple(violations))


def check_staircase_property(d: Dpo) -> Verdict:
    """In a triangle-free niche graph, every 2-path x~y~z with x1 <= z1 runs
    down-right: x, y and y, z are staircase-ordered."""
    graph = niche_graph(d)
    if not is_triangle_free(graph):
        return Verdict("staircase", NOT_APPLICABLE)
    points = d.point_set.points
    violations = []
    for y in range(graph.n):
        nbrs = sorted(graph.adj[y])
        for x in nbrs:
            for z in nbrs:
                if x == z:
                    continue
                px, py, pz = points[x], points[y], points[z]
                if px.x1 <= pz.x1 and not (staircase(px, py) and staircase(py, pz)):
                    violations.append((px, py, pz))
    status = PASS if not violations else FAIL
    return Verdict("staircase", status, tuple(violations))


def check_path_components(d: Dpo) -> Verdict:
    """A triangle-free niche graph must split into paths and be interval."""
    graph = niche_graph(d)
    if not is_triangle_free(graph):
        return Verdict("path-components", NOT_APPLICABLE)
    problems = []
    if not components_are_paths(graph):
        problems.append("non-path component")
    if not is_interval(graph):
        problems.append("not interval")
    status = PASS if not problems else FAIL
    return Verdict("path-components", status, tuple(problems))


def check_competition_interval(d: Dpo) -> Verdict:
    """The competition graph is always an interval graph."""
    ok = is_interval(competition_graph(d))
    return Verdict("competition-interval", PASS if ok else FAIL)


def check_cce_interval(d: Dpo) -> Verdict:
    """A CCE graph without an induced 4-cycle must be an interval graph."""
    graph = cce_graph(d)
    if has_induced_c4(graph):
        return Verdict("cce-interval", NOT_APPLICABLE)
    ok = is_interval(graph)
    return Verdict("cce-interval", PASS if ok else FAIL)


CHECKERS = (
    check_competition_interval,
    check_path_components,
    check_cce_interval,
    check_staircase_property,
)


@dataclass
class TrialReport:
    seed: int
    index: int
    points: tuple[Point, ...]
    verdicts: tuple[Verdict, ...]
    stats: dict[str, int]

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "index": self.index,
            "points": [
                {"x": render_rational(p.x1), "y": render_rational(p.x2)}
                for p in self.points
            ],
            "stats": self.stats,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def run_trial(cfg: GeneratorConfig, index: int) -> TrialReport:
    d = random_dpo(cfg, index)
    verdicts = tuple(chk(d) for chk in CHECKERS)
    stats = {"vertices": d.n}
    for kind, graph in derive_all(d).items():
        stats[f"{kind}-edges"] = graph.edge_count()
    return TrialReport(cfg.seed, index, d.point_set.points, verdicts, stats)


@dataclass
class SuiteReport:
    config: GeneratorConfig
    trials: int
    totals: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[TrialReport] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    def to_json(self) -> dict:
        return {
            "seed": self.config.seed,
            "trials": self.trials,
            "totals": self.totals,
            "failures": [r.to_json() for r in self.failures],
        }


def run_property_suite(cfg: GeneratorConfig) -> SuiteReport:
    """Run every checker over cfg.trials seeded instances."""
    report = SuiteReport(config=cfg, trials=cfg.trials)
    totals = {
        chk.__name__: {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0} for chk in CHECKERS
    }
    for index in range(cfg.trials):
        trial = run_trial(cfg, index)
        bad = False
        for chk, verdict in zip(CHECKERS, trial.verdicts):
            totals[chk.__name__][verdict.status] += 1
            bad = bad or verdict.status == FAIL
        if bad:
            report.failures.append(trial)
    report.totals = totals
    return report


# ---------------------------------------------------------------------------
# Definitional oracles (small graphs only; cross-validate the fast paths).

_ORACLE_MAX = 8


def oracle_is_chordal(g: UndirectedGraph) -> bool:
    """Exhaustive chordality: does any vertex permutation form a perfect
    elimination order?  Searched front-to-back with memoization on the
    remaining vertex set, which enumerates exactly the orders the
    definition quantifies over."""
    if g.n > _ORACLE_MAX:
        raise GraphTooLargeError(f"oracle capped at {_ORACLE_MAX} vertices")
    masks = g.masks
    full = (1 << g.n) - 1
    seen: dict[int, bool] = {}

    def simplicial(v: int, alive: int) -> bool:
        nbrs = masks[v] & alive
        rest = nbrs
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if (nbrs & ~low) & ~masks[u]:
                return False
        return True

    def solvable(alive: int) -> bool:
        if alive == 0:
            return True
        if alive in seen:
            return seen[alive]
        rest = alive
        result = False
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if simplicial(v, alive & ~low) and solvable(alive & ~low):
                result = True
                break
        seen[alive] = result
        return result

    return solvable(full)


def oracle_find_at(g: UndirectedGraph) -> AsteroidalTriple | None:
    """Definitional asteroidal-triple search: for each pairwise non-adjacent
    triple, enumerate simple paths between each pair and test that some
    path avoids the closed neighborhood of the third."""
    if g.n > _ORACLE_MAX:
        raise GraphTooLargeError(f"oracle capped at {_ORACLE_MAX} vertices")

    def path_avoiding(a: int, b: int, banned: frozenset[int]) -> bool:
        if a in banned or b in banned:
            return False

        def dfs(x: int, visited: set[int]) -> bool:
            if x == b:
                return True
            for y in sorted(g.adj[x]):
                if y not in visited and y not in banned:
                    visited.add(y)
                    if dfs(y, visited):
                        return True
                    visited.remove(y)
            return False

        return dfs(a, {a})

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v in g.adj[u]:
                continue
            for w in range(v + 1, g.n):
                if w in g.adj[u] or w in g.adj[v]:
                    continue
                if (path_avoiding(u, v, frozenset(g.adj[w] | {w}))
                        and path_avoiding(u, w, frozenset(g.adj[v] | {v}))
                        and path_avoiding(v, w, frozenset(g.adj[u] | {u}))):
                    return AsteroidalTriple(u, v, w)
    return None


# ---------------------------------------------------------------------------
# Open-question search: a chordal niche graph that is not interval.


@dataclass
class SearchHit:
    index: int
    points: tuple[Point, ...]
    asteroidal_triple: AsteroidalTriple
    triangle: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "points": [
                {"x": render_rational(p.x1), "y": render_rational(p.x2)}
                for p in self.points
            ],
            "asteroidal_triple": [
                self.asteroidal_triple.u,
                self.asteroidal_triple.v,
                self.asteroidal_triple.w,
            ],
            "triangle": list(self.triangle),
        }


@dataclass
class SearchReport:
    config: GeneratorConfig
    trials: int
    hits: list[SearchHit] = field(default_factory=list)
    chordal: int = 0
    triangle_free: int = 0

    def summary_json(self) -> dict:
        note = (
            "zero hits is evidence of absence at these sizes, not proof"
            if not self.hits else
            "every hit re-verified: chordal, asteroidal triple present, "
            "triangle present"
        )
        return {
            "seed": self.config.seed,
            "trials": self.trials,
            "hits": len(self.hits),
            "chordal": self.chordal,
            "triangle_free": self.triangle_free,
            "note": note,
        }


def search_chordal_noninterval(cfg: GeneratorConfig) -> SearchReport:
    """Scan seeded niche graphs for one that is chordal yet not interval.

    Each hit is re-verified before being recorded (chordal, asteroidal
    triple present, and triangle present, the last being forced for any
    non-interval niche graph)."""
    report = SearchReport(config=cfg, trials=cfg.trials)
    for index in range(cfg.trials):
        d = random_dpo(cfg, index)
        graph = niche_graph(d)
        if is_triangle_free(graph):
            report.triangle_free += 1
        if not is_chordal(graph):
            continue
        report.chordal += 1
        at = find_asteroidal_triple(graph)
        if at is None:
            continue
        # Re-verify the flag from scratch before recording it.
        if find_hole(graph) is not None:
            raise AssertionError("hole in a graph the recognizer called chordal")
        triangle = find_triangle(graph)
        if triangle is None:
            raise AssertionError(
                "chordal non-interval niche graph without a triangle "
                "(triangle-free niche graphs are disjoint unions of paths, "
                "so a non-interval one cannot be triangle-free)"
            )
        report.hits.append(
            SearchHit(
                index=index,
                points=d.point_set.points,
                asteroidal_triple=at,
                triangle=triangle,
            )
        )
    return report
