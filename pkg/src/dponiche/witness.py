"""Point families whose niche graphs contain an induced n-cycle, with
machine-checkable certificates.

For each n >= 4 the family has 4k points (k = n // 2): a zigzag strip of
lattice points between two adjacent diagonals, off-lattice third-offset
points wedged inside the strip, and two three-point diagonal runs capping
the ends.  The strip's lattice points plus the cap points, in the right
order, traverse an induced cycle of length n in the niche graph; the
certificate records a prey/predator witness for every cycle edge and an
empty-region token for every non-edge.
"""

from dataclasses import dataclass
from fractions import Fraction

from dponiche.derive import UndirectedGraph, niche_graph
from dponiche.dpo import Dpo, PointSet
from dponiche.geom import (
    Point,
    is_lattice,
    max_corner,
    min_corner,
    strictly_below,
)
from dponiche.graphalg import verify_induced_cycle

THIRD = Fraction(1, 3)


class NonLatticePointError(ValueError):
    """A construction input that must be a lattice point is not."""


class CertificationError(RuntimeError):
    """The declared cycle failed verification against the derived graph."""


def diagonal_triple(center: Point) -> frozenset[Point]:
    """Three consecutive lattice points on the diagonal through `center`."""
    if not is_lattice(center):
        raise NonLatticePointError(f"center {center} is not a lattice point")
    i, j = center.x1, center.x2
    return frozenset({Point(i - 1, j - 1), center, Point(i + 1, j + 1)})


def zigzag_strip(k: int) -> tuple[frozenset[Point], frozenset[Point]]:
    """(lattice part, off-lattice part) of the width-two diagonal strip.

    The lattice part zigzags between the diagonals of coordinate sum k-1
    and k+1; the off-lattice part places third-offset points strictly
    between those diagonals (empty for k = 2).
    """
    if k < 2:
        raise ValueError(f"strip needs k >= 2, got {k}")
    lattice = frozenset(
        p
        for i in range(k - 1)
        for p in (Point(i, k - 1 - i), Point(i + 1, k - i))
    )
    offsets = frozenset(
        p
        for i in range(1, k - 1)
        for p in (
            Point(i - THIRD, k - i - THIRD),
            Point(i + THIRD, k - i + THIRD),
        )
    )
    return lattice, offsets


def path_sequence(k: int) -> tuple[Point, ...]:
    """The 2k-1 strip lattice points plus (0, k), ordered so consecutive
    points are niche-adjacent: up the lower diagonal, over the top at
    (0, k), and back down the upper diagonal."""
    if k < 2:
        raise ValueError(f"sequence needs k >= 2, got {k}")
    lower = [Point(i, k - 1 - i) for i in range(k - 2, -1, -1)]
    upper = [Point(i + 1, k - i) for i in range(k - 1)]
    return tuple(lower) + (Point(0, k),) + tuple(upper)


def path_family(k: int) -> PointSet:
    """The strip plus its top cap: the family whose niche graph realizes
    path_sequence as an induced path."""
    lattice, offsets = zigzag_strip(k)
    return PointSet(diagonal_triple(Point(0, k)) | lattice | offsets)


@dataclass(frozen=True)
class WitnessBundle:
    """A witness family together with its declared induced cycle."""

    n: int
    k: int
    parity: str  # "even" | "odd"
    point_set: PointSet
    cycle: tuple[Point, ...]
    path_order: tuple[Point, ...]
    head_triple: frozenset[Point]
    tail_triple: frozenset[Point]
    strip_lattice: frozenset[Point]
    strip_offsets: frozenset[Point]


def witness_points(n: int) -> WitnessBundle:
    """The 4k-point family whose niche graph contains an induced n-cycle."""
    if n < 4:
        raise ValueError(f"witness families start at n = 4, got {n}")
    k = n // 2
    strip_lattice, strip_offsets = zigzag_strip(k)
    head = diagonal_triple(Point(0, k))
    if n % 2 == 0:
        tail = diagonal_triple(Point(k - 1, 1))
        closing = (Point(k - 1, 1),)
    else:
        tail = diagonal_triple(Point(k + 1, 1))
        closing = (Point(k + 2, 2), Point(k + 1, 1))
    parts = (head, tail, strip_lattice, strip_offsets)
    points = PointSet(frozenset().union(*parts))
    if sum(len(part) for part in parts) != len(points) or len(points) != 4 * k:
        raise CertificationError(f"witness parts overlap for n={n}")
    path = path_sequence(k)
    return WitnessBundle(
        n=n,
        k=k,
        parity="even" if n % 2 == 0 else "odd",
        point_set=points,
        cycle=path + closing,
        path_order=path,
        head_triple=head,
        tail_triple=tail,
        strip_lattice=strip_lattice,
        strip_offsets=strip_offsets,
    )


@dataclass(frozen=True)
class EdgeWitness:
    """Why a cycle edge exists: a shared prey or shared predator point."""

    u: Point
    v: Point
    kind: str  # "prey" | "predator"
    witness: Point


@dataclass(frozen=True)
class NonEdgeToken:
    """Why a cycle chord is absent: both adjacency regions are empty.

    No family point lies strictly below `below` nor strictly above `above`;
    a re-checker only needs these two corners to re-scan the regions.
    """

    u: Point
    v: Point
    below: Point
    above: Point


@dataclass(frozen=True)
class WitnessCertificate:
    """A verified induced cycle in the niche graph of a witness family."""

    bundle: WitnessBundle
    edge_witnesses: tuple[EdgeWitness, ...]
    non_edge_tokens: tuple[NonEdgeToken, ...]

    @property
    def n(self) -> int:
        return self.bundle.n

    @property
    def cycle(self) -> tuple[Point, ...]:
        return self.bundle.cycle


def _edge_witness(points: PointSet, u: Point, v: Point) -> tuple[str, Point] | None:
    lo = min_corner(u, v)
    prey = sorted(p for p in points if strictly_below(p, lo))
    if prey:
        return "prey", prey[0]
    hi = max_corner(u, v)
    predators = sorted(p for p in points if strictly_below(hi, p))
    if predators:
        return "predator", predators[0]
    return None


def cycle_violations(n: int) -> tuple[tuple[Point, Point, str], ...]:
    """Adjacency defects of the declared cycle in the niche graph: missing
    cycle edges and chords, as (u, v, "missing-edge" | "chord") triples."""
    bundle = witness_points(n)
    graph = niche_graph(Dpo(bundle.point_set))
    ids = tuple(bundle.point_set.index_of(p) for p in bundle.cycle)
    m = len(ids)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            expected = (j - i == 1) or (i == 0 and j == m - 1)
            actual = ids[j] in graph.adj[ids[i]]
            if actual != expected:
                kind = "chord" if actual else "missing-edge"
                out.append((bundle.cycle[i], bundle.cycle[j], kind))
    return tuple(out)


def certify_witness(n: int) -> WitnessCertificate:
    """Build the witness family for n, verify the declared cycle is induced
    in its niche graph, and attach per-edge witnesses and per-non-edge
    empty-region tokens.  Raises CertificationError if verification fails.

    The even families all certify; the odd families as constructed do NOT
    (the strip's off-lattice points are common prey of an interior cycle
    vertex and the tail cap), and certification reports the exact chords.
    """
    bundle = witness_points(n)
    graph = niche_graph(Dpo(bundle.point_set))
    ids = tuple(bundle.point_set.index_of(p) for p in bundle.cycle)
    if not verify_induced_cycle(graph, ids):
        defects = ", ".join(
            f"{kind} {u}-{v}" for u, v, kind in cycle_violations(n)
        )
        raise CertificationError(
            f"declared cycle for n={n} is not induced: {defects}"
        )

    edge_witnesses = []
    m = len(bundle.cycle)
    for i in range(m):
        u = bundle.cycle[i]
        v = bundle.cycle[(i + 1) % m]
        found = _edge_witness(bundle.point_set, u, v)
        if found is None:
            raise CertificationError(
                f"cycle edge {u}-{v} has no witness for n={n}"
            )
        kind, point = found
        edge_witnesses.append(EdgeWitness(u=u, v=v, kind=kind, witness=point))

    tokens = []
    for i in range(m):
        for j in range(i + 1, m):
            if j - i == 1 or (i == 0 and j == m - 1):
                continue
            u, v = bundle.cycle[i], bundle.cycle[j]
            tokens.append(
                NonEdgeToken(u=u, v=v, below=min_corner(u, v), above=max_corner(u, v))
            )
    return WitnessCertificate(
        bundle=bundle,
        edge_witnesses=tuple(edge_witnesses),
        non_edge_tokens=tuple(tokens),
    )


def witness_niche_graph(n: int) -> UndirectedGraph:
    """Convenience: the niche graph of the witness family for n."""
    return niche_graph(Dpo(witness_points(n).point_set))
