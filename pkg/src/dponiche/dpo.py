"""Dominance digraphs over finite point sets and prey/predator queries."""

from collections.abc import Iterable, Iterator
from math import lcm

from dponiche.geom import Point, max_corner, min_corner, strictly_below


class DuplicatePointError(ValueError):
    """The input contains two equal points; vertex sets must be sets."""


class UnknownVertexError(KeyError):
    """A vertex id or point that does not belong to the point set."""


class PointSet:
    """Distinct points in canonical (lexicographic) order.

    A point's position in the sorted sequence is its vertex id, so ids are
    stable under permutation of the input and under re-parsing.
    """

    __slots__ = ("points", "_index", "_scaled")

    def __init__(self, points: Iterable[Point]):
        pts = sorted(points)
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise DuplicatePointError(f"duplicate point {a}")
        self.points = tuple(pts)
        self._index = {p: i for i, p in enumerate(self.points)}
        self._scaled = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p: Point) -> bool:
        return p in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({list(self.points)!r})"

    def index_of(self, p: Point) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise UnknownVertexError(f"point {p} not in set") from None

    def scaled_coords(self) -> tuple[list[int], list[int]]:
        """Integer coordinates preserving every same-axis comparison.

        Each axis is multiplied by the lcm of its denominators, so the
        dominance and staircase relations computed on the scaled integers
        agree exactly with the rational originals.
        """
        if self._scaled is None:
            f1 = lcm(*(p.x1.denominator for p in self.points)) if self.points else 1
            f2 = lcm(*(p.x2.denominator for p in self.points)) if self.points else 1
            x1 = [int(p.x1 * f1) for p in self.points]
            x2 = [int(p.x2 * f2) for p in self.points]
            self._scaled = (x1, x2)
        return self._scaled


class Dpo:
    """The dominance digraph of a point set: arc (v, x) iff x is strictly
    below v in both coordinates.  Arcs are kept as per-vertex prey lists;
    the O(n^2) build is fine at the scales this library targets."""

    __slots__ = ("point_set", "_prey")

    def __init__(self, point_set: PointSet):
        self.point_set = point_set
        pts = point_set.points
        self._prey = tuple(
            tuple(i for i, p in enumerate(pts) if strictly_below(p, v))
            for v in pts
        )

    @property
    def n(self) -> int:
        return len(self.point_set)

    def point(self, v: int) -> Point:
        self._check(v)
        return self.point_set.points[v]

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertexError(f"vertex id {v!r} out of range")

    def prey_of(self, v: int) -> frozenset[int]:
        """All vertices strictly dominated by v."""
        self._check(v)
        return frozenset(self._prey[v])

    def predators_of(self, v: int) -> frozenset[int]:
        """All vertices strictly dominating v."""
        self._check(v)
        p = self.point_set.points[v]
        return frozenset(
            i for i, q in enumerate(self.point_set.points) if strictly_below(p, q)
        )

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs (predator, prey)."""
        for v, prey in enumerate(self._prey):
            for x in prey:
                yield (v, x)

    def has_common_prey(self, u: int, v: int) -> bool:
        """Region test: some vertex lies strictly below the min corner of u, v."""
        corner = self._corner_pair(u, v)[0]
        return any(strictly_below(p, corner) for p in self.point_set.points)

    def has_common_predator(self, u: int, v: int) -> bool:
        """Region test: some vertex lies strictly above the max corner of u, v."""
        corner = self._corner_pair(u, v)[1]
        return any(strictly_below(corner, p) for p in self.point_set.points)

    def _corner_pair(self, u: int, v: int) -> tuple[Point, Point]:
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("u and v must be distinct vertices")
        pu = self.point_set.points[u]
        pv = self.point_set.points[v]
        return min_corner(pu, pv), max_corner(pu, pv)


def build_dpo(points: Iterable[Point]) -> Dpo:
    """Build the dominance digraph over the distinct sorted points."""
    return Dpo(PointSet(points))
