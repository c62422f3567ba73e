"""Exact rational plane geometry and the order relations on points.

All coordinates are exact fractions: the constructions this library works
with place points at third-integer offsets, and adjacency depends on exact
strict/weak inequalities, so floating point is never used.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

# Exact rational scalar; Fraction already keeps the canonical reduced form
# with a positive denominator.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical textual form "a" or "a/b" (b > 0, reduced)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(int(m.group(1)), int(m.group(2) or 1))
    if render_rational(value) != text:
        raise ValueError(f"rational literal not in reduced form: {text!r}")
    return value


def render_rational(value: Fraction) -> str:
    """Inverse of parse_rational: "a" for integers, "a/b" otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True, repr=False)
class Point:
    """A point of the rational plane.

    Ordering is lexicographic by (x1, x2), which is the canonical vertex
    order used everywhere downstream.
    """

    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        for name in ("x1", "x2"):
            value = getattr(self, name)
            if isinstance(value, float):
                raise TypeError("Point coordinates must be exact; got a float")
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    def __repr__(self) -> str:
        return f"({render_rational(self.x1)},{render_rational(self.x2)})"


def strictly_below(x: Point, y: Point) -> bool:
    """x is strictly dominated by y: both coordinates strictly smaller."""
    return x.x1 < y.x1 and x.x2 < y.x2


def staircase(x: Point, y: Point) -> bool:
    """Down-right order: y is weakly right of and weakly below x."""
    return x.x1 <= y.x1 and y.x2 <= x.x2


def weakly_below(x: Point, y: Point) -> bool:
    """Weak dominance: both coordinates weakly smaller."""
    return x.x1 <= y.x1 and x.x2 <= y.x2


def min_corner(x: Point, y: Point) -> Point:
    """Componentwise minimum; anything strictly below it is a common prey."""
    return Point(min(x.x1, y.x1), min(x.x2, y.x2))


def max_corner(x: Point, y: Point) -> Point:
    """Componentwise maximum; anything strictly above it is a common predator."""
    return Point(max(x.x1, y.x1), max(x.x2, y.x2))


def is_lattice(p: Point) -> bool:
    """True iff both coordinates are integers."""
    return p.x1.denominator == 1 and p.x2.denominator == 1


def diagonal_sum(p: Point) -> Fraction:
    """x1 + x2: identifies the downward diagonal through p."""
    return p.x1 + p.x2


@dataclass(frozen=True)
class DiagonalLine:
    """The line of all points with coordinate sum c."""

    c: Fraction

    def contains(self, p: Point) -> bool:
        return diagonal_sum(p) == self.c
