"""Exact 2D primitives and predicates.

Coordinates are exact rationals.  Integral values are kept as Python ints
(the common case in traces) and everything else as ``fractions.Fraction``;
the two interoperate transparently in arithmetic and comparisons, so every
predicate below is exact.

Degeneracies involving vertical lines are removed by a symbolic shear,
conceptually mapping (x, y) to (x + eps*y, y) for an infinitesimal eps > 0.
Under the shear no two distinct points share an abscissa, so comparing
sheared abscissas of points is exactly lexicographic (x, then y) order.
All "vertical ray" logic in this package relies on that convention.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Union

Coord = Union[int, Fraction]


class Orientation(enum.Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def parse_coord(text: str) -> Coord:
    """Parse a decimal or 'p/q' rational literal into an exact coordinate."""
    text = text.strip()
    if "/" in text:
        value = Fraction(text)
    elif "." in text or "e" in text or "E" in text:
        value = Fraction(text)
    else:
        return int(text)
    if value.denominator == 1:
        return int(value)
    return value


def coord_str(value: Coord) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


class Point(NamedTuple):
    """A point; tuple comparison gives the sheared-abscissa (lex) order."""

    x: Coord
    y: Coord

    def __str__(self) -> str:
        return f"({coord_str(self.x)}, {coord_str(self.y)})"


def orient_sign(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p): 1 left, -1 right, 0 on."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def orient(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient_sign(p, q, r))


class Segment:
    """A closed segment with distinct endpoints, stored with a < b in lex
    order.  Subdivision edges are its open interior; the endpoints are
    vertices."""

    __slots__ = ("a", "b")

    def __init__(self, p: Point, q: Point):
        if p == q:
            raise ValueError(f"degenerate segment at {p}")
        if p < q:
            self.a, self.b = p, q
        else:
            self.a, self.b = q, p

    def key(self) -> tuple:
        return (self.a, self.b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Segment) and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Segment({self.a}, {self.b})"

    @property
    def is_vertical(self) -> bool:
        return self.a.x == self.b.x

    def y_at(self, x: Coord) -> Coord:
        """Exact height of the supporting line at abscissa x (non-vertical)."""
        ax, ay, bx, by = self.a.x, self.a.y, self.b.x, self.b.y
        return ay + Fraction(by - ay, bx - ax) * (x - ax)

    def midpoint(self) -> Point:
        return Point(
            Fraction(self.a.x + self.b.x, 2),
            Fraction(self.a.y + self.b.y, 2),
        )


def point_in_open_segment(p: Point, s: Segment) -> bool:
    """True iff p lies strictly between s's endpoints on s."""
    if p <= s.a or p >= s.b:
        return False
    return orient_sign(s.a, s.b, p) == 0


def point_on_closed_segment(p: Point, s: Segment) -> bool:
    if p == s.a or p == s.b:
        return True
    return point_in_open_segment(p, s)


def segments_interact(s1: Segment, s2: Segment) -> bool:
    """True iff s1 and s2 share any point other than a common endpoint.

    This is the validity predicate for edge insertion: edges of a
    subdivision must be interior-disjoint, touching at most at shared
    vertices.
    """
    a, b = s1.a, s1.b
    c, d = s2.a, s2.b
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)
    if o1 != o2 and o3 != o4:
        # Proper or T-shaped crossing; shared endpoints give a zero on each
        # side and are filtered below.
        shared = (a == c) or (a == d) or (b == c) or (b == d)
        if not shared:
            return True
        # Sharing an endpoint: interaction iff the other endpoint of one
        # lies on the other segment's interior.
        return (
            point_in_open_segment(a, s2)
            or point_in_open_segment(b, s2)
            or point_in_open_segment(c, s1)
            or point_in_open_segment(d, s1)
        )
    if o1 == 0 and o2 == 0:
        # Collinear: overlap iff the lex intervals overlap in more than a point.
        lo = max(a, c)
        hi = min(b, d)
        return lo < hi
    # Non-collinear with at most one zero: check endpoint-on-interior cases.
    return (
        point_in_open_segment(c, s1)
        or point_in_open_segment(d, s1)
        or point_in_open_segment(a, s2)
        or point_in_open_segment(b, s2)
    )


def slope_cmp(s1: Segment, s2: Segment) -> int:
    """Compare slopes; vertical counts as +infinity.  Returns -1/0/1."""
    d1x, d1y = s1.b.x - s1.a.x, s1.b.y - s1.a.y
    d2x, d2y = s2.b.x - s2.a.x, s2.b.y - s2.a.y
    if d1x == 0 and d2x == 0:
        return 0
    if d1x == 0:
        return 1
    if d2x == 0:
        return -1
    lhs = d1y * d2x
    rhs = d2y * d1x
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def compare_above_at(s1: Segment, s2: Segment, x: Coord) -> int:
    """Order s1 vs s2 by height at abscissa x: -1 if s1 below s2, 1 if above,
    0 if identical.

    Both segments' x-spans must contain x.  Interior-disjoint segments can
    only tie at a shared endpoint lying at abscissa x; there slope order is
    used (diverging rightward: smaller slope is lower; converging leftward:
    larger slope is lower).
    """
    if s1 is s2 or s1 == s2:
        return 0
    h1 = s1.a.y if s1.is_vertical else s1.y_at(x)
    h2 = s2.a.y if s2.is_vertical else s2.y_at(x)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    w = Point(x, h1)
    if s1.a == w and s2.a == w:
        return slope_cmp(s1, s2)
    if s1.b == w and s2.b == w:
        return -slope_cmp(s1, s2)
    raise ValueError(
        f"compare_above_at precondition violated for {s1} vs {s2} at x={x}"
    )


def strictly_above(s: Segment, p: Point) -> bool:
    """True iff s crosses the sheared upward ray from p strictly above p.

    Requires the sheared x-span [a, b) of s to contain p; a segment that
    contains p itself is not above it.
    """
    return orient_sign(s.a, s.b, p) == -1


def span_contains(s: Segment, p: Point) -> bool:
    """Half-open sheared x-span test: a <= p < b in lex order."""
    return s.a <= p < s.b


def shoot_hits(s: Segment, p: Point) -> bool:
    return span_contains(s, p) and strictly_above(s, p)


def lower_hit(s1: Segment, s2: Segment, p: Point) -> Segment:
    """Of two segments hit by the upward ray from p, the one hit first."""
    h1 = s1.y_at(p.x)
    h2 = s2.y_at(p.x)
    if h1 != h2:
        return s1 if h1 < h2 else s2
    # Heights tie only at a common right endpoint directly above p; the
    # sheared ray, leaning left, meets the steeper segment first.
    return s1 if slope_cmp(s1, s2) > 0 else s2


def angle_cmp(d1x: Coord, d1y: Coord, d2x: Coord, d2y: Coord) -> int:
    """Compare direction vectors by CCW angle from the positive x-axis."""
    h1 = 0 if (d1y > 0 or (d1y == 0 and d1x > 0)) else 1
    h2 = 0 if (d2y > 0 or (d2y == 0 and d2x > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cross = d1x * d2y - d1y * d2x
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0
