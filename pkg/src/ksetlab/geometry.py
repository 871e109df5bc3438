"""
Exact planar kernel: rational points, non-vertical lines, orientation and the
point/line duality (a, b) <-> y = a*x - b.

Every decision in ksetlab goes through this module and uses Fraction arithmetic only.
Under this duality a point p lies strictly below a line L exactly when the dual line of p
passes strictly above the dual point of L.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    CoincidentLinesError,
    DegenerateSegmentError,
    ParallelLinesError,
    VerticalLineError,
)

Rat = Fraction
RatLike = Union[Fraction, int, str]


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction; floats are refused"""
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not accepted, use Fraction or 'p/q'")
    return Fraction(value)


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True, order=True)
class Point:
    """Point with exact rational coordinates, ordered lexicographically by (x, y)"""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))

    def translate(self, dx: RatLike, dy: RatLike) -> "Point":
        return Point(self.x + as_rat(dx), self.y + as_rat(dy))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Line:
    """Non-vertical line y = a*x - b"""
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rat(self.a))
        object.__setattr__(self, "b", as_rat(self.b))

    @property
    def slope(self) -> Fraction:
        return self.a

    def at(self, x: RatLike) -> Fraction:
        return self.a * x - self.b

    def side_of(self, p: Point) -> int:
        """+1 if p is strictly above the line, -1 if strictly below, 0 if on it"""
        return sign(p.y - self.at(p.x))

    def contains(self, p: Point) -> bool:
        return self.side_of(p) == 0

    def dual_point(self) -> Point:
        """The point whose dual line is this line"""
        return Point(self.a, self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return f"y = {self.a}x"
        op = "-" if self.b > 0 else "+"
        return f"y = {self.a}x {op} {abs(self.b)}"


@dataclass(frozen=True)
class Segment:
    """Closed segment with endpoints stored in (x, y) order"""
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise DegenerateSegmentError(f"segment endpoints coincide at {self.p}")
        if self.q < self.p:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    def supporting_line(self) -> Line:
        return line_through(self.p, self.q)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear"""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def dualize_point(p: Point) -> Line:
    """Primal point (a, b) to the dual line y = a*x - b"""
    return Line(p.x, p.y)


def dualize_line(v: Point) -> Line:
    """Dual point (a', b') back to the primal line y = a'*x - b'"""
    return Line(v.x, v.y)


def line_through(p: Point, q: Point) -> Line:
    if p.x == q.x:
        raise VerticalLineError(f"points {p} and {q} share x = {p.x}")
    a = (q.y - p.y) / (q.x - p.x)
    return Line(a, a * p.x - p.y)


def intersect(l1: Line, l2: Line) -> Point:
    if l1.a == l2.a:
        if l1.b == l2.b:
            raise CoincidentLinesError(f"lines coincide: {l1}")
        raise ParallelLinesError(f"lines are parallel: {l1} and {l2}")
    x = (l1.b - l2.b) / (l1.a - l2.a)
    return Point(x, l1.at(x))


def segments_properly_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the segments meet in a single point interior to both"""
    o1 = orient(s1.p, s1.q, s2.p)
    o2 = orient(s1.p, s1.q, s2.q)
    o3 = orient(s2.p, s2.q, s1.p)
    o4 = orient(s2.p, s2.q, s1.q)
    return o1 * o2 < 0 and o3 * o4 < 0


def crossing_point(s1: Segment, s2: Segment) -> Point:
    """Intersection of two properly crossing segments"""
    l1, l2 = s1.supporting_line(), s2.supporting_line()
    return intersect(l1, l2)
