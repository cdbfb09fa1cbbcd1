"""Exact geometric predicates on integer coordinates.

Every predicate works on Python integers, so determinants are computed
exactly. Floating point never enters a decision made by this package.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from ..shared.exceptions import HullValidationError

COORD_BITS = 62
COORD_LIMIT = 1 << COORD_BITS

# Any y-difference inside the coordinate bound is smaller than this, so
# x * SHEAR + y orders points exactly like the (x, y) tuple does.
SHEAR = 1 << (COORD_BITS + 1)

# sheared abscissa: exact, rational where two edges cross
Abscissa = int | Fraction


class Point(NamedTuple):
    """Planar point with integer coordinates. Tuple order is lexicographic."""

    x: int
    y: int


class Turn(Enum):
    """Orientation of an ordered point triple."""

    LEFT = "left"
    RIGHT = "right"
    COLLINEAR = "collinear"


@dataclass(frozen=True, slots=True)
class LineEq:
    """The line a·x + b·y = c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0:
            raise HullValidationError("line needs (a, b) != (0, 0)")


@dataclass(frozen=True, slots=True)
class Direction:
    """A nonzero query direction."""

    dx: int
    dy: int

    def __post_init__(self) -> None:
        if self.dx == 0 and self.dy == 0:
            raise HullValidationError("direction must be nonzero")

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)


def check_point(p: Point) -> Point:
    """Reject coordinates outside the supported bound."""
    if not (-COORD_LIMIT < p.x < COORD_LIMIT and -COORD_LIMIT < p.y < COORD_LIMIT):
        raise HullValidationError(
            f"coordinates of {tuple(p)} exceed the {COORD_BITS}-bit bound"
        )
    return p


def sign(value: int | Fraction) -> int:
    return (value > 0) - (value < 0)


def cross(a: Point, b: Point, c: Point) -> int:
    """(b − a) × (c − a)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: Point, b: Point, c: Point) -> Turn:
    """Classify the turn a → b → c."""
    det = cross(a, b, c)
    if det > 0:
        return Turn.LEFT
    if det < 0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def right_turn(a: Point, b: Point, c: Point) -> bool:
    """True iff a → b → c turns strictly clockwise (b is a convex upper vertex)."""
    return cross(a, b, c) < 0


def vertically_below(p: Point, s: tuple[Point, Point]) -> bool:
    """True iff the vertical line through p meets segment s at or above p."""
    a, b = s
    if a.x > b.x:
        a, b = b, a
    if not a.x <= p.x <= b.x:
        return False
    if a.x == b.x:
        return p.y <= max(a.y, b.y)
    # p is on or right of a→b exactly when it is on or below the segment
    return cross(a, b, p) <= 0


def side_of_line(line: LineEq, p: Point) -> int:
    """Sign of a·x + b·y − c at p."""
    return sign(line.a * p.x + line.b * p.y - line.c)


def dot_sign(d: Direction, a: Point, b: Point) -> int:
    """Sign of d·(b − a): positive when b is further than a along d."""
    return sign(d.dx * (b.x - a.x) + d.dy * (b.y - a.y))


def squared_distance(a: Point, b: Point) -> int:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def sheared_x(p: Point) -> int:
    """Abscissa after the shear that makes lexicographic order an x-order."""
    return p.x * SHEAR + p.y


def chain_height(a: Point, b: Point, xs: Abscissa) -> Fraction:
    """Exact ordinate of segment a–b at sheared abscissa ``xs``.

    The shear keeps ordinates, so the value is the y of the point of the
    segment whose sheared abscissa is ``xs``. Requires a <lex b and ``xs``
    inside the segment's sheared range.
    """
    xa = sheared_x(a)
    xb = sheared_x(b)
    if xa == xb:
        return Fraction(a.y)
    return a.y + Fraction((b.y - a.y) * (xs - xa), xb - xa)


def line_crossing(a: Point, b: Point, c: Point, d: Point) -> Fraction | None:
    """Sheared abscissa where line a–b meets line c–d; None if parallel.

    Requires a <lex b and c <lex d.
    """
    xa, xb = sheared_x(a), sheared_x(b)
    xc, xd = sheared_x(c), sheared_x(d)
    s1 = Fraction(b.y - a.y, xb - xa)
    s2 = Fraction(d.y - c.y, xd - xc)
    if s1 == s2:
        return None
    return (c.y - a.y + s1 * xa - s2 * xc) / (s1 - s2)


def lex_less(a: Point, b: Point) -> bool:
    """Strict lexicographic order: by x, then by y."""
    return a.x < b.x or (a.x == b.x and a.y < b.y)
