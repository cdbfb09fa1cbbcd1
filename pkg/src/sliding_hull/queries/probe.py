"""Counted access to the exact predicates.

Queries evaluate predicates only through a ``ProbeCounter`` so the number
of evaluations per query can be checked against its logarithmic bound.
"""

from ..geometry.predicates import (
    Abscissa,
    Direction,
    LineEq,
    Point,
    Turn,
    dot_sign,
    lex_less,
    orient,
    side_of_line,
)


class ProbeCounter:
    """Counts every predicate evaluation made through it."""

    def __init__(self) -> None:
        self.count = 0

    def orient(self, a: Point, b: Point, c: Point) -> Turn:
        self.count += 1
        return orient(a, b, c)

    def side(self, line: LineEq, p: Point) -> int:
        self.count += 1
        return side_of_line(line, p)

    def dot(self, d: Direction, a: Point, b: Point) -> int:
        self.count += 1
        return dot_sign(d, a, b)

    def lex_less(self, a: Point, b: Point) -> bool:
        self.count += 1
        return lex_less(a, b)

    def x_less(self, a: Abscissa, b: Abscissa) -> bool:
        self.count += 1
        return a < b

    def tally(self, n: int = 1) -> None:
        """Account for predicate work done outside the helpers above."""
        self.count += n
