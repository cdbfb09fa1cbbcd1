"""Convex polygons seen as two lexicographically monotone chains.

Both the live hull and a caller's query polygon are read through
``ChainPolygon``: a lower chain and an upper chain, each running from the
lexicographically smallest vertex to the largest. Ordering by (x, y)
instead of x alone is the same as shearing the plane so no edge is
vertical, which lets the hull algorithms accept polygons with vertical
edges unchanged.
"""

from bisect import bisect_left
from collections.abc import Callable, Iterable, Sequence

from ..engine.window import HullWindow
from ..geometry.predicates import Point, Turn, check_point, orient
from ..shared.exceptions import EmptyWindowError, HullValidationError
from .probe import ProbeCounter


def first_true(lo: int, hi: int, pred: Callable[[int], bool]) -> int:
    """Smallest i in [lo, hi) with ``pred(i)``, or ``hi``. ``pred`` must be monotone."""
    return lo + bisect_left(range(lo, hi), True, key=pred)


class ChainPolygon:
    """Read-only two-chain view of a convex polygon.

    ``lower`` runs counterclockwise from the lexicographic minimum to the
    maximum, ``upper`` clockwise between the same two vertices. Indexing the
    polygon itself walks the boundary counterclockwise from the minimum.
    """

    def __init__(self, upper: Sequence[Point], lower: Sequence[Point]):
        self.upper = upper
        self.lower = lower

    @classmethod
    def of_window(cls, window: HullWindow) -> "ChainPolygon":
        if not len(window):
            raise EmptyWindowError("query on an empty window")
        return cls(window.upper_seq, window.lower_seq)

    def __len__(self) -> int:
        if len(self.lower) == 1:
            return 1
        return len(self.lower) + len(self.upper) - 2

    def __getitem__(self, i: int) -> Point:
        n = len(self)
        i %= n
        if i < len(self.lower):
            return self.lower[i]
        return self.upper[len(self.lower) + len(self.upper) - 2 - i]

    def upper_ccw(self, j: int) -> int:
        """Counterclockwise index of ``upper[j]``."""
        return (len(self.lower) + len(self.upper) - 2 - j) % len(self)

    @property
    def lexmin(self) -> Point:
        return self.lower[0]

    @property
    def lexmax(self) -> Point:
        return self.lower[-1]

    def vertices(self) -> list[Point]:
        return [self[i] for i in range(len(self))]


class ConvexPolygon(ChainPolygon):
    """A validated, strictly convex query polygon."""

    def __init__(self, ring: Sequence[Point]):
        top = max(range(len(ring)), key=ring.__getitem__)
        lower = list(ring[: top + 1])
        upper = [ring[0], *reversed(ring[top:])] if len(ring) > 1 else [ring[0]]
        super().__init__(upper, lower)
        self.ring = tuple(ring)

    @classmethod
    def from_vertices(cls, points: Iterable[tuple[int, int]]) -> "ConvexPolygon":
        """Validate a counterclockwise vertex list in O(n).

        Raises:
            HullValidationError: If the list is empty, repeats a vertex, is not
                strictly convex and counterclockwise, or leaves the coordinate
                bound
        """
        pts = [check_point(Point(*p)) for p in points]
        n = len(pts)
        if not n:
            raise HullValidationError("polygon needs at least one vertex")
        if len(set(pts)) != n:
            raise HullValidationError("polygon repeats a vertex")

        start = min(range(n), key=pts.__getitem__)
        ring = pts[start:] + pts[:start]
        if n >= 3:
            for i in range(n):
                if orient(ring[i - 1], ring[i], ring[(i + 1) % n]) is not Turn.LEFT:
                    raise HullValidationError(
                        f"polygon is not strictly convex and counterclockwise at "
                        f"{tuple(ring[i])}"
                    )
            # all left turns but winding more than once still fails this
            top = max(range(n), key=ring.__getitem__)
            rising = all(ring[i] < ring[i + 1] for i in range(top))
            falling = all(ring[i] > ring[i + 1] for i in range(top, n - 1))
            if not (rising and falling):
                raise HullValidationError("polygon boundary is not simple")
        return cls(ring)


def bracket(chain: Sequence[Point], v: Point, probe: ProbeCounter) -> int:
    """Index i of the chain edge (chain[i], chain[i+1]) whose lexicographic
    span contains ``v``; 0 for a one-vertex chain."""
    if len(chain) < 2:
        return 0
    i = first_true(0, len(chain) - 1, lambda k: not probe.lex_less(chain[k + 1], v))
    return min(i, len(chain) - 2)


def as_polygon(target: HullWindow | ChainPolygon) -> ChainPolygon:
    """The two-chain view of a window's hull, or the polygon itself."""
    if isinstance(target, ChainPolygon):
        return target
    return ChainPolygon.of_window(target)
