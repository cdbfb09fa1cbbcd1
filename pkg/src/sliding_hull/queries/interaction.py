"""Intersection test and common tangents between the hull and a convex polygon.

Deciding intersection maximizes the vertical overlap of the two polygons,
min(upper chains) − max(lower chains), which is concave in x. A binary
search over the vertices of each of the four chains, with exact heights
from further binary searches, finds the best vertex in O(log²). The true
maximum lies at that vertex or where two upper (or two lower) edges next
to it cross, so those crossings are evaluated too.

When the polygons are disjoint, an edge next to the best abscissa gives a
separating direction u. In the frame spanned by u and its left normal all
of the hull lies lexicographically before all of the polygon, and each
common tangent falls to a nested binary search: over one hull chain, with
the tangent from the current hull vertex to a polygon chain inside.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import overload

from ..engine.window import HullWindow
from ..geometry.answers import (
    CommonTangent,
    Disjoint,
    Intersecting,
    PolygonInteraction,
)
from ..geometry.predicates import (
    Abscissa,
    Direction,
    Point,
    Turn,
    chain_height,
    line_crossing,
    sheared_x,
)
from ..shared.exceptions import HullInternalError
from ..shared.logging_manager import get_logger
from .extreme import extreme_index
from .polygon import ChainPolygon, ConvexPolygon, as_polygon, bracket, first_true
from .probe import ProbeCounter
from .tangents import tangent_index_from_left

logger = get_logger(__name__)


@dataclass(frozen=True)
class Frame:
    """Orientation-preserving integer frame with axes u and u rotated by 90°."""

    ux: int
    uy: int

    def apply(self, p: Point) -> Point:
        return Point(
            self.ux * p.x + self.uy * p.y,
            -self.uy * p.x + self.ux * p.y,
        )


IDENTITY = Frame(1, 0)
HALF_TURN = Frame(-1, 0)


class FrameChain(Sequence[Point]):
    """A counterclockwise or clockwise boundary arc, in frame coordinates."""

    def __init__(
        self, polygon: ChainPolygon, start: int, length: int, step: int, frame: Frame
    ):
        self.polygon = polygon
        self.start = start
        self.length = length
        self.step = step
        self.frame = frame

    def __len__(self) -> int:
        return self.length

    @overload
    def __getitem__(self, i: int) -> Point: ...

    @overload
    def __getitem__(self, i: slice) -> list[Point]: ...

    def __getitem__(self, i: int | slice) -> Point | list[Point]:
        if isinstance(i, slice):
            return [self[k] for k in range(*i.indices(self.length))]
        return self.frame.apply(self.original(i))

    def original(self, i: int) -> Point:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return self.polygon[self.start + self.step * i]


def _frame_end(
    polygon: ChainPolygon, frame: Frame, sign: int, probe: ProbeCounter
) -> int:
    """Index of the frame-lexicographic maximum (sign 1) or minimum (sign -1)."""
    n = len(polygon)
    d = Direction(sign * frame.ux, sign * frame.uy)
    i = extreme_index(polygon, d, probe)
    tied = {i}
    for k in ((i - 1) % n, (i + 1) % n):
        if probe.dot(d, polygon[i], polygon[k]) == 0:
            tied.add(k)
    pick = max if sign > 0 else min
    return pick(tied, key=lambda k: frame.apply(polygon[k]))


def frame_chains(
    polygon: ChainPolygon, frame: Frame, probe: ProbeCounter
) -> tuple[FrameChain, FrameChain]:
    """Upper and lower chains of ``polygon`` as seen in ``frame``."""
    n = len(polygon)
    lo = _frame_end(polygon, frame, -1, probe)
    hi = _frame_end(polygon, frame, 1, probe)
    upper = FrameChain(polygon, lo, (lo - hi) % n + 1, -1, frame)
    lower = FrameChain(polygon, lo, (hi - lo) % n + 1, 1, frame)
    return upper, lower


class _Overlap:
    """Vertical overlap of two polygons at sheared abscissas, memoized.

    Abscissas are exact: ``int`` at vertices, ``Fraction`` where two chain
    edges cross.
    """

    def __init__(self, a: ChainPolygon, b: ChainPolygon, probe: ProbeCounter):
        self.a = a
        self.b = b
        self.probe = probe
        self.heights = cache(self._heights)

    def _edge(self, chain: Sequence[Point], xs: Abscissa, right: bool) -> int | None:
        """Index i of the edge (chain[i], chain[i+1]) just right (or left) of
        ``xs``, or None past the chain's end."""
        probe = self.probe
        if right:
            i = first_true(
                0, len(chain) - 1, lambda k: probe.x_less(xs, sheared_x(chain[k + 1]))
            )
        else:
            i = first_true(
                0,
                len(chain) - 1,
                lambda k: not probe.x_less(sheared_x(chain[k + 1]), xs),
            )
        if i == len(chain) - 1:
            return None
        if not right and not probe.x_less(sheared_x(chain[i]), xs):
            return None
        return i

    def _height(self, chain: Sequence[Point], xs: Abscissa) -> Fraction:
        if len(chain) == 1:
            return Fraction(chain[0].y)
        i = self._edge(chain, xs, right=True)
        if i is None:
            i = len(chain) - 2
        self.probe.tally()
        return chain_height(chain[i], chain[i + 1], xs)

    def _heights(self, xs: Abscissa) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        a, b = self.a, self.b
        return (
            self._height(a.upper, xs),
            self._height(a.lower, xs),
            self._height(b.upper, xs),
            self._height(b.lower, xs),
        )

    def gap(self, xs: Abscissa) -> Fraction:
        ua, la, ub, lb = self.heights(xs)
        return min(ua, ub) - max(la, lb)

    def best_on(
        self, chain: Sequence[Point], lo: Point, hi: Point
    ) -> tuple[Fraction, Point] | None:
        """Largest overlap over the chain's vertices between ``lo`` and ``hi``."""
        probe = self.probe
        first = first_true(0, len(chain), lambda i: not probe.lex_less(chain[i], lo))
        last = first_true(0, len(chain), lambda i: probe.lex_less(hi, chain[i])) - 1
        if first > last:
            return None
        k = first_true(
            first,
            last,
            lambda i: self.gap(sheared_x(chain[i + 1])) < self.gap(sheared_x(chain[i])),
        )
        return self.gap(sheared_x(chain[k])), chain[k]

    def _crossing(
        self, xs: Abscissa, first: Sequence[Point], second: Sequence[Point], right: bool
    ) -> Fraction | None:
        """Abscissa where the edges of two chains next to ``xs`` cross."""
        i = self._edge(first, xs, right) if len(first) > 1 else None
        j = self._edge(second, xs, right) if len(second) > 1 else None
        if i is None or j is None:
            return None
        self.probe.tally()
        return line_crossing(first[i], first[i + 1], second[j], second[j + 1])

    def peak(self, v: Point, lo: Point, hi: Point) -> Fraction:
        """Maximum overlap, given the vertex ``v`` with the largest vertex overlap.

        Between ``v`` and the nearest vertex of any chain on either side every
        chain is one edge, so the overlap peaks at ``v`` or where the two
        upper (or the two lower) edges cross.
        """
        a, b = self.a, self.b
        xs, x_lo, x_hi = sheared_x(v), sheared_x(lo), sheared_x(hi)
        best = self.gap(xs)
        for right in (False, True):
            for first, second in ((a.upper, b.upper), (a.lower, b.lower)):
                x = self._crossing(xs, first, second, right)
                if x is not None and x_lo <= x <= x_hi:
                    best = max(best, self.gap(x))
        return best


def _separating_frame(
    a: ChainPolygon, b: ChainPolygon, overlap: _Overlap, v: Point, probe: ProbeCounter
) -> Frame:
    """A frame whose first axis strictly separates a (low side) from b."""
    ua, la, ub, lb = overlap.heights(sheared_x(v))
    a_below = ua < lb
    chains = (a.upper, b.lower) if a_below else (a.lower, b.upper)

    for chain in chains:
        if len(chain) < 2:
            continue
        i = bracket(chain, v, probe)
        for k in (i - 1, i, i + 1):
            if not 0 <= k < len(chain) - 1:
                continue
            ex = chain[k + 1].x - chain[k].x
            ey = chain[k + 1].y - chain[k].y
            # left normal points up when a is below, right normal otherwise
            n = Direction(-ey, ex) if a_below else Direction(ey, -ex)
            top_a = a[extreme_index(a, n, probe)]
            bottom_b = b[extreme_index(b, -n, probe)]
            if probe.dot(n, top_a, bottom_b) > 0:
                return Frame(n.dx, n.dy)

    raise HullInternalError(
        f"no separating edge found next to {tuple(v)} for disjoint polygons"
    )


def _common_tangent(
    hull_chain: FrameChain,
    polygon_chain: FrameChain,
    polygon_side: Turn,
    hull_side: Turn,
    probe: ProbeCounter,
) -> CommonTangent:
    """Nested search: advance along the hull chain until its next vertex falls
    on ``hull_side`` of the line to the polygon tangent."""

    @cache
    def touch(i: int) -> int:
        return tangent_index_from_left(
            polygon_chain, hull_chain[i], polygon_side, probe
        )

    k = first_true(
        0,
        len(hull_chain) - 1,
        lambda i: probe.orient(
            hull_chain[i], polygon_chain[touch(i)], hull_chain[i + 1]
        )
        is hull_side,
    )
    return CommonTangent(hull_chain.original(k), polygon_chain.original(touch(k)))


def interaction(
    hull: ChainPolygon, polygon: ChainPolygon, probe: ProbeCounter
) -> PolygonInteraction:
    lo = max(hull.lexmin, polygon.lexmin)
    hi = min(hull.lexmax, polygon.lexmax)
    if lo > hi:
        frame = IDENTITY if hull.lexmax < polygon.lexmin else HALF_TURN
    else:
        overlap = _Overlap(hull, polygon, probe)
        found = [
            best
            for chain in (hull.upper, hull.lower, polygon.upper, polygon.lower)
            if (best := overlap.best_on(chain, lo, hi)) is not None
        ]
        _, v = max(found)
        if overlap.peak(v, lo, hi) >= 0:
            return Intersecting()
        frame = _separating_frame(hull, polygon, overlap, v, probe)

    hull_upper, hull_lower = frame_chains(hull, frame, probe)
    poly_upper, poly_lower = frame_chains(polygon, frame, probe)
    logger.debug(
        "Polygons are disjoint",
        extra={"extra": {"frame": [frame.ux, frame.uy]}},
    )
    return Disjoint(
        outer=(
            _common_tangent(hull_lower, poly_lower, Turn.RIGHT, Turn.LEFT, probe),
            _common_tangent(hull_upper, poly_upper, Turn.LEFT, Turn.RIGHT, probe),
        ),
        inner=(
            _common_tangent(hull_upper, poly_lower, Turn.RIGHT, Turn.RIGHT, probe),
            _common_tangent(hull_lower, poly_upper, Turn.LEFT, Turn.LEFT, probe),
        ),
    )


def polygon_interaction(
    target: HullWindow | ChainPolygon,
    polygon: ConvexPolygon | Iterable[tuple[int, int]],
    probe: ProbeCounter | None = None,
) -> PolygonInteraction:
    """Decide whether a convex polygon meets the hull; if not, return the two
    outer and two inner common tangents. O(log²(h + |P|)).

    Raises:
        HullValidationError: If the polygon is not strictly convex and
            counterclockwise
        EmptyWindowError: If the window is empty
    """
    if not isinstance(polygon, ConvexPolygon):
        polygon = ConvexPolygon.from_vertices(polygon)
    return interaction(as_polygon(target), polygon, probe or ProbeCounter())
