"""Tangents from an outside point."""

from collections.abc import Sequence

from ..engine.window import HullWindow
from ..geometry.answers import Containment, TangentPair
from ..geometry.predicates import Point, Turn, squared_distance
from ..shared.exceptions import NotOutsideError
from .contains import locate
from .polygon import ChainPolygon, as_polygon, bracket, first_true
from .probe import ProbeCounter


def tangent_index_from_left(
    chain: Sequence[Point], q: Point, away: Turn, probe: ProbeCounter
) -> int:
    """Tangent vertex index of a chain lying lexicographically after q.

    ``away`` is the side the chain bulges to: LEFT for an upper chain, RIGHT
    for a lower one. On a tie the vertex nearer to q wins.
    """
    return first_true(
        0, len(chain) - 1, lambda i: probe.orient(q, chain[i], chain[i + 1]) is not away
    )


def tangent_index_from_right(
    chain: Sequence[Point], q: Point, toward: Turn, probe: ProbeCounter
) -> int:
    """Tangent vertex index of a chain lying lexicographically before q.

    ``toward`` is LEFT for an upper chain and RIGHT for a lower one. On a tie
    the vertex nearer to q wins.
    """
    return first_true(
        0, len(chain) - 1, lambda i: probe.orient(q, chain[i], chain[i + 1]) is toward
    )


def _visible_span(
    chain: Sequence[Point], q: Point, outward: Turn, probe: ProbeCounter
) -> tuple[Point, Point]:
    """Ends of the run of chain edges that q sees, q being beyond the edge over it."""
    e = bracket(chain, q, probe)
    last = len(chain) - 1

    def visible(i: int) -> bool:
        return probe.orient(chain[i], chain[i + 1], q) is outward

    first = first_true(0, e, visible)
    end = first_true(e, last, lambda k: not visible(k))
    return chain[first], chain[end]


def tangent_points(
    polygon: ChainPolygon, q: Point, probe: ProbeCounter
) -> TangentPair:
    if locate(polygon, q, probe) is not Containment.OUTSIDE:
        raise NotOutsideError(f"query point {tuple(q)} is not outside the hull")
    if len(polygon) == 1:
        return TangentPair(polygon[0], polygon[0])

    upper, lower = polygon.upper, polygon.lower
    if probe.lex_less(q, polygon.lexmin):
        a = upper[tangent_index_from_left(upper, q, Turn.LEFT, probe)]
        b = lower[tangent_index_from_left(lower, q, Turn.RIGHT, probe)]
    elif probe.lex_less(polygon.lexmax, q):
        a = upper[tangent_index_from_right(upper, q, Turn.LEFT, probe)]
        b = lower[tangent_index_from_right(lower, q, Turn.RIGHT, probe)]
    else:
        i = bracket(upper, q, probe)
        if probe.orient(upper[i], upper[i + 1], q) is Turn.LEFT:
            a, b = _visible_span(upper, q, Turn.LEFT, probe)
        else:
            a, b = _visible_span(lower, q, Turn.RIGHT, probe)

    turn = probe.orient(q, a, b)
    if turn is Turn.LEFT:
        return TangentPair(left_touch=b, right_touch=a)
    if turn is Turn.RIGHT:
        return TangentPair(left_touch=a, right_touch=b)
    # q is on the line of a two-vertex hull
    near = min(a, b, key=lambda v: squared_distance(v, q))
    return TangentPair(near, near)


def tangents_from(
    target: HullWindow | ChainPolygon,
    q: Point,
    probe: ProbeCounter | None = None,
) -> TangentPair:
    """The two tangent vertices of the hull as seen from ``q``.

    Raises:
        NotOutsideError: If q is inside or on the hull
        EmptyWindowError: If the window is empty
    """
    return tangent_points(as_polygon(target), Point(*q), probe or ProbeCounter())
