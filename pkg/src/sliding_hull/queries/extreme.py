"""Extreme vertex along a direction."""

from ..engine.window import HullWindow
from ..geometry.predicates import Direction, Point
from .polygon import ChainPolygon, as_polygon, first_true
from .probe import ProbeCounter


def extreme_index(polygon: ChainPolygon, d: Direction, probe: ProbeCounter) -> int:
    """Counterclockwise index of a vertex maximizing d·p.

    Directions pointing up are answered on the upper chain and directions
    pointing down on the lower chain, each by binary search for the first
    edge that stops gaining along d. Ties go to the lexicographically
    smaller vertex.
    """
    if len(polygon) == 1:
        return 0
    if d.dy:
        chain = polygon.upper if d.dy > 0 else polygon.lower
        j = first_true(
            0, len(chain) - 1, lambda i: probe.dot(d, chain[i], chain[i + 1]) <= 0
        )
        return polygon.upper_ccw(j) if d.dy > 0 else j
    if d.dx < 0:
        return 0
    lower = polygon.lower
    last = len(lower) - 1
    # a vertical right edge puts two vertices at the maximum x
    if probe.dot(d, lower[last - 1], lower[last]) == 0:
        return last - 1
    return last


def extreme(
    target: HullWindow | ChainPolygon,
    d: Direction,
    probe: ProbeCounter | None = None,
) -> Point:
    """Most extreme hull vertex along ``d`` in O(log h).

    Raises:
        EmptyWindowError: If the window is empty
    """
    polygon = as_polygon(target)
    return polygon[extreme_index(polygon, d, probe or ProbeCounter())]
