"""Point location against the hull."""

from ..engine.window import HullWindow
from ..geometry.answers import Containment
from ..geometry.predicates import Point, Turn
from .polygon import ChainPolygon, as_polygon, bracket
from .probe import ProbeCounter


def locate(polygon: ChainPolygon, q: Point, probe: ProbeCounter) -> Containment:
    if len(polygon) == 1:
        return Containment.BOUNDARY if polygon[0] == q else Containment.OUTSIDE
    if probe.lex_less(q, polygon.lexmin) or probe.lex_less(polygon.lexmax, q):
        return Containment.OUTSIDE

    upper = polygon.upper
    i = bracket(upper, q, probe)
    turn = probe.orient(upper[i], upper[i + 1], q)
    if turn is Turn.LEFT:
        return Containment.OUTSIDE
    if turn is Turn.COLLINEAR:
        return Containment.BOUNDARY

    lower = polygon.lower
    i = bracket(lower, q, probe)
    turn = probe.orient(lower[i], lower[i + 1], q)
    if turn is Turn.RIGHT:
        return Containment.OUTSIDE
    if turn is Turn.COLLINEAR:
        return Containment.BOUNDARY
    return Containment.INSIDE


def contains(
    target: HullWindow | ChainPolygon,
    q: Point,
    probe: ProbeCounter | None = None,
) -> Containment:
    """Classify ``q`` as inside, on the boundary of, or outside the hull.

    The bracketing upper and lower edges are found by binary search, then
    one orientation test against each decides.

    Raises:
        EmptyWindowError: If the window is empty
    """
    return locate(as_polygon(target), Point(*q), probe or ProbeCounter())
