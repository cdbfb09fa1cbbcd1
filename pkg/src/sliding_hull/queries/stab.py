"""Line stabbing: does a line meet the hull?"""

from ..engine.window import HullWindow
from ..geometry.predicates import Direction, LineEq
from .extreme import extreme_index
from .polygon import ChainPolygon, as_polygon
from .probe import ProbeCounter


def stab_line(
    target: HullWindow | ChainPolygon,
    line: LineEq,
    probe: ProbeCounter | None = None,
) -> bool:
    """True iff ``line`` meets the closed hull; touching counts.

    Two extreme-vertex queries along ±(a, b) bracket the range of a·x + b·y.
    """
    polygon = as_polygon(target)
    probe = probe or ProbeCounter()
    d = Direction(line.a, line.b)
    top = polygon[extreme_index(polygon, d, probe)]
    bottom = polygon[extreme_index(polygon, -d, probe)]
    return probe.side(line, top) >= 0 and probe.side(line, bottom) <= 0
