"""Where a line crosses the hull boundary."""

from ..engine.window import HullWindow
from ..geometry.answers import BoundaryHit, LineHullIntersection
from ..geometry.predicates import Direction, LineEq
from .extreme import extreme_index
from .polygon import ChainPolygon, as_polygon, first_true
from .probe import ProbeCounter


def _crossing(
    polygon: ChainPolygon,
    start: int,
    length: int,
    line: LineEq,
    rising: bool,
    probe: ProbeCounter,
) -> tuple[int, BoundaryHit]:
    """Binary search the counterclockwise arc from ``start`` for the sign change.

    On a rising arc the side value goes from negative to positive, on a
    falling arc the other way. Returns the arc-start index of the hit.
    """
    n = len(polygon)

    def reached(t: int) -> bool:
        s = probe.side(line, polygon[start + t])
        return s >= 0 if rising else s <= 0

    t = first_true(1, length, reached)
    hit = polygon[start + t]
    if probe.side(line, hit) == 0:
        return (start + t) % n, BoundaryHit.vertex(hit)
    return (start + t - 1) % n, BoundaryHit.edge(polygon[start + t - 1], hit)


def crossings(
    polygon: ChainPolygon, line: LineEq, probe: ProbeCounter
) -> LineHullIntersection:
    n = len(polygon)
    if n == 1:
        if probe.side(line, polygon[0]) == 0:
            return (BoundaryHit.vertex(polygon[0]),)
        return ()

    d = Direction(line.a, line.b)
    top = extreme_index(polygon, d, probe)
    bottom = extreme_index(polygon, -d, probe)
    s_top = probe.side(line, polygon[top])
    s_bottom = probe.side(line, polygon[bottom])
    if s_top < 0 or s_bottom > 0:
        return ()

    if s_top == 0 or s_bottom == 0:
        # supporting line: the hull touches it in a vertex or one edge
        if s_top == 0 and s_bottom == 0:
            return (BoundaryHit.edge(polygon[0], polygon[1]),)
        touch = top if s_top == 0 else bottom
        on_line = [
            i
            for i in (touch - 1, touch, touch + 1)
            if probe.side(line, polygon[i]) == 0
        ]
        if len(on_line) == 1:
            return (BoundaryHit.vertex(polygon[touch]),)
        return (BoundaryHit.edge(polygon[on_line[0]], polygon[on_line[-1]]),)

    found = sorted(
        [
            _crossing(polygon, bottom, (top - bottom) % n + 1, line, True, probe),
            _crossing(polygon, top, (bottom - top) % n + 1, line, False, probe),
        ],
        key=lambda item: item[0],
    )
    hits: list[BoundaryHit] = []
    for _, hit in found:
        # a two-vertex hull reports its single edge from both arcs
        if hit not in hits:
            hits.append(hit)
    return tuple(hits)


def line_intersection(
    target: HullWindow | ChainPolygon,
    line: LineEq,
    probe: ProbeCounter | None = None,
) -> LineHullIntersection:
    """Boundary vertices or edges met by ``line``, counterclockwise from the
    leftmost vertex; empty when the line misses the hull.

    Raises:
        EmptyWindowError: If the window is empty
    """
    return crossings(as_polygon(target), line, probe or ProbeCounter())
