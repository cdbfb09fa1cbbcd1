"""Brute-force reference answers for differential testing.

Everything here is recomputed from scratch with linear scans over a
statically built hull. Only the predicates and answer types are shared
with the engine and the queries.
"""

from collections.abc import Iterable, Sequence
from itertools import product

from ..shared.exceptions import (
    EmptyWindowError,
    HullValidationError,
    NotOutsideError,
)
from .answers import (
    BoundaryHit,
    CommonTangent,
    Containment,
    Disjoint,
    HullSnapshot,
    Intersecting,
    LineHullIntersection,
    PolygonInteraction,
    QueryAnswer,
    QueryKind,
    TangentPair,
)
from .predicates import (
    Direction,
    LineEq,
    Point,
    Turn,
    check_point,
    cross,
    orient,
    side_of_line,
    squared_distance,
)


def static_hull(points: Iterable[tuple[int, int]]) -> HullSnapshot:
    """Monotone-chain hull, counterclockwise from the leftmost point.

    Collinear boundary points are dropped.

    Raises:
        HullValidationError: If two points share an x coordinate
    """
    pts = sorted(Point(*p) for p in points)
    if len({p.x for p in pts}) != len(pts):
        raise HullValidationError("points must have pairwise distinct x")
    if len(pts) <= 1:
        return HullSnapshot(tuple(pts))

    def half(ordered: Sequence[Point]) -> list[Point]:
        chain: list[Point] = []
        for p in ordered:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    return HullSnapshot((*lower[:-1], *upper[:-1]))


def _vertices(points: Iterable[tuple[int, int]]) -> tuple[Point, ...]:
    vertices = static_hull(points).vertices
    if not vertices:
        raise EmptyWindowError("query on an empty point set")
    return vertices


def _dot(d: Direction, p: Point) -> int:
    return d.dx * p.x + d.dy * p.y


def naive_extreme(points: Iterable[tuple[int, int]], d: Direction) -> Point:
    return max(_vertices(points), key=lambda p: (_dot(d, p), -p.x, -p.y))


def naive_stab(points: Iterable[tuple[int, int]], line: LineEq) -> bool:
    sides = [side_of_line(line, p) for p in _vertices(points)]
    return min(sides) <= 0 <= max(sides)


def _locate(hull: Sequence[Point], q: Point) -> Containment:
    if len(hull) == 1:
        return Containment.BOUNDARY if hull[0] == q else Containment.OUTSIDE
    if len(hull) == 2:
        a, b = hull
        on_line = orient(a, b, q) is Turn.COLLINEAR
        if on_line and min(a, b) <= q <= max(a, b):
            return Containment.BOUNDARY
        return Containment.OUTSIDE
    turns = [orient(hull[i - 1], hull[i], q) for i in range(len(hull))]
    if Turn.RIGHT in turns:
        return Containment.OUTSIDE
    if Turn.COLLINEAR in turns:
        return Containment.BOUNDARY
    return Containment.INSIDE


def naive_contains(points: Iterable[tuple[int, int]], q: Point) -> Containment:
    return _locate(_vertices(points), Point(*q))


def naive_tangents(points: Iterable[tuple[int, int]], q: Point) -> TangentPair:
    """Tangent vertices by checking every vertex; the nearest wins ties.

    Raises:
        NotOutsideError: If q is inside or on the hull
    """
    hull = _vertices(points)
    q = Point(*q)
    if _locate(hull, q) is not Containment.OUTSIDE:
        raise NotOutsideError(f"query point {tuple(q)} is not outside the hull")

    def touching(forbidden: Turn) -> Point:
        return min(
            (v for v in hull if all(orient(q, v, w) is not forbidden for w in hull)),
            key=lambda v: squared_distance(q, v),
        )

    return TangentPair(
        left_touch=touching(Turn.LEFT), right_touch=touching(Turn.RIGHT)
    )


def naive_line_intersection(
    points: Iterable[tuple[int, int]], line: LineEq
) -> LineHullIntersection:
    hull = _vertices(points)
    n = len(hull)
    sides = [side_of_line(line, p) for p in hull]
    if n == 1:
        return (BoundaryHit.vertex(hull[0]),) if sides[0] == 0 else ()
    if n == 2:
        a, b = hull
        if sides == [0, 0] or sides[0] * sides[1] < 0:
            return (BoundaryHit.edge(a, b),)
        if 0 in sides:
            return (BoundaryHit.vertex(hull[sides.index(0)]),)
        return ()

    hits: list[BoundaryHit] = []
    for i in range(n):
        j = (i + 1) % n
        if sides[i] == 0 and sides[j] == 0:
            hits.append(BoundaryHit.edge(hull[i], hull[j]))
        elif sides[i] == 0 and sides[i - 1] != 0:
            hits.append(BoundaryHit.vertex(hull[i]))
        elif sides[i] * sides[j] < 0:
            hits.append(BoundaryHit.edge(hull[i], hull[j]))
    return tuple(hits)


def naive_range_report(
    points: Iterable[tuple[int, int]], x1: int, x2: int
) -> list[Point]:
    if x1 > x2:
        raise HullValidationError(f"empty slab: x1={x1} > x2={x2}")
    return [p for p in static_hull(points).vertices if x1 <= p.x <= x2]


def _separated(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """True iff some direction puts all of ``a`` strictly before all of ``b``."""
    directions: set[tuple[int, int]] = set()
    for poly in (a, b):
        for i in range(len(poly)):
            p, q = poly[i - 1], poly[i]
            if p != q:
                directions.add((q.y - p.y, p.x - q.x))
                directions.add((p.y - q.y, q.x - p.x))
    for p, q in product(a, b):
        if p != q:
            directions.add((q.x - p.x, q.y - p.y))
    return any(
        max(dx * p.x + dy * p.y for p in a) < min(dx * q.x + dy * q.y for q in b)
        for dx, dy in directions
    )


def _checked_ring(polygon: Iterable[tuple[int, int]]) -> list[Point]:
    """Reject anything but a strictly convex counterclockwise vertex list.

    Every vertex must lie strictly left of every edge it is not on.
    """
    ring = [check_point(Point(*p)) for p in polygon]
    if not ring:
        raise HullValidationError("polygon needs at least one vertex")
    if len(set(ring)) != len(ring):
        raise HullValidationError("polygon repeats a vertex")
    if len(ring) >= 3:
        for i in range(len(ring)):
            a, b = ring[i - 1], ring[i]
            if any(orient(a, b, w) is not Turn.LEFT for w in ring if w not in (a, b)):
                raise HullValidationError(
                    "polygon is not strictly convex and counterclockwise"
                )
    return ring


def naive_polygon_interaction(
    points: Iterable[tuple[int, int]], polygon: Iterable[tuple[int, int]]
) -> PolygonInteraction:
    """Intersection by separating-axis search; tangents by trying every pair.

    Among pairs of one class the shortest connecting segment wins.
    """
    other = _checked_ring(polygon)
    hull = _vertices(points)
    if not _separated(hull, other):
        return Intersecting()

    def best(hull_forbidden: Turn, polygon_forbidden: Turn) -> CommonTangent:
        pairs = [
            (a, b)
            for a, b in product(hull, other)
            if all(orient(a, b, w) is not hull_forbidden for w in hull)
            and all(orient(a, b, w) is not polygon_forbidden for w in other)
        ]
        a, b = min(pairs, key=lambda pair: squared_distance(*pair))
        return CommonTangent(a, b)

    return Disjoint(
        outer=(best(Turn.RIGHT, Turn.RIGHT), best(Turn.LEFT, Turn.LEFT)),
        inner=(best(Turn.LEFT, Turn.RIGHT), best(Turn.RIGHT, Turn.LEFT)),
    )


def naive_query(
    points: Iterable[tuple[int, int]], kind: QueryKind, params: Sequence[int]
) -> QueryAnswer:
    """Answer any hull query by linear scan; ``params`` as in a trace line."""
    points = list(points)
    match kind:
        case QueryKind.EXTREME:
            return naive_extreme(points, Direction(*params))
        case QueryKind.STAB:
            return naive_stab(points, LineEq(*params))
        case QueryKind.TANGENTS:
            return naive_tangents(points, Point(*params))
        case QueryKind.LINEINT:
            return naive_line_intersection(points, LineEq(*params))
        case QueryKind.CONTAINS:
            return naive_contains(points, Point(*params))
        case QueryKind.RANGE:
            return naive_range_report(points, *params)
        case QueryKind.POLYGON:
            ring = list(zip(params[::2], params[1::2], strict=True))
            return naive_polygon_interaction(points, ring)
    raise HullValidationError(f"unknown query kind {kind!r}")
