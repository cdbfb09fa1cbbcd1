"""Answer types shared by the hull queries and the brute-force oracle."""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Any

from .predicates import Point


def _xy(p: Point) -> list[int]:
    return [p.x, p.y]


@dataclass(frozen=True)
class HullSnapshot:
    """Hull vertices counterclockwise from the leftmost point.

    One vertex for a single point, two for a segment.
    """

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def as_list(self) -> list[list[int]]:
        return [_xy(p) for p in self.vertices]


class Containment(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class TangentPair:
    """Tangent vertices seen from an outside point q.

    Every hull vertex lies on the closed left of ray q→right_touch and on
    the closed right of ray q→left_touch.
    """

    left_touch: Point
    right_touch: Point

    def as_dict(self) -> dict[str, Any]:
        return {"left": _xy(self.left_touch), "right": _xy(self.right_touch)}


class QueryKind(str, Enum):
    """The hull queries, named as in trace files."""

    EXTREME = "extreme"
    STAB = "stab"
    TANGENTS = "tangents"
    LINEINT = "lineint"
    CONTAINS = "contains"
    RANGE = "range"
    POLYGON = "polygon"


class HitKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class BoundaryHit:
    """A vertex on the line, or an edge whose endpoints straddle it.

    Edge endpoints are stored in lexicographic order.
    """

    kind: HitKind
    points: tuple[Point, ...]

    @classmethod
    def vertex(cls, p: Point) -> "BoundaryHit":
        return cls(HitKind.VERTEX, (p,))

    @classmethod
    def edge(cls, a: Point, b: Point) -> "BoundaryHit":
        return cls(HitKind.EDGE, (min(a, b), max(a, b)))

    def as_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "points": [_xy(p) for p in self.points]}


# Empty tuple when the line misses the hull.
LineHullIntersection = tuple[BoundaryHit, ...]


@dataclass(frozen=True)
class CommonTangent:
    """Line through a hull vertex and a polygon vertex, directed hull→polygon."""

    hull_vertex: Point
    polygon_vertex: Point

    def as_dict(self) -> dict[str, Any]:
        return {"hull": _xy(self.hull_vertex), "polygon": _xy(self.polygon_vertex)}


@dataclass(frozen=True)
class Intersecting:
    def as_dict(self) -> dict[str, Any]:
        return {"result": "intersecting"}


@dataclass(frozen=True)
class Disjoint:
    """Common tangents of two disjoint convex polygons.

    ``outer`` is (both polygons left, both right) of the directed line;
    ``inner`` is (hull right and polygon left, hull left and polygon right).
    """

    outer: tuple[CommonTangent, CommonTangent]
    inner: tuple[CommonTangent, CommonTangent]

    def as_dict(self) -> dict[str, Any]:
        return {
            "result": "disjoint",
            "outer": [t.as_dict() for t in self.outer],
            "inner": [t.as_dict() for t in self.inner],
        }


PolygonInteraction = Intersecting | Disjoint

QueryAnswer = (
    Point
    | bool
    | Containment
    | TangentPair
    | LineHullIntersection
    | list[Point]
    | PolygonInteraction
    | HullSnapshot
)


def answer_as_json(answer: QueryAnswer) -> Any:
    """JSON-ready form of any query answer or hull snapshot."""
    if isinstance(answer, Point):
        return _xy(answer)
    if isinstance(answer, (bool, Containment)):
        return answer.value if isinstance(answer, Containment) else answer
    if isinstance(answer, HullSnapshot):
        return answer.as_list()
    if isinstance(answer, list):
        return [_xy(p) for p in answer]
    if isinstance(answer, tuple):
        return [hit.as_dict() for hit in answer]
    return answer.as_dict()
