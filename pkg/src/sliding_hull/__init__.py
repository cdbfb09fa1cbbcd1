"""Sliding hull: the convex hull of a sliding window of points.

Points enter on the right and leave on the left. Each update costs O(1)
amortized, and the hull answers extreme-vertex, stabbing, tangent,
intersection, containment, range and polygon queries in logarithmic time.
"""

from .engine.window import HullWindow
from .geometry.answers import (
    BoundaryHit,
    CommonTangent,
    Containment,
    Disjoint,
    HullSnapshot,
    Intersecting,
    QueryKind,
    TangentPair,
)
from .geometry.predicates import Direction, LineEq, Point
from .queries import (
    ConvexPolygon,
    answer_query,
    contains,
    extreme,
    line_intersection,
    polygon_interaction,
    range_report,
    stab_line,
    tangents_from,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryHit",
    "CommonTangent",
    "Containment",
    "ConvexPolygon",
    "Direction",
    "Disjoint",
    "HullSnapshot",
    "HullWindow",
    "Intersecting",
    "LineEq",
    "Point",
    "QueryKind",
    "TangentPair",
    "answer_query",
    "contains",
    "extreme",
    "line_intersection",
    "polygon_interaction",
    "range_report",
    "stab_line",
    "tangents_from",
]
