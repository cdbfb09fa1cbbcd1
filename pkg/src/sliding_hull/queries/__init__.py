"""Binary-search queries over the hull's finger sequences."""

from .contains import contains
from .dispatch import answer_query
from .extreme import extreme
from .interaction import polygon_interaction
from .line_intersection import line_intersection
from .polygon import ChainPolygon, ConvexPolygon
from .probe import ProbeCounter
from .range_report import range_report
from .stab import stab_line
from .tangents import tangents_from

__all__ = [
    "ChainPolygon",
    "ConvexPolygon",
    "ProbeCounter",
    "answer_query",
    "contains",
    "extreme",
    "line_intersection",
    "polygon_interaction",
    "range_report",
    "stab_line",
    "tangents_from",
]
