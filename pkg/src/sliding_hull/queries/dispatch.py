"""Run a query named by kind and flat integer parameters."""

from collections.abc import Sequence

from ..engine.window import HullWindow
from ..geometry.answers import QueryAnswer, QueryKind
from ..geometry.predicates import Direction, LineEq, Point
from ..shared.exceptions import HullValidationError
from .contains import contains
from .extreme import extreme
from .interaction import polygon_interaction
from .line_intersection import line_intersection
from .probe import ProbeCounter
from .range_report import range_report
from .stab import stab_line
from .tangents import tangents_from


def answer_query(
    window: HullWindow,
    kind: QueryKind,
    params: Sequence[int],
    probe: ProbeCounter | None = None,
) -> QueryAnswer:
    """Dispatch to the query for ``kind``; ``params`` as in a trace line."""
    probe = probe or ProbeCounter()
    match kind:
        case QueryKind.EXTREME:
            return extreme(window, Direction(*params), probe)
        case QueryKind.STAB:
            return stab_line(window, LineEq(*params), probe)
        case QueryKind.TANGENTS:
            return tangents_from(window, Point(*params), probe)
        case QueryKind.LINEINT:
            return line_intersection(window, LineEq(*params), probe)
        case QueryKind.CONTAINS:
            return contains(window, Point(*params), probe)
        case QueryKind.RANGE:
            x1, x2 = params
            return range_report(window, x1, x2, probe)
        case QueryKind.POLYGON:
            ring = list(zip(params[::2], params[1::2], strict=True))
            return polygon_interaction(window, ring, probe)
    raise HullValidationError(f"unknown query kind {kind!r}")
