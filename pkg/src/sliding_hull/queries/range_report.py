"""Hull vertices inside a vertical slab."""

from ..engine.finger_seq import FingerSeq
from ..engine.window import HullWindow
from ..geometry.predicates import Point
from ..shared.exceptions import HullValidationError
from .probe import ProbeCounter


def _slab(seq: FingerSeq, x1: int, x2: int, probe: ProbeCounter) -> list[Point]:
    lo = seq.search(lambda p: not probe.x_less(p.x, x1))
    hi = seq.search(lambda p: probe.x_less(x2, p.x)) - 1
    if lo > hi:
        return []
    return seq.slice(lo, hi)


def range_report(
    window: HullWindow,
    x1: int,
    x2: int,
    probe: ProbeCounter | None = None,
) -> list[Point]:
    """Hull vertices with x1 <= x <= x2 in boundary order, in O(k + log h).

    The lower chain's vertices come first, left to right, then the upper
    chain's right to left; the two shared end vertices appear once. An
    empty window reports nothing.

    Raises:
        HullValidationError: If x1 > x2
    """
    if x1 > x2:
        raise HullValidationError(f"empty slab: x1={x1} > x2={x2}")
    if not len(window):
        return []
    probe = probe or ProbeCounter()
    lower = _slab(window.lower_seq, x1, x2, probe)
    if len(window) == 1:
        return lower
    upper = window.upper_seq
    first, last = upper[0], upper[-1]
    inner = [p for p in _slab(upper, x1, x2, probe) if p != first and p != last]
    return lower + inner[::-1]
