"""Public facade: the convex hull of a sliding window of points."""

from collections import deque
from collections.abc import Iterable

from ..geometry.answers import HullSnapshot
from ..geometry.predicates import Point, check_point
from ..shared.exceptions import EmptyWindowError, HullInternalError, XOrderError
from ..shared.logging_manager import get_logger
from .chain import ChainEngine
from .finger_seq import FingerSeq, HullEdit
from .stats import ProcedureStats

logger = get_logger(__name__)


def mirror(p: Point) -> Point:
    return Point(p.x, -p.y)


class HullWindow:
    """Convex hull under insert-at-right and delete-leftmost updates.

    The upper hull is maintained by one ``ChainEngine``; the lower hull by a
    second engine fed y-mirrored points. Each engine's edits are replayed into
    a ``FingerSeq`` (the lower one stores points un-mirrored), and all queries
    read those sequences.

    Single writer: queries may run concurrently only between updates.
    """

    def __init__(self) -> None:
        self._window: deque[Point] = deque()
        self._next_index = 0
        self._upper: ChainEngine | None = None
        self._lower: ChainEngine | None = None
        self._upper_stats = ProcedureStats()
        self._lower_stats = ProcedureStats()
        self.upper_seq = FingerSeq()
        self.lower_seq = FingerSeq()
        self.last_hull_steps = 0

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, int]]) -> "HullWindow":
        window = cls()
        for x, y in points:
            window.push_right(Point(x, y))
        return window

    def __len__(self) -> int:
        return len(self._window)

    @property
    def size(self) -> int:
        return len(self._window)

    @property
    def hull_size(self) -> int:
        if len(self._window) < 2:
            return len(self._window)
        return len(self.upper_seq) + len(self.lower_seq) - 2

    @property
    def live_nodes(self) -> int:
        return sum(e.live_nodes for e in (self._upper, self._lower) if e is not None)

    def points(self) -> list[Point]:
        return list(self._window)

    def upper_vertices(self) -> list[Point]:
        return self.upper_seq.to_list()

    def lower_vertices(self) -> list[Point]:
        return self.lower_seq.to_list()

    def push_right(self, p: Point) -> None:
        """Insert ``p``, which must lie strictly right of every live point.

        Raises:
            XOrderError: If p.x is not larger than every live x
            HullValidationError: If p is outside the coordinate bound
        """
        p = check_point(Point(*p))
        if self._window and p.x <= self._window[-1].x:
            raise XOrderError(
                f"point {tuple(p)} is not right of the rightmost point "
                f"{tuple(self._window[-1])}"
            )
        self._window.append(p)
        index = self._next_index
        self._next_index += 1

        if len(self._window) == 1:
            self.upper_seq.push_right(p)
            self.lower_seq.push_right(p)
        elif len(self._window) == 2:
            self._start_engines(index - 1)
        else:
            assert self._upper is not None and self._lower is not None
            self._replay(
                self._upper.insert_right(p), self._lower.insert_right(mirror(p))
            )
        self._check_endpoints()

    def pop_left(self) -> Point:
        """Remove and return the leftmost point.

        Raises:
            EmptyWindowError: If the window is empty
        """
        if not self._window:
            raise EmptyWindowError("pop_left on an empty window")
        first_index = self._next_index - len(self._window)
        p = self._window.popleft()

        if len(self._window) >= 2:
            assert self._upper is not None and self._lower is not None
            self._replay(self._upper.delete_left(), self._lower.delete_left())
        else:
            self._reset(first_index)
        self._check_endpoints()
        return p

    def hull(self) -> HullSnapshot:
        """Counterclockwise hull: lower chain rightwards, then upper chain back."""
        seqs = (self.lower_seq, self.upper_seq)
        before = sum(seq.read_steps for seq in seqs)
        lower = self.lower_seq.to_list()
        upper = self.upper_seq.to_list()
        self.last_hull_steps = sum(seq.read_steps for seq in seqs) - before
        if len(self._window) < 2:
            return HullSnapshot(tuple(lower))
        return HullSnapshot((*lower, *upper[-2:0:-1]))

    def stats(self) -> ProcedureStats:
        return self._upper_stats.merge(self._lower_stats)

    def _start_engines(self, first_index: int) -> None:
        p1, p2 = self._window
        self._upper = ChainEngine(self._upper_stats)
        self._lower = ChainEngine(self._lower_stats)
        upper_edits = self._upper.build_left_hull([p1], first_index)
        upper_edits += self._upper.insert_right(p2)
        lower_edits = self._lower.build_left_hull([mirror(p1)], first_index)
        lower_edits += self._lower.insert_right(mirror(p2))
        self.upper_seq.clear()
        self.lower_seq.clear()
        self._replay(upper_edits, lower_edits)

    def _reset(self, departed_index: int) -> None:
        """Drop the engines once fewer than two points remain."""
        logger.debug(
            "Resetting chain engines",
            extra={"extra": {"size": len(self._window)}},
        )
        self._upper = None
        self._lower = None
        # a restart begins a fresh run for the involvement bounds
        for index in (departed_index, departed_index + 1):
            self._upper_stats.forget(index)
            self._lower_stats.forget(index)
        self.upper_seq.clear()
        self.lower_seq.clear()
        for p in self._window:
            self.upper_seq.push_right(p)
            self.lower_seq.push_right(p)

    def _replay(
        self, upper_edits: list[HullEdit], lower_edits: list[HullEdit]
    ) -> None:
        for edit in upper_edits:
            self.upper_seq.apply_edit(edit)
        for edit in lower_edits:
            self.lower_seq.apply_edit(edit.mirrored())

    def _check_endpoints(self) -> None:
        upper, lower = self.upper_seq, self.lower_seq
        if bool(upper) != bool(lower):
            raise HullInternalError("one hull chain is empty and the other is not")
        if upper and (upper[0] != lower[0] or upper[-1] != lower[-1]):
            raise HullInternalError(
                f"chains disagree on endpoints: upper {upper[0]}..{upper[-1]}, "
                f"lower {lower[0]}..{lower[-1]}"
            )
