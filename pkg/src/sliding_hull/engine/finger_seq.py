"""End-updatable vertex sequence with positional access.

``FingerSeq`` mirrors one hull chain. The chain engine only ever edits the
two ends, so a growable circular buffer gives amortized O(1) edits and
binary search by index.
"""

from bisect import bisect_left
from collections.abc import Callable, Iterator
from enum import Enum
from typing import NamedTuple, overload

from ..geometry.predicates import Point
from ..shared.exceptions import HullInternalError, HullValidationError

MIN_CAPACITY = 8


class EditKind(Enum):
    PUSH_LEFT = "push_left"
    POP_LEFT = "pop_left"
    PUSH_RIGHT = "push_right"
    POP_RIGHT = "pop_right"


class HullEdit(NamedTuple):
    """One end edit. ``point`` is set for pushes only."""

    kind: EditKind
    point: Point | None = None

    def mirrored(self) -> "HullEdit":
        """The same edit with the point reflected across the x axis."""
        if self.point is None:
            return self
        return HullEdit(self.kind, Point(self.point.x, -self.point.y))


def push_left(point: Point) -> HullEdit:
    return HullEdit(EditKind.PUSH_LEFT, point)


def push_right(point: Point) -> HullEdit:
    return HullEdit(EditKind.PUSH_RIGHT, point)


POP_LEFT = HullEdit(EditKind.POP_LEFT)
POP_RIGHT = HullEdit(EditKind.POP_RIGHT)


class FingerSeq:
    """Points in strictly increasing x, edited only at the ends."""

    def __init__(self, points: list[Point] | None = None):
        self._buf: list[Point | None] = [None] * MIN_CAPACITY
        self._head = 0
        self._size = 0
        # steps spent on edits, buffer copies included
        self.edit_steps = 0
        # items handed out by iteration
        self.read_steps = 0
        for point in points or []:
            self.push_right(point)

    def __len__(self) -> int:
        return self._size

    @overload
    def __getitem__(self, index: int) -> Point: ...

    @overload
    def __getitem__(self, index: slice) -> list[Point]: ...

    def __getitem__(self, index: int | slice) -> Point | list[Point]:
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(self._size))]
        if index < 0:
            index += self._size
        if not 0 <= index < self._size:
            raise IndexError(f"position {index} out of range for {self._size} items")
        point = self._buf[(self._head + index) % len(self._buf)]
        assert point is not None
        return point

    def __iter__(self) -> Iterator[Point]:
        for i in range(self._size):
            self.read_steps += 1
            yield self[i]

    def __repr__(self) -> str:
        return f"FingerSeq({list(self)!r})"

    def to_list(self) -> list[Point]:
        return list(self)

    def clear(self) -> None:
        self._buf = [None] * MIN_CAPACITY
        self._head = 0
        self._size = 0

    def apply_edit(self, edit: HullEdit) -> None:
        """Replay one engine edit.

        Raises:
            HullInternalError: If the edit breaks x order or pops an empty sequence
        """
        kind = edit.kind
        if kind is EditKind.POP_LEFT:
            self.pop_left()
        elif kind is EditKind.POP_RIGHT:
            self.pop_right()
        elif edit.point is None:
            raise HullInternalError(f"{kind.value} edit without a point")
        elif kind is EditKind.PUSH_LEFT:
            self.push_left(edit.point)
        else:
            self.push_right(edit.point)

    def push_left(self, point: Point) -> None:
        if self._size and point.x >= self[0].x:
            raise HullInternalError(
                f"push_left of {tuple(point)} is not left of {tuple(self[0])}"
            )
        self._reserve()
        self._head = (self._head - 1) % len(self._buf)
        self._buf[self._head] = point
        self._size += 1
        self.edit_steps += 1

    def push_right(self, point: Point) -> None:
        if self._size and point.x <= self[-1].x:
            raise HullInternalError(
                f"push_right of {tuple(point)} is not right of {tuple(self[-1])}"
            )
        self._reserve()
        self._buf[(self._head + self._size) % len(self._buf)] = point
        self._size += 1
        self.edit_steps += 1

    def pop_left(self) -> Point:
        if not self._size:
            raise HullInternalError("pop_left on an empty sequence")
        point = self[0]
        self._buf[self._head] = None
        self._head = (self._head + 1) % len(self._buf)
        self._size -= 1
        self.edit_steps += 1
        self._shrink()
        return point

    def pop_right(self) -> Point:
        if not self._size:
            raise HullInternalError("pop_right on an empty sequence")
        point = self[-1]
        self._buf[(self._head + self._size - 1) % len(self._buf)] = None
        self._size -= 1
        self.edit_steps += 1
        self._shrink()
        return point

    def search(self, pred: Callable[..., bool], edges: bool = False) -> int:
        """Binary search for the first position where ``pred`` turns true.

        In vertex mode ``pred(point)`` is evaluated per vertex and the result
        is ``len(self)`` when it never holds. In edge mode ``pred(a, b)`` is
        evaluated on consecutive pairs; the result is the index of the first
        edge's left vertex, or the last position when no edge qualifies.
        ``pred`` must be false on a prefix and true on the rest.
        """
        if edges:
            if self._size < 2:
                return 0
            return bisect_left(
                range(self._size - 1),
                True,
                key=lambda i: pred(self[i], self[i + 1]),
            )
        return bisect_left(range(self._size), True, key=lambda i: pred(self[i]))

    def slice(self, lo: int, hi: int) -> list[Point]:
        """Vertices at positions ``lo`` through ``hi`` inclusive.

        Raises:
            HullValidationError: If the range is empty or outside the sequence
        """
        if not 0 <= lo <= hi < self._size:
            raise HullValidationError(
                f"invalid range [{lo}, {hi}] for {self._size} items"
            )
        return [self[i] for i in range(lo, hi + 1)]

    def _reserve(self) -> None:
        if self._size == len(self._buf):
            self._resize(2 * len(self._buf))

    def _shrink(self) -> None:
        capacity = len(self._buf)
        if capacity > MIN_CAPACITY and self._size * 4 <= capacity:
            self._resize(capacity // 2)

    def _resize(self, capacity: int) -> None:
        items = list(self)
        self._buf = [*items, *([None] * (capacity - len(items)))]
        self._head = 0
        self.edit_steps += len(items)
