"""Upper hull of a sliding point window in O(1) amortized time per update.

The live points are split by a vertical partition line into S1 (left, up to
and including the line) and S2 (right of it). S1 is kept in a list-stack
structure: every node has a right link fixed when the node is scanned and a
stack of the left neighbours it has had, newest on top, so deleting the
leftmost point re-exposes the older hull. S2 is kept as its upper chain.
The two chains are joined by the common tangent (t1, t2).

Every structural change is reported as a stream of ``HullEdit`` end edits
that keeps a ``FingerSeq`` equal to the upper hull of the whole window.
The lower hull is the upper hull of the y-mirrored points.
"""

from collections import deque
from collections.abc import Sequence
from itertools import pairwise

from ..geometry.predicates import Point, Turn, orient, right_turn
from ..shared.exceptions import EmptyWindowError, HullInternalError, XOrderError
from ..shared.logging_manager import get_logger
from .finger_seq import POP_LEFT, POP_RIGHT, HullEdit, push_left, push_right
from .stats import Procedure, ProcedureStats

logger = get_logger(__name__)


class ChainNode:
    """A point of the window plus its list-stack links."""

    __slots__ = ("point", "index", "_right_link", "stack")

    def __init__(self, point: Point, index: int):
        self.point = point
        self.index = index
        self._right_link: ChainNode | None = None
        self.stack: list[ChainNode] = []

    @property
    def right_link(self) -> "ChainNode | None":
        return self._right_link

    @right_link.setter
    def right_link(self, node: "ChainNode") -> None:
        if self._right_link is not None:
            raise HullInternalError(
                f"right link of {tuple(self.point)} is already set"
            )
        self._right_link = node

    @property
    def left_link(self) -> "ChainNode | None":
        """Current left neighbour on the S1 hull: the top of the stack."""
        return self.stack[-1] if self.stack else None

    def __repr__(self) -> str:
        return f"ChainNode({self.point.x}, {self.point.y}, index={self.index})"


class ChainEngine:
    """One monotone upper chain under window-sliding updates."""

    def __init__(self, stats: ProcedureStats | None = None):
        self.stats = stats if stats is not None else ProcedureStats()
        self.s1_nodes: deque[ChainNode] = deque()
        self.s2_nodes: list[ChainNode] = []
        # upper chain of S2; entries left of t2 are hidden under the tangent
        self.s2_hull: list[ChainNode] = []
        self.t1: ChainNode | None = None
        self.t2: int | None = None
        self._next_index = 0

    @property
    def size(self) -> int:
        return len(self.s1_nodes) + len(self.s2_nodes)

    @property
    def live_nodes(self) -> int:
        return self.size

    @property
    def s1_leftmost(self) -> ChainNode | None:
        return self.s1_nodes[0] if self.s1_nodes else None

    @property
    def partition_x(self) -> int | None:
        return self.s1_nodes[-1].point.x if self.s1_nodes else None

    def _rightmost_x(self) -> int | None:
        if self.s2_nodes:
            return self.s2_nodes[-1].point.x
        return self.partition_x

    def build_left_hull(
        self, points: Sequence[Point], first_index: int = 0
    ) -> list[HullEdit]:
        """Replace the state with a list-stack structure over ``points``.

        Args:
            points: Nonempty points in strictly increasing x
            first_index: Insertion index of ``points[0]``

        Returns:
            Edits that build the upper hull from an empty sequence

        Raises:
            XOrderError: If x is not strictly increasing
            EmptyWindowError: If no points are given
        """
        if not points:
            raise EmptyWindowError("cannot build a hull from no points")
        for a, b in pairwise(points):
            if b.x <= a.x:
                raise XOrderError(
                    f"x must increase strictly: {tuple(a)} then {tuple(b)}"
                )
        nodes = [ChainNode(p, first_index + i) for i, p in enumerate(points)]
        self._next_index = first_index + len(points)
        return self._build(nodes)

    def _build(self, nodes: list[ChainNode]) -> list[HullEdit]:
        """Leftward Graham scan that fills right links and stacks."""
        stats = self.stats
        edits = [push_left(nodes[-1].point)]
        stats.step(Procedure.LEFT_HULL_CONSTRUCTION)
        stats.involve(nodes[-1].index, Procedure.LEFT_HULL_CONSTRUCTION)

        for i in range(len(nodes) - 2, -1, -1):
            node = nodes[i]
            v = nodes[i + 1]
            steps = 1
            while v.right_link is not None and not right_turn(
                node.point, v.point, v.right_link.point
            ):
                edits.append(POP_LEFT)
                v = v.right_link
                steps += 1
            v.stack.append(node)
            node.right_link = v
            edits.append(push_left(node.point))
            stats.step(Procedure.LEFT_HULL_CONSTRUCTION, steps)
            stats.involve(node.index, Procedure.LEFT_HULL_CONSTRUCTION)

        self.s1_nodes = deque(nodes)
        self.s2_nodes = []
        self.s2_hull = []
        self.t1 = None
        self.t2 = None
        return edits

    def insert_right(self, q: Point) -> list[HullEdit]:
        """Add ``q`` to S2 and repair the common tangent.

        Raises:
            XOrderError: If ``q`` is not strictly right of every live point
            EmptyWindowError: If S1 is empty (build the structure first)
        """
        if not self.s1_nodes:
            raise EmptyWindowError("insert_right needs a built left hull")
        rightmost = self._rightmost_x()
        if rightmost is not None and q.x <= rightmost:
            raise XOrderError(
                f"inserted point {tuple(q)} is not right of x={rightmost}"
            )

        stats = self.stats
        node = ChainNode(q, self._next_index)
        self._next_index += 1
        edits: list[HullEdit] = []

        if self.t1 is None or self.t2 is None:
            # first point of S2: walk the whole S1 hull from its right end
            self.t1 = self._tangent_walk(self.s1_nodes[-1], q, edits)
            self.s2_nodes.append(node)
            self.s2_hull.append(node)
            self.t2 = 0
            stats.step(Procedure.RIGHT_HULL_UPDATE)
            edits.append(push_right(q))
            return edits

        t1, t2 = self.t1, self.t2
        hull = self.s2_hull
        steps = 1
        while len(hull) >= 2 and not right_turn(hull[-2].point, hull[-1].point, q):
            removed = hull.pop()
            steps += 1
            stats.involve(removed.index, Procedure.RIGHT_HULL_UPDATE)
            if len(hull) >= t2:
                edits.append(POP_RIGHT)
        stats.step(Procedure.RIGHT_HULL_UPDATE, steps)

        last = len(hull) - 1
        tangent_kept = last > t2 or (
            last == t2 and right_turn(t1.point, hull[t2].point, q)
        )
        if not tangent_kept:
            if last == t2:
                edits.append(POP_RIGHT)
            self.t1 = self._tangent_walk(t1, q, edits)
            self.t2 = len(hull)

        self.s2_nodes.append(node)
        hull.append(node)
        edits.append(push_right(q))
        return edits

    def _tangent_walk(
        self, start: ChainNode, q: Point, edits: list[HullEdit]
    ) -> ChainNode:
        """Insertion-type tangent search: move left on the S1 hull until it
        turns right towards ``q``, popping every vertex passed over."""
        stats = self.stats
        t1 = start
        steps = 1
        while t1.left_link is not None and not right_turn(
            t1.left_link.point, t1.point, q
        ):
            if t1 is not start:
                stats.involve(t1.index, Procedure.INSERTION_TANGENT)
            edits.append(POP_RIGHT)
            t1 = t1.left_link
            steps += 1
        stats.step(Procedure.INSERTION_TANGENT, steps)
        return t1

    def delete_left(self) -> list[HullEdit]:
        """Remove the leftmost point.

        Raises:
            EmptyWindowError: If there is nothing to delete
        """
        if not self.s1_nodes:
            raise EmptyWindowError("delete on an empty chain")

        stats = self.stats
        node = self.s1_nodes.popleft()
        stats.forget(node.index)

        if not self.s1_nodes:
            return self._move_partition()

        p = node.right_link
        if p is None or not p.stack or p.stack[-1] is not node:
            raise HullInternalError(
                f"leftmost point {tuple(node.point)} is not on top of its right "
                "neighbour's stack"
            )
        p.stack.pop()

        if node is self.t1:
            return self._deletion_tangent_search(p)

        edits = [POP_LEFT]
        steps = 1
        w = p.left_link
        while w is not None:
            edits.append(push_left(w.point))
            stats.involve(w.index, Procedure.TREE_UPDATE)
            w = w.left_link
            steps += 1
        stats.step(Procedure.TREE_UPDATE, steps)
        return edits

    def _deletion_tangent_search(self, start: ChainNode) -> list[HullEdit]:
        """Walk both chains leftwards until (t1, t2) is tangent to both again.

        t2 steps one vertex at a time, each step taken only once t1 has
        settled against the current t2, so t2 never passes the new tangent.
        Ties keep t1 leftmost and t2 rightmost, leaving no collinear vertex.
        """
        stats = self.stats
        hull = self.s2_hull
        assert self.t2 is not None
        old_j = j = self.t2
        p = start
        passed: list[ChainNode] = []
        steps = 1

        while True:
            while p.left_link is not None and not right_turn(
                p.left_link.point, p.point, hull[j].point
            ):
                passed.append(p)
                p = p.left_link
                steps += 1
            if j == 0:
                break
            if orient(p.point, hull[j].point, hull[j - 1].point) is not Turn.LEFT:
                break
            j -= 1
            steps += 1
        stats.step(Procedure.DELETION_TANGENT, steps)

        for walked in passed[1:]:
            stats.involve(walked.index, Procedure.DELETION_TANGENT)
        for k in range(j + 1, old_j):
            stats.involve(hull[k].index, Procedure.DELETION_TANGENT)

        self.t1 = p
        self.t2 = j

        edits = [POP_LEFT]
        edits.extend(push_left(hull[k].point) for k in range(old_j - 1, j - 1, -1))
        pushed = 1
        w: ChainNode | None = p
        while w is not None:
            edits.append(push_left(w.point))
            if w is not start:
                stats.involve(w.index, Procedure.TREE_UPDATE)
            w = w.left_link
            pushed += 1
        stats.step(Procedure.TREE_UPDATE, pushed)
        return edits

    def _move_partition(self) -> list[HullEdit]:
        """S1 ran empty: move the partition line to the right end and rebuild."""
        edits = [POP_LEFT]
        if not self.s2_nodes:
            self.t1 = None
            self.t2 = None
            return edits

        assert self.t2 is not None
        hidden = self.s2_hull[: self.t2]
        edits.extend(push_left(v.point) for v in reversed(hidden))
        nodes = self.s2_nodes
        logger.debug(
            "Moving partition line",
            extra={"extra": {"partition_x": nodes[-1].point.x, "rebuilt": len(nodes)}},
        )
        # the rebuild reproduces the S2 chain the edits above already expose
        self._build(nodes)
        return edits

    def chain_vertices(self) -> list[Point]:
        """Upper hull of the window, left to right, in O(h)."""
        vertices: list[Point] = []
        node = self.s1_leftmost
        while node is not None:
            vertices.append(node.point)
            if node is self.t1:
                break
            node = node.right_link
        if self.t2 is not None:
            vertices.extend(v.point for v in self.s2_hull[self.t2 :])
        return vertices
