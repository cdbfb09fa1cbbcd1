"""Step counters and per-point involvement counts for the hull procedures."""

from collections import Counter, defaultdict
from enum import Enum
from typing import Any


class Procedure(str, Enum):
    """The amortized procedures of one chain engine."""

    INSERTION_TANGENT = "insertion_tangent"
    DELETION_TANGENT = "deletion_tangent"
    LEFT_HULL_CONSTRUCTION = "left_hull_construction"
    RIGHT_HULL_UPDATE = "right_hull_update"
    TREE_UPDATE = "tree_update"


# Each point may take part in these at most once over a whole run.
ONCE_PER_POINT = frozenset(
    {
        Procedure.INSERTION_TANGENT,
        Procedure.DELETION_TANGENT,
        Procedure.LEFT_HULL_CONSTRUCTION,
        Procedure.TREE_UPDATE,
    }
)


class ProcedureStats:
    """Always-on counters for one chain engine (or a merge of several).

    ``counters`` holds elementary steps per procedure. ``involvement`` maps a
    live point's insertion index to how often each procedure touched it;
    entries go away when the point leaves the window, but ``max_involvement``
    and ``violations`` keep the history.
    """

    def __init__(self) -> None:
        self.counters: Counter[Procedure] = Counter({proc: 0 for proc in Procedure})
        self.involvement: defaultdict[int, Counter[Procedure]] = defaultdict(Counter)
        self.max_involvement: Counter[Procedure] = Counter(
            {proc: 0 for proc in Procedure}
        )
        self.violations = 0

    def step(self, proc: Procedure, count: int = 1) -> None:
        self.counters[proc] += count

    def involve(self, index: int, proc: Procedure) -> None:
        """Record that the point with insertion index ``index`` met ``proc``."""
        seen = self.involvement[index]
        seen[proc] += 1
        if seen[proc] > self.max_involvement[proc]:
            self.max_involvement[proc] = seen[proc]
        if proc in ONCE_PER_POINT and seen[proc] == 2:
            self.violations += 1

    def forget(self, index: int) -> None:
        self.involvement.pop(index, None)

    @property
    def total_steps(self) -> int:
        return sum(self.counters.values())

    @property
    def involvement_bounds_hold(self) -> bool:
        """True iff no point exceeded one involvement in a once-per-point procedure."""
        return self.violations == 0

    def merge(self, other: "ProcedureStats") -> "ProcedureStats":
        """Combine two engines' stats into a new object.

        Steps and violations add up. Involvement is kept per chain, so the
        merged view takes the maximum for each point instead of the sum.
        """
        merged = ProcedureStats()
        merged.counters = self.counters + other.counters
        for proc in Procedure:
            merged.counters.setdefault(proc, 0)
            merged.max_involvement[proc] = max(
                self.max_involvement[proc], other.max_involvement[proc]
            )
        for source in (self.involvement, other.involvement):
            for index, seen in source.items():
                merged.involvement[index] |= seen
        merged.violations = self.violations + other.violations
        return merged

    def as_dict(self) -> dict[str, Any]:
        return {
            "counters": {proc.value: self.counters[proc] for proc in Procedure},
            "total_steps": self.total_steps,
            "max_involvement": {
                proc.value: self.max_involvement[proc] for proc in Procedure
            },
            "violations": self.violations,
            "involvement_bounds_hold": self.involvement_bounds_hold,
        }
