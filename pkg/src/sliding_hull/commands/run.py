"""Replay a trace against a hull window, optionally checking every step."""

import json
import time
from typing import Any

from pydantic import BaseModel, Field

from ..engine.window import HullWindow
from ..geometry.answers import QueryAnswer, answer_as_json
from ..geometry.oracle import naive_query, static_hull
from ..geometry.predicates import Point
from ..queries.dispatch import answer_query
from ..queries.probe import ProbeCounter
from ..shared.exceptions import HullContractError, HullError, HullValidationError
from ..shared.logging_manager import get_logger
from ..shared.utils import get_trace_id
from .trace import Delete, Hull, Insert, Query, TraceCommand, format_command

logger = get_logger(__name__)


class CommandOutcome(BaseModel):
    """What one trace command produced."""

    line: int
    command: str
    output: Any = None
    error: str | None = None
    error_code: str | None = None
    mismatch: str | None = None
    probes: int | None = None

    @property
    def reports(self) -> bool:
        """Queries and hull requests always print; updates only on trouble."""
        return (
            self.output is not None
            or self.error is not None
            or self.mismatch is not None
        )


class RunReport(BaseModel):
    outcomes: list[CommandOutcome] = Field(default_factory=list)
    updates: int = 0
    queries: int = 0
    errors: int = 0
    mismatches: int = 0
    verified: bool = False
    total_steps: int = 0
    stats: dict[str, Any] = Field(default_factory=dict)
    involvement_bounds_hold: bool = True
    wall_ns: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


class _Outcome:
    """An answer or the library error that replaced it."""

    def __init__(self, answer: QueryAnswer | None, error: HullError | None):
        self.answer = answer
        self.error = error

    def describe(self) -> str:
        if self.error is not None:
            return type(self.error).__name__
        if self.answer is None:
            return "nothing"
        return json.dumps(answer_as_json(self.answer))

    def same_as(self, other: "_Outcome") -> bool:
        if self.error is not None or other.error is not None:
            return type(self.error) is type(other.error)
        return self.answer == other.answer


def _attempt(call: Any, *args: Any) -> _Outcome:
    try:
        return _Outcome(call(*args), None)
    except (HullContractError, HullValidationError) as e:
        return _Outcome(None, e)


def _check_hull(window: HullWindow) -> str | None:
    actual = window.hull()
    expected = static_hull(window.points())
    if actual != expected:
        return f"hull {actual.as_list()} != reference {expected.as_list()}"
    if window.last_hull_steps > 2 * len(actual) + 2:
        return f"hull output took {window.last_hull_steps} steps for h={len(actual)}"
    return None


def run_trace(commands: list[TraceCommand], verify: bool = False) -> RunReport:
    """Execute ``commands`` in order against a fresh window.

    Contract violations and invalid queries are recorded on the command
    and the run goes on. With ``verify`` the hull is compared with the
    reference after every update and every answer with the brute-force
    answer; each disagreement counts as a mismatch.
    """
    trace_id = get_trace_id()
    logger.info(
        "Trace run started",
        extra={
            "extra": {
                "trace_id": trace_id,
                "commands": len(commands),
                "verify": verify,
            }
        },
    )
    window = HullWindow()
    report = RunReport(verified=verify)
    started = time.perf_counter_ns()

    for command in commands:
        outcome = CommandOutcome(line=command.line, command=format_command(command))
        match command:
            case Insert(x, y):
                report.updates += 1
                result = _attempt(window.push_right, Point(x, y))
            case Delete():
                report.updates += 1
                result = _attempt(window.pop_left)
                result.answer = None
            case Hull():
                result = _Outcome(window.hull(), None)
            case Query(kind, params):
                report.queries += 1
                probe = ProbeCounter()
                result = _attempt(answer_query, window, kind, params, probe)
                outcome.probes = probe.count
                if verify:
                    expected = _attempt(naive_query, window.points(), kind, params)
                    if not result.same_as(expected):
                        outcome.mismatch = (
                            f"answer {result.describe()} != reference "
                            f"{expected.describe()}"
                        )

        if result.error is not None:
            report.errors += 1
            outcome.error = str(result.error)
            outcome.error_code = result.error.code
        elif result.answer is not None:
            outcome.output = answer_as_json(result.answer)

        if verify and isinstance(command, (Insert, Delete)):
            outcome.mismatch = _check_hull(window)
        if outcome.mismatch is not None:
            report.mismatches += 1
        report.outcomes.append(outcome)

    report.wall_ns = time.perf_counter_ns() - started
    stats = window.stats()
    report.stats = stats.as_dict()
    report.total_steps = stats.total_steps
    report.involvement_bounds_hold = stats.involvement_bounds_hold
    if verify and not stats.involvement_bounds_hold:
        # involvement bound violations count as one mismatch
        report.mismatches += 1
    logger.info(
        "Trace run finished",
        extra={
            "extra": {
                "trace_id": trace_id,
                "mismatches": report.mismatches,
                "errors": report.errors,
                "total_steps": report.total_steps,
            }
        },
    )
    return report


def format_text(report: RunReport, stats: bool = False, timing: bool = False) -> str:
    """One line per query, hull request or failed command, then a summary."""
    lines = []
    for outcome in report.outcomes:
        if not outcome.reports:
            continue
        if outcome.error is not None:
            body = f"error[{outcome.error_code}] {outcome.error}"
        elif outcome.output is None:
            body = "ok"
        else:
            body = json.dumps(outcome.output, separators=(",", ":"))
        lines.append(f"{outcome.line}: {outcome.command} => {body}")
        if outcome.mismatch is not None:
            lines.append(f"{outcome.line}: MISMATCH {outcome.mismatch}")

    summary = (
        f"updates={report.updates} queries={report.queries} "
        f"errors={report.errors} total_steps={report.total_steps}"
    )
    if report.verified:
        summary += f" mismatches={report.mismatches}"
    if timing:
        summary += f" wall_ns={report.wall_ns}"
    lines.append(summary)

    if stats:
        for name, steps in report.stats["counters"].items():
            most = report.stats["max_involvement"][name]
            lines.append(f"stats {name}: steps={steps} max_involvement={most}")
        verdict = "hold" if report.involvement_bounds_hold else "VIOLATED"
        lines.append(
            f"stats once-per-point bounds {verdict} "
            f"(violations={report.stats['violations']})"
        )
    return "\n".join(lines) + "\n"


def format_json(report: RunReport, stats: bool = False, timing: bool = False) -> str:
    """The whole report as one JSON document."""
    exclude: set[str] = set()
    if not stats:
        exclude.add("stats")
    if not timing:
        exclude.add("wall_ns")
    return report.model_dump_json(indent=2, exclude=exclude) + "\n"
