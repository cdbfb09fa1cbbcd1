"""Trace file grammar.

One command per line, ``#`` starts a comment::

    I <x> <y>                 insert point
    D                         delete leftmost
    Q extreme <dx> <dy>
    Q stab <a> <b> <c>        line a*x + b*y = c
    Q tangents <x> <y>
    Q lineint <a> <b> <c>
    Q contains <x> <y>
    Q range <x1> <x2>
    Q polygon <x1> <y1> ...   convex polygon, counterclockwise
    H                         output hull counterclockwise
"""

import re
from dataclasses import dataclass, field

from ..geometry.answers import QueryKind
from ..shared.exceptions import TraceParseError

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?[0-9]+")


# polygon takes any positive number of coordinate pairs
ARITY = {
    QueryKind.EXTREME: 2,
    QueryKind.STAB: 3,
    QueryKind.TANGENTS: 2,
    QueryKind.LINEINT: 3,
    QueryKind.CONTAINS: 2,
    QueryKind.RANGE: 2,
}


@dataclass(frozen=True)
class Insert:
    x: int
    y: int
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Delete:
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Query:
    kind: QueryKind
    params: tuple[int, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Hull:
    line: int = field(default=0, compare=False)


TraceCommand = Insert | Delete | Query | Hull


def _integers(
    tokens: list[re.Match[str]], expected: int | None, line: int, after: int
) -> tuple[int, ...]:
    """Parse integer arguments; ``expected`` None means any even count > 0."""
    for match in tokens:
        if not _INTEGER.fullmatch(match.group()):
            raise TraceParseError(
                f"expected an integer, got {match.group()!r}",
                line,
                match.start() + 1,
            )
    if expected is None:
        ok = len(tokens) > 0 and len(tokens) % 2 == 0
        wanted = "a positive even number of"
    else:
        ok = len(tokens) == expected
        wanted = str(expected)
    if not ok:
        column = after
        if expected is not None and len(tokens) > expected:
            column = tokens[expected].start() + 1
        raise TraceParseError(
            f"expected {wanted} integer arguments, got {len(tokens)}", line, column
        )
    return tuple(int(match.group()) for match in tokens)


def parse_line(text: str, line: int) -> TraceCommand | None:
    """Parse one trace line; blank and comment-only lines give None."""
    body = text.split("#", 1)[0]
    tokens = list(_TOKEN.finditer(body))
    if not tokens:
        return None

    head = tokens[0]
    end = len(body.rstrip()) + 1
    op = head.group()
    if op == "I":
        x, y = _integers(tokens[1:], 2, line, end)
        return Insert(x, y, line)
    if op in ("D", "H"):
        if len(tokens) > 1:
            raise TraceParseError(
                f"'{op}' takes no arguments", line, tokens[1].start() + 1
            )
        return Delete(line) if op == "D" else Hull(line)
    if op == "Q":
        if len(tokens) < 2:
            raise TraceParseError("missing query kind", line, end)
        name = tokens[1]
        try:
            kind = QueryKind(name.group())
        except ValueError:
            raise TraceParseError(
                f"unknown query kind {name.group()!r}", line, name.start() + 1
            ) from None
        params = _integers(tokens[2:], ARITY.get(kind), line, end)
        return Query(kind, params, line)
    raise TraceParseError(f"unknown command {op!r}", line, head.start() + 1)


def parse_trace(text: str) -> list[TraceCommand]:
    """Parse a whole trace.

    Raises:
        TraceParseError: On the first malformed line, with its position
    """
    commands = []
    for number, raw in enumerate(text.splitlines(), start=1):
        command = parse_line(raw, number)
        if command is not None:
            commands.append(command)
    return commands


def format_command(command: TraceCommand) -> str:
    """Render a command back into trace syntax."""
    match command:
        case Insert(x, y):
            return f"I {x} {y}"
        case Delete():
            return "D"
        case Hull():
            return "H"
        case Query(kind, params):
            return " ".join(["Q", kind.value, *map(str, params)])
    raise TypeError(f"not a trace command: {command!r}")
