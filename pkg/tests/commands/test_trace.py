"""Tests for the trace file grammar."""

import pytest

from sliding_hull.commands.trace import (
    Delete,
    Hull,
    Insert,
    Query,
    format_command,
    parse_line,
    parse_trace,
)
from sliding_hull.geometry.answers import QueryKind
from sliding_hull.shared.exceptions import TraceParseError


@pytest.mark.parametrize(
    "text,expected",
    [
        ("I 3 4", Insert(3, 4)),
        ("I -3 +4", Insert(-3, 4)),
        ("  D  # drop the oldest", Delete()),
        ("H", Hull()),
        ("Q extreme 0 1", Query(QueryKind.EXTREME, (0, 1))),
        ("Q stab 1 0 2", Query(QueryKind.STAB, (1, 0, 2))),
        ("Q range 1 3", Query(QueryKind.RANGE, (1, 3))),
        ("Q polygon 0 0 1 0 0 1", Query(QueryKind.POLYGON, (0, 0, 1, 0, 0, 1))),
    ],
)
def test_parse_line(text, expected):
    """Test every command form parses."""
    assert parse_line(text, 1) == expected


@pytest.mark.parametrize("text", ["", "   ", "# only a comment", "\t# x"])
def test_blank_lines(text):
    """Test blank and comment lines produce no command."""
    assert parse_line(text, 1) is None


@pytest.mark.parametrize(
    "text,column,fragment",
    [
        ("I 1", 4, "expected 2 integer arguments, got 1"),
        ("I 1 2 3", 7, "got 3"),
        ("I 1 x", 5, "expected an integer"),
        ("I 1.5 2", 3, "expected an integer"),
        ("I 1 \u0663", 5, "expected an integer"),
        ("I \uff11 2", 3, "expected an integer"),
        ("X 1 2", 1, "unknown command"),
        ("D 1", 3, "takes no arguments"),
        ("Q", 2, "missing query kind"),
        ("Q nope 1", 3, "unknown query kind"),
        ("Q polygon 1 2 3", 16, "positive even number"),
        ("Q polygon", 10, "positive even number"),
    ],
)
def test_parse_errors(text, column, fragment):
    """Test malformed lines report a 1-based line and column."""
    with pytest.raises(TraceParseError) as exc_info:
        parse_line(text, 7)
    error = exc_info.value
    assert error.line == 7
    assert error.column == column
    assert fragment in str(error)
    assert str(error).startswith(f"line 7, column {column}:")


def test_parse_trace_keeps_line_numbers():
    """Test commands remember the line they came from."""
    text = "# header\nI 0 0\n\nI 1 2\nD\nQ contains 1 1\n"
    commands = parse_trace(text)
    assert commands == [
        Insert(0, 0),
        Insert(1, 2),
        Delete(),
        Query(QueryKind.CONTAINS, (1, 1)),
    ]
    assert [c.line for c in commands] == [2, 4, 5, 6]


def test_parse_trace_stops_at_first_error():
    """Test the first bad line is the one reported."""
    with pytest.raises(TraceParseError) as exc_info:
        parse_trace("I 0 0\n\n# c\nI x 1\nI y 2\n")
    assert exc_info.value.line == 4


def test_format_command():
    """Test commands render back into trace syntax."""
    for text in ["I 3 -4", "D", "H", "Q tangents 2 5", "Q polygon 0 0 4 0 2 2"]:
        assert format_command(parse_line(text, 1)) == text
