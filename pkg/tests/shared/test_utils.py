"""Tests for utility functions."""

import uuid

import pytest

from sliding_hull.shared.utils import get_trace_id, parse_int_list


def test_get_trace_id_is_unique_uuid():
    """Test trace IDs are fresh UUID strings."""
    first, second = get_trace_id(), get_trace_id()
    assert first != second
    uuid.UUID(first)


def test_parse_int_list_plain():
    """Test parsing a plain comma separated list."""
    assert parse_int_list("1000,10000, 100000") == [1000, 10000, 100000]


def test_parse_int_list_scientific():
    """Test that scientific shorthand denotes integers."""
    assert parse_int_list("1e4,1E5,2e3") == [10_000, 100_000, 2_000]


def test_parse_int_list_skips_empty_entries():
    """Test that stray commas are ignored."""
    assert parse_int_list("5,,7,") == [5, 7]


def test_parse_int_list_rejects_garbage():
    """Test that non-integers are rejected."""
    with pytest.raises(ValueError):
        parse_int_list("ten")
    with pytest.raises(ValueError):
        parse_int_list(",")
