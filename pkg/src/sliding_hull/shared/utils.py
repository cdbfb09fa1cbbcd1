"""Utility functions for sliding hull."""

import uuid


def get_trace_id() -> str:
    """Generate a unique trace ID for correlating log lines of one command.

    Returns:
        A UUID string
    """
    return str(uuid.uuid4())


def parse_int_list(text: str) -> list[int]:
    """Parse a comma separated list of integers, e.g. ``1000,10000,1e5``.

    Scientific shorthand is accepted when it denotes an integer.

    Raises:
        ValueError: If an entry is not an integer
    """
    values = []
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            continue
        if "e" in item.lower():
            mantissa, _, exponent = item.lower().partition("e")
            values.append(int(mantissa) * 10 ** int(exponent))
        else:
            values.append(int(item))
    if not values:
        raise ValueError(f"no integers in {text!r}")
    return values
