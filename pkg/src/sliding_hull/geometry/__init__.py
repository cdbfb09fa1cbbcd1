"""Exact planar geometry shared by the engine, the queries and the oracle."""

from .predicates import (
    COORD_BITS,
    Direction,
    LineEq,
    Point,
    Turn,
    check_point,
    chain_height,
    cross,
    dot_sign,
    lex_less,
    orient,
    right_turn,
    sheared_x,
    side_of_line,
    sign,
    squared_distance,
    vertically_below,
)

__all__ = [
    "COORD_BITS",
    "Direction",
    "LineEq",
    "Point",
    "Turn",
    "check_point",
    "chain_height",
    "cross",
    "dot_sign",
    "lex_less",
    "orient",
    "right_turn",
    "sheared_x",
    "side_of_line",
    "sign",
    "squared_distance",
    "vertically_below",
]
