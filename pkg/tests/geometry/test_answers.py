"""Tests for answer types and their JSON forms."""

from sliding_hull.geometry.answers import (
    BoundaryHit,
    CommonTangent,
    Containment,
    Disjoint,
    HitKind,
    HullSnapshot,
    Intersecting,
    TangentPair,
    answer_as_json,
)
from sliding_hull.geometry.predicates import Point


def test_boundary_hit_edge_is_lexicographic():
    """Test edge endpoints are stored smaller first."""
    hit = BoundaryHit.edge(Point(3, 3), Point(1, 2))
    assert hit.kind is HitKind.EDGE
    assert hit.points == (Point(1, 2), Point(3, 3))
    assert hit == BoundaryHit.edge(Point(1, 2), Point(3, 3))


def test_answer_as_json_simple_answers():
    """Test points, booleans, containment and vertex lists."""
    assert answer_as_json(Point(3, 3)) == [3, 3]
    assert answer_as_json(True) is True
    assert answer_as_json(Containment.INSIDE) == "inside"
    assert answer_as_json([Point(3, 3), Point(1, 2)]) == [[3, 3], [1, 2]]
    assert answer_as_json(HullSnapshot((Point(0, 0), Point(1, 0)))) == [
        [0, 0],
        [1, 0],
    ]


def test_answer_as_json_structured_answers():
    """Test tangents, hits and polygon answers."""
    assert answer_as_json(TangentPair(Point(4, 0), Point(0, 0))) == {
        "left": [4, 0],
        "right": [0, 0],
    }
    assert answer_as_json((BoundaryHit.vertex(Point(3, 3)),)) == [
        {"kind": "vertex", "points": [[3, 3]]}
    ]
    assert answer_as_json(()) == []
    assert answer_as_json(Intersecting()) == {"result": "intersecting"}
    tangent = CommonTangent(Point(4, 0), Point(10, 0))
    disjoint = Disjoint(outer=(tangent, tangent), inner=(tangent, tangent))
    assert answer_as_json(disjoint)["outer"][0] == {"hull": [4, 0], "polygon": [10, 0]}
