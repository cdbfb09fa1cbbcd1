"""Tests for the hull queries on small fixed windows."""

import pytest

from sliding_hull.engine.window import HullWindow
from sliding_hull.geometry.answers import (
    BoundaryHit,
    Containment,
    Disjoint,
    Intersecting,
    QueryKind,
    TangentPair,
)
from sliding_hull.geometry.oracle import naive_polygon_interaction
from sliding_hull.geometry.predicates import Direction, LineEq, Point
from sliding_hull.queries import (
    ConvexPolygon,
    ProbeCounter,
    answer_query,
    contains,
    extreme,
    line_intersection,
    polygon_interaction,
    range_report,
    stab_line,
    tangents_from,
)
from sliding_hull.shared.exceptions import (
    EmptyWindowError,
    HullValidationError,
    NotOutsideError,
)
from tests.constants import PENTAGON, PENTAGON_HULL, TRIANGLE, TRIANGLE_RING

SQUARE_RIGHT = [(10, 0), (12, 0), (12, 2), (10, 2)]


@pytest.fixture
def pentagon():
    return HullWindow.from_points(PENTAGON)


@pytest.fixture
def triangle():
    return HullWindow.from_points(TRIANGLE)


def test_extreme(pentagon):
    """Test extreme vertices along the axes."""
    assert extreme(pentagon, Direction(0, 1)) == Point(3, 3)
    assert extreme(pentagon, Direction(1, 0)) == Point(4, 0)
    assert extreme(pentagon, Direction(-1, 0)) == Point(0, 0)
    assert extreme(pentagon, Direction(-1, 1)) == Point(1, 2)


def test_extreme_rejects_zero_direction():
    """Test a zero direction is invalid input."""
    with pytest.raises(HullValidationError):
        Direction(0, 0)


def test_stab_line(pentagon):
    """Test missing, crossing and touching lines."""
    assert not stab_line(pentagon, LineEq(0, 1, 5))
    assert stab_line(pentagon, LineEq(1, 0, 2))
    assert stab_line(pentagon, LineEq(0, 1, 3))
    assert not stab_line(pentagon, LineEq(1, 0, -1))


def test_tangents_from(triangle):
    """Test tangents from a point above the triangle."""
    assert tangents_from(triangle, Point(2, 5)) == TangentPair(
        left_touch=Point(4, 0), right_touch=Point(0, 0)
    )


def test_tangents_from_inside_or_boundary(triangle):
    """Test a point that is not outside is refused with its own error."""
    with pytest.raises(NotOutsideError) as exc_info:
        tangents_from(triangle, Point(2, 1))
    assert exc_info.value.code == "not_outside"
    with pytest.raises(NotOutsideError):
        tangents_from(triangle, Point(1, 1))


def test_tangents_from_degenerate_hulls():
    """Test one-point and collinear hulls."""
    window = HullWindow.from_points([(3, 3)])
    assert tangents_from(window, Point(0, 9)) == TangentPair(Point(3, 3), Point(3, 3))

    window = HullWindow.from_points([(0, 0), (2, 2)])
    assert tangents_from(window, Point(5, 5)) == TangentPair(Point(2, 2), Point(2, 2))
    pair = tangents_from(window, Point(0, 2))
    assert {pair.left_touch, pair.right_touch} == {Point(0, 0), Point(2, 2)}


def test_line_intersection(pentagon):
    """Test crossed edges, a grazed vertex and a miss."""
    assert line_intersection(pentagon, LineEq(1, 0, 2)) == (
        BoundaryHit.edge(Point(0, 0), Point(4, 0)),
        BoundaryHit.edge(Point(1, 2), Point(3, 3)),
    )
    assert line_intersection(pentagon, LineEq(1, 1, 6)) == (
        BoundaryHit.vertex(Point(3, 3)),
    )
    assert line_intersection(pentagon, LineEq(0, 1, 5)) == ()


def test_contains(pentagon):
    """Test inside, vertex, edge and outside points."""
    assert contains(pentagon, Point(2, 1)) is Containment.INSIDE
    assert contains(pentagon, Point(0, 0)) is Containment.BOUNDARY
    assert contains(pentagon, Point(2, 0)) is Containment.BOUNDARY
    assert contains(pentagon, Point(5, 0)) is Containment.OUTSIDE
    assert contains(pentagon, Point(2, 3)) is Containment.OUTSIDE


def test_contains_degenerate_hulls():
    """Test containment in a point and a segment."""
    window = HullWindow.from_points([(1, 1)])
    assert contains(window, Point(1, 1)) is Containment.BOUNDARY
    assert contains(window, Point(1, 2)) is Containment.OUTSIDE

    window = HullWindow.from_points([(0, 0), (4, 2)])
    assert contains(window, Point(2, 1)) is Containment.BOUNDARY
    assert contains(window, Point(2, 2)) is Containment.OUTSIDE


def test_range_report(pentagon):
    """Test slabs report hull vertices in boundary order."""
    assert range_report(pentagon, 1, 3) == [Point(3, 3), Point(1, 2)]
    assert range_report(pentagon, 10, 20) == []
    assert range_report(pentagon, 0, 4) == PENTAGON_HULL
    assert range_report(pentagon, 4, 4) == [Point(4, 0)]
    with pytest.raises(HullValidationError):
        range_report(pentagon, 3, 1)


def test_range_report_on_empty_window():
    """Test an empty window reports an empty slab but still checks the bounds."""
    window = HullWindow()
    assert range_report(window, 0, 1) == []
    with pytest.raises(HullValidationError):
        range_report(window, 1, 0)


def test_polygon_interaction_disjoint(pentagon):
    """Test tangents to a square right of the hull."""
    answer = polygon_interaction(pentagon, SQUARE_RIGHT)
    assert isinstance(answer, Disjoint)
    assert answer.outer[0].hull_vertex == Point(4, 0)
    assert answer.outer[0].polygon_vertex == Point(10, 0)
    assert answer.outer[1].hull_vertex == Point(3, 3)
    assert answer.outer[1].polygon_vertex == Point(12, 2)


def test_polygon_interaction_intersecting(pentagon):
    """Test a polygon inside the hull, the hull itself and a touching one."""
    assert polygon_interaction(pentagon, [(2, 1), (3, 1), (3, 2)]) == Intersecting()
    assert polygon_interaction(pentagon, PENTAGON_HULL) == Intersecting()
    assert polygon_interaction(pentagon, [(4, 0), (6, 0), (6, 2)]) == Intersecting()


def test_polygon_interaction_accepts_a_built_polygon(pentagon):
    """Test a validated polygon can be reused across queries."""
    square = ConvexPolygon.from_vertices(SQUARE_RIGHT)
    assert len(square) == 4
    assert square.vertices() == [Point(*p) for p in SQUARE_RIGHT]
    assert isinstance(polygon_interaction(pentagon, square), Disjoint)


@pytest.mark.parametrize(
    "ring",
    [
        [],
        [(0, 0), (1, 0), (0, 0)],
        SQUARE_RIGHT[::-1],
        [(0, 0), (1, 0), (2, 0)],
        [(0, 10), (-6, -8), (10, 3), (-10, 3), (6, -8)],
    ],
)
def test_polygon_validation(pentagon, ring):
    """Test empty, repeating, clockwise, flat and star polygons are refused."""
    with pytest.raises(HullValidationError):
        polygon_interaction(pentagon, ring)


def test_queries_on_empty_window():
    """Test every query but the slab report refuses an empty window."""
    window = HullWindow()
    calls = [
        lambda: extreme(window, Direction(1, 0)),
        lambda: stab_line(window, LineEq(1, 0, 0)),
        lambda: tangents_from(window, Point(0, 0)),
        lambda: line_intersection(window, LineEq(1, 0, 0)),
        lambda: contains(window, Point(0, 0)),
        lambda: polygon_interaction(window, TRIANGLE_RING),
    ]
    for call in calls:
        with pytest.raises(EmptyWindowError):
            call()


def test_answer_query_dispatch(pentagon):
    """Test trace-style parameters reach the right query."""
    probe = ProbeCounter()
    assert answer_query(pentagon, QueryKind.EXTREME, (0, 1), probe) == Point(3, 3)
    assert probe.count > 0
    assert answer_query(pentagon, QueryKind.STAB, (0, 1, 5)) is False
    assert answer_query(pentagon, QueryKind.CONTAINS, (2, 1)) is Containment.INSIDE
    assert answer_query(pentagon, QueryKind.RANGE, (1, 3)) == [Point(3, 3), Point(1, 2)]
    answer = answer_query(pentagon, QueryKind.POLYGON, (2, 1, 3, 1, 3, 2))
    assert answer == Intersecting()


def test_polygon_interaction_left_of_hull(pentagon):
    """Test a polygon entirely left of the hull."""
    square = [(-12, -1), (-10, -1), (-10, 1), (-12, 1)]
    answer = polygon_interaction(pentagon, square)
    assert isinstance(answer, Disjoint)
    for tangent in (*answer.outer, *answer.inner):
        assert tangent.hull_vertex in PENTAGON_HULL
        assert tangent.polygon_vertex in [Point(*p) for p in square]


def test_polygon_interaction_between_polygons():
    """Test the query also runs between two caller polygons."""
    square = ConvexPolygon.from_vertices(SQUARE_RIGHT)
    assert isinstance(polygon_interaction(square, TRIANGLE_RING), Disjoint)
    touching = [(12, 2), (14, 2), (14, 4)]
    assert polygon_interaction(square, touching) == Intersecting()


def test_polygon_interaction_when_chains_cross_between_vertices():
    """Test an overlap whose peak lies where two chains cross, off every vertex."""
    window = HullWindow.from_points([(0, -5), (1, -2), (3, 4), (4, 5), (6, 5)])
    ring = [(-5, 3), (5, -6), (12, -8)]
    assert naive_polygon_interaction(window.points(), ring) == Intersecting()
    assert polygon_interaction(window, ring) == Intersecting()
    polygon = ConvexPolygon.from_vertices(ring)
    assert polygon_interaction(polygon, list(window.hull())) == Intersecting()
