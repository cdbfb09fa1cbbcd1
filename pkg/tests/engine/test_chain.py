"""Tests for the upper-chain engine and its edit stream."""

import numpy as np
import pytest

from sliding_hull.engine.chain import ChainEngine, ChainNode
from sliding_hull.engine.finger_seq import (
    POP_LEFT,
    POP_RIGHT,
    EditKind,
    HullEdit,
    push_left,
    push_right,
)
from sliding_hull.engine.stats import ONCE_PER_POINT
from sliding_hull.geometry.predicates import Point, cross
from sliding_hull.shared.exceptions import (
    EmptyWindowError,
    HullInternalError,
    XOrderError,
)


def upper_chain(points):
    """Reference upper hull, left to right, without collinear middles."""
    chain = []
    for p in sorted(points):
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) >= 0:
            chain.pop()
        chain.append(p)
    return chain


def replay(model, edits):
    """Apply edits to a plain list, failing on anything but an end edit."""
    for edit in edits:
        if edit.kind is EditKind.PUSH_LEFT:
            assert not model or edit.point.x < model[0].x
            model.insert(0, edit.point)
        elif edit.kind is EditKind.PUSH_RIGHT:
            assert not model or edit.point.x > model[-1].x
            model.append(edit.point)
        elif edit.kind is EditKind.POP_LEFT:
            model.pop(0)
        else:
            model.pop()
    return model


def build(points):
    engine = ChainEngine()
    edits = engine.build_left_hull([Point(*p) for p in points])
    return engine, replay([], edits)


def test_build_left_hull_links_and_stacks():
    """Test the leftward scan fills right links and left stacks."""
    engine, model = build([(0, 0), (1, 2), (2, 1), (3, 3)])
    assert model == [Point(0, 0), Point(1, 2), Point(3, 3)]
    assert engine.chain_vertices() == model

    nodes = list(engine.s1_nodes)
    assert nodes[0].right_link is nodes[1]
    assert nodes[1].right_link is nodes[3]
    assert nodes[3].left_link is nodes[1]
    assert nodes[3].stack == [nodes[2], nodes[1]]


def test_build_left_hull_small_and_collinear():
    """Test a singleton and a collinear triple."""
    engine, model = build([(5, 5)])
    assert model == [Point(5, 5)]
    assert engine.s1_nodes[0].stack == []

    engine, model = build([(0, 0), (1, 1), (2, 2)])
    assert model == [Point(0, 0), Point(2, 2)]


def test_build_left_hull_contract():
    """Test empty input and x-order breaks are refused."""
    with pytest.raises(EmptyWindowError):
        ChainEngine().build_left_hull([])
    with pytest.raises(XOrderError):
        ChainEngine().build_left_hull([Point(0, 0), Point(0, 1)])


def test_right_link_is_set_once():
    """Test reassigning a right link is an internal error."""
    a, b = ChainNode(Point(0, 0), 0), ChainNode(Point(1, 0), 1)
    a.right_link = b
    with pytest.raises(HullInternalError) as exc_info:
        a.right_link = b
    assert "already set" in str(exc_info.value)


def test_insert_right_edit_streams():
    """Test tangent maintenance while S2 grows."""
    engine, model = build([(0, 0), (1, 2)])

    edits = engine.insert_right(Point(2, 1))
    assert edits == [push_right(Point(2, 1))]
    assert engine.t1.point == Point(1, 2)
    assert engine.s2_hull[engine.t2].point == Point(2, 1)

    edits = engine.insert_right(Point(3, 3))
    assert edits == [POP_RIGHT, push_right(Point(3, 3))]
    assert engine.t1.point == Point(1, 2)
    assert engine.s2_hull[engine.t2].point == Point(3, 3)
    assert replay(model, [push_right(Point(2, 1)), *edits]) == [
        Point(0, 0),
        Point(1, 2),
        Point(3, 3),
    ]


def test_insert_right_into_singleton():
    """Test the first S2 point after a one-point left hull."""
    engine, _ = build([(0, 0)])
    assert engine.insert_right(Point(1, 5)) == [push_right(Point(1, 5))]
    assert engine.t1.point == Point(0, 0)
    assert engine.s2_hull[engine.t2].point == Point(1, 5)


def test_insert_right_contract():
    """Test inserting left of the window or into nothing is refused."""
    engine, _ = build([(0, 0), (3, 1)])
    with pytest.raises(XOrderError):
        engine.insert_right(Point(3, 7))
    with pytest.raises(EmptyWindowError):
        ChainEngine().insert_right(Point(0, 0))


def test_delete_left_exposes_stacked_vertex():
    """Test deleting the leftmost vertex pops its right neighbour's stack."""
    engine, model = build([(0, 0), (1, -1), (3, 1)])
    assert model == [Point(0, 0), Point(3, 1)]
    edits = engine.delete_left()
    assert edits == [POP_LEFT, push_left(Point(1, -1))]
    assert replay(model, edits) == [Point(1, -1), Point(3, 1)]


def test_delete_left_moves_partition():
    """Test deleting the last S1 point rebuilds from S2."""
    engine, model = build([(0, 0)])
    for p in [(1, 2), (2, 1), (3, 3)]:
        replay(model, engine.insert_right(Point(*p)))
    assert model == [Point(0, 0), Point(1, 2), Point(3, 3)]

    edits = engine.delete_left()
    assert edits == [POP_LEFT]
    assert replay(model, edits) == [Point(1, 2), Point(3, 3)]
    assert engine.chain_vertices() == model
    assert engine.t1 is None and engine.t2 is None
    assert engine.partition_x == 3


def test_delete_left_pushes_hidden_s2_vertices():
    """Test a rebuild re-exposes S2 vertices hidden under the old tangent."""
    engine, model = build([(0, 10)])
    for p in [(1, 0), (2, 1), (3, 0)]:
        replay(model, engine.insert_right(Point(*p)))
    assert model == [Point(0, 10), Point(3, 0)]

    edits = engine.delete_left()
    assert edits == [POP_LEFT, push_left(Point(2, 1)), push_left(Point(1, 0))]
    assert replay(model, edits) == [Point(1, 0), Point(2, 1), Point(3, 0)]


def test_delete_left_settles_t1_before_moving_t2():
    """Test t2 stops at (12,99) once t1 has walked from (2,0) to (1,-5)."""
    engine, model = build([(0, 200), (1, -5), (2, 0)])
    for p in [(10, 80), (12, 99), (30, 100)]:
        replay(model, engine.insert_right(Point(*p)))
    assert model == [Point(0, 200), Point(30, 100)]
    assert engine.t1.point == Point(0, 200)

    edits = engine.delete_left()
    assert edits == [POP_LEFT, push_left(Point(12, 99)), push_left(Point(1, -5))]
    expected = [Point(1, -5), Point(12, 99), Point(30, 100)]
    assert replay(model, edits) == expected
    assert engine.chain_vertices() == expected
    assert engine.t1.point == Point(1, -5)
    assert engine.s2_hull[engine.t2].point == Point(12, 99)


def test_delete_left_two_points():
    """Test a two-point chain shrinking to its right point."""
    engine, model = build([(4, 0)])
    replay(model, engine.insert_right(Point(5, 7)))
    replay(model, engine.delete_left())
    assert model == [Point(5, 7)]
    assert engine.chain_vertices() == [Point(5, 7)]


def test_delete_left_on_empty_chain():
    """Test deleting from nothing is a contract error."""
    engine, model = build([(0, 0)])
    replay(model, engine.delete_left())
    assert model == []
    with pytest.raises(EmptyWindowError):
        engine.delete_left()


def test_chain_vertices_examples():
    """Test reading the upper hull back from the engine."""
    engine, _ = build([(0, 0), (1, 2), (2, 1), (3, 3)])
    assert engine.chain_vertices() == [Point(0, 0), Point(1, 2), Point(3, 3)]
    engine, _ = build([(0, 0), (4, 0)])
    assert engine.chain_vertices() == [Point(0, 0), Point(4, 0)]


def run_random_updates(rng, trials, n, y_range):
    """Replay random insert/delete runs, checking edit replay, engine state
    and the reference after every update."""
    for trial in range(trials):
        ys = rng.integers(-y_range, y_range, size=n, endpoint=True).tolist()
        engine = ChainEngine()
        live = []
        model = []
        for x, y in enumerate(ys):
            p = Point(x, y)
            if not live:
                edits = engine.build_left_hull([p], first_index=x)
            else:
                edits = engine.insert_right(p)
            live.append(p)
            replay(model, edits)
            assert model == upper_chain(live) == engine.chain_vertices(), trial

            while live and rng.random() < 0.45:
                replay(model, engine.delete_left())
                live.pop(0)
                assert model == upper_chain(live), trial
                if live:
                    assert engine.chain_vertices() == model, trial

        assert engine.stats.involvement_bounds_hold, f"trial {trial}"
        for proc in ONCE_PER_POINT:
            assert engine.stats.max_involvement[proc] <= 1


def test_random_updates_replay_to_the_upper_hull():
    """Test edit replay, engine state and reference agree after every update."""
    run_random_updates(np.random.default_rng(20), trials=20, n=300, y_range=30)


@pytest.mark.parametrize("y_range", [1, 3, 10])
def test_tie_heavy_updates_replay_to_the_upper_hull(y_range):
    """Test runs over a few distinct ordinates, where collinear triples abound."""
    rng = np.random.default_rng(y_range)
    run_random_updates(rng, trials=300, n=120, y_range=y_range)


def test_edits_are_end_edits_only():
    """Test every edit is one of the four end edits."""
    engine, _ = build([(0, 0)])
    edits = []
    for x in range(1, 50):
        edits += engine.insert_right(Point(x, (x * 7) % 13))
        if x % 4 == 0:
            edits += engine.delete_left()
    assert all(isinstance(edit, HullEdit) for edit in edits)
    assert {edit.kind for edit in edits} <= set(EditKind)
