"""Drawings with crossings: planarization, inversion, distances."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecolor.errors import StructuralError
from planecolor.generate import grid_rotations, plant_crossings
from planecolor.nearplanar import (CrossingRecord, Drawing, crossing_adjacent,
                                   drawing_faces, planarize, un_planarize)
from planecolor.planegraph import PlaneGraph

K4_SQUARE = {0: (1, 3, 2), 1: (3, 2, 0), 2: (3, 0, 1), 3: (2, 0, 1)}


def k4_drawing():
    return planarize(K4_SQUARE, [(0, 3, 1, 2)], outer_edge=(0, 1))


def test_planarize_adds_one_dummy():
    d = k4_drawing()
    assert len(d.crossings) == 1
    rec = d.crossings[0]
    assert d.is_dummy(rec.dummy) and rec.dummy == 4
    assert d.base.degree(rec.dummy) == 4
    # dummy rotation alternates the two crossed edges
    rot = d.base.rotation(rec.dummy)
    assert set(rot[::2]) in ({0, 3}, {1, 2})
    assert d.n_original == 4
    assert sorted(d.crossed_edges()) == [(0, 3), (1, 2)]


def test_original_adjacency_keeps_crossed_edges():
    d = k4_drawing()
    adj = d.original_adjacency()
    assert set(adj[0]) == {1, 2, 3}
    assert set(adj[3]) == {0, 1, 2}
    assert sorted(d.original_edges()) == [(0, 1), (0, 2), (0, 3), (1, 2),
                                          (1, 3), (2, 3)]


def test_record_of_edge():
    d = k4_drawing()
    assert d.record_of_edge(0, 3) is not None
    assert d.record_of_edge(3, 0) is not None
    assert d.record_of_edge(0, 1) is None


def test_crossing_rejections():
    with pytest.raises(StructuralError):
        planarize(K4_SQUARE, [(0, 3, 3, 1)])        # shared endpoint
    with pytest.raises(StructuralError):
        planarize(K4_SQUARE, [(0, 3, 0, 3)])        # self-crossing
    rot = grid_rotations(3, 4)
    with pytest.raises(StructuralError):
        # same edge in two crossings
        planarize(rot, [(0, 1, 4, 5), (0, 1, 2, 6)])


def test_crossing_record_canonical():
    r1 = CrossingRecord(9, (3, 0), (2, 1))
    r2 = CrossingRecord(9, (1, 2), (0, 3))
    assert r1 == r2
    assert r1.edge1 == (0, 3)


def test_un_planarize_round_trip():
    d = k4_drawing()
    rot, quads, outer = un_planarize(d)
    assert {v: tuple(ws) for v, ws in rot.items()} == \
        {v: tuple(ws) for v, ws in K4_SQUARE.items()}
    assert len(quads) == 1
    d2 = planarize(rot, quads, outer_edge=outer)
    assert d2 == d


def test_crossing_adjacent():
    d = k4_drawing()
    # crossed edges 0-3 and 1-2: endpoints of different edges are
    # crossing-adjacent, endpoints of the same edge are not
    assert crossing_adjacent(d, 0, 1)
    assert crossing_adjacent(d, 3, 2)
    assert not crossing_adjacent(d, 0, 3)
    assert not crossing_adjacent(d, 0, 0)


def test_distance_skips_dummies():
    d = plant_crossings(4, 6, [(1, 1)])
    # the dummy sits between the cell corners; original distance ignores it
    subs = d.crossing_subgraphs()
    assert len(subs) == 1
    assert d.distance(subs[0], {7}) == 0        # 7 is a corner of cell (1,1)
    # nearest corner of the cell is 14 = (2, 2); grid distance to the far
    # corner 23 = (3, 5) is the Manhattan gap
    assert d.distance(subs[0], {23}) == 4


def test_drawing_faces_collapse_dummies():
    d = k4_drawing()
    quad_faces = [f for f in drawing_faces(d) if f.crossings]
    assert len(quad_faces) == 4
    for f in quad_faces:
        assert all(not d.is_dummy(v) for v in f.vertices)


def test_drawing_equality():
    a = plant_crossings(3, 4, [(0, 1)])
    b = plant_crossings(3, 4, [(0, 1)])
    c = plant_crossings(3, 4, [(1, 1)])
    assert a == b
    assert a != c


@pytest.mark.property_based
@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.integers(2, 6), st.integers(0, 10 ** 6))
def test_plant_and_invert_random_cells(rows, cols, seed):
    rng = random.Random(seed)
    cells = [(i, j) for i in range(rows - 1) for j in range(cols - 1)]
    rng.shuffle(cells)
    take = cells[:rng.randint(0, min(3, len(cells)))]
    # adjacent cells may share corners; planarize forbids sharing an edge
    take = [c for k, c in enumerate(take)
            if all(abs(c[0] - o[0]) + abs(c[1] - o[1]) > 1 for o in take[:k])]
    d = plant_crossings(rows, cols, take)
    assert len(d.crossings) == len(take)
    rot, quads, outer = un_planarize(d)
    d2 = planarize(rot, quads, outer_edge=outer)
    assert sorted(r.dummy for r in d2.crossings) == \
        sorted(r.dummy for r in d.crossings)
    assert d2.original_adjacency() == d.original_adjacency()


def test_planar_drawing_trivia():
    g = PlaneGraph({0: (1,), 1: (0,)})
    d = Drawing(g, ())
    assert list(d.original_vertices()) == [0, 1]
    assert not d.crossings
    assert d.original_edges() == [(0, 1)]
