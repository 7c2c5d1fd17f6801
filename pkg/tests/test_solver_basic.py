"""Precolored-path engine: selection rules, reduction, end-to-end batches."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecolor.checkcolor import coloring_ok
from planecolor.errors import (HypothesisViolation, SolverPanic,
                               StructuralError)
from planecolor.generate import GenSpec, gen_instance
from planecolor.oracle import UNCOLORABLE, solve_exact
from planecolor.planegraph import PlaneGraph, Walk
from planecolor.solver import (ReducedInstance, XContext, XSelection,
                               color_basic, reduce_by_partial_coloring,
                               select_x)

TRIANGLE = PlaneGraph({0: (1, 2), 1: (2, 0), 2: (0, 1)}, outer_edge=(1, 0))


def ctx(lists, p0_list, **kw):
    """Four outer vertices 1..4 hanging off path end 0."""
    L = {0: frozenset(p0_list)}
    for i, cs in enumerate(lists, start=1):
        L[i] = frozenset(cs)
    return XContext(v=(1, 2, 3, 4), lists=L, p0=0, **kw)


# ---------------------------------------------------------------------------
# the selection rules, one by one


def test_x1_colors_a_short_first_vertex():
    sel = select_x(ctx([{2, 5, 7}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}],
                       {5}))
    assert sel.rule == "X1"
    assert sel.x_set == (1,) and sel.partial_coloring == {1: 2}


def test_x2_two_short_vertices_avoid_each_other():
    sel = select_x(ctx([{2, 5, 7}, {2, 3, 4, 6}, {2, 3, 4}, {1, 2, 3, 4, 5}],
                       {5}))
    assert sel.rule == "X2"
    # v2 avoids v3's list, v1 avoids the path end and v2's choice
    assert sel.partial_coloring == {2: 6, 1: 2}
    assert sel.x_set == (1, 2)


def test_x3_short_second_vertex():
    sel = select_x(ctx([{1, 2, 3, 4}, {4, 6, 8}, {1, 2, 3, 4, 5}, {1, 2, 3}],
                       {5}))
    assert sel.rule == "X3"
    assert sel.partial_coloring == {2: 4}

    # also fires when the fourth vertex is long
    sel = select_x(ctx([{1, 2, 3, 4}, {4, 6, 8}, {1, 2, 3, 4}, {1, 2, 3, 4}],
                       {5}))
    assert sel.rule == "X3"


def test_x4a_pattern_3_4_3():
    sel = select_x(ctx([{1, 2, 3, 4, 5}, {4, 6, 8}, {1, 2, 3, 9}, {1, 2, 3}],
                       {5}, common_neighbor=True))
    assert sel.rule == "X4a"
    assert sel.partial_coloring == {3: 9, 2: 4}

    # without the shared neighbor the first list's size is irrelevant
    sel = select_x(ctx([{1, 2, 3, 4}, {4, 6, 8}, {1, 2, 3, 9}, {1, 2, 3}],
                       {5}, common_neighbor=False))
    assert sel.rule == "X4a"


def test_x4b_leaves_the_middle_vertex_uncolored():
    sel = select_x(ctx([{1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3, 9}, {1, 2, 3}],
                       {5}, common_neighbor=True))
    assert sel.rule == "X4b"
    assert sel.x_set == (1, 2, 3)
    assert sel.partial_coloring == {1: 1, 3: 9}   # vertex 2 stays open


def test_x4b_needs_a_compatible_pair():
    # every candidate pair lands inside the middle list: nothing qualifies
    with pytest.raises(StructuralError, match="uncolored-middle"):
        select_x(ctx([{1, 2, 8, 9}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 4}],
                     {8, 9}, common_neighbor=True))


def test_x5_x6_need_the_crossing_flag():
    lists = [{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}]
    with pytest.raises(StructuralError, match="no selection rule"):
        select_x(ctx(lists, {5}))
    sel = select_x(ctx(lists, {5}, crossing_adjacent=True))
    assert sel.rule == "X5" and sel.partial_coloring == {1: 1}

    short3 = [{1, 2, 3, 4}, {4, 6, 8, 9}, {1, 2, 4}, {1, 2, 3, 4, 5}]
    sel = select_x(ctx(short3, {5}, crossing_adjacent=True))
    assert sel.rule == "X6"
    assert sel.partial_coloring == {2: 6}   # avoids v3's list


def test_rule_precedence_prefers_first_vertex():
    # both v1 and v2 are short: the X1/X2 family wins over X3
    sel = select_x(ctx([{2, 5, 7}, {4, 6, 8}, {1, 2, 3, 4, 5}, {1, 2, 3}],
                       {5}))
    assert sel.rule == "X1"


def test_x1_requires_a_color_off_the_path_end():
    with pytest.raises(StructuralError, match="no color available"):
        select_x(ctx([{2, 5, 7}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}],
                     {2, 5, 7}))


def test_selection_guard_checks_colored_set():
    with pytest.raises(StructuralError, match="must color exactly"):
        XSelection((1, 2), {1: 4}, "X2")
    sel = XSelection((1, 2, 3), {1: 4, 3: 5}, "X4b")
    assert sel.partial_coloring == {1: 4, 3: 5}


# ---------------------------------------------------------------------------
# absorbing a partial coloring


def star_lists():
    return {0: {6, 7, 8, 9, 10}, 1: {5}, 2: {6, 7, 8}, 3: {6, 7, 9},
            4: {7, 8, 9}}


def test_reduction_readds_path_lists():
    adj = {0: {1, 2, 3, 4}}
    red = reduce_by_partial_coloring(adj, star_lists(), [1], {2: 7})
    assert 2 not in red.lists
    assert red.lists[0] == frozenset({5, 6, 8, 9, 10})
    assert red.readded[0] == frozenset({5})
    assert red.lists[1] == frozenset({5})
    assert red.graph == {0: frozenset({1, 3, 4}), 1: frozenset({0}),
                         3: frozenset({0}), 4: frozenset({0})}


def test_reduction_path_vertices_only_lose():
    adj = {0: {1, 2}, 1: {2}}
    L = {0: {1, 2, 3}, 1: {2, 3, 4}, 2: {9}}
    red = reduce_by_partial_coloring(adj, L, [0, 1], {})
    assert red.lists[0] == frozenset({1, 2, 3})
    assert red.readded[0] == frozenset()
    # vertex 2 is off the path and regains both uncolored path lists
    assert red.lists[2] == frozenset({9}) | frozenset({1, 2, 3, 4})


def test_reduction_empty_coloring_is_identity():
    g = TRIANGLE
    L = {0: {1}, 1: {2}, 2: {1, 2, 3}}
    red = reduce_by_partial_coloring(g, L, [0, 1], {})
    assert sorted(red.graph.vertices) == [0, 1, 2]
    assert red.graph.edges() == g.edges()
    assert red.lists[2] == frozenset({1, 2, 3})


def test_reduction_precondition_errors():
    adj = {0: {1, 2, 3, 4}}
    with pytest.raises(StructuralError, match="outside its list"):
        reduce_by_partial_coloring(adj, star_lists(), [1], {2: 11})
    with pytest.raises(StructuralError, match="same color"):
        reduce_by_partial_coloring({0: {1}, 1: ()}, {0: {3}, 1: {3}}, [],
                                   {0: 3, 1: 3})
    with pytest.raises(StructuralError, match="path vertex's list"):
        looser = dict(star_lists())
        looser[0] = {5, 6, 7}
        reduce_by_partial_coloring(adj, looser, [1], {0: 5})
    with pytest.raises(StructuralError, match="not in the graph"):
        reduce_by_partial_coloring(adj, star_lists(), [9], {})


@pytest.mark.property_based
@given(st.integers(0, 10 ** 6))
@settings(max_examples=200, deadline=None)
def test_reduction_composes_with_any_completion(seed):
    # with singleton path lists, phi plus a proper coloring of the residue
    # is a proper in-list coloring of the whole graph
    rng = random.Random(seed)
    n = rng.randrange(2, 11)
    edges = set()
    for _ in range(rng.randrange(0, 2 * n)):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    adj = {v: {w for e in edges for w in e if v in e and w != v}
           for v in range(n)}
    L = {v: set(rng.sample(range(8), rng.randrange(1, 6))) for v in range(n)}
    p_vs = rng.sample(range(n), rng.randrange(0, min(3, n) + 1))
    for v in p_vs:
        choices = [c for c in range(8)
                   if all(L.get(w) != {c} for w in adj[v] if w in p_vs)]
        L[v] = {rng.choice(choices)}
    phi = {}
    for v in rng.sample(range(n), rng.randrange(0, n + 1)):
        usable = [c for c in sorted(L[v])
                  if all(phi.get(w) != c for w in adj[v])
                  and all(not (w in p_vs and c in L[w]) for w in adj[v])]
        if usable:
            phi[v] = rng.choice(usable)

    red = reduce_by_partial_coloring(adj, L, p_vs, phi)
    assert set(red.graph) == set(range(n)) - set(phi)
    completion = solve_exact(red.graph, red.lists)
    if completion is UNCOLORABLE:
        return
    merged = dict(phi)
    merged.update(completion)
    assert coloring_ok(edges, L, merged)


# ---------------------------------------------------------------------------
# the engine end to end


def test_color_basic_triangle():
    phi = color_basic(TRIANGLE, Walk((0, 1)), {0: {1}, 1: {2}, 2: {1, 2, 3}})
    assert phi[0] == 1 and phi[1] == 2 and phi[2] == 3


def test_color_basic_rejects_bad_hypotheses():
    lists = {0: {1}, 1: {2}, 2: {1, 2}}
    with pytest.raises(HypothesisViolation) as e:
        color_basic(TRIANGLE, Walk((0, 1)), lists)
    assert e.value.report.failed("outer-list-size")
    with pytest.raises(StructuralError, match="at least one"):
        color_basic(TRIANGLE, Walk(()), {0: {1}, 1: {2}, 2: {1, 2, 3}})


def test_color_basic_accepts_bare_vertex_sequences():
    a = color_basic(TRIANGLE, [0, 1], {0: {1}, 1: {2}, 2: {1, 2, 3}})
    b = color_basic(TRIANGLE, Walk((0, 1)), {0: {1}, 1: {2}, 2: {1, 2, 3}})
    assert a == b


def _generated(family, seeds, **kw):
    out = []
    for s in seeds:
        out.append(gen_instance(GenSpec(family, seed=s, **kw)))
    return out


def test_color_basic_solves_generated_batches():
    batch = (_generated("GRID", range(8), rows=4, cols=5)
             + _generated("WHEEL_STACK", range(8), rings=2, spokes=6)
             + _generated("TRIANGULATION", range(8), n=24))
    for inst in batch:
        g = inst.drawing.base
        phi = color_basic(g, inst.p, inst.lists)
        assert coloring_ok(g.edges(), inst.lists, phi)


def test_color_basic_is_deterministic():
    inst = gen_instance(GenSpec("GRID", seed=3, rows=4, cols=5))
    g = inst.drawing.base
    assert color_basic(g, inst.p, inst.lists) == \
        color_basic(g, inst.p, inst.lists)


def test_color_basic_agrees_with_oracle_on_small_instances():
    for inst in _generated("TRIANGULATION", range(10), n=11):
        g = inst.drawing.base
        phi = color_basic(g, inst.p, inst.lists)
        assert coloring_ok(g.edges(), inst.lists, phi)
        assert solve_exact(g, inst.lists) is not UNCOLORABLE


@pytest.mark.property_based
@given(st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_color_basic_on_random_grids(seed):
    rng = random.Random(seed)
    spec = GenSpec("GRID", seed=seed, rows=rng.randint(2, 4),
                   cols=rng.randint(3, 6))
    inst = gen_instance(spec)
    g = inst.drawing.base
    phi = color_basic(g, inst.p, inst.lists)
    assert coloring_ok(g.edges(), inst.lists, phi)


# ---------------------------------------------------------------------------
# failure plumbing


def test_solver_panic_embeds_the_dump():
    err = SolverPanic("stuck on a chord", dump="GRAPH 3 3\nROT 0: 1 2\n")
    assert "instance dump" in str(err)
    assert "GRAPH 3 3" in str(err)
    assert err.dump.startswith("GRAPH")
    assert SolverPanic("plain").dump is None


def test_hypothesis_violation_carries_the_report():
    err = HypothesisViolation("nope")
    assert err.report is None
