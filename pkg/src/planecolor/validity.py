"""Hypothesis checkers for every precondition the coloring theorems impose.

Each checker returns a ValidityReport naming the conditions it evaluated and
carrying one Failure per violation, with a concrete witness (the vertex,
edge, or pair that breaks the condition).  Reports list *all* failures, not
just the first, so generated instances can be diagnosed in one pass.

Structural problems — a precolored path that does not lie on the outer face,
a missing color list — raise StructuralError instead of appearing in the
report; a report is only about the hypotheses themselves.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import StructuralError
from .nearplanar import Drawing
from .planegraph import (INF, PlaneGraph, SubgraphRef, Walk, norm_edge,
                         outer_boundary)

THEOREM_IDS = ("basic", "distant", "far-nset", "two-crossings", "one-crossing")


def as_lists(lists, vertices=None):
    """Normalize a list assignment to {vertex: frozenset of colors}.

    With ``vertices`` given, every one of them must have an entry.
    """
    out = {}
    for v, cs in lists.items():
        out[v] = frozenset(cs)
    if vertices is not None:
        for v in vertices:
            if v not in out:
                raise StructuralError("vertex %r has no color list" % (v,))
    return out


@dataclass(frozen=True)
class Failure:
    condition: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class ValidityReport:
    conditions: tuple
    failures: tuple = ()

    def ok(self) -> bool:
        return not self.failures

    def failed(self, condition):
        return [f for f in self.failures if f.condition == condition]

    def status(self):
        bad = {f.condition for f in self.failures}
        return {c: ("fail" if c in bad else "pass") for c in self.conditions}

    def messages(self):
        return [f.message for f in self.failures]

    def merged(self, other: "ValidityReport") -> "ValidityReport":
        conds = self.conditions + tuple(
            c for c in other.conditions if c not in self.conditions)
        return ValidityReport(conds, self.failures + other.failures)

    def __str__(self):
        if self.ok():
            return "all conditions pass (%s)" % ", ".join(self.conditions)
        return "; ".join(self.messages())


class _Collect:
    def __init__(self, conditions):
        self.conditions = tuple(conditions)
        self.failures = []

    def fail(self, condition, witness, message):
        self.failures.append(Failure(condition, tuple(witness), message))

    def report(self):
        return ValidityReport(self.conditions, tuple(self.failures))


# ---------------------------------------------------------------------------
# precolored paths on the outer face


def _check_path_structure(g: PlaneGraph, p: Walk, max_len):
    """Structural demands on the precolored path; violations raise."""
    vs = p.vertices
    if p.closed:
        raise StructuralError("the precolored path must be open")
    if len(set(vs)) != len(vs):
        raise StructuralError("the precolored path repeats a vertex")
    if len(vs) - 1 > max_len:
        raise StructuralError(
            "precolored path has length %d, at most %d is supported"
            % (len(vs) - 1, max_len))
    outer_vs, outer_es = outer_boundary(g)
    for v in vs:
        if not g.has_vertex(v):
            raise StructuralError("path vertex %r is not in the graph" % (v,))
        if v not in outer_vs:
            raise StructuralError(
                "path vertex %r does not lie on the outer face" % (v,))
    for e in p.edges():
        if not g.has_edge(*e):
            raise StructuralError("path edge (%r, %r) is not in the graph" % e)
        if e not in outer_es:
            raise StructuralError(
                "path edge (%r, %r) does not lie on the outer face" % e)


def check_basic(g: PlaneGraph, p: Walk, lists) -> ValidityReport:
    """Hypotheses of the planar precolored-path theorem.

    Conditions: interior vertices carry lists of size >= 5, outer vertices
    off the path >= 3, path vertices exactly 1; no two 3-list vertices are
    adjacent; the path's precoloring is proper; and when the path is u-v-w,
    no common neighbor x of all three has L(x) = L(u) u L(v) u L(w).
    """
    _check_path_structure(g, p, 2)
    L = as_lists(lists, g.vertices)
    out = _Collect(["interior-list-size", "outer-list-size", "path-precolored",
                    "adjacent-short-lists", "path-proper", "tripod-list-union"])
    outer_vs, _ = outer_boundary(g)
    pset = set(p.vertices)

    for v in g.vertices:
        if v in pset:
            if len(L[v]) != 1:
                out.fail("path-precolored", (v,),
                         "path vertex %r must have a single-color list, got %d"
                         % (v, len(L[v])))
        elif v in outer_vs:
            if len(L[v]) < 3:
                out.fail("outer-list-size", (v,),
                         "outer vertex %r has a list of size %d < 3" % (v, len(L[v])))
        else:
            if len(L[v]) < 5:
                out.fail("interior-list-size", (v,),
                         "interior vertex %r has a list of size %d < 5" % (v, len(L[v])))

    for u, v in g.edges():
        if len(L[u]) == 3 and len(L[v]) == 3:
            out.fail("adjacent-short-lists", (u, v),
                     "adjacent vertices %r, %r both have 3-lists" % (u, v))

    _path_properness(out, L, p, set(g.edges()))

    if len(p.vertices) == 3:
        u, v, w = p.vertices
        union = L[u] | L[v] | L[w]
        for x in g.vertices:
            if x in pset:
                continue
            nx = set(g.neighbors(x))
            if {u, v, w} <= nx and L[x] == union:
                out.fail("tripod-list-union", (x, u, v, w),
                         "vertex %r sees all of the path and its list equals "
                         "the union of the path colors" % (x,))
    return out.report()


def _path_properness(out, L, p, edges):
    vs = p.vertices
    for a, b in combinations(vs, 2):
        if norm_edge(a, b) in edges and L[a] & L[b] and len(L[a]) == len(L[b]) == 1:
            out.fail("path-proper", (a, b),
                     "path vertices %r and %r are adjacent with the same color"
                     % (a, b))


def check_thomassen(g: PlaneGraph, xy, lists) -> ValidityReport:
    """Hypotheses of the precolored-edge theorem for plane graphs."""
    x, y = xy
    if not g.has_edge(x, y):
        raise StructuralError("(%r, %r) is not an edge" % (x, y))
    outer_vs, outer_es = outer_boundary(g)
    if norm_edge(x, y) not in outer_es:
        raise StructuralError(
            "edge (%r, %r) does not lie on the outer face" % (x, y))
    L = as_lists(lists, g.vertices)
    out = _Collect(["endpoints-precolored", "endpoint-colors-differ",
                    "outer-list-size", "interior-list-size"])
    for v in (x, y):
        if len(L[v]) != 1:
            out.fail("endpoints-precolored", (v,),
                     "precolored endpoint %r needs a single-color list" % (v,))
    if L[x] == L[y] and len(L[x]) == 1:
        out.fail("endpoint-colors-differ", (x, y),
                 "the two precolored endpoints share color %r" % (next(iter(L[x])),))
    for v in g.vertices:
        if v in (x, y):
            continue
        if v in outer_vs:
            if len(L[v]) < 3:
                out.fail("outer-list-size", (v,),
                         "outer vertex %r has a list of size %d < 3" % (v, len(L[v])))
        elif len(L[v]) < 5:
            out.fail("interior-list-size", (v,),
                     "interior vertex %r has a list of size %d < 5" % (v, len(L[v])))
    return out.report()


# ---------------------------------------------------------------------------
# full instances: drawing + path + N + M


@dataclass(frozen=True, eq=False)
class Instance:
    """A drawing with a precolored outer path, far-apart sets N and M, and lists."""

    drawing: Drawing
    p: Walk = Walk(())
    n_set: frozenset = frozenset()
    m_set: frozenset = frozenset()
    lists: dict = field(default_factory=dict)

    def __post_init__(self):
        d = self.drawing
        object.__setattr__(self, "n_set", frozenset(self.n_set))
        object.__setattr__(self, "m_set",
                           frozenset(norm_edge(*e) for e in self.m_set))
        object.__setattr__(self, "lists", as_lists(self.lists,
                                                   d.original_vertices()))
        for e in self.p.edges():
            if d.record_of_edge(*e) is not None:
                raise StructuralError(
                    "an edge of the precolored path may not be crossed: (%r, %r)"
                    % e)
        _check_path_structure(d.base, self.p, 3)
        originals = set(d.original_vertices())
        if not self.n_set <= originals:
            raise StructuralError("n_set contains unknown vertices: %r"
                                  % (sorted(self.n_set - originals),))
        edges = set(d.original_edges())
        if not self.m_set <= edges:
            raise StructuralError("m_set contains non-edges: %r"
                                  % (sorted(self.m_set - edges),))

    def outer_original_vertices(self):
        d = self.drawing
        boundary_vs, _ = outer_boundary(d.base)
        return {v for v in boundary_vs if not d.is_dummy(v)}

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.drawing == other.drawing and self.p == other.p
                and self.n_set == other.n_set and self.m_set == other.m_set
                and self.lists == other.lists)


class Kind(str, Enum):
    CROSSING_PAIR = "CROSSING_PAIR"
    MIDDLE_EDGE = "MIDDLE_EDGE"
    N_VERTEX = "N_VERTEX"
    M_EDGE = "M_EDGE"


RANK = {
    Kind.CROSSING_PAIR: 4,
    Kind.MIDDLE_EDGE: 3,
    Kind.N_VERTEX: 2,
    Kind.M_EDGE: 0,
}


@dataclass(frozen=True)
class SpecialSubgraph:
    kind: Kind
    ref: SubgraphRef
    rank: int

    def __post_init__(self):
        if self.rank != RANK[self.kind]:
            raise StructuralError("rank %d does not match kind %s"
                                  % (self.rank, self.kind))


def special_subgraphs(inst: Instance):
    """The far-apart subgraphs and their ranks: one per crossing (rank 4),
    the middle edge of a length-3 path (3), each N-vertex (2), each M-edge (0).
    """
    out = []
    for sub in inst.drawing.crossing_subgraphs():
        out.append(SpecialSubgraph(Kind.CROSSING_PAIR, sub.ref(),
                                   RANK[Kind.CROSSING_PAIR]))
    if inst.p.length == 3:
        a, b = inst.p.vertices[1], inst.p.vertices[2]
        ref = SubgraphRef(frozenset((a, b)), frozenset((norm_edge(a, b),)))
        out.append(SpecialSubgraph(Kind.MIDDLE_EDGE, ref, RANK[Kind.MIDDLE_EDGE]))
    for v in sorted(inst.n_set):
        out.append(SpecialSubgraph(Kind.N_VERTEX, SubgraphRef(frozenset((v,))),
                                   RANK[Kind.N_VERTEX]))
    for e in sorted(inst.m_set):
        ref = SubgraphRef(frozenset(e), frozenset((e,)))
        out.append(SpecialSubgraph(Kind.M_EDGE, ref, RANK[Kind.M_EDGE]))
    return out


def check_distant(inst: Instance) -> ValidityReport:
    """Every pair of distinct special subgraphs must be far apart.

    The required separation is rank(H1) + rank(H2) + 7, measured in the
    original graph (never through planarization dummies).
    """
    out = _Collect(["special-distance"])
    subs = special_subgraphs(inst)
    for h1, h2 in combinations(subs, 2):
        need = h1.rank + h2.rank + 7
        d = inst.drawing.distance(h1.ref, h2.ref)
        if d < need:
            shown = "inf" if d == INF else str(d)
            out.fail("special-distance",
                     (h1.kind.value, tuple(sorted(h1.ref.vertices)),
                      h2.kind.value, tuple(sorted(h2.ref.vertices)), d),
                     "%s %r and %s %r are at distance %s, need >= %d"
                     % (h1.kind.value, tuple(sorted(h1.ref.vertices)),
                        h2.kind.value, tuple(sorted(h2.ref.vertices)),
                        shown, need))
    return out.report()


def check_valid(inst: Instance) -> ValidityReport:
    """List-size and interaction conditions for general instances.

    Size profile: >= 5 off the outer face and N, >= 3 on the outer face off
    the path, exactly 1 on the path, >= 4 for interior N-vertices.  Adjacent
    3-lists must be marked edges; the path precoloring must be proper; no
    vertex may see three path vertices whose colors exhaust its list; and a
    crossing with a 3-list endpoint pins all its other endpoints to size 1
    or >= 5.
    """
    d = inst.drawing
    L = inst.lists
    out = _Collect(["list-sizes", "nset-list-size", "marked-short-pairs",
                    "path-proper", "tripod-list-union", "crossing-list-profile"])
    outer_vs = inst.outer_original_vertices()
    pset = set(inst.p.vertices)

    for v in d.original_vertices():
        size = len(L[v])
        if v in pset:
            if size != 1:
                out.fail("list-sizes", (v,),
                         "path vertex %r must have a single-color list, got %d"
                         % (v, size))
        elif v in outer_vs:
            if size < 3:
                out.fail("list-sizes", (v,),
                         "outer vertex %r has a list of size %d < 3" % (v, size))
        elif v in inst.n_set:
            if size < 4:
                out.fail("nset-list-size", (v,),
                         "interior far-set vertex %r has a list of size %d < 4"
                         % (v, size))
        elif size < 5:
            out.fail("list-sizes", (v,),
                     "vertex %r has a list of size %d < 5" % (v, size))

    for u, v in d.original_edges():
        if len(L[u]) == 3 and len(L[v]) == 3 and norm_edge(u, v) not in inst.m_set:
            out.fail("marked-short-pairs", (u, v),
                     "adjacent 3-list vertices %r, %r are not a marked edge"
                     % (u, v))

    _path_properness(out, L, inst.p, set(d.original_edges()))

    adj = d.original_adjacency()
    if len(pset) >= 3:
        for v in d.original_vertices():
            if v in pset:
                continue
            on_path = sorted(set(adj[v]) & pset)
            for trio in combinations(on_path, 3):
                union = L[trio[0]] | L[trio[1]] | L[trio[2]]
                if L[v] == union:
                    out.fail("tripod-list-union", (v,) + trio,
                             "vertex %r sees path vertices %r and its list "
                             "equals their color union" % (v, trio))

    for i, sub in enumerate(d.crossing_subgraphs()):
        sizes = {v: len(L[v]) for v in sub.vertices}
        short = [v for v, s in sizes.items() if s == 3]
        if short:
            for v in sub.vertices:
                if v in short:
                    continue
                if sizes[v] != 1 and sizes[v] < 5:
                    out.fail("crossing-list-profile", (i, short[0], v),
                             "crossing %d has 3-list vertex %r, but %r has a "
                             "list of size %d (needs 1 or >= 5)"
                             % (i, short[0], v, sizes[v]))
    return out.report()


def check_obstructions(inst: Instance, predicate=None) -> ValidityReport:
    """Pluggable obstruction condition; passes unless a predicate says otherwise.

    The published catalog of obstruction subgraphs is figure-bound and not
    reproduced here, so the default predicate accepts everything.  A custom
    predicate receives the instance and returns an iterable of (witness,
    message) pairs for each obstruction it finds uncolorable.
    """
    out = _Collect(["obstructions-colorable"])
    if predicate is not None:
        for witness, message in predicate(inst):
            out.fail("obstructions-colorable", tuple(witness), message)
    return out.report()


def check_main0(drawing: Drawing, n_set, lists) -> ValidityReport:
    """Hypotheses of the far-apart-crossings theorem.

    Crossed edge pairs must be >= 15 apart, crossings and far-set vertices
    >= 13, far-set vertices pairwise >= 11; the far set carries 4-lists
    (exactly) and everything else 5-lists or larger.  The distance part is
    computed directly and then cross-checked against the rank arithmetic of
    check_distant on the equivalent path-free instance.
    """
    n_set = frozenset(n_set)
    L = as_lists(lists, drawing.original_vertices())
    out = _Collect(["nset-list-size-exact", "list-sizes", "special-distance"])
    for v in drawing.original_vertices():
        size = len(L[v])
        if v in n_set:
            if size != 4:
                out.fail("nset-list-size-exact", (v,),
                         "far-set vertex %r must have a list of size exactly 4, "
                         "got %d" % (v, size))
        elif size < 5:
            out.fail("list-sizes", (v,),
                     "vertex %r has a list of size %d < 5" % (v, size))

    xx = RANK[Kind.CROSSING_PAIR] + RANK[Kind.CROSSING_PAIR] + 7
    xn = RANK[Kind.CROSSING_PAIR] + RANK[Kind.N_VERTEX] + 7
    nn = RANK[Kind.N_VERTEX] + RANK[Kind.N_VERTEX] + 7
    subs = drawing.crossing_subgraphs()
    for s1, s2 in combinations(subs, 2):
        _distance_fail(out, drawing, s1.vertices, s2.vertices, xx,
                       "crossed edge pairs")
    for s in subs:
        for v in sorted(n_set):
            _distance_fail(out, drawing, s.vertices, (v,), xn,
                           "crossing and far-set vertex")
    for u, v in combinations(sorted(n_set), 2):
        _distance_fail(out, drawing, (u,), (v,), nn, "far-set vertices")

    # dual route: the generic rank-based checker must agree
    inst = Instance(drawing, Walk(()), n_set, frozenset(), L)
    generic = check_distant(inst)
    mine = [f for f in out.failures if f.condition == "special-distance"]
    if len(generic.failures) != len(mine):
        raise StructuralError(
            "distance checkers disagree: direct scan found %d violations, "
            "rank arithmetic found %d" % (len(mine), len(generic.failures)))
    return out.report()


def _distance_fail(out, drawing, vs1, vs2, need, what):
    d = drawing.distance(vs1, vs2)
    if d < need:
        shown = "inf" if d == INF else str(d)
        out.fail("special-distance",
                 (tuple(sorted(vs1)), tuple(sorted(vs2)), d),
                 "%s %r and %r are at distance %s, need >= %d"
                 % (what, tuple(sorted(vs1)), tuple(sorted(vs2)), shown, need))


# ---------------------------------------------------------------------------
# theorem-id dispatch for batch verification


def check_hypotheses(inst: Instance, which: str) -> ValidityReport:
    """Does the instance satisfy the named theorem's hypotheses?

    Known ids: "basic" (planar, precolored outer path), "distant"
    (crossings and far-set far apart), "far-nset" (planar, far-set pairwise
    >= 11), "two-crossings" (at most two crossings, 5-lists), "one-crossing"
    (exactly one crossing, 5-lists).
    """
    d = inst.drawing
    n_cross = len(d.crossings)
    if which == "basic":
        out = _Collect(["planar-input", "no-far-sets", "path-length"])
        if n_cross:
            out.fail("planar-input", (n_cross,),
                     "expected a crossing-free drawing, found %d crossings" % n_cross)
        _no_far_sets(out, inst)
        if not inst.p.vertices:
            out.fail("path-length", (),
                     "this theorem needs at least one precolored vertex")
        elif len(inst.p.vertices) - 1 > 2:
            out.fail("path-length", (inst.p.length,),
                     "precolored path has length %d > 2" % inst.p.length)
        rep = out.report()
        if rep.ok():
            rep = rep.merged(check_basic(d.base, inst.p, inst.lists))
        return rep
    if which == "distant":
        out = _Collect(["no-precolored-path", "no-marked-edges"])
        _no_path_or_m(out, inst)
        return out.report().merged(check_main0(d, inst.n_set, inst.lists))
    if which == "far-nset":
        out = _Collect(["planar-input", "no-precolored-path", "no-marked-edges"])
        if n_cross:
            out.fail("planar-input", (n_cross,),
                     "expected a crossing-free drawing, found %d crossings" % n_cross)
        _no_path_or_m(out, inst)
        return out.report().merged(check_main0(d, inst.n_set, inst.lists))
    if which in ("two-crossings", "one-crossing"):
        limit = 2 if which == "two-crossings" else 1
        exact = which == "one-crossing"
        out = _Collect(["crossing-count", "five-lists", "no-far-sets",
                        "no-precolored-path"])
        bad = n_cross != limit if exact else n_cross > limit
        if bad:
            out.fail("crossing-count", (n_cross,),
                     "expected %s %d crossing(s), found %d"
                     % ("exactly" if exact else "at most", limit, n_cross))
        for v in d.original_vertices():
            if len(inst.lists[v]) < 5:
                out.fail("five-lists", (v,),
                         "vertex %r has a list of size %d < 5"
                         % (v, len(inst.lists[v])))
        _no_far_sets(out, inst)
        if inst.p.vertices:
            out.fail("no-precolored-path", tuple(inst.p.vertices),
                     "this theorem takes no precolored path")
        return out.report()
    raise StructuralError("unknown theorem id %r; expected one of %s"
                          % (which, ", ".join(THEOREM_IDS)))


def _no_far_sets(out, inst):
    if inst.n_set:
        out.fail("no-far-sets", tuple(sorted(inst.n_set)),
                 "this theorem takes no far-apart vertex set")
    if inst.m_set:
        out.fail("no-far-sets", tuple(sorted(inst.m_set)),
                 "this theorem takes no marked edges")


def _no_path_or_m(out, inst):
    if inst.p.vertices:
        out.fail("no-precolored-path", tuple(inst.p.vertices),
                 "this theorem takes no precolored path")
    if inst.m_set:
        out.fail("no-marked-edges", tuple(sorted(inst.m_set)),
                 "this theorem takes no marked edges")
