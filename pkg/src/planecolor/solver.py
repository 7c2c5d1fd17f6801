"""Constructive list-coloring engines for plane and near-planar graphs.

Three solvers live here.  ``color_thomassen`` realizes the precolored-edge
induction for plane graphs (interior lists of size 5, boundary lists of size
3).  ``color_basic`` realizes the stronger precolored-path induction whose
reduction order is: low-degree removal, connectivity and cut-vertex splits,
separating triangles and 4-cycles, chord splits (including the chord through
the path's middle vertex), 2-chord splits, direct handling of outer faces of
length 3/4/5, and finally the selection rules applied to the start of the
outer walk.  ``color_one_crossing`` reduces a drawing with one crossing to a
planar path instance by local surgery around the crossing.

Every coloring that leaves this module is re-checked by the shared verifier;
a verification failure raises a panic carrying a replayable instance dump,
because by the underlying theorems a failure is always a bug, never a result.
"""

from collections import deque
from dataclasses import dataclass, field

from .checkcolor import first_violation
from .errors import HypothesisViolation, SolverPanic, StructuralError
from .ioformat import serialize_parts
from .nearplanar import Drawing
from .planegraph import (PlaneGraph, Walk, adjacency_sets, blocks_and_cuts,
                         four_cycles, k_chords, norm_edge, outer_boundary,
                         q_components, split_at_cycle, triangles)
from .validity import as_lists, check_basic, check_thomassen

Coloring = dict  # vertex id -> color id


# ---------------------------------------------------------------------------
# the list reduction by a partial coloring


@dataclass(frozen=True)
class ReducedInstance:
    """Residual graph and lists after absorbing a partial coloring.

    ``readded`` records, per remaining vertex, the colors contributed back by
    uncolored precolored-path neighbors (those must stay avoidable, so their
    whole lists rejoin).
    """

    graph: object
    lists: dict = field(default_factory=dict)
    readded: dict = field(default_factory=dict)


def _graph_adjacency(g):
    if isinstance(g, PlaneGraph):
        return adjacency_sets(g), True
    adj = {v: set(ws) for v, ws in g.items()}
    for v in list(adj):
        for w in adj[v]:
            adj.setdefault(w, set()).add(v)
    return adj, False


def reduce_by_partial_coloring(g, lists, p, phi) -> ReducedInstance:
    """Remove the colored vertices and adjust the lists of the rest.

    A remaining vertex loses the colors of its colored neighbors, then gains
    back the full lists of its uncolored path neighbors.  Path vertices
    themselves only lose colors; they never gain any, so their forced colors
    stay forced.  Preconditions: phi is a proper partial coloring from the
    lists, and no colored vertex uses a color from an adjacent path vertex's
    list.  When the path vertices carry singleton lists, any proper coloring
    of the result combines with phi into a proper coloring of the whole
    graph: a gained color is always the forced color of a still-present path
    neighbor, so a proper coloring of the residue can never actually use it.
    """
    adj, plane = _graph_adjacency(g)
    L = as_lists(lists, sorted(adj))
    p_vs = list(p.vertices) if isinstance(p, Walk) else list(p)
    for v in p_vs:
        if v not in adj:
            raise StructuralError("path vertex %r is not in the graph" % (v,))
    for v in phi:
        if v not in adj:
            raise StructuralError("colored vertex %r is not in the graph" % (v,))
        if phi[v] not in L[v]:
            raise StructuralError(
                "color %r of vertex %r is outside its list" % (phi[v], v))
    for v in sorted(phi):
        for w in adj[v]:
            if w in phi and v < w and phi[v] == phi[w]:
                raise StructuralError(
                    "colored vertices %r and %r are adjacent with the same "
                    "color %r" % (v, w, phi[v]))
    pset = set(p_vs)
    for v in sorted(phi):
        for q in sorted(adj[v]):
            if q in pset and phi[v] in L[q]:
                raise StructuralError(
                    "reduction precondition fails at (%r, %r): the color %r "
                    "lies in the path vertex's list" % (v, q, phi[v]))

    remaining = [v for v in sorted(adj) if v not in phi]
    new_lists, readded = {}, {}
    for z in remaining:
        removed = {phi[x] for x in adj[z] if x in phi}
        gained = set()
        if z not in pset:
            for q in adj[z]:
                if q in pset and q not in phi:
                    gained |= L[q]
        new_lists[z] = frozenset((L[z] - removed) | gained)
        readded[z] = frozenset(gained)
    if plane:
        residual = _induce(g, remaining)
    else:
        rset = set(remaining)
        residual = {v: frozenset(adj[v] & rset) for v in remaining}
    return ReducedInstance(residual, new_lists, readded)


# ---------------------------------------------------------------------------
# selection rules at the start of the outer walk


@dataclass(frozen=True)
class XContext:
    """What the selection rules look at: the first four outer-walk vertices
    past the path, their lists, the path end they attach to, and two facts
    about the neighborhood."""

    v: tuple                       # (v1, v2, v3, v4) along the outer walk
    lists: dict                    # color lists covering v1..v4 and the path end
    p0: int                        # the path end adjacent to v1
    common_neighbor: bool = False  # v1, v2, v3 share a neighbor
    crossing_adjacent: bool = False  # v1 and v2 are joined through a crossing


@dataclass(frozen=True)
class XSelection:
    x_set: tuple
    partial_coloring: dict
    rule: str

    def __post_init__(self):
        want = set(self.x_set)
        if self.rule == "X4b":
            want = want - {self.x_set[1]}
        if set(self.partial_coloring) != want:
            raise StructuralError(
                "rule %s must color exactly %r" % (self.rule, sorted(want)))


def _smallest(colors, what):
    chosen = sorted(colors)
    if not chosen:
        raise StructuralError("no color available for %s" % what)
    return chosen[0]


def select_x(ctx: XContext) -> XSelection:
    """Apply the first matching selection rule, deterministically.

    Rules are tried in presentation order; wherever a color may be chosen
    arbitrarily, the smallest color id is taken.
    """
    v1, v2, v3, v4 = ctx.v
    L = ctx.lists
    s1, s2, s3, s4 = (len(L[v]) for v in ctx.v)

    if s1 == 3 and s3 != 3:
        c1 = _smallest(L[v1] - L[ctx.p0], "the first outer vertex")
        return XSelection((v1,), {v1: c1}, "X1")
    if s1 == 3 and s3 == 3:
        c2 = _smallest(L[v2] - L[v3], "the second outer vertex")
        c1 = _smallest(L[v1] - (L[ctx.p0] | {c2}), "the first outer vertex")
        return XSelection((v1, v2), {v1: c1, v2: c2}, "X2")
    if s2 == 3 and (s4 != 3 or s3 >= 5):
        return XSelection((v2,), {v2: _smallest(L[v2], "the second outer vertex")},
                          "X3")
    if s2 == 3 and s3 == 4 and s4 == 3:
        if not ctx.common_neighbor or s1 >= 5:
            c3 = _smallest(L[v3] - L[v4], "the third outer vertex")
            c2 = _smallest(L[v2] - {c3}, "the second outer vertex")
            return XSelection((v2, v3), {v2: c2, v3: c3}, "X4a")
        if ctx.common_neighbor and s1 == 4:
            # the middle vertex stays uncolored; the two chosen colors must
            # leave it a free color later, hence the joint constraint
            for c3 in sorted(L[v3] - L[v4]):
                for c1 in sorted(L[v1] - L[ctx.p0]):
                    if c1 not in L[v2] or c3 not in L[v2] or c1 == c3:
                        return XSelection((v1, v2, v3), {v1: c1, v3: c3}, "X4b")
            raise StructuralError("no color pair satisfies the uncolored-middle "
                                  "constraint")
    if ctx.crossing_adjacent and s1 == 4 and s2 == 4:
        if s3 != 3:
            c1 = _smallest(L[v1] - L[ctx.p0], "the first outer vertex")
            return XSelection((v1,), {v1: c1}, "X5")
        c2 = _smallest(L[v2] - L[v3], "the second outer vertex")
        return XSelection((v2,), {v2: c2}, "X6")
    raise StructuralError("no selection rule applies; reduce the instance first")


# ---------------------------------------------------------------------------
# shared recursion helpers


def _restrict(L, g):
    return {v: L[v] for v in g.vertices}


def _path_on_outer(child, path):
    pv = list(path)
    outer_vs, outer_es = outer_boundary(child)
    return (all(v in outer_vs for v in pv)
            and all(norm_edge(pv[i], pv[i + 1]) in outer_es
                    for i in range(len(pv) - 1)))


def _induce(g, verts, keep_edges=None, path=()):
    """Induced child carrying over the parent's outer face when possible.

    Preference order for the child's outer face: the face left of the first
    surviving directed edge of the parent's outer face, then — should that
    face not show the precolored path, which can happen when a removal
    disconnects the graph — the first face holding the whole path.
    """
    vs = set(verts)
    keep = None if keep_edges is None else {norm_edge(*e) for e in keep_edges}
    outer_edge = None
    if g.m > 0 and g.outer_face is not None:
        for a, b in g.outer().edges:
            if a in vs and b in vs and (keep is None or norm_edge(a, b) in keep):
                outer_edge = (a, b)
                break
    child = g.induced(vs, keep_edges=keep_edges, outer_edge=outer_edge)
    if child.m > 0 and path and not _path_on_outer(child, path):
        pv = list(path)
        pvset = set(pv)
        pedges = {norm_edge(pv[i], pv[i + 1]) for i in range(len(pv) - 1)}
        for f in child.faces():
            if (pvset <= set(f.vertex_set)
                    and pedges <= {norm_edge(*e) for e in f.edges}):
                return g.induced(vs, keep_edges=keep_edges, outer_face=f.index)
    return child


def _free_child(g, verts, L, must=frozenset()):
    """Child for a piece with no inherited path.

    The chosen outer face must show every vertex whose list is too short to
    be interior, plus any explicitly required vertices.
    """
    child = _induce(g, verts)
    if child.m == 0:
        return child
    required = {v for v in child.vertices if len(L[v]) < 5} | set(must)
    if required <= set(child.outer().vertex_set):
        return child
    for f in child.faces():
        if required <= set(f.vertex_set):
            return g.induced(set(verts), outer_face=f.index)
    return child  # the recursive hypothesis check will reject this with a dump


def _components_without(g, w):
    seen = {w}
    pieces = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for nb in g.neighbors(x):
                if nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    queue.append(nb)
        pieces.append(sorted(comp))
    return pieces


def _panic(g, path, L, message):
    outer_edge = None
    if g.m > 0 and g.outer_face is not None:
        outer_edge = g.outer().edges[0]
    dump = serialize_parts(g.rotations_dict(), outer_edge=outer_edge,
                           lists=L, path=tuple(path))
    raise SolverPanic(message, dump=dump)


def _finish_directly(g, L, fixed):
    """Color the few remaining vertices by first-fit search (smallest colors
    first); used only on graphs proven tiny, where a completion must exist."""
    order = [v for v in g.vertices if v not in fixed]
    coloring = dict(fixed)

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for c in sorted(L[v]):
            if all(coloring.get(w) != c for w in g.neighbors(v)):
                coloring[v] = c
                if extend(i + 1):
                    return True
                del coloring[v]
        return False

    return coloring if extend(0) else None


# ---------------------------------------------------------------------------
# the precolored-path engine


def color_basic(g: PlaneGraph, p, lists) -> Coloring:
    """Color a plane graph whose outer face carries a precolored path of
    length at most 2, interior lists of size 5 and boundary lists of size 3
    (with the usual side conditions).  Raises a hypothesis violation when the
    input does not qualify; never fails on qualifying input.
    """
    p_vs = list(p.vertices) if isinstance(p, Walk) else list(p)
    if not p_vs:
        raise StructuralError("the precolored path must contain at least one "
                              "vertex")
    L = as_lists(lists, g.vertices)
    report = check_basic(g, Walk(tuple(p_vs)), L)
    if not report.ok():
        raise HypothesisViolation("; ".join(report.messages()), report=report)
    coloring = _basic(g, p_vs, L)
    problem = first_violation(g.edges(), L, coloring)
    if problem:
        _panic(g, p_vs, L, "produced an invalid coloring: %s" % problem)
    return coloring


def _basic(g, p_vs, L):
    while True:
        # A disconnected graph is only a transient state: it is split into
        # its components below, and each component is then checked as an
        # instance in its own right (short lists in a component only have to
        # sit on a face of that component, which no single designated outer
        # face could express).
        if g.n_components == 1:
            try:
                report = check_basic(g, Walk(tuple(p_vs)), L)
            except StructuralError as exc:
                _panic(g, p_vs, L, "reduction broke the path placement: %s" % exc)
            if not report.ok():
                _panic(g, p_vs, L,
                       "reduction lost the hypotheses: %s"
                       % "; ".join(report.messages()))

        pset = set(p_vs)
        vs = g.vertices

        # nothing but the path left
        if pset == set(vs):
            return {v: min(L[v]) for v in vs}

        # components are independent; pieces without the path get one pinned
        # vertex to anchor the recursion
        if g.n_components > 1:
            comps = {}
            for v in vs:
                comps.setdefault(g.component_of(v), []).append(v)
            coloring = {}
            for cid in sorted(comps, key=lambda c: min(comps[c])):
                members = comps[cid]
                if pset <= set(members):
                    child = _induce(g, members, path=p_vs)
                    coloring.update(_basic(child, p_vs, _restrict(L, child)))
                else:
                    child = _free_child(g, members, L)
                    anchor = min(outer_boundary(child)[0])
                    sub = _restrict(L, child)
                    sub[anchor] = frozenset({min(sub[anchor])})
                    coloring.update(_basic(child, [anchor], sub))
            return coloring

        # a vertex with fewer neighbors than colors can always be colored last
        removable = next((v for v in vs
                          if v not in pset and g.degree(v) < len(L[v])), None)
        if removable is not None:
            child = _induce(g, set(vs) - {removable}, path=p_vs)
            coloring = _basic(child, p_vs, _restrict(L, child))
            free = sorted(L[removable]
                          - {coloring[w] for w in g.neighbors(removable)})
            coloring[removable] = free[0]
            return coloring

        blocks, cuts = blocks_and_cuts(g)
        if cuts:
            w = cuts[0]
            pieces = _components_without(g, w)
            coloring = {}
            if w in pset:
                for piece in pieces:
                    members = set(piece) | {w}
                    sub_p = [x for x in p_vs if x in members]
                    if len(sub_p) >= 2:
                        child = _induce(g, members, path=sub_p)
                    else:
                        child = _free_child(g, members, L, must={w})
                    coloring.update(_basic(child, sub_p, _restrict(L, child)))
                return coloring
            main = next(set(piece) | {w} for piece in pieces
                        if pset <= set(piece))
            child = _induce(g, main, path=p_vs)
            coloring = _basic(child, p_vs, _restrict(L, child))
            pinned = coloring[w]
            for piece in pieces:
                members = set(piece) | {w}
                if members == main:
                    continue
                child = _free_child(g, members, L, must={w})
                sub = _restrict(L, child)
                sub[w] = frozenset({pinned})
                coloring.update(_basic(child, [w], sub))
            return coloring

        # a triangle that bounds no face separates; color outside first, then
        # the inside with the triangle pinned
        face_sets = {frozenset(f.vertex_set) for f in g.faces()}
        split = next((t for t in triangles(g) if frozenset(t) not in face_sets),
                     None)
        if split is not None:
            inner, outer_part = split_at_cycle(g, Walk(split, closed=True))
            coloring = _basic(outer_part, p_vs, _restrict(L, outer_part))
            sub = _restrict(L, inner)
            for x in split:
                sub[x] = frozenset({coloring[x]})
            coloring.update(_basic(inner, list(split), sub))
            return coloring

        # a 4-cycle with material on both sides: color outside first, then
        # the inside minus one cycle vertex, whose color is subtracted from
        # its inner neighbors
        for quad in four_cycles(g):
            inner, outer_part = split_at_cycle(g, Walk(quad, closed=True))
            if inner.n <= 4 or outer_part.n <= 4:
                continue
            k1, k2, k3, k4 = quad
            coloring = _basic(outer_part, p_vs, _restrict(L, outer_part))
            child = _induce(inner, set(inner.vertices) - {k1},
                            path=[k2, k3, k4])
            sub = _restrict(L, child)
            for z in inner.neighbors(k1):
                if z not in (k2, k4):
                    sub[z] = sub[z] - {coloring[k1]}
            for x in (k2, k3, k4):
                sub[x] = frozenset({coloring[x]})
            coloring.update(_basic(child, [k2, k3, k4], sub))
            return coloring

        outer_walk = g.outer_cycle()
        chords = k_chords(g, outer_walk, 1)
        if chords:
            coloring = _split_at_chord(g, p_vs, L, pset, vs, outer_walk, chords)
            if coloring is not None:
                return coloring
            return _middle_chord(g, p_vs, L, outer_walk, chords)

        # stretch the precolored path to length 2 along the outer walk
        if len(p_vs) < 3:
            cyc = list(outer_walk.vertices)
            n_c = len(cyc)

            def around(x):
                i = cyc.index(x)
                return cyc[(i - 1) % n_c], cyc[(i + 1) % n_c]

            candidates = []
            for end, inner_idx, place in ((p_vs[0], 1, "front"),
                                          (p_vs[-1], -2, "back")):
                inner = p_vs[inner_idx] if len(p_vs) > 1 else None
                for w in around(end):
                    if w != inner and w not in pset:
                        candidates.append((w, place))
            w, place = max(candidates)
            free = sorted(L[w] - {min(L[x]) for x in p_vs if g.has_edge(w, x)})
            L = dict(L)
            L[w] = frozenset({free[0]})
            p_vs = [w] + p_vs if place == "front" else p_vs + [w]
            continue

        coloring = _split_at_two_chord(g, p_vs, L, pset)
        if coloring is not None:
            return coloring

        coloring = _short_outer_face(g, p_vs, L, outer_walk)
        if coloring is not None:
            return coloring

        result = _select_and_recurse(g, p_vs, L, outer_walk)
        if result is None:
            L = _drop_one_color(g, p_vs, L, outer_walk)
            continue
        return result


def _split_at_chord(g, p_vs, L, pset, vs, outer_walk, chords):
    """Split along the first chord with the whole path on one side."""
    for chord in chords:
        u, v = chord.vertices
        g1, g2 = q_components(g, outer_walk, chord)
        s1, s2 = set(g1.vertices), set(g2.vertices)
        if pset <= s1 and pset <= s2:
            tie = min(x for x in vs if x not in (u, v))
            near, far = (g1, g2) if tie in s1 else (g2, g1)
        elif pset <= s1:
            near, far = g1, g2
        elif pset <= s2:
            near, far = g2, g1
        else:
            continue
        coloring = _basic(near, p_vs, _restrict(L, near))
        sub = _restrict(L, far)
        sub[u] = frozenset({coloring[u]})
        sub[v] = frozenset({coloring[v]})
        coloring.update(_basic(far, [u, v], sub))
        return coloring
    return None


def _middle_chord(g, p_vs, L, outer_walk, chords):
    """Every remaining chord leaves the path's middle vertex; solve the two
    sides in whichever order keeps the second side's hypotheses intact."""
    if len(p_vs) != 3:
        _panic(g, p_vs, L, "chord through the path with a short path")
    z1, mid, z2 = p_vs
    chord = chords[0]
    if mid not in chord.vertices:
        _panic(g, p_vs, L, "unsplittable chord avoiding the path middle")
    far_end = chord.vertices[0] if chord.vertices[1] == mid else chord.vertices[1]
    ga, gb = q_components(g, outer_walk, Walk((mid, far_end)))
    if z1 in set(ga.vertices):
        g1, g2 = ga, gb
    else:
        g1, g2 = gb, ga
    if not (z1 in set(g1.vertices) and z2 in set(g2.vertices)):
        _panic(g, p_vs, L, "chord through the path middle fails to separate "
                           "the path ends")

    adj = adjacency_sets(g)
    adj1 = adjacency_sets(g1)
    adj2 = adjacency_sets(g2)
    shared2 = adj2[mid] & adj2[far_end] & adj2[z2]
    clean1 = (z2 not in adj[far_end]
              and not any(len(L[t]) == 3 for t in shared2))
    shared1 = adj1[mid] & adj1[far_end] & adj1[z1]
    clean2 = (z1 not in adj[far_end]
              and not any(len(L[t]) == 3 for t in shared1))

    if clean1:
        coloring = _basic(g1, [z1, mid], _restrict(L, g1))
        sub = _restrict(L, g2)
        sub[far_end] = frozenset({coloring[far_end]})
        coloring.update(_basic(g2, [far_end, mid, z2], sub))
        return coloring
    if clean2:
        coloring = _basic(g2, [mid, z2], _restrict(L, g2))
        sub = _restrict(L, g1)
        sub[far_end] = frozenset({coloring[far_end]})
        coloring.update(_basic(g1, [far_end, mid, z1], sub))
        return coloring

    # both sides collapse to fans of at most one extra vertex around the
    # chord, so the whole graph has at most six vertices
    if g.n > 6:
        _panic(g, p_vs, L, "middle chord with both directions blocked on a "
                           "large graph")
    coloring = _finish_directly(g, L, {x: min(L[x]) for x in p_vs})
    if coloring is None:
        _panic(g, p_vs, L, "tiny middle-chord graph admits no completion")
    return coloring


def _split_at_two_chord(g, p_vs, L, pset):
    """Split along the first 2-chord with the path on one side and more than
    a fan on the other."""
    outer_walk = g.outer_cycle()
    for chord in k_chords(g, outer_walk, 2):
        u, m, w = chord.vertices
        g1, g2 = q_components(g, outer_walk, chord)
        s1, s2 = set(g1.vertices), set(g2.vertices)
        if pset <= s1:
            near, far = g1, g2
        elif pset <= s2:
            near, far = g2, g1
        else:
            continue
        fvs = set(far.vertices)
        if fvs == {u, m, w}:
            continue
        if len(fvs) == 4:
            (extra,) = fvs - {u, m, w}
            if (len(L[extra]) == 3
                    and all(far.has_edge(extra, t) for t in (u, m, w))):
                continue
        coloring = _basic(near, p_vs, _restrict(L, near))
        sub = _restrict(L, far)
        for t in (u, m, w):
            sub[t] = frozenset({coloring[t]})
        coloring.update(_basic(far, [u, m, w], sub))
        return coloring
    return None


def _short_outer_face(g, p_vs, L, outer_walk):
    """Outer faces of length 3, 4 or 5 are finished by direct removal."""
    cyc = list(outer_walk.vertices)
    flen = len(cyc)
    if flen > 5:
        return None
    p0, p1, p2 = p_vs

    if flen == 3:
        gone = p2
        cg = min(L[p2])
        keep_path = [p0, p1]
    elif flen == 4:
        (gone,) = set(cyc) - set(p_vs)
        free = sorted(L[gone] - {min(L[x]) for x in p_vs if g.has_edge(gone, x)})
        cg = free[0]
        keep_path = p_vs
    else:
        return _five_face(g, p_vs, L, cyc)

    child = _induce(g, set(g.vertices) - {gone}, path=keep_path)
    sub = {z: (L[z] - {cg} if g.has_edge(z, gone) else L[z])
           for z in child.vertices}
    coloring = _basic(child, keep_path, sub)
    coloring[gone] = cg
    return coloring


def _five_face(g, p_vs, L, cyc):
    """Color the two non-path vertices of a 5-face outright, in the first
    order that keeps the reduced instance clean, and recurse."""
    p0, p1, p2 = p_vs
    i0 = cyc.index(p0)
    step = 1 if cyc[(i0 + 1) % 5] != p1 else -1
    w1 = cyc[(i0 + step) % 5]
    w2 = cyc[(i0 + 2 * step) % 5]
    c_p0, c_p2 = min(L[p0]), min(L[p2])
    child = _induce(g, set(g.vertices) - {w1, w2}, path=p_vs)
    for c1 in sorted(L[w1]):
        if c1 == c_p0:
            continue
        for c2 in sorted(L[w2]):
            if c2 == c1 or c2 == c_p2:
                continue
            sub = {}
            for z in child.vertices:
                t = L[z]
                if g.has_edge(z, w1):
                    t = t - {c1}
                if g.has_edge(z, w2):
                    t = t - {c2}
                sub[z] = t
            if check_basic(child, Walk(tuple(p_vs)), sub).ok():
                coloring = _basic(child, p_vs, sub)
                coloring[w1] = c1
                coloring[w2] = c2
                return coloring
    _panic(g, p_vs, L, "no coloring of the 5-face keeps the reduction clean")


def _outer_run(g, p_vs, outer_walk):
    """v1..v4: the outer walk leaving the path at its first vertex."""
    cyc = list(outer_walk.vertices)
    n_c = len(cyc)
    i0 = cyc.index(p_vs[0])
    step = 1 if cyc[(i0 + 1) % n_c] != p_vs[1] else -1
    return [cyc[(i0 + step * j) % n_c] for j in (1, 2, 3, 4)]


def _drop_one_color(g, p_vs, L, outer_walk):
    """Neither of the first two outer vertices has a 3-list yet; shrink the
    first one's list and try again."""
    v1 = _outer_run(g, p_vs, outer_walk)[0]
    L = dict(L)
    L[v1] = frozenset(sorted(L[v1])[:-1])
    return L


def _select_and_recurse(g, p_vs, L, outer_walk):
    v1, v2, v3, v4 = _outer_run(g, p_vs, outer_walk)
    if len(L[v1]) != 3 and len(L[v2]) != 3:
        return None  # caller drops a color from v1 first
    adj = adjacency_sets(g)
    ctx = XContext(v=(v1, v2, v3, v4),
                   lists={x: L[x] for x in (v1, v2, v3, v4, p_vs[0])},
                   p0=p_vs[0],
                   common_neighbor=bool(adj[v1] & adj[v2] & adj[v3]),
                   crossing_adjacent=False)
    selection = select_x(ctx)
    child = _induce(g, set(g.vertices) - set(selection.x_set), path=p_vs)
    sub = {}
    for z in child.vertices:
        t = L[z]
        for x, cx in selection.partial_coloring.items():
            if g.has_edge(z, x):
                t = t - {cx}
        sub[z] = t
    coloring = _basic(child, p_vs, sub)
    coloring.update(selection.partial_coloring)
    if selection.rule == "X4b":
        mid = selection.x_set[1]
        taken = set()
        for t in g.neighbors(mid):
            if t not in coloring:
                _panic(g, p_vs, L, "uncolored neighbor while closing the "
                                   "selection's middle vertex")
            taken.add(coloring[t])
        free = sorted(L[mid] - taken)
        if not free:
            _panic(g, p_vs, L, "the selection's middle vertex has no color left")
        coloring[mid] = free[0]
    return coloring


# ---------------------------------------------------------------------------
# the precolored-edge engine


def color_thomassen(g: PlaneGraph, lists, xy) -> Coloring:
    """Color a plane graph with two adjacent outer vertices precolored
    differently, boundary lists of size 3 and interior lists of size 5."""
    L = as_lists(lists, g.vertices)
    xy = tuple(xy)
    report = check_thomassen(g, xy, L)
    if not report.ok():
        raise HypothesisViolation("; ".join(report.messages()), report=report)
    coloring = _thomassen(g, xy, L)
    problem = first_violation(g.edges(), L, coloring)
    if problem:
        _panic(g, xy, L, "produced an invalid coloring: %s" % problem)
    return coloring


def _seeded_edge(child, L, first=None, pin=None):
    """Pick a precolored outer edge for a piece that has none.

    ``first`` forces the first endpoint; ``pin`` forces its color."""
    boundary = child.outer().vertices
    v0 = first if first is not None else min(set(boundary))
    i = boundary.index(v0)
    v1 = boundary[(i + 1) % len(boundary)]
    sub = _restrict(L, child)
    c0 = pin if pin is not None else min(sub[v0])
    sub[v0] = frozenset({c0})
    sub[v1] = frozenset({min(sub[v1] - {c0})})
    return (v0, v1), sub


def _thomassen(g, xy, L):
    if g.n_components == 1:
        try:
            report = check_thomassen(g, xy, L)
        except StructuralError as exc:
            _panic(g, xy, L, "reduction broke the precolored edge: %s" % exc)
        if not report.ok():
            _panic(g, xy, L,
                   "reduction lost the hypotheses: %s"
                   % "; ".join(report.messages()))
    x, y = xy
    vs = g.vertices
    if len(vs) == 2:
        return {x: min(L[x]), y: min(L[y])}

    if g.n_components > 1:
        comps = {}
        for v in vs:
            comps.setdefault(g.component_of(v), []).append(v)
        coloring = {}
        for cid in sorted(comps, key=lambda c: min(comps[c])):
            members = comps[cid]
            if x in set(members):
                child = _induce(g, members, path=[x, y])
                coloring.update(_thomassen(child, xy, _restrict(L, child)))
            elif len(members) == 1:
                coloring[members[0]] = min(L[members[0]])
            else:
                child = _free_child(g, members, L)
                seed, sub = _seeded_edge(child, L)
                coloring.update(_thomassen(child, seed, sub))
        return coloring

    blocks, cuts = blocks_and_cuts(g)
    if cuts:
        w = cuts[0]
        pieces = _components_without(g, w)
        anchor = x if x != w else y
        main = next(set(piece) | {w} for piece in pieces if anchor in set(piece))
        child = _induce(g, main, path=[x, y])
        coloring = _thomassen(child, xy, _restrict(L, child))
        pinned = coloring[w]
        for piece in pieces:
            members = set(piece) | {w}
            if members == main:
                continue
            child = _free_child(g, members, L, must={w})
            seed, sub = _seeded_edge(child, L, first=w, pin=pinned)
            coloring.update(_thomassen(child, seed, sub))
        return coloring

    outer_walk = g.outer_cycle()
    chords = k_chords(g, outer_walk, 1)
    if chords:
        u, v = chords[0].vertices
        g1, g2 = q_components(g, outer_walk, chords[0])
        if {x, y} <= set(g1.vertices) and g1.has_edge(x, y):
            near, far = g1, g2
        else:
            near, far = g2, g1
        coloring = _thomassen(near, xy, _restrict(L, near))
        sub = _restrict(L, far)
        sub[u] = frozenset({coloring[u]})
        sub[v] = frozenset({coloring[v]})
        coloring.update(_thomassen(far, (u, v), sub))
        return coloring

    # chordless: peel the outer neighbor of x away from y, reserving two of
    # its colors, which its interior neighbors must avoid
    cyc = list(outer_walk.vertices)
    n_c = len(cyc)
    i = cyc.index(x)
    side = (cyc[(i - 1) % n_c], cyc[(i + 1) % n_c])
    peeled = side[0] if side[0] != y else side[1]
    reserve = sorted(L[peeled] - {min(L[x])})[:2]
    on_cycle = set(cyc)
    child = _induce(g, set(vs) - {peeled}, path=[x, y])
    sub = {}
    for z in child.vertices:
        t = L[z]
        if z not in on_cycle and g.has_edge(z, peeled):
            t = t - set(reserve)
        sub[z] = t
    coloring = _thomassen(child, xy, sub)
    j = cyc.index(peeled)
    other = cyc[(j - 1) % n_c]
    if other == x:
        other = cyc[(j + 1) % n_c]
    coloring[peeled] = (reserve[0] if coloring[other] != reserve[0]
                        else reserve[1])
    return coloring


# ---------------------------------------------------------------------------
# the one-crossing reduction


def color_one_crossing(drawing: Drawing, lists) -> Coloring:
    """Color a drawing with exactly one crossing and lists of size 5.

    The crossed edges are rerouted into a 4-cycle around the crossing point,
    that cycle becomes the outer face, three of its vertices are precolored,
    and the planar path engine finishes the job.
    """
    if len(drawing.crossings) > 1:
        raise StructuralError("the drawing has %d crossings; this reduction "
                              "handles exactly one — use the exact oracle "
                              "instead" % len(drawing.crossings))
    L = as_lists(lists, drawing.original_vertices())
    failures = ["vertex %r has a list of size %d < 5" % (v, len(L[v]))
                for v in sorted(L) if len(L[v]) < 5]
    if not drawing.crossings:
        failures.insert(0, "the drawing has no crossing; use the planar "
                           "solvers instead")
    if failures:
        raise HypothesisViolation("; ".join(failures))

    record = drawing.crossings[0]
    x, y = record.edge1
    u, v = record.edge2
    rot = {w: list(drawing.base.rotation(w)) for w in drawing.base.vertices}
    hub = record.dummy
    ring = list(rot.pop(hub))  # the four crossing arms in rotation order

    # drop any pre-existing copies of the four replacement edges, then wire
    # each arm to its two ring neighbors in place of the crossing
    ring_edges = {norm_edge(ring[i], ring[(i + 1) % 4]) for i in range(4)}
    for a, b in ring_edges:
        if b in rot[a]:
            rot[a].remove(b)
            rot[b].remove(a)
    for i, arm in enumerate(ring):
        slot = rot[arm].index(hub)
        rot[arm][slot:slot + 1] = [ring[(i + 1) % 4], ring[(i - 1) % 4]]

    flat = PlaneGraph({w: tuple(ws) for w, ws in rot.items()})
    quad = {x, u, y, v}
    face_idx = next((f.index for f in flat.faces()
                     if len(f.edges) == 4 and set(f.vertex_set) == quad), None)
    if face_idx is None:
        _panic(flat, (), L, "crossing surgery produced no 4-face around the "
                            "crossing")
    flat = PlaneGraph(flat.rotations_dict(), outer_face=face_idx)

    c_x = min(L[x])
    c_y = min(L[y] - {c_x})
    c_u = min(L[u] - {c_x, c_y})
    sub = dict(L)
    sub[x] = frozenset({c_x})
    sub[y] = frozenset({c_y})
    sub[u] = frozenset({c_u})
    sub[v] = L[v] - {c_u}
    path = [x, u, y]
    report = check_basic(flat, Walk(tuple(path)), sub)
    if not report.ok():
        _panic(flat, path, sub, "the rerouted instance lost the path "
                                "hypotheses: %s" % "; ".join(report.messages()))
    coloring = _basic(flat, path, sub)
    problem = first_violation(drawing.original_edges(), L, coloring)
    if problem:
        _panic(flat, path, sub, "produced an invalid coloring: %s" % problem)
    return coloring
