"""Drawings with crossings and their combinatorial planarization.

A drawing is stored as a plane graph (the *planarization*) in which every
crossing point has been replaced by a degree-4 dummy vertex, together with
the list of crossing records saying which pair of original edges each dummy
stands for.  All coloring-level reasoning (lists, distances, adjacency)
happens on the original graph; the dummies exist only to pin down the face
structure.
"""

from collections import deque
from dataclasses import dataclass

from .errors import StructuralError
from .planegraph import INF, PlaneGraph, SubgraphRef, norm_edge


def _canon_pair(e1, e2):
    a = norm_edge(*e1)
    b = norm_edge(*e2)
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CrossingRecord:
    """One crossing: dummy vertex id plus the two original edges it replaces."""

    dummy: int
    edge1: tuple
    edge2: tuple

    def __post_init__(self):
        e1, e2 = _canon_pair(self.edge1, self.edge2)
        object.__setattr__(self, "edge1", e1)
        object.__setattr__(self, "edge2", e2)

    @property
    def endpoints(self):
        return frozenset(self.edge1) | frozenset(self.edge2)


@dataclass(frozen=True)
class CrossingSubgraph:
    """The two crossed edges of one crossing, with their four endpoints."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.edges) != 2:
            raise StructuralError("a crossing subgraph has exactly two edges")
        if len(self.vertices) > 4:
            raise StructuralError("a crossing subgraph has at most four vertices")

    def ref(self):
        return SubgraphRef(frozenset(self.vertices), frozenset(self.edges))


def crossing_subgraph(rec: CrossingRecord) -> CrossingSubgraph:
    return CrossingSubgraph(tuple(sorted(rec.endpoints)), (rec.edge1, rec.edge2))


class Drawing:
    """A plane base graph plus crossing records.

    ``base`` contains one dummy vertex per crossing; the rotation at each
    dummy alternates between the halves of the two crossed edges, which is
    re-checked on every construction.
    """

    def __init__(self, base: PlaneGraph, crossings=()):
        self.base = base
        self.crossings = tuple(crossings)
        self._dummies = {}
        by_edge = {}
        for i, rec in enumerate(self.crossings):
            if not isinstance(rec, CrossingRecord):
                raise StructuralError("crossings must be CrossingRecord instances")
            if rec.dummy in self._dummies:
                raise StructuralError("dummy %r used by two crossings" % (rec.dummy,))
            self._dummies[rec.dummy] = i
            for e in (rec.edge1, rec.edge2):
                if e in by_edge:
                    raise StructuralError(
                        "edge %r appears in more than one crossing" % (e,))
                by_edge[e] = rec
            self._check_dummy(rec)
        self._by_edge = by_edge

    def _check_dummy(self, rec):
        g = self.base
        if not g.has_vertex(rec.dummy):
            raise StructuralError("dummy %r missing from the base graph" % (rec.dummy,))
        rot = g.rotation(rec.dummy)
        if len(rot) != 4 or set(rot) != set(rec.endpoints):
            raise StructuralError(
                "dummy %r must have degree 4 on the crossing endpoints" % (rec.dummy,))
        a, b = rec.edge1
        # the two halves of edge1 must sit opposite each other, which forces
        # the alternating pattern a, c, b, d
        if rot[(rot.index(a) + 2) % 4] != b:
            raise StructuralError(
                "rotation at dummy %r does not alternate the crossed edges"
                % (rec.dummy,))

    # -- original-graph view ------------------------------------------------

    def is_dummy(self, v) -> bool:
        return v in self._dummies

    def original_vertices(self):
        return [v for v in self.base.vertices if v not in self._dummies]

    @property
    def n_original(self) -> int:
        return self.base.n - len(self.crossings)

    def crossed_edges(self):
        return sorted(self._by_edge)

    def record_of_edge(self, u, v):
        return self._by_edge.get(norm_edge(u, v))

    def original_edges(self):
        edges = {e for e in self.base.edges()
                 if e[0] not in self._dummies and e[1] not in self._dummies}
        edges.update(self._by_edge)
        return sorted(edges)

    def original_adjacency(self):
        adj = {v: set() for v in self.original_vertices()}
        for u, v in self.original_edges():
            adj[u].add(v)
            adj[v].add(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def original_neighbors(self, v):
        ns = set()
        for w in self.base.neighbors(v):
            if w in self._dummies:
                rec = self.crossings[self._dummies[w]]
                e = rec.edge1 if v in rec.edge1 else rec.edge2
                ns.add(e[0] if e[1] == v else e[1])
            else:
                ns.add(w)
        return tuple(sorted(ns))

    def distance(self, part1, part2):
        """BFS distance between two vertex sets in the original graph.

        Dummy vertices never appear on the paths counted here.  Accepts
        anything with a ``vertices`` attribute, or plain vertex iterables.
        """
        s1 = set(getattr(part1, "vertices", part1))
        s2 = set(getattr(part2, "vertices", part2))
        if not s1 or not s2:
            raise StructuralError("distance between empty vertex sets")
        if s1 & s2:
            return 0
        adj = self.original_adjacency()
        dist = {v: 0 for v in s1}
        queue = deque(sorted(s1))
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    if w in s2:
                        return dist[w]
                    queue.append(w)
        return INF

    def crossing_subgraphs(self):
        return [crossing_subgraph(rec) for rec in self.crossings]

    def __eq__(self, other):
        if not isinstance(other, Drawing):
            return NotImplemented
        return self.base == other.base and self.crossings == other.crossings

    def __repr__(self):
        return "Drawing(n=%d, crossings=%d)" % (self.n_original, len(self.crossings))


def planarize(rotations, crossings=(), outer_edge=None, outer_face=None) -> Drawing:
    """Insert a degree-4 dummy vertex for every crossing record.

    ``rotations`` describes the original graph (dict or list of cyclic
    neighbor orders); ``crossings`` is a sequence of records, each either a
    4-tuple (a, b, c, d) meaning edge ab crosses edge cd, or a pair of edge
    pairs.  The rotation written at the dummy for (a, b) x (c, d) is
    (a, c, b, d), so walking around the dummy alternates the two edges.

    Rejected: an edge crossing itself, crossing pairs that share an
    endpoint, and any edge taking part in more than one crossing.
    """
    if isinstance(rotations, dict):
        rot = {v: list(ws) for v, ws in rotations.items()}
    else:
        rot = {v: list(ws) for v, ws in enumerate(rotations)}

    pairs = []
    for item in crossings:
        if len(item) == 4:
            a, b, c, d = item
            pairs.append(((a, b), (c, d)))
        elif len(item) == 2:
            pairs.append((tuple(item[0]), tuple(item[1])))
        else:
            raise StructuralError("bad crossing record %r" % (item,))

    used = set()
    next_id = max(rot) + 1 if rot else 0
    records = []
    replaced = {}  # normalized original edge -> dummy id
    for (a, b), (c, d) in pairs:
        e1, e2 = norm_edge(a, b), norm_edge(c, d)
        if e1 == e2:
            raise StructuralError("edge %r cannot cross itself" % (e1,))
        if len({a, b, c, d}) != 4:
            raise StructuralError(
                "crossing edges %r and %r share an endpoint" % (e1, e2))
        for u, v in (e1, e2):
            if u not in rot or v not in rot[u]:
                raise StructuralError("crossed edge (%r, %r) is not in the graph" % (u, v))
        if e1 in used or e2 in used:
            offender = e1 if e1 in used else e2
            raise StructuralError(
                "edge %r appears in more than one crossing" % (offender,))
        used.update((e1, e2))

        dummy = next_id
        next_id += 1
        for u, v in ((a, b), (b, a), (c, d), (d, c)):
            rot[u][rot[u].index(v)] = dummy
        rot[dummy] = [a, c, b, d]
        (ce1, ce2) = _canon_pair(e1, e2)
        records.append(CrossingRecord(dummy, ce1, ce2))
        replaced[e1] = dummy
        replaced[e2] = dummy

    if outer_edge is not None:
        u, v = outer_edge
        if norm_edge(u, v) in replaced:
            outer_edge = (u, replaced[norm_edge(u, v)])
    base = PlaneGraph({v: tuple(ws) for v, ws in rot.items()},
                      outer_edge=outer_edge, outer_face=outer_face)
    return Drawing(base, records)


def un_planarize(d: Drawing):
    """Invert planarize: (rotations, crossing 4-tuples, outer edge hint)."""
    rot = {}
    partner = {}  # (vertex, dummy) -> other endpoint of that vertex's crossed edge
    for rec in d.crossings:
        for u, v in (rec.edge1, rec.edge1[::-1], rec.edge2, rec.edge2[::-1]):
            partner[(u, rec.dummy)] = v
    for v in d.base.vertices:
        if d.is_dummy(v):
            continue
        rot[v] = tuple(partner.get((v, w), w) for w in d.base.rotation(v))
    quads = [rec.edge1 + rec.edge2 for rec in d.crossings]

    outer_edge = None
    for u, v in d.base.outer().edges:
        if not d.is_dummy(u) and not d.is_dummy(v):
            outer_edge = (u, v)
            break
    if outer_edge is None:
        u, v = d.base.outer().edges[0]
        outer_edge = (u, partner[(u, v)]) if d.is_dummy(v) else (partner[(v, u)], v)
    return rot, quads, outer_edge


def crossing_adjacent(d: Drawing, u, v) -> bool:
    """True when u and v are endpoints of the two different edges of one crossing."""
    if u == v:
        return False
    for rec in d.crossings:
        # the two crossed edges are vertex-disjoint, so landing on different
        # edges already means "not adjacent within the crossing subgraph"
        if (u in rec.edge1 and v in rec.edge2) or (u in rec.edge2 and v in rec.edge1):
            return True
    return False


@dataclass(frozen=True)
class DrawingFace:
    """A face of the drawing: original vertices and edges, plus crossings."""

    index: int
    vertices: tuple
    edges: tuple
    crossings: tuple  # indices into Drawing.crossings


def drawing_faces(d: Drawing):
    """Faces of the planarization with dummies reported as crossings.

    Boundary vertices keep their walk order with dummies dropped; the two
    halves of a crossed edge collapse back to the original edge.
    """
    faces = []
    for f in d.base.faces():
        verts = []
        edges = []
        xs = set()
        for u, v in f.edges:
            if d.is_dummy(u):
                xs.add(d._dummies[u])
                continue
            verts.append(u)
            if d.is_dummy(v):
                xs.add(d._dummies[v])
                rec = d.crossings[d._dummies[v]]
                e = rec.edge1 if u in rec.edge1 else rec.edge2
                edges.append(e)
            else:
                edges.append(norm_edge(u, v))
        seen = set()
        uniq = [e for e in edges if not (e in seen or seen.add(e))]
        faces.append(DrawingFace(f.index, tuple(verts), tuple(uniq),
                                 tuple(sorted(xs))))
    return faces
