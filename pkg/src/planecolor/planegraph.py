"""Combinatorial plane graphs described by rotation systems.

A plane graph is stored as the cyclic counterclockwise order of neighbours
around every vertex.  That is enough to recover the faces: the successor of
the directed edge (u, v) is (v, w) where w immediately *precedes* u in the
rotation of v.  Under this rule every bounded face is traced counterclockwise
and the unbounded face clockwise, and the orbit count satisfies Euler's
formula, which the constructor audits.

Vertex ids are integers.  Top-level inputs use dense ids 0..n-1; induced
subgraphs produced by the splitting operations keep their original ids so
that colorings compose without relabeling.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .errors import StructuralError

INF = float("inf")


def norm_edge(u, v):
    """Undirected edge as a sorted pair."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence.  Closed walks omit the repeat."""

    vertices: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.closed and not self.vertices:
            raise StructuralError("a closed walk needs at least one vertex")

    @property
    def length(self):
        """Number of edges: l for a closed walk on l vertices, len-1 otherwise."""
        if self.closed:
            return len(self.vertices)
        return max(len(self.vertices) - 1, 0)

    def edges(self):
        vs = self.vertices
        for i in range(len(vs) - 1):
            yield norm_edge(vs[i], vs[i + 1])
        if self.closed and len(vs) > 2:
            yield norm_edge(vs[-1], vs[0])

    def __contains__(self, v):
        return v in self.vertices

    def __len__(self):
        return len(self.vertices)


def length(w: Walk) -> int:
    return w.length


@dataclass(frozen=True)
class SubgraphRef:
    """A subgraph of some host graph, referenced by vertex and edge sets."""

    vertices: frozenset
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(norm_edge(*e) for e in self.edges))
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise StructuralError("edge (%r, %r) has an endpoint outside the subgraph" % (u, v))


@dataclass(frozen=True)
class Face:
    """One orbit of the face-successor map, as a closed walk of directed edges.

    The edge tuple is rotated to start at its lexicographically least directed
    edge, and faces of a graph are numbered in sorted order of that edge, so
    face ids are deterministic.
    """

    index: int
    edges: tuple

    @property
    def vertices(self):
        return tuple(e[0] for e in self.edges)

    @property
    def vertex_set(self):
        return frozenset(v for e in self.edges for v in e)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, directed_edge):
        return directed_edge in self.edges


class PlaneGraph:
    """Immutable simple plane graph with a designated outer face."""

    def __init__(self, rotations, outer_face=None, outer_edge=None):
        if isinstance(rotations, dict):
            rot = {v: tuple(ws) for v, ws in rotations.items()}
        else:
            rot = {v: tuple(ws) for v, ws in enumerate(rotations)}
        self._rot = rot
        self._validate_rotations()
        self._faces, self._face_of = self._trace()
        self._audit_euler()

        if outer_edge is not None:
            outer_face = self.face_index_of(tuple(outer_edge))
        if outer_face is None:
            outer_face = 0 if self._faces else None
        if self._faces:
            if not (isinstance(outer_face, int) and 0 <= outer_face < len(self._faces)):
                raise StructuralError("outer_face %r is not a valid face id" % (outer_face,))
        self.outer_face = outer_face

    # -- construction helpers -------------------------------------------------

    def _validate_rotations(self):
        rot = self._rot
        for v, ws in rot.items():
            if len(set(ws)) != len(ws):
                raise StructuralError("vertex %r lists a neighbour twice" % (v,))
            for w in ws:
                if w == v:
                    raise StructuralError("self-loop at vertex %r" % (v,))
                if w not in rot:
                    raise StructuralError("vertex %r references unknown vertex %r" % (v, w))
                if v not in rot[w]:
                    raise StructuralError(
                        "asymmetric adjacency: %r lists %r but not vice versa" % (v, w))

    def _trace(self):
        rot = self._rot
        pos = {}
        for v, ws in rot.items():
            for i, w in enumerate(ws):
                pos[(v, w)] = i
        seen = set()
        orbits = []
        for start in sorted(pos):
            if start in seen:
                continue
            orbit = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                u, v = cur
                ws = rot[v]
                idx = pos[(v, u)]
                cur = (v, ws[idx - 1])
            orbit = tuple(orbit)
            k = orbit.index(min(orbit))
            orbits.append(orbit[k:] + orbit[:k])
        orbits.sort(key=lambda o: o[0])
        faces = tuple(Face(i, o) for i, o in enumerate(orbits))
        face_of = {}
        for f in faces:
            for e in f.edges:
                face_of[e] = f.index
        return faces, face_of

    def _audit_euler(self):
        # Per connected component with at least one edge: V - E + F = 2.
        comp = {}
        cid = 0
        for s in self._rot:
            if s in comp:
                continue
            stack = [s]
            comp[s] = cid
            while stack:
                v = stack.pop()
                for w in self._rot[v]:
                    if w not in comp:
                        comp[w] = cid
                        stack.append(w)
            cid += 1
        v_count = [0] * cid
        e_count = [0] * cid
        f_count = [0] * cid
        for v, c in comp.items():
            v_count[c] += 1
            e_count[c] += len(self._rot[v])
        for f in self._faces:
            f_count[comp[f.edges[0][0]]] += 1
        for c in range(cid):
            e = e_count[c] // 2
            if e == 0:
                continue
            if v_count[c] - e + f_count[c] != 2:
                raise StructuralError(
                    "rotation system is not planar: component has V=%d E=%d F=%d"
                    % (v_count[c], e, f_count[c]))
        self._component = comp
        self._n_components = cid

    # -- basic queries --------------------------------------------------------

    @property
    def vertices(self):
        return sorted(self._rot)

    @property
    def n(self):
        return len(self._rot)

    @property
    def n_components(self):
        return self._n_components

    def rotation(self, v):
        return self._rot[v]

    def neighbors(self, v):
        return self._rot[v]

    def degree(self, v):
        return len(self._rot[v])

    def has_vertex(self, v):
        return v in self._rot

    def has_edge(self, u, v):
        return u in self._rot and v in self._rot[u]

    def edges(self):
        out = []
        for v, ws in self._rot.items():
            for w in ws:
                if v < w:
                    out.append((v, w))
        return sorted(out)

    @property
    def m(self):
        return sum(len(ws) for ws in self._rot.values()) // 2

    def faces(self):
        return self._faces

    def face(self, index) -> Face:
        return self._faces[index]

    def face_index_of(self, directed_edge):
        try:
            return self._face_of[tuple(directed_edge)]
        except KeyError:
            raise StructuralError("no such directed edge: %r" % (directed_edge,))

    def outer(self) -> Face:
        if self.outer_face is None:
            raise StructuralError("an edgeless graph has no face structure")
        return self._faces[self.outer_face]

    def outer_cycle(self) -> Walk:
        """The outer face as a closed walk of vertices (a cycle iff 2-connected)."""
        return Walk(self.outer().vertices, closed=True)

    def with_outer_edge(self, directed_edge) -> "PlaneGraph":
        """Same embedding, outer face re-designated by a directed edge on it."""
        return PlaneGraph(self._rot, outer_edge=directed_edge)

    def component_of(self, v):
        return self._component[v]

    def rotations_dict(self):
        return dict(self._rot)

    def __eq__(self, other):
        return (isinstance(other, PlaneGraph)
                and self._rot == other._rot
                and self.outer_face == other.outer_face)

    def __repr__(self):
        return "PlaneGraph(n=%d, m=%d, faces=%d, outer=%r)" % (
            self.n, self.m, len(self._faces), self.outer_face)

    # -- subgraphs ------------------------------------------------------------

    def induced(self, vertices, keep_edges=None, outer_edge=None, outer_face=None):
        """Induced sub-plane-graph on the given vertices.

        Rotations are filtered, which preserves the embedding.  keep_edges, if
        given, additionally restricts which edges survive.
        """
        vs = set(vertices)
        if keep_edges is not None:
            keep = {norm_edge(*e) for e in keep_edges}
            rot = {v: tuple(w for w in self._rot[v] if w in vs and norm_edge(v, w) in keep)
                   for v in vs}
        else:
            rot = {v: tuple(w for w in self._rot[v] if w in vs) for v in vs}
        return PlaneGraph(rot, outer_edge=outer_edge, outer_face=outer_face)


def trace_faces(g: PlaneGraph):
    """All faces of the embedding (deterministic ids)."""
    return g.faces()


def outer_boundary(g: PlaneGraph):
    """Vertices and (normalized) edges of the outer face.

    An edgeless graph has no faces; by convention every vertex then lies on
    the outer boundary and the edge set is empty.
    """
    if g.m == 0:
        return set(g.vertices), set()
    outer = g.outer()
    return set(outer.vertex_set), {norm_edge(u, v) for u, v in outer.edges}


def _cycle_edges(k: Walk):
    if not k.closed or len(k.vertices) < 3:
        raise StructuralError("expected a closed walk on >= 3 vertices")
    if len(set(k.vertices)) != len(k.vertices):
        raise StructuralError("cycle repeats a vertex")
    return set(k.edges())


def _check_cycle_in(g: PlaneGraph, k: Walk):
    edges = _cycle_edges(k)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise StructuralError("cycle edge (%r, %r) is not in the graph" % (u, v))
    return edges


def k_chords(g: PlaneGraph, k: Walk, order: int):
    """All paths of the given length with endpoints on the cycle and interior off it.

    A 1-chord is an ordinary chord: an edge joining two cycle vertices that is
    not itself a cycle edge.  Results are deterministic: each path is reported
    once, oriented with the smaller endpoint first, sorted by vertex tuple.
    """
    cyc_edges = _check_cycle_in(g, k)
    if order < 1:
        raise StructuralError("chord order must be >= 1")
    on_cycle = set(k.vertices)
    found = set()
    for start in k.vertices:
        # depth-first enumeration of simple paths of exactly `order` edges
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            if len(path) == order + 1:
                if v in on_cycle and path[0] <= v:
                    if order == 1 and norm_edge(path[0], v) in cyc_edges:
                        continue
                    found.add(path)
                continue
            for w in g.neighbors(v):
                if w in path:
                    continue
                # positions 1..order-1 are interior and must avoid the cycle
                if len(path) < order and w in on_cycle:
                    continue
                stack.append((w, path + (w,)))
    walks = [Walk(p) for p in sorted(found)]
    return walks


def _face_sides(g: PlaneGraph, cyc_edges):
    """Partition face ids into the outer-face side and the other side of a cycle.

    Two faces are on the same side when they share a non-cycle edge; the side
    reachable from the designated outer face is the 'outside'.
    """
    adj = {}
    for f in g.faces():
        adj[f.index] = set()
    for (u, v), fi in g._face_of.items():
        if norm_edge(u, v) in cyc_edges:
            continue
        adj[fi].add(g._face_of[(v, u)])
    outside = set()
    queue = deque([g.outer_face])
    outside.add(g.outer_face)
    while queue:
        f = queue.popleft()
        for h in adj[f]:
            if h not in outside:
                outside.add(h)
                queue.append(h)
    inside = set(adj) - outside
    return inside, outside


def split_at_cycle(g: PlaneGraph, k: Walk):
    """(interior part, exterior part) of the closed disc bounded by the cycle.

    The parts share exactly the cycle; the interior part's outer face is the
    cycle itself, the exterior part keeps the host's outer face.
    """
    cyc_edges = _check_cycle_in(g, k)
    if g.n_components != 1:
        raise StructuralError("cycle split requires a connected graph")
    inside, outside = _face_sides(g, cyc_edges)

    def part(face_side):
        # a non-cycle edge has both incident faces on one side, so testing
        # the face of either direction is enough
        verts = set(k.vertices)
        edges = set(cyc_edges)
        for (u, v), fi in g._face_of.items():
            if u < v and norm_edge(u, v) not in cyc_edges and fi in face_side:
                edges.add((u, v))
                verts.add(u)
                verts.add(v)
        return verts, edges

    int_verts, int_edges = part(inside)
    ext_verts, ext_edges = part(outside)

    # Interior part: its unbounded region is where the exterior used to be.
    c0, c1 = k.vertices[0], k.vertices[1]
    if g.face_index_of((c0, c1)) in outside:
        int_outer = (c0, c1)
        ext_inner = (c1, c0)
    else:
        int_outer = (c1, c0)
        ext_inner = (c0, c1)
    interior = g.induced(int_verts, keep_edges=int_edges, outer_edge=int_outer)

    outer_dir = None
    for e in g.outer().edges:
        if norm_edge(*e) in ext_edges:
            outer_dir = e
            break
    if outer_dir is None:
        # the cycle is the outer face boundary itself
        outer_dir = ext_inner
    exterior = g.induced(ext_verts, keep_edges=ext_edges, outer_edge=outer_dir)
    return interior, exterior


def q_components(g: PlaneGraph, outer: Walk, q: Walk):
    """The two closed sides a k-chord of the outer cycle cuts the disc into."""
    _check_cycle_in(g, outer)
    if q.length < 1:
        raise StructuralError("a k-chord has length >= 1")
    v0, vk = q.vertices[0], q.vertices[-1]
    cyc = list(outer.vertices)
    if v0 not in cyc or vk not in cyc:
        raise StructuralError("k-chord endpoints must lie on the cycle")
    for v in q.vertices[1:-1]:
        if v in cyc:
            raise StructuralError("k-chord interior vertex %r lies on the cycle" % (v,))
    for u, v in q.edges():
        if not g.has_edge(u, v):
            raise StructuralError("k-chord edge (%r, %r) missing" % (u, v))
        if norm_edge(u, v) in set(outer.edges()):
            raise StructuralError("k-chord may not use a cycle edge")
    i, j = cyc.index(v0), cyc.index(vk)
    arc1 = cyc[i:j + 1] if i <= j else cyc[i:] + cyc[:j + 1]
    arc2 = cyc[j:i + 1] if j <= i else cyc[j:] + cyc[:i + 1]
    back = list(reversed(q.vertices))
    c1 = Walk(tuple(arc1[:-1]) + tuple(back[:-1]), closed=True)
    c2 = Walk(tuple(arc2[:-1]) + tuple(q.vertices[:-1]), closed=True)
    g1 = split_at_cycle(g, c1)[0]
    g2 = split_at_cycle(g, c2)[0]
    return g1, g2


def subgraph_distance(g: PlaneGraph, h1, h2):
    """Minimum BFS distance between the vertex sets of two subgraph refs."""
    s1 = set(h1.vertices if isinstance(h1, SubgraphRef) else h1)
    s2 = set(h2.vertices if isinstance(h2, SubgraphRef) else h2)
    if not s1 or not s2:
        raise StructuralError("subgraph distance needs nonempty vertex sets")
    if s1 & s2:
        return 0
    dist = {v: 0 for v in s1}
    queue = deque(dist)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w in s2:
                    return dist[w]
                queue.append(w)
    return INF


def blocks_and_cuts(g: PlaneGraph):
    """(blocks, cut vertices) of the standard block decomposition."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    blocks = [tuple(sorted(b)) for b in nx.biconnected_components(h)]
    for v in g.vertices:
        if g.degree(v) == 0:
            blocks.append((v,))
    blocks.sort()
    cuts = sorted(nx.articulation_points(h))
    return blocks, cuts


def adjacency_sets(g: PlaneGraph):
    return {v: set(g.neighbors(v)) for v in g.vertices}


def triangles(g: PlaneGraph):
    """All vertex triples inducing a triangle, sorted."""
    adj = adjacency_sets(g)
    out = []
    for u in g.vertices:
        for v in g.neighbors(u):
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w > v:
                    out.append((u, v, w))
    return sorted(out)


def four_cycles(g: PlaneGraph):
    """All 4-cycles, each as a cyclic vertex tuple (a, b, c, d); deterministic."""
    adj = adjacency_sets(g)
    seen = set()
    out = []
    for a in g.vertices:
        for c in g.vertices:
            if c <= a:
                continue
            common = sorted(adj[a] & adj[c])
            for i, b in enumerate(common):
                for d in common[i + 1:]:
                    key = frozenset((norm_edge(a, b), norm_edge(b, c),
                                     norm_edge(c, d), norm_edge(d, a)))
                    if key not in seen:
                        seen.add(key)
                        out.append((a, b, c, d))
    return sorted(out)
