"""Seeded instance generators for the five hypothesis families.

Every generator is a pure function of its GenSpec: the same spec yields the
same instance, byte for byte after serialization.  Structure is built first
(a plane graph, possibly with planted crossings), then lists are assigned
according to the spec's profile so that the matching hypothesis checker
passes by construction.
"""

import random
from dataclasses import dataclass

from .errors import InfeasibleSpec
from .nearplanar import Drawing, planarize
from .planegraph import PlaneGraph, Walk, adjacency_sets
from .validity import Instance, check_basic, as_lists

FAMILIES = ("TRIANGULATION", "GRID", "WHEEL_STACK", "NEAR_PLANAR", "THM5_NSET")

#: list profiles: sizes per vertex class
#:   five     -- every vertex gets a 5-list
#:   edge     -- two adjacent outer vertices precolored, outer 3..5, interior 5
#:   path     -- precolored outer path (1-3 vertices), outer 3..5, interior 5
#:   far-set  -- 4-lists on the far-apart set, 5-lists elsewhere
PROFILES = ("five", "edge", "path", "far-set")

_DEFAULT_PROFILE = {
    "TRIANGULATION": "edge",
    "GRID": "path",
    "WHEEL_STACK": "path",
    "NEAR_PLANAR": "five",
    "THM5_NSET": "far-set",
}

# minimum planted separations that keep the far-apart hypotheses true:
# two crossings 4+4+7, crossing/far-vertex 4+2+7, two far vertices 2+2+7
CROSSING_SEPARATION = 15
FAR_SET_SEPARATION = 11


@dataclass(frozen=True)
class GenSpec:
    """Everything a generator run depends on.

    Fields are family-specific: `n` sizes a TRIANGULATION, `rows`/`cols` a
    GRID, NEAR_PLANAR or THM5_NSET, `rings`/`spokes` a WHEEL_STACK.
    `distance` overrides the planted separation (NEAR_PLANAR, THM5_NSET);
    leaving it None means "whatever the hypothesis needs" for THM5_NSET and
    "unconstrained" for NEAR_PLANAR (the small-crossing-number theorems have
    no distance condition).
    """

    family: str
    seed: int = 0
    n: int = 16
    rows: int = 4
    cols: int = 5
    rings: int = 3
    spokes: int = 6
    crossings: int = 1
    far_vertices: int = 2
    distance: int = None
    profile: str = None
    palette: int = 8

    def effective_profile(self):
        return self.profile or _DEFAULT_PROFILE[self.family]


def gen_instance(spec: GenSpec) -> Instance:
    """Build the instance a GenSpec describes; deterministic in spec.seed."""
    if spec.family not in FAMILIES:
        raise InfeasibleSpec("unknown family %r; expected one of %s"
                             % (spec.family, ", ".join(FAMILIES)))
    profile = spec.effective_profile()
    if profile not in PROFILES:
        raise InfeasibleSpec("unknown list profile %r; expected one of %s"
                             % (profile, ", ".join(PROFILES)))
    if spec.palette < 5:
        raise InfeasibleSpec(
            "a palette of %d colors cannot fill size-5 lists" % spec.palette)
    rng = random.Random(spec.seed)

    if spec.family == "NEAR_PLANAR":
        if profile != "five":
            raise InfeasibleSpec(
                "NEAR_PLANAR instances need all-5 lists (profile 'five')")
        return _near_planar(spec, rng)
    if spec.family == "THM5_NSET":
        if profile != "far-set":
            raise InfeasibleSpec(
                "THM5_NSET instances need the 'far-set' list profile")
        return _far_set(spec, rng)

    # the three planar structure families
    if spec.family == "TRIANGULATION":
        if spec.n < 3:
            raise InfeasibleSpec("a triangulation needs at least 3 vertices")
        g = triangulation(spec.n, rng)
    elif spec.family == "GRID":
        if spec.rows < 2 or spec.cols < 2:
            raise InfeasibleSpec("a grid needs at least 2 rows and 2 columns")
        g = grid_graph(spec.rows, spec.cols)
    else:
        if spec.rings < 1 or spec.spokes < 3:
            raise InfeasibleSpec(
                "a wheel stack needs >= 1 ring and >= 3 spokes")
        g = wheel_stack(spec.rings, spec.spokes)

    if profile == "five":
        lists = _five_lists(sorted(g.vertices), spec.palette, rng)
        return Instance(Drawing(g, ()), lists=lists)
    if profile == "edge":
        path, lists = _edge_profile(g, spec.palette, rng)
    else:
        path, lists = _path_profile(g, spec.palette, rng)
    return Instance(Drawing(g, ()), p=Walk(path), lists=lists)


# --------------------------------------------------------------------------
# structure builders (also used directly by tests and the CLI)


def triangulation(n, rng) -> PlaneGraph:
    """Random plane triangulation: repeated vertex insertion into a random
    bounded face of a seed triangle."""
    rot = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    outer_dir = (1, 0)
    for v in range(3, n):
        g = PlaneGraph({a: tuple(b) for a, b in rot.items()})
        o = g.face_index_of(outer_dir)
        faces = [f for f in g.faces() if f.index != o]
        _insert_into_face(rot, rng.choice(faces).vertices, v)
    return PlaneGraph({a: tuple(b) for a, b in rot.items()},
                      outer_edge=outer_dir)


def _insert_into_face(rot, face_vertices, v):
    # new vertex adjacent to the whole face walk, slotted between each
    # boundary vertex's two walk neighbors
    fv = list(face_vertices)
    rot[v] = list(fv)
    for i, wi in enumerate(fv):
        succ = fv[(i + 1) % len(fv)]
        j = rot[wi].index(succ)
        rot[wi].insert(j + 1, v)


def grid_rotations(rows, cols):
    rot = {}
    for i in range(rows):
        for j in range(cols):
            order = []
            if j + 1 < cols:
                order.append(i * cols + j + 1)        # east
            if i + 1 < rows:
                order.append((i + 1) * cols + j)      # north
            if j - 1 >= 0:
                order.append(i * cols + j - 1)        # west
            if i - 1 >= 0:
                order.append((i - 1) * cols + j)      # south
            rot[i * cols + j] = order
    return rot


def grid_graph(rows, cols) -> PlaneGraph:
    rot = {v: tuple(ws) for v, ws in grid_rotations(rows, cols).items()}
    g = PlaneGraph(rot)
    outer = max(g.faces(), key=len).index
    return PlaneGraph(rot, outer_face=outer)


def wheel_stack(rings, spokes) -> PlaneGraph:
    """Concentric cycles joined by spokes, with a hub inside the innermost."""
    def vid(i, j):
        return i * spokes + j % spokes

    hub = rings * spokes
    rot = {hub: tuple(range(spokes))}
    for i in range(rings):
        for j in range(spokes):
            order = []
            if i + 1 < rings:
                order.append(vid(i + 1, j))           # outward
            order.append(vid(i, j + 1))               # around, one way
            order.append(vid(i - 1, j) if i > 0 else hub)
            order.append(vid(i, j - 1))               # around, the other
            rot[vid(i, j)] = tuple(order)
    base = vid(rings - 1, 0)
    return PlaneGraph(rot, outer_edge=(base + 1, base))


def plant_crossings(rows, cols, cells) -> Drawing:
    """Grid drawing with both diagonals crossing inside each chosen cell.

    `cells` are (row, col) of the cell's south-west corner.  The diagonal
    edges are added to the rotation system in their geometric slots, then
    each pair is replaced by a crossing record.
    """
    rot = grid_rotations(rows, cols)

    def ins_after(v, anchor, new):
        rot[v].insert(rot[v].index(anchor) + 1, new)

    quads = []
    for (i, j) in cells:
        if not (0 <= i < rows - 1 and 0 <= j < cols - 1):
            raise InfeasibleSpec("cell (%d, %d) is outside a %dx%d grid"
                                 % (i, j, rows, cols))
        p = i * cols + j
        q = p + 1
        r = p + cols + 1
        s = p + cols
        ins_after(p, q, r)    # at the SW corner, diagonal between east, north
        ins_after(r, s, p)
        ins_after(q, r, s)
        ins_after(s, p, q)
        quads.append((p, r, q, s))

    flat = {v: tuple(ws) for v, ws in rot.items()}
    probe = PlaneGraph(planarize(flat, quads).base.rotations_dict())
    outer = max(probe.faces(), key=len).index
    return planarize(flat, quads, outer_face=outer)


def _near_planar(spec, rng):
    rows, cols, k = spec.rows, spec.cols, spec.crossings
    if rows < 2 or cols < 2:
        raise InfeasibleSpec("a grid needs at least 2 rows and 2 columns")
    if k < 1:
        raise InfeasibleSpec("NEAR_PLANAR needs at least one crossing")
    need = spec.distance
    if need is not None and need < CROSSING_SEPARATION:
        raise InfeasibleSpec(
            "crossings %d apart violate the far-apart hypothesis "
            "(needs >= %d)" % (need, CROSSING_SEPARATION))

    cells = [(i, j) for i in range(rows - 1) for j in range(cols - 1)]
    rng.shuffle(cells)
    chosen = _pick_spread(cells, k, _cell_gap, need)
    if chosen is None:
        raise InfeasibleSpec(
            "cannot fit %d crossings%s in a %dx%d grid"
            % (k, "" if need is None else " pairwise %d apart" % need,
               rows, cols))

    drawing = plant_crossings(rows, cols, chosen)
    if need is not None:
        subs = drawing.crossing_subgraphs()
        for a in range(len(subs)):
            for b in range(a + 1, len(subs)):
                if drawing.distance(subs[a], subs[b]) < need:
                    raise InfeasibleSpec(
                        "planted crossings ended up closer than %d" % need)
    lists = _five_lists(sorted(drawing.original_vertices()), spec.palette, rng)
    return Instance(drawing, lists=lists)


def _cell_gap(c1, c2):
    # graph distance between the two cells' corner sets: the grid realizes
    # the Manhattan bound exactly
    best = None
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    gap = abs(c1[0] + a - c2[0] - c) + abs(c1[1] + b - c2[1] - d)
                    best = gap if best is None else min(best, gap)
    return best


def _pick_spread(candidates, k, gap, need):
    """First k-subset of `candidates` (in order) that is pairwise >= need
    apart, or None.  Backtracking, because a greedy pick can strand itself
    in the middle of the grid."""
    chosen = []

    def extend(start):
        if len(chosen) == k:
            return True
        for idx in range(start, len(candidates)):
            cand = candidates[idx]
            if need is None or all(gap(cand, c) >= need for c in chosen):
                chosen.append(cand)
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    return chosen if extend(0) else None


def _far_set(spec, rng):
    rows, cols, k = spec.rows, spec.cols, spec.far_vertices
    if rows < 1 or cols < 1 or (rows == 1 and cols == 1):
        raise InfeasibleSpec("the grid is empty or a single vertex")
    if k < 1:
        raise InfeasibleSpec("THM5_NSET needs at least one far-set vertex")
    need = FAR_SET_SEPARATION if spec.distance is None else spec.distance
    if need < FAR_SET_SEPARATION:
        raise InfeasibleSpec(
            "far-set vertices %d apart violate the far-apart hypothesis "
            "(needs >= %d)" % (need, FAR_SET_SEPARATION))

    verts = list(range(rows * cols))
    rng.shuffle(verts)

    def manhattan(v, w):
        return (abs(v // cols - w // cols) + abs(v % cols - w % cols))

    chosen = _pick_spread(verts, k, manhattan, need)
    if chosen is None:
        raise InfeasibleSpec(
            "cannot place %d vertices pairwise %d apart in a %dx%d grid"
            % (k, need, rows, cols))

    if rows == 1 or cols == 1:
        rot = {v: tuple(ws) for v, ws in grid_rotations(rows, cols).items()}
        g = PlaneGraph(rot)   # a path: its single face is the outer one
    else:
        g = grid_graph(rows, cols)
    n_set = frozenset(chosen)
    lists = {}
    for v in sorted(g.vertices):
        size = 4 if v in n_set else 5
        lists[v] = frozenset(rng.sample(range(spec.palette), size))
    return Instance(Drawing(g, ()), n_set=n_set, lists=lists)


# --------------------------------------------------------------------------
# list profiles


def _five_lists(vertices, palette, rng):
    return {v: frozenset(rng.sample(range(palette), 5)) for v in vertices}


def _edge_profile(g, palette, rng):
    cyc = g.outer_cycle().vertices
    i = rng.randrange(len(cyc))
    x, y = cyc[i], cyc[(i + 1) % len(cyc)]
    cx = rng.randrange(palette)
    cy = rng.choice([c for c in range(palette) if c != cx])
    outer = set(cyc)
    L = {x: frozenset([cx]), y: frozenset([cy])}
    for v in sorted(g.vertices):
        if v in L:
            continue
        size = rng.choice([3, 3, 4, 5]) if v in outer else 5
        L[v] = frozenset(rng.sample(range(palette), size))
    return (x, y), L


def _path_profile(g, palette, rng, tries=60):
    """Precolored outer path with mixed 3/4/5 boundary lists.

    Random draws can break the no-adjacent-3-lists or forced-neighborhood
    conditions, so the profile re-draws until the hypothesis checker is
    happy; the loop is still a pure function of the rng state.
    """
    cyc = g.outer_cycle().vertices
    n_c = len(cyc)
    adj = adjacency_sets(g)
    outer = set(cyc)
    for _ in range(tries):
        plen = rng.choice([1, 2, 2, 3])
        start = rng.randrange(n_c)
        path = [cyc[(start + t) % n_c] for t in range(min(plen, n_c))]
        if len(set(path)) != len(path):
            continue
        L = {}
        ok = True
        for v in path:
            free = [c for c in range(palette)
                    if all(L.get(w) != frozenset([c])
                           for w in adj[v] if w in L)]
            if not free:
                ok = False
                break
            L[v] = frozenset([rng.choice(free)])
        if not ok:
            continue
        three = set()
        for v in cyc:
            if v in L:
                continue
            size = rng.choice([3, 3, 3, 4, 5])
            if size == 3 and adj[v] & three:
                size = rng.choice([4, 5])
            if size == 3:
                three.add(v)
            L[v] = frozenset(rng.sample(range(palette), size))
        for v in sorted(g.vertices):
            if v not in L:
                L[v] = frozenset(rng.sample(range(palette), 5))
        if len(path) == 3:
            union = L[path[0]] | L[path[1]] | L[path[2]]
            for x in sorted(adj[path[0]] & adj[path[1]] & adj[path[2]]):
                if L[x] == union and x not in path:
                    L[x] = frozenset(rng.sample(range(palette), len(L[x])))
        if check_basic(g, Walk(tuple(path)),
                       as_lists(L, g.vertices)).ok():
            return tuple(path), L
    raise InfeasibleSpec(
        "could not draw hypothesis-passing lists for this graph; "
        "boundary too tight for the requested path profile")
