"""SVG rendering of drawings, with an optional coloring painted in.

Layout is the classic barycentric one: the outer cycle is pinned to a
regular polygon and every interior vertex sits at the average of its
neighbors, which a small linear solve delivers exactly.  Graphs without a
simple outer cycle (or whose barycentric layout collapses) fall back to a
seeded spring layout, so the output is deterministic either way.
"""

import math

import numpy as np

from .errors import StructuralError
from .planegraph import adjacency_sets
from .validity import Instance

_SIZE = 640.0
_MARGIN = 50.0
_VERTEX_R = 11.0

# fills for color ids; cycled when the palette is larger
_PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
            "#edc948", "#76b7b2", "#ff9da7", "#9c755f", "#bab0ac")


def layout_positions(g, seed=0):
    """Deterministic positions for every vertex of a PlaneGraph."""
    verts = g.vertices
    if len(verts) == 1:
        return {verts[0]: (_SIZE / 2, _SIZE / 2)}
    try:
        cyc = g.outer_cycle().vertices
    except StructuralError:
        cyc = None
    if cyc is not None and len(cyc) >= 3:
        pos = _tutte(g, cyc)
        if pos is not None:
            return pos
    return _spring(g, seed)


def _tutte(g, cyc):
    adj = adjacency_sets(g)
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    cx = cy = _SIZE / 2
    radius = _SIZE / 2 - _MARGIN
    fixed = {}
    for k, v in enumerate(cyc):
        ang = 2 * math.pi * k / len(cyc) - math.pi / 2
        fixed[v] = (cx + radius * math.cos(ang), cy + radius * math.sin(ang))

    n = len(verts)
    a = np.zeros((n, n))
    bx = np.zeros(n)
    by = np.zeros(n)
    for v in verts:
        i = index[v]
        if v in fixed:
            a[i, i] = 1.0
            bx[i], by[i] = fixed[v]
            continue
        deg = len(adj[v])
        a[i, i] = deg
        for w in adj[v]:
            if w in fixed:
                bx[i] += fixed[w][0]
                by[i] += fixed[w][1]
            else:
                a[i, index[w]] = -1.0
    try:
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
    except np.linalg.LinAlgError:
        return None
    pos = {v: (float(xs[index[v]]), float(ys[index[v]])) for v in verts}
    # a cut vertex can pull a whole hanging piece onto one point; detect the
    # collapse and let the caller fall back
    pts = sorted(pos.values())
    for p, q in zip(pts, pts[1:]):
        if abs(p[0] - q[0]) + abs(p[1] - q[1]) < 1e-6:
            return None
    return pos


def _spring(g, seed):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    raw = nx.spring_layout(h, seed=seed)
    xs = [p[0] for p in raw.values()]
    ys = [p[1] for p in raw.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = (_SIZE - 2 * _MARGIN) / span
    return {v: (_MARGIN + (raw[v][0] - min(xs)) * scale,
                _MARGIN + (raw[v][1] - min(ys)) * scale)
            for v in g.vertices}


def _fill(color):
    return _PALETTE[color % len(_PALETTE)]


def render_svg(inst: Instance, coloring=None, seed=0) -> str:
    """Render an instance (and optionally its coloring) as SVG 1.1 text.

    Crossed edge pairs are drawn through their intersection point and get a
    small marker there.  Vertices show their id, their fill is the assigned
    color (white when uncolored), and the list size is annotated beside
    each vertex.
    """
    d = inst.drawing
    g = d.base
    pos = layout_positions(g, seed=seed)
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               'width="%d" height="%d" viewBox="0 0 %d %d">'
               % (int(_SIZE), int(_SIZE), int(_SIZE), int(_SIZE)))
    out.append('<rect width="100%" height="100%" fill="white"/>')

    path_edges = {tuple(sorted(e)) for e in inst.p.edges()}
    for u, v in g.edges():
        x1, y1 = pos[u]
        x2, y2 = pos[v]
        on_path = tuple(sorted((u, v))) in path_edges
        style = 'stroke="#d62728" stroke-width="3.5"' if on_path else \
                'stroke="#555555" stroke-width="1.5"'
        out.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" %s/>'
                   % (x1, y1, x2, y2, style))

    for rec in d.crossings:
        x, y = pos[rec.dummy]
        out.append('<g class="crossing">'
                   '<circle cx="%.1f" cy="%.1f" r="6" fill="white" '
                   'stroke="#d62728" stroke-width="1.5"/>'
                   '<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" '
                   'stroke="#d62728" stroke-width="1.5"/>'
                   '<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" '
                   'stroke="#d62728" stroke-width="1.5"/></g>'
                   % (x, y, x - 4, y - 4, x + 4, y + 4,
                      x - 4, y + 4, x + 4, y - 4))

    for v in sorted(d.original_vertices()):
        x, y = pos[v]
        if coloring is not None and v in coloring:
            fill = _fill(coloring[v])
            text_fill = "white"
        else:
            fill = "white"
            text_fill = "#333333"
        out.append('<circle cx="%.1f" cy="%.1f" r="%.1f" fill="%s" '
                   'stroke="#333333" stroke-width="1.5"/>'
                   % (x, y, _VERTEX_R, fill))
        out.append('<text x="%.1f" y="%.1f" font-size="11" '
                   'text-anchor="middle" dominant-baseline="central" '
                   'fill="%s">%d</text>' % (x, y, text_fill, v))
        if v in inst.lists:
            out.append('<text x="%.1f" y="%.1f" font-size="9" '
                       'text-anchor="middle" fill="#888888">%d</text>'
                       % (x + _VERTEX_R + 5, y - _VERTEX_R - 2,
                          len(inst.lists[v])))
    out.append('</svg>')
    return "\n".join(out)
