"""Reading and writing instances in the line-based exchange format.

One file describes one instance.  Lines are UTF-8; ``#`` starts a comment;
blank lines are ignored.  Directives:

    GRAPH <n>              header; n = number of (original) vertices
    ROT <v>: <w1> <w2> ... neighbors of v in counterclockwise order
    OUTER <v> <w>          the outer face, named by one directed edge on it
    CROSS <a> <b> <c> <d>  edge ab crosses edge cd (repeatable)
    LIST <v>: <c1> ...     color list of v (duplicates dropped)
    PATH <v0> <v1> ...     the precolored path along the outer face
    NSET <v> ...           the far-apart 4-list vertices
    MSET <u> <v>           one marked far-apart edge (repeatable)

``parse_instance`` followed by ``serialize_instance`` is the canonical form
(sorted lists, normalized whitespace); ``serialize_instance`` followed by
``parse_instance`` reproduces the instance exactly.
"""

from .errors import FormatError
from .nearplanar import planarize, un_planarize
from .planegraph import Walk, norm_edge
from .validity import Instance

_KEYWORDS = ("GRAPH", "ROT", "OUTER", "CROSS", "LIST", "PATH", "NSET", "MSET")


def _ints(tokens, lineno):
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise FormatError("expected an integer, got %r" % t, line=lineno)
    return out


def _labeled(parts, lineno, directive):
    """Split 'ROT 3: 1 2' / 'LIST 3: 5 6' into (3, [1, 2] / [5, 6])."""
    if len(parts) < 2 or not parts[1].endswith(":"):
        raise FormatError("%s needs the form '%s <v>: ...'"
                          % (directive, directive), line=lineno)
    (v,) = _ints([parts[1][:-1]], lineno)
    return v, _ints(parts[2:], lineno)


def parse_instance(text: str) -> Instance:
    n = None
    rotations = {}
    outer_edge = None
    crossings = []
    lists = {}
    path = ()
    n_set = ()
    m_set = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key not in _KEYWORDS:
            raise FormatError("unknown directive %r" % key, line=lineno)
        if n is None and key != "GRAPH":
            raise FormatError("the file must start with a GRAPH line",
                              line=lineno)

        if key == "GRAPH":
            if n is not None:
                raise FormatError("duplicate GRAPH line", line=lineno)
            vals = _ints(parts[1:], lineno)
            if len(vals) != 1 or vals[0] < 0:
                raise FormatError("GRAPH needs one nonnegative count",
                                  line=lineno)
            n = vals[0]
        elif key == "ROT":
            v, neigh = _labeled(parts, lineno, "ROT")
            if v in rotations:
                raise FormatError("duplicate ROT line for vertex %d" % v,
                                  line=lineno)
            rotations[v] = tuple(neigh)
        elif key == "OUTER":
            if outer_edge is not None:
                raise FormatError("duplicate OUTER line", line=lineno)
            vals = _ints(parts[1:], lineno)
            if len(vals) != 2:
                raise FormatError("OUTER needs exactly two vertices",
                                  line=lineno)
            outer_edge = tuple(vals)
        elif key == "CROSS":
            vals = _ints(parts[1:], lineno)
            if len(vals) != 4:
                raise FormatError("CROSS needs exactly four vertices",
                                  line=lineno)
            crossings.append(tuple(vals))
        elif key == "LIST":
            v, colors = _labeled(parts, lineno, "LIST")
            if v in lists:
                raise FormatError("duplicate LIST line for vertex %d" % v,
                                  line=lineno)
            lists[v] = frozenset(colors)
        elif key == "PATH":
            if path:
                raise FormatError("duplicate PATH line", line=lineno)
            path = tuple(_ints(parts[1:], lineno))
            if not path:
                raise FormatError("PATH needs at least one vertex",
                                  line=lineno)
        elif key == "NSET":
            if n_set:
                raise FormatError("duplicate NSET line", line=lineno)
            n_set = tuple(_ints(parts[1:], lineno))
        elif key == "MSET":
            vals = _ints(parts[1:], lineno)
            if len(vals) != 2:
                raise FormatError("MSET needs exactly two vertices",
                                  line=lineno)
            m_set.append(tuple(vals))

    if n is None:
        raise FormatError("missing GRAPH line")
    if len(rotations) != n:
        raise FormatError("GRAPH declares %d vertices but %d ROT lines given"
                          % (n, len(rotations)))

    drawing = planarize(rotations, crossings, outer_edge=outer_edge)
    return Instance(drawing, Walk(path), frozenset(n_set),
                    frozenset(norm_edge(*e) for e in m_set), lists)


def serialize_parts(rotations, outer_edge=None, lists=None, path=(),
                    n_set=(), m_set=(), crossings=()) -> str:
    """Writer for raw parts; performs no validation.

    This is also the panic-dump path, so it must cope with half-broken
    input (missing lists, dangling references) without complaint.
    """
    out = ["GRAPH %d" % len(rotations)]
    for v in sorted(rotations):
        out.append("ROT %d: %s" % (v, " ".join(str(w) for w in rotations[v])))
    if outer_edge is not None:
        out.append("OUTER %d %d" % tuple(outer_edge))
    for quad in crossings:
        out.append("CROSS %d %d %d %d" % tuple(quad))
    for v in sorted(lists or ()):
        out.append("LIST %d: %s" % (v, " ".join(str(c)
                                                for c in sorted(lists[v]))))
    if path:
        out.append("PATH %s" % " ".join(str(v) for v in path))
    if n_set:
        out.append("NSET %s" % " ".join(str(v) for v in sorted(n_set)))
    for u, v in sorted(norm_edge(*e) for e in m_set):
        out.append("MSET %d %d" % (u, v))
    return "\n".join(out) + "\n"


def serialize_instance(inst: Instance) -> str:
    """Canonical text form; parse_instance(serialize_instance(i)) == i."""
    rotations, quads, outer_edge = un_planarize(inst.drawing)
    return serialize_parts(rotations, outer_edge=outer_edge, lists=inst.lists,
                           path=inst.p.vertices, n_set=inst.n_set,
                           m_set=inst.m_set, crossings=quads)
