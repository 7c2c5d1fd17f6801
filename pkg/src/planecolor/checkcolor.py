"""The one checker every solver answer passes through.

Kept deliberately tiny so it can be audited at a glance; everything else in
the package may be wrong, but a coloring accepted here is proper and in-list.
"""


def coloring_ok(edges, lists, coloring) -> bool:
    """True iff the coloring picks from every vertex's list and no edge clashes."""
    for v, allowed in lists.items():
        if coloring.get(v) not in allowed:
            return False
    for u, v in edges:
        if coloring.get(u) == coloring.get(v):
            return False
    return True


def first_violation(edges, lists, coloring):
    """Like coloring_ok, but says what broke (for error messages)."""
    for v in sorted(lists):
        if coloring.get(v) not in lists[v]:
            return "vertex %r got %r, not in its list" % (v, coloring.get(v))
    for u, v in edges:
        if coloring.get(u) == coloring.get(v):
            return "edge (%r, %r) is monochromatic (%r)" % (u, v, coloring.get(u))
    return None
