"""Exact list-coloring search: the ground truth the fast solvers answer to.

Backtracking with forward checking and minimum-remaining-values ordering.
Everything is deterministic: ties in variable order break by vertex id,
colors are tried ascending, so identical inputs give identical colorings
and identical node counts.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .checkcolor import coloring_ok
from .errors import LimitExceeded, StructuralError

DEFAULT_NODE_LIMIT = 10**7


class Outcome(str, Enum):
    SOLVED = "SOLVED"
    UNCOLORABLE = "UNCOLORABLE"
    LIMIT = "LIMIT"
    SKIPPED = "SKIPPED"


#: Sentinel results of solve_exact.  LIMIT ("search aborted") is deliberately
#: a different value from UNCOLORABLE ("proved infeasible").
UNCOLORABLE = Outcome.UNCOLORABLE
LIMIT = Outcome.LIMIT


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    seconds: float = 0.0
    result: Outcome = None

    def absorb(self, other):
        self.nodes += other.nodes
        self.backtracks += other.backtracks
        self.seconds += other.seconds


def adjacency_of(g):
    """Normalize any supported graph shape to {vertex: sorted neighbor tuple}.

    Accepts a Drawing (its original graph, dummies excluded), a PlaneGraph,
    an adjacency dict, or a bare iterable of edges.
    """
    if hasattr(g, "original_adjacency"):
        return g.original_adjacency()
    if hasattr(g, "rotation"):
        return {v: tuple(sorted(g.neighbors(v))) for v in g.vertices}
    if isinstance(g, dict):
        adj = {v: set(ws) for v, ws in g.items()}
        for v, ws in list(adj.items()):
            for w in ws:
                adj.setdefault(w, set()).add(v)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}
    adj = {}
    for u, v in g:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return {v: tuple(sorted(ws)) for v, ws in adj.items()}


class _LimitHit(Exception):
    pass


def _search(adj, live, assign, stats, limit):
    stats.nodes += 1
    if stats.nodes > limit:
        raise _LimitHit
    best = None
    for v in live:
        if v in assign:
            continue
        if best is None or len(live[v]) < len(live[best]):
            best = v
    if best is None:
        return True
    for c in sorted(live[best]):
        assign[best] = c
        trimmed = []
        for w in adj[best]:
            if w not in assign and c in live[w]:
                live[w].discard(c)
                trimmed.append(w)
        if all(live[w] for w in trimmed) and _search(adj, live, assign, stats, limit):
            return True
        for w in trimmed:
            live[w].add(c)
        del assign[best]
    stats.backtracks += 1
    return False


def solve_exact_stats(g, lists, limit_nodes=DEFAULT_NODE_LIMIT):
    """(coloring | UNCOLORABLE | LIMIT, SearchStats)."""
    adj = adjacency_of(g)
    for v in adj:
        if v not in lists:
            raise StructuralError("vertex %r has no color list" % (v,))
    for v in lists:
        if v not in adj:
            adj[v] = ()
    live = {v: set(lists[v]) for v in sorted(adj)}
    stats = SearchStats()
    assign = {}
    t0 = time.perf_counter()
    try:
        found = _search(adj, live, assign, stats, limit_nodes)
    except _LimitHit:
        stats.seconds = time.perf_counter() - t0
        stats.result = Outcome.LIMIT
        return LIMIT, stats
    stats.seconds = time.perf_counter() - t0
    if found:
        stats.result = Outcome.SOLVED
        return dict(assign), stats
    stats.result = Outcome.UNCOLORABLE
    return UNCOLORABLE, stats


def solve_exact(g, lists, limit_nodes=DEFAULT_NODE_LIMIT):
    """A proper in-list coloring if one exists, else UNCOLORABLE.

    Complete and sound up to the node limit; hitting the limit returns the
    distinct LIMIT sentinel, never UNCOLORABLE.
    """
    result, _ = solve_exact_stats(g, lists, limit_nodes)
    return result


def canonical_assignments(vertices, k, palette_size):
    """All size-k list assignments up to color permutation.

    Scanning vertices in order, a canonical assignment introduces new colors
    contiguously: the fresh colors of each list extend the used range by
    1..k.  Reuse-only lists come first for each vertex, so the all-identical
    assignment {1..k} everywhere is generated first.
    """
    vs = list(vertices)

    def rec(i, used_max, acc):
        if i == len(vs):
            yield dict(acc)
            return
        for t in range(0, k + 1):
            if used_max + t > palette_size:
                break
            fresh = tuple(range(used_max + 1, used_max + t + 1))
            for old in combinations(range(1, used_max + 1), k - t):
                acc[vs[i]] = frozenset(old + fresh)
                yield from rec(i + 1, used_max + t, acc)
        acc.pop(vs[i], None)

    yield from rec(0, 0, {})


def is_choosable(g, k, palette_size=None, *, max_n=10, max_palette=None,
                 limit_nodes=DEFAULT_NODE_LIMIT):
    """Decide k-choosability by enumerating list assignments.

    Returns (True, None) or (False, witness_assignment).  The enumeration is
    exponential, so by default it refuses graphs with more than 10 vertices
    or palettes larger than 2k; pass max_n / max_palette to override.
    """
    adj = adjacency_of(g)
    n = len(adj)
    if palette_size is None:
        palette_size = 2 * k
    if max_palette is None:
        max_palette = 2 * k
    if n > max_n:
        raise LimitExceeded(
            "choosability enumeration refused: n=%d exceeds the limit %d "
            "(pass max_n to override)" % (n, max_n))
    if palette_size > max_palette:
        raise LimitExceeded(
            "choosability enumeration refused: palette %d exceeds the limit %d "
            "(pass max_palette to override)" % (palette_size, max_palette))
    for lists in canonical_assignments(sorted(adj), k, palette_size):
        result = solve_exact(adj, lists, limit_nodes)
        if result is UNCOLORABLE:
            return False, lists
        if result is LIMIT:
            raise LimitExceeded("node limit hit while deciding choosability")
    return True, None


@dataclass
class BatchReport:
    """Outcome tally of running the oracle over a stream of instances."""

    which: str
    total: int = 0
    solved: int = 0
    uncolorable: list = field(default_factory=list)  # (index, serialized instance)
    skipped: list = field(default_factory=list)      # (index, reason)
    limited: list = field(default_factory=list)      # indices that hit the node limit
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def falsifications(self):
        """UNCOLORABLE results on hypothesis-passing instances: must stay empty."""
        return self.uncolorable

    def ok(self) -> bool:
        return not self.uncolorable

    def summary(self) -> str:
        return ("%s: %d instances, %d solved, %d uncolorable, %d skipped, "
                "%d limited, %d nodes" %
                (self.which, self.total, self.solved, len(self.uncolorable),
                 len(self.skipped), len(self.limited), self.stats.nodes))


def _solve_payload(payload):
    idx, adj, lists, limit_nodes = payload
    result, stats = solve_exact_stats(adj, lists, limit_nodes)
    colored = result if isinstance(result, dict) else None
    return idx, stats.result, colored, (stats.nodes, stats.backtracks, stats.seconds)


def verify_theorem_batch(instances, which, *, limit_nodes=DEFAULT_NODE_LIMIT,
                         workers=1):
    """Run the exact solver over instances claimed to satisfy one theorem.

    Instances failing the theorem's hypothesis check are skipped and flagged,
    never counted as passes.  Any UNCOLORABLE result on a hypothesis-passing
    instance is recorded verbatim (it would falsify the theorem).  With
    workers > 1 the solves run in a process pool; the merge is keyed by
    instance index, so the report does not depend on completion order.
    """
    from .validity import check_hypotheses  # late import: validity sits above us

    report = BatchReport(which=which)
    jobs = []
    kept = {}
    for idx, inst in enumerate(instances):
        report.total += 1
        vr = check_hypotheses(inst, which)
        if not vr.ok():
            report.skipped.append((idx, "; ".join(vr.messages())))
            continue
        adj = adjacency_of(inst.drawing)
        jobs.append((idx, adj, {v: set(cs) for v, cs in inst.lists.items()},
                     limit_nodes))
        kept[idx] = (inst, adj)

    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_payload, jobs))
    else:
        results = [_solve_payload(j) for j in jobs]

    for idx, outcome, coloring, (nodes, backtracks, seconds) in sorted(results):
        report.stats.nodes += nodes
        report.stats.backtracks += backtracks
        report.stats.seconds += seconds
        if outcome is Outcome.SOLVED:
            inst, adj = kept[idx]
            edges = [(u, w) for u, ws in adj.items() for w in ws if u < w]
            if not coloring_ok(edges, inst.lists, coloring):
                raise StructuralError(
                    "oracle produced an invalid coloring on instance %d" % idx)
            report.solved += 1
        elif outcome is Outcome.LIMIT:
            report.limited.append(idx)
        else:
            from .ioformat import serialize_instance
            inst, _ = kept[idx]
            report.uncolorable.append((idx, serialize_instance(inst)))
    return report
