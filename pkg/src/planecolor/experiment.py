"""Batch driver: generate instances, check hypotheses, solve, verify, report.

A run takes a batch of GenSpecs (or ready-made Instances), a theorem id and
a solver choice, and produces a RunReport.  Per-instance failures of any
kind are captured in the report — one broken instance never aborts the
batch.  Every coloring counted as SOLVED has been re-checked by the
independent verifier first.  An exact-solver UNCOLORABLE verdict or a
constructive-solver failure on a hypothesis-passing instance lands in the
falsification list, which across all shipped configurations must stay
empty.
"""

import csv
import json
import os
import time
from collections import Counter
from dataclasses import dataclass, field

from .checkcolor import coloring_ok, first_violation
from .errors import InfeasibleSpec, PlanecolorError
from .generate import GenSpec, gen_instance
from .ioformat import serialize_instance
from .oracle import (DEFAULT_NODE_LIMIT, LIMIT, UNCOLORABLE, Outcome,
                     adjacency_of, solve_exact_stats)
from .solver import color_basic, color_one_crossing, color_thomassen
from .validity import THEOREM_IDS, check_hypotheses, check_thomassen

#: run_experiment's `which` vocabulary: the theorem ids plus the classic
#: precolored-edge result, which has its own constructive solver
RUN_IDS = THEOREM_IDS + ("thomassen",)

_CONSTRUCTIVE = {"basic", "thomassen", "one-crossing"}


@dataclass
class InstanceResult:
    index: int
    outcome: str
    n: int = 0
    seconds: float = 0.0
    solver: str = ""
    detail: str = ""

    def row(self):
        return {"index": self.index, "outcome": self.outcome, "n": self.n,
                "seconds": round(self.seconds, 6), "solver": self.solver,
                "detail": self.detail}


@dataclass
class RunReport:
    which: str
    solver: str
    results: list = field(default_factory=list)
    # (index, reason, serialized instance) — empirically this stays empty
    falsifications: list = field(default_factory=list)

    def counts(self):
        return Counter(r.outcome for r in self.results)

    def ok(self):
        return not self.falsifications

    def summary(self):
        c = self.counts()
        return {"which": self.which, "solver": self.solver,
                "instances": len(self.results),
                "solved": c.get(Outcome.SOLVED.value, 0),
                "uncolorable": c.get(Outcome.UNCOLORABLE.value, 0),
                "skipped": c.get(Outcome.SKIPPED.value, 0),
                "limited": c.get(Outcome.LIMIT.value, 0),
                "falsifications": len(self.falsifications),
                "seconds": round(sum(r.seconds for r in self.results), 3)}

    def as_dict(self):
        return {"instances": [r.row() for r in self.results],
                "summary": self.summary()}


def _pick_solver(which, solver):
    if solver == "auto":
        return which if which in _CONSTRUCTIVE else "oracle"
    if solver == "constructive":
        if which not in _CONSTRUCTIVE:
            raise InfeasibleSpec(
                "no constructive solver covers %r; use the oracle" % which)
        return which
    if solver in _CONSTRUCTIVE or solver == "oracle":
        return solver
    raise InfeasibleSpec("unknown solver choice %r" % solver)


def _check(inst, which):
    if which == "thomassen":
        # planar drawing with a precolored outer edge
        if inst.drawing.crossings:
            from .validity import Failure, ValidityReport
            return ValidityReport(
                ("planar-input",),
                (Failure("planar-input", (len(inst.drawing.crossings),),
                         "expected a crossing-free drawing"),))
        return check_thomassen(inst.drawing.base, tuple(inst.p.vertices),
                               inst.lists)
    return check_hypotheses(inst, which)


def _solve(inst, mode, limit_nodes):
    """Returns (outcome, coloring-or-None, detail)."""
    d = inst.drawing
    if mode == "basic":
        return (Outcome.SOLVED,
                color_basic(d.base, list(inst.p.vertices), inst.lists), "")
    if mode == "thomassen":
        return (Outcome.SOLVED,
                color_thomassen(d.base, inst.lists,
                                tuple(inst.p.vertices)), "")
    if mode == "one-crossing":
        return Outcome.SOLVED, color_one_crossing(d, inst.lists), ""
    result, stats = solve_exact_stats(adjacency_of(d), inst.lists,
                                      limit_nodes=limit_nodes)
    if result is UNCOLORABLE:
        return Outcome.UNCOLORABLE, None, "exact search exhausted"
    if result is LIMIT:
        return Outcome.LIMIT, None, "hit the %d-node search limit" % limit_nodes
    return Outcome.SOLVED, result, ""


def run_experiment(batch, which, solver="auto",
                   limit_nodes=DEFAULT_NODE_LIMIT, out_dir=None):
    """Run a generate/check/solve/verify pass over the whole batch.

    `batch` items may be GenSpecs or Instances.  With `out_dir` set, the
    report is also written to disk: report.json, instances.csv, a couple of
    summary figures, and one reproducer file per falsification.
    """
    if which not in RUN_IDS:
        raise InfeasibleSpec("unknown theorem id %r; expected one of %s"
                             % (which, ", ".join(RUN_IDS)))
    mode = _pick_solver(which, solver)
    report = RunReport(which=which, solver=mode)

    for idx, item in enumerate(batch):
        t0 = time.perf_counter()
        res = InstanceResult(index=idx, outcome=Outcome.SKIPPED.value,
                             solver=mode)
        try:
            inst = gen_instance(item) if isinstance(item, GenSpec) else item
            res.n = inst.drawing.n_original
            vr = _check(inst, which)
            if not vr.ok():
                res.detail = "hypotheses: " + "; ".join(vr.messages())
            else:
                outcome, coloring, detail = _solve(inst, mode, limit_nodes)
                res.outcome = outcome.value
                res.detail = detail
                if outcome is Outcome.SOLVED:
                    bad = first_violation(inst.drawing.original_edges(),
                                          inst.lists, coloring)
                    if bad is not None:
                        raise PlanecolorError(
                            "solver output failed verification: %s" % bad)
                elif outcome is Outcome.UNCOLORABLE:
                    report.falsifications.append(
                        (idx, "exact search found no coloring",
                         serialize_instance(inst)))
        except PlanecolorError as exc:
            res.outcome = Outcome.SKIPPED.value
            res.detail = "%s: %s" % (type(exc).__name__, exc)
            if not isinstance(exc, InfeasibleSpec) and res.n:
                # solver/verifier trouble on a generated instance is
                # falsification-grade, not routine skipping
                try:
                    text = serialize_instance(inst)
                except PlanecolorError:
                    text = ""
                report.falsifications.append((idx, res.detail, text))
        res.seconds = time.perf_counter() - t0
        report.results.append(res)

    if out_dir is not None:
        write_report_files(report, out_dir)
    return report


def write_report_files(report, out_dir):
    """Write report.json, instances.csv, PNG figures and reproducers."""
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "report.json"), "w") as fh:
        json.dump(report.as_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(out_dir, "instances.csv"), "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["index", "outcome", "n",
                                           "seconds", "solver", "detail"])
        w.writeheader()
        for r in report.results:
            row = r.row()
            row["detail"] = row["detail"][:200]
            w.writerow(row)
    for idx, reason, text in report.falsifications:
        path = os.path.join(out_dir, "falsify-%04d.txt" % idx)
        with open(path, "w") as fh:
            fh.write("# %s\n" % reason)
            fh.write(text)
    _write_figures(report, out_dir)


def _write_figures(report, out_dir):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    counts = report.counts()
    order = [o.value for o in Outcome]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(order, [counts.get(o, 0) for o in order],
           color=["#59a14f", "#e15759", "#bab0ac", "#f28e2b"])
    ax.set_ylabel("instances")
    ax.set_title("%s / %s" % (report.which, report.solver))
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "outcomes.png"), dpi=120)
    plt.close(fig)

    secs = [r.seconds for r in report.results
            if r.outcome == Outcome.SOLVED.value]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    if secs:
        ax.hist(secs, bins=min(30, max(5, len(secs) // 4)), color="#4e79a7")
    ax.set_xlabel("seconds per solved instance")
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "solve-times.png"), dpi=120)
    plt.close(fig)
