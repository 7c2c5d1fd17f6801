"""Command-line front end.

Exit codes: 0 solved / all checks pass, 1 uncolorable or failed run,
2 hypothesis violation, 3 usage or parse error.
"""

import json
import sys

import click

from .errors import (FormatError, HypothesisViolation, PlanecolorError,
                     SolverPanic, StructuralError)
from .experiment import RUN_IDS, run_experiment
from .generate import FAMILIES, PROFILES, GenSpec, gen_instance
from .ioformat import parse_instance, serialize_instance
from .oracle import (DEFAULT_NODE_LIMIT, LIMIT, UNCOLORABLE, adjacency_of,
                     solve_exact_stats)
from .render import render_svg
from .solver import color_basic, color_one_crossing, color_thomassen
from .validity import check_hypotheses, check_thomassen

click.UsageError.exit_code = 3   # 2 is taken by hypothesis violations

_SOLVERS = ("auto", "basic", "thomassen", "one-crossing", "oracle")


@click.group()
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for anything randomized.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True, help="Output format.")
@click.option("--limit-nodes", type=int, default=DEFAULT_NODE_LIMIT,
              show_default=True, help="Exact-search node budget.")
@click.pass_context
def main(ctx, seed, fmt, limit_nodes):
    """Constructive list coloring of plane and near-planar graphs."""
    ctx.obj = {"seed": seed, "fmt": fmt, "limit_nodes": limit_nodes}


def _read_instance(path):
    try:
        with click.open_file(path) as fh:
            return parse_instance(fh.read())
    except FormatError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    except StructuralError as exc:
        click.echo("bad instance: %s" % exc, err=True)
        sys.exit(3)


def _emit(ctx, payload, text_lines):
    if ctx.obj["fmt"] == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


@main.command()
@click.argument("instance_file")
@click.option("--theorem", "which", type=click.Choice(RUN_IDS),
              default="basic", show_default=True,
              help="Which hypothesis set to check.")
@click.pass_context
def check(ctx, instance_file, which):
    """Report which hypotheses an instance satisfies."""
    inst = _read_instance(instance_file)
    if which == "thomassen":
        rep = check_thomassen(inst.drawing.base, tuple(inst.p.vertices),
                              inst.lists)
    else:
        rep = check_hypotheses(inst, which)
    status = rep.status()
    payload = {"theorem": which, "ok": rep.ok(), "conditions": status,
               "failures": rep.messages()}
    lines = ["%s: %s" % (c, s) for c, s in status.items()]
    lines += ["  ! %s" % m for m in rep.messages()]
    lines.append("ok" if rep.ok() else "hypothesis violation")
    _emit(ctx, payload, lines)
    sys.exit(0 if rep.ok() else 2)


def _route(inst):
    """Pick the constructive solver an instance naturally fits, else oracle."""
    d = inst.drawing
    if len(d.crossings) == 1 and not inst.p.vertices:
        return "one-crossing"
    if d.crossings:
        return "oracle"
    if inst.p.vertices:
        if check_hypotheses(inst, "basic").ok():
            return "basic"
        if len(inst.p.vertices) == 2 and check_thomassen(
                d.base, tuple(inst.p.vertices), inst.lists).ok():
            return "thomassen"
        return "basic"   # let it raise the real hypothesis report
    return "oracle"


@main.command()
@click.argument("instance_file")
@click.option("--solver", type=click.Choice(_SOLVERS), default="auto",
              show_default=True)
@click.pass_context
def solve(ctx, instance_file, solver):
    """Color an instance constructively (falling back to the oracle)."""
    inst = _read_instance(instance_file)
    mode = _route(inst) if solver == "auto" else solver
    try:
        if mode == "basic":
            coloring = color_basic(inst.drawing.base,
                                   list(inst.p.vertices), inst.lists)
        elif mode == "thomassen":
            coloring = color_thomassen(inst.drawing.base, inst.lists,
                                       tuple(inst.p.vertices))
        elif mode == "one-crossing":
            coloring = color_one_crossing(inst.drawing, inst.lists)
        else:
            return ctx.invoke(oracle, instance_file=instance_file)
    except HypothesisViolation as exc:
        click.echo("hypothesis violation: %s" % exc, err=True)
        sys.exit(2)
    except SolverPanic as exc:
        click.echo("solver failure (this is a bug): %s" % exc, err=True)
        sys.exit(1)
    _emit(ctx, {"solver": mode,
                "coloring": {str(v): c for v, c in sorted(coloring.items())}},
          ["%d: %d" % (v, c) for v, c in sorted(coloring.items())]
          + ["solved (%s)" % mode])
    sys.exit(0)


@main.command()
@click.argument("instance_file")
@click.pass_context
def oracle(ctx, instance_file):
    """Exact search, independent of the constructive solvers."""
    inst = _read_instance(instance_file)
    result, stats = solve_exact_stats(adjacency_of(inst.drawing), inst.lists,
                                      limit_nodes=ctx.obj["limit_nodes"])
    if result is UNCOLORABLE:
        _emit(ctx, {"outcome": "UNCOLORABLE", "nodes": stats.nodes},
              ["uncolorable (%d nodes searched)" % stats.nodes])
        sys.exit(1)
    if result is LIMIT:
        _emit(ctx, {"outcome": "LIMIT", "nodes": stats.nodes},
              ["undecided: node limit %d reached" % ctx.obj["limit_nodes"]])
        sys.exit(1)
    _emit(ctx, {"outcome": "SOLVED", "nodes": stats.nodes,
                "coloring": {str(v): c for v, c in sorted(result.items())}},
          ["%d: %d" % (v, c) for v, c in sorted(result.items())]
          + ["solved (oracle, %d nodes)" % stats.nodes])
    sys.exit(0)


def _family_options(fn):
    opts = [
        click.option("--family", type=click.Choice(FAMILIES), required=True),
        click.option("--n", type=int, default=16, show_default=True,
                     help="TRIANGULATION size."),
        click.option("--rows", type=int, default=4, show_default=True),
        click.option("--cols", type=int, default=5, show_default=True),
        click.option("--rings", type=int, default=3, show_default=True),
        click.option("--spokes", type=int, default=6, show_default=True),
        click.option("--crossings", type=int, default=1, show_default=True),
        click.option("--far-vertices", type=int, default=2,
                     show_default=True),
        click.option("--distance", type=int, default=None,
                     help="Planted separation override."),
        click.option("--profile", type=click.Choice(PROFILES), default=None),
        click.option("--palette", type=int, default=8, show_default=True),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _spec_from(ctx, seed, kwargs):
    return GenSpec(seed=seed if seed is not None else ctx.obj["seed"],
                   **kwargs)


@main.command()
@_family_options
@click.option("--out", type=click.Path(dir_okay=False), default="-",
              help="Where to write the instance file.")
@click.pass_context
def gen(ctx, out, **kwargs):
    """Generate one instance and write it in the exchange format."""
    try:
        inst = gen_instance(_spec_from(ctx, None, kwargs))
    except PlanecolorError as exc:
        click.echo("cannot generate: %s" % exc, err=True)
        sys.exit(3)
    with click.open_file(out, "w") as fh:
        fh.write(serialize_instance(inst))
    if out != "-":
        click.echo("wrote %s" % out)


@main.command()
@_family_options
@click.option("--count", type=int, default=20, show_default=True,
              help="Batch size.")
@click.option("--theorem", "which", type=click.Choice(RUN_IDS),
              required=True)
@click.option("--solver", type=click.Choice(_SOLVERS + ("constructive",)),
              default="auto", show_default=True)
@click.option("--report-dir", type=click.Path(file_okay=False), default=None,
              help="Also write report.json, instances.csv and figures here.")
@click.pass_context
def verify(ctx, count, which, solver, report_dir, **kwargs):
    """Generate a batch and verify the claimed theorem on every instance."""
    base = ctx.obj["seed"]
    batch = [_spec_from(ctx, base + i, kwargs) for i in range(count)]
    try:
        rep = run_experiment(batch, which, solver=solver,
                             limit_nodes=ctx.obj["limit_nodes"],
                             out_dir=report_dir)
    except PlanecolorError as exc:
        click.echo("cannot run: %s" % exc, err=True)
        sys.exit(3)
    summary = rep.summary()
    _emit(ctx, rep.as_dict() if ctx.obj["fmt"] == "json" else summary,
          ["%s: %s" % (k, v) for k, v in summary.items()])
    if rep.falsifications:
        click.echo("FALSIFICATIONS FOUND — see the report files", err=True)
        sys.exit(1)
    sys.exit(0 if summary["solved"] + summary["skipped"]
             + summary["limited"] == summary["instances"] else 1)


@main.command()
@click.argument("instance_file")
@click.option("--out", type=click.Path(dir_okay=False), default="-",
              help="Output SVG path.")
@click.option("--colored/--no-colored", default=False,
              help="Solve first and paint the coloring.")
@click.pass_context
def render(ctx, instance_file, out, colored):
    """Draw an instance (optionally with a computed coloring) as SVG."""
    inst = _read_instance(instance_file)
    coloring = None
    if colored:
        mode = _route(inst)
        try:
            if mode == "basic":
                coloring = color_basic(inst.drawing.base,
                                       list(inst.p.vertices), inst.lists)
            elif mode == "thomassen":
                coloring = color_thomassen(inst.drawing.base, inst.lists,
                                           tuple(inst.p.vertices))
            elif mode == "one-crossing":
                coloring = color_one_crossing(inst.drawing, inst.lists)
            else:
                result, _ = solve_exact_stats(
                    adjacency_of(inst.drawing), inst.lists,
                    limit_nodes=ctx.obj["limit_nodes"])
                if isinstance(result, dict):
                    coloring = result
                else:
                    click.echo("no coloring to draw", err=True)
                    sys.exit(1)
        except HypothesisViolation as exc:
            click.echo("hypothesis violation: %s" % exc, err=True)
            sys.exit(2)
    svg = render_svg(inst, coloring, seed=ctx.obj["seed"])
    with click.open_file(out, "w") as fh:
        fh.write(svg)
    if out != "-":
        click.echo("wrote %s" % out)


if __name__ == "__main__":
    main()
