"""Generator specs, SVG rendering, experiment runs, and the CLI."""

import json
import random

import pytest
from click.testing import CliRunner

from planecolor.checkcolor import coloring_ok
from planecolor.cli import main
from planecolor.errors import InfeasibleSpec
from planecolor.experiment import RUN_IDS, RunReport, run_experiment
from planecolor.generate import (FAMILIES, GenSpec, gen_instance, grid_graph,
                                 plant_crossings)
from planecolor.ioformat import parse_instance, serialize_instance
from planecolor.nearplanar import Drawing
from planecolor.planegraph import PlaneGraph, Walk
from planecolor.render import layout_positions, render_svg
from planecolor.solver import color_basic
from planecolor.validity import Instance, check_hypotheses, check_thomassen


# ---------------------------------------------------------------------------
# generator specs


def test_gen_is_deterministic_per_spec():
    for family, kw in [("TRIANGULATION", {"n": 18}),
                       ("GRID", {"rows": 3, "cols": 5}),
                       ("WHEEL_STACK", {"rings": 2, "spokes": 6}),
                       ("NEAR_PLANAR", {"rows": 3, "cols": 18}),
                       ("THM5_NSET", {"rows": 1, "cols": 13})]:
        spec = GenSpec(family, seed=11, **kw)
        a, b = gen_instance(spec), gen_instance(spec)
        assert a == b
        assert serialize_instance(a) == serialize_instance(b)
        other = gen_instance(GenSpec(family, seed=12, **kw))
        assert serialize_instance(other) != serialize_instance(a)


def test_gen_default_profiles_fit_their_theorem():
    pairs = [(GenSpec("TRIANGULATION", seed=2, n=15), "thomassen"),
             (GenSpec("GRID", seed=2, rows=3, cols=5), "basic"),
             (GenSpec("WHEEL_STACK", seed=2, rings=2, spokes=5), "basic"),
             (GenSpec("NEAR_PLANAR", seed=2, rows=3, cols=18), "one-crossing"),
             (GenSpec("THM5_NSET", seed=2, rows=1, cols=13), "far-nset")]
    for spec, which in pairs:
        inst = gen_instance(spec)
        if which == "thomassen":
            rep = check_thomassen(inst.drawing.base,
                                  tuple(inst.p.vertices), inst.lists)
        else:
            rep = check_hypotheses(inst, which)
        assert rep.ok(), (spec.family, rep.messages())


def test_gen_refusals():
    with pytest.raises(InfeasibleSpec, match="family"):
        gen_instance(GenSpec("MOEBIUS", seed=0))
    with pytest.raises(InfeasibleSpec, match="palette"):
        gen_instance(GenSpec("GRID", seed=0, palette=4))
    with pytest.raises(InfeasibleSpec, match="profile"):
        gen_instance(GenSpec("NEAR_PLANAR", seed=0, rows=3, cols=18,
                             profile="path"))
    with pytest.raises(InfeasibleSpec, match="far-apart"):
        gen_instance(GenSpec("NEAR_PLANAR", seed=0, rows=3, cols=18,
                             crossings=2, distance=10))
    with pytest.raises(InfeasibleSpec, match="cannot fit"):
        gen_instance(GenSpec("NEAR_PLANAR", seed=0, rows=2, cols=6,
                             crossings=2, distance=15))
    with pytest.raises(InfeasibleSpec, match="far-apart"):
        gen_instance(GenSpec("THM5_NSET", seed=0, rows=1, cols=13,
                             distance=9))


def test_gen_near_planar_separation_contract():
    # without a requested distance crossings may sit close together — the
    # at-most-two-crossings theorem has no separation hypothesis
    close = gen_instance(GenSpec("NEAR_PLANAR", seed=5, rows=3, cols=4,
                                 crossings=2))
    assert len(close.drawing.crossings) == 2
    assert check_hypotheses(close, "two-crossings").ok()
    # an explicit distance is planted and then verified on the drawing
    far = gen_instance(GenSpec("NEAR_PLANAR", seed=5, rows=2, cols=40,
                               crossings=2, distance=15))
    subs = far.drawing.crossing_subgraphs()
    assert far.drawing.distance(subs[0], subs[1]) >= 15


def test_gen_far_set_instances():
    inst = gen_instance(GenSpec("THM5_NSET", seed=4, rows=1, cols=14,
                                far_vertices=2))
    assert len(inst.n_set) == 2
    for v in inst.drawing.original_vertices():
        want = 4 if v in inst.n_set else 5
        assert len(inst.lists[v]) == want


# ---------------------------------------------------------------------------
# rendering


def triangle_instance():
    g = PlaneGraph({0: (1, 2), 1: (2, 0), 2: (0, 1)}, outer_edge=(1, 0))
    return Instance(Drawing(g, ()), p=Walk((0, 1)),
                    lists={0: {1}, 1: {2}, 2: {1, 2, 3}})


def test_layout_covers_all_vertices():
    g = grid_graph(3, 4)
    pos = layout_positions(g)
    assert set(pos) == set(g.vertices)
    for x, y in pos.values():
        assert 0 <= x <= 640 and 0 <= y <= 640
    assert pos == layout_positions(g)


def test_svg_structure():
    svg = render_svg(triangle_instance())
    assert svg.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in svg
    assert svg.count("<circle") == 3
    assert svg.count("<line") == 3
    assert 'stroke="#d62728" stroke-width="3.5"' in svg   # the path edge
    assert svg == render_svg(triangle_instance())


def test_svg_marks_crossings():
    d = plant_crossings(3, 4, [(1, 1)])
    svg = render_svg(Instance(d, lists={v: range(5)
                                        for v in d.original_vertices()}))
    assert svg.count('class="crossing"') == 1


def test_svg_paints_colorings():
    inst = triangle_instance()
    uncolored = render_svg(inst)
    assert 'fill="white" stroke="#333333"' in uncolored
    phi = color_basic(inst.drawing.base, inst.p, inst.lists)
    colored = render_svg(inst, coloring=phi)
    assert 'fill="white" stroke="#333333"' not in colored


# ---------------------------------------------------------------------------
# experiment runs


def test_run_experiment_over_every_run_id():
    batches = {
        "basic": [GenSpec("GRID", seed=i, rows=3, cols=4) for i in range(3)],
        "thomassen": [GenSpec("TRIANGULATION", seed=i, n=12)
                      for i in range(3)],
        "one-crossing": [GenSpec("NEAR_PLANAR", seed=i, rows=3, cols=18)
                         for i in range(3)],
        "two-crossings": [GenSpec("NEAR_PLANAR", seed=i, rows=2, cols=40,
                                  crossings=2) for i in range(2)],
        "distant": [GenSpec("THM5_NSET", seed=i, rows=1, cols=12)
                    for i in range(2)],
        "far-nset": [GenSpec("THM5_NSET", seed=i, rows=1, cols=12)
                     for i in range(2)],
    }
    assert set(batches) == set(RUN_IDS)
    for which, batch in batches.items():
        rep = run_experiment(batch, which)
        assert rep.ok(), (which, rep.falsifications)
        assert rep.summary()["solved"] == len(batch)
        assert sum(rep.counts().values()) == len(rep.results)


def test_run_experiment_skips_hypothesis_failures():
    good = gen_instance(GenSpec("GRID", seed=1, rows=3, cols=4))
    bad = Instance(good.drawing, p=good.p,
                   lists={v: {1, 2} for v in good.lists})
    rep = run_experiment([good, bad], "basic")
    assert [r.outcome for r in rep.results] == ["SOLVED", "SKIPPED"]
    assert rep.results[1].detail.startswith("hypotheses:")
    assert rep.ok()      # hypothesis skips are not falsifications


def test_run_experiment_infeasible_spec_is_a_plain_skip():
    rep = run_experiment([GenSpec("GRID", seed=0, palette=3)], "basic")
    [r] = rep.results
    assert r.outcome == "SKIPPED"
    assert r.detail.startswith("InfeasibleSpec:")
    assert rep.ok()


def test_run_experiment_flags_solver_trouble_as_falsification():
    # forcing the crossing solver onto planar instances is a harness bug;
    # the run must surface it loudly, with a reproducer
    batch = [GenSpec("GRID", seed=0, rows=3, cols=4)]
    rep = run_experiment(batch, "basic", solver="one-crossing")
    assert not rep.ok()
    [(idx, reason, text)] = rep.falsifications
    assert idx == 0 and "HypothesisViolation" in reason
    assert text.startswith("GRAPH")


def test_run_experiment_limit_is_not_a_falsification():
    batch = [GenSpec("THM5_NSET", seed=0, rows=1, cols=12)]
    rep = run_experiment(batch, "far-nset", limit_nodes=1)
    assert rep.summary()["limited"] == 1
    assert rep.ok()


def test_run_experiment_rejects_unknown_ids():
    with pytest.raises(InfeasibleSpec, match="unknown theorem id"):
        run_experiment([], "strongest")
    with pytest.raises(InfeasibleSpec, match="no constructive solver"):
        run_experiment([], "distant", solver="constructive")


def test_report_files(tmp_path):
    batch = [GenSpec("GRID", seed=i, rows=3, cols=4) for i in range(4)]
    rep = run_experiment(batch, "basic", out_dir=str(tmp_path))
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["summary"]["solved"] == 4
    assert len(data["instances"]) == 4
    csv_lines = (tmp_path / "instances.csv").read_text().strip().splitlines()
    assert csv_lines[0].startswith("index,outcome,n")
    assert len(csv_lines) == 5
    for name in ("outcomes.png", "solve-times.png"):
        assert (tmp_path / name).stat().st_size > 0
    assert not list(tmp_path.glob("falsify-*.txt"))

    bad = run_experiment([GenSpec("GRID", seed=0, rows=3, cols=4)], "basic",
                         solver="one-crossing", out_dir=str(tmp_path))
    assert not bad.ok()
    dump = (tmp_path / "falsify-0000.txt").read_text()
    assert dump.startswith("# HypothesisViolation")
    assert "GRAPH" in dump


# ---------------------------------------------------------------------------
# command line


runner = CliRunner()


def test_cli_check_golden(tmp_path):
    res = runner.invoke(main, ["check", "tests/golden/triangle.txt"])
    assert res.exit_code == 0
    assert "ok" in res.output
    assert "interior-list-size: pass" in res.output

    res = runner.invoke(main, ["--format", "json",
                               "check", "tests/golden/one-crossing.txt",
                               "--theorem", "one-crossing"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["ok"] and payload["conditions"]["crossing-count"] == "pass"


def test_cli_check_failure_exit_code(tmp_path):
    res = runner.invoke(main, ["check", "tests/golden/one-crossing.txt",
                               "--theorem", "basic"])
    assert res.exit_code == 2
    assert "hypothesis violation" in res.output


def test_cli_solve_routes_by_instance_shape():
    for path, mode in [("tests/golden/triangle.txt", "basic"),
                       ("tests/golden/triangulation-edge.txt", "basic"),
                       ("tests/golden/one-crossing.txt", "one-crossing")]:
        res = runner.invoke(main, ["solve", path])
        assert res.exit_code == 0, res.output
        assert "solved (%s)" % mode in res.output


def test_cli_solve_json_coloring_is_proper():
    res = runner.invoke(main, ["--format", "json",
                               "solve", "tests/golden/grid-path.txt"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    inst = parse_instance(open("tests/golden/grid-path.txt").read())
    phi = {int(v): c for v, c in payload["coloring"].items()}
    assert coloring_ok(inst.drawing.original_edges(), inst.lists, phi)


def test_cli_solve_hypothesis_violation_exit_2(tmp_path):
    g = PlaneGraph({0: (1, 2), 1: (2, 0), 2: (0, 1)}, outer_edge=(1, 0))
    inst = Instance(Drawing(g, ()), p=Walk((0, 1)),
                    lists={0: {1}, 1: {2}, 2: {1, 2}})
    f = tmp_path / "thin.txt"
    f.write_text(serialize_instance(inst))
    res = runner.invoke(main, ["solve", str(f), "--solver", "basic"])
    assert res.exit_code == 2
    assert "hypothesis violation" in res.stderr


def test_cli_oracle_uncolorable_and_limit(tmp_path):
    g = PlaneGraph({0: (1, 2), 1: (2, 0), 2: (0, 1)}, outer_edge=(1, 0))
    inst = Instance(Drawing(g, ()), lists={0: {1}, 1: {1}, 2: {1}})
    f = tmp_path / "stuck.txt"
    f.write_text(serialize_instance(inst))
    res = runner.invoke(main, ["oracle", str(f)])
    assert res.exit_code == 1
    assert "uncolorable" in res.output

    res = runner.invoke(main, ["--limit-nodes", "1",
                               "oracle", "tests/golden/grid-path.txt"])
    assert res.exit_code == 1
    assert "undecided" in res.output


def test_cli_gen_round_trip(tmp_path):
    out = tmp_path / "inst.txt"
    res = runner.invoke(main, ["--seed", "9", "gen", "--family", "GRID",
                               "--rows", "3", "--cols", "5",
                               "--out", str(out)])
    assert res.exit_code == 0
    inst = parse_instance(out.read_text())
    assert serialize_instance(inst) == out.read_text()

    again = tmp_path / "again.txt"
    runner.invoke(main, ["--seed", "9", "gen", "--family", "GRID",
                         "--rows", "3", "--cols", "5", "--out", str(again)])
    assert again.read_text() == out.read_text()


def test_cli_gen_refusal_exit_3():
    res = runner.invoke(main, ["gen", "--family", "NEAR_PLANAR",
                               "--rows", "2", "--cols", "6",
                               "--crossings", "2", "--distance", "15"])
    assert res.exit_code == 3
    assert "cannot generate" in res.stderr
    assert runner.invoke(main, ["gen"]).exit_code == 3   # missing --family


def test_cli_parse_error_exit_3(tmp_path):
    f = tmp_path / "garbage.txt"
    f.write_text("GRAPH x y\n")
    res = runner.invoke(main, ["solve", str(f)])
    assert res.exit_code == 3
    assert "parse error" in res.stderr


def test_cli_verify_writes_reports(tmp_path):
    res = runner.invoke(main, ["--seed", "3", "verify", "--family", "GRID",
                               "--rows", "3", "--cols", "4",
                               "--count", "4", "--theorem", "basic",
                               "--report-dir", str(tmp_path)])
    assert res.exit_code == 0, res.output
    assert "solved: 4" in res.output
    assert (tmp_path / "report.json").exists()
    assert (tmp_path / "outcomes.png").exists()


def test_cli_render(tmp_path):
    out = tmp_path / "pic.svg"
    res = runner.invoke(main, ["render", "tests/golden/wheel-path.txt",
                               "--out", str(out), "--colored"])
    assert res.exit_code == 0
    svg = out.read_text()
    assert svg.startswith('<?xml')
    assert 'version="1.1"' in svg
