"""Constructive list coloring of plane and near-planar graphs.

The package splits into combinatorial-map plumbing (`planegraph`,
`nearplanar`, `ioformat`), hypothesis checkers (`validity`), the recursive
coloring engines (`solver`), an exact reference solver (`oracle`) and the
generator/experiment/rendering harness (`generate`, `experiment`,
`render`, `cli`).
"""

from .checkcolor import coloring_ok, first_violation
from .errors import (FormatError, HypothesisViolation, InfeasibleSpec,
                     LimitExceeded, PlanecolorError, SolverPanic,
                     StructuralError)
from .experiment import RunReport, run_experiment
from .generate import FAMILIES, GenSpec, gen_instance
from .ioformat import parse_instance, serialize_instance
from .nearplanar import CrossingRecord, Drawing, planarize, un_planarize
from .oracle import (LIMIT, UNCOLORABLE, BatchReport, Outcome, is_choosable,
                     solve_exact, solve_exact_stats, verify_theorem_batch)
from .planegraph import PlaneGraph, Walk, outer_boundary
from .render import render_svg
from .solver import (ReducedInstance, XSelection, color_basic,
                     color_one_crossing, color_thomassen,
                     reduce_by_partial_coloring, select_x)
from .validity import (THEOREM_IDS, Instance, SpecialSubgraph, ValidityReport,
                       check_basic, check_distant, check_hypotheses,
                       check_main0, check_thomassen, check_valid,
                       special_subgraphs)

__version__ = "0.1.0"

__all__ = [
    "BatchReport", "CrossingRecord", "Drawing", "FAMILIES", "FormatError",
    "GenSpec", "HypothesisViolation", "InfeasibleSpec", "Instance", "LIMIT",
    "LimitExceeded", "Outcome", "PlaneGraph", "PlanecolorError",
    "ReducedInstance", "RunReport", "SolverPanic", "SpecialSubgraph",
    "StructuralError", "THEOREM_IDS", "UNCOLORABLE", "ValidityReport",
    "Walk", "XSelection", "check_basic", "check_distant", "check_hypotheses",
    "check_main0", "check_thomassen", "check_valid", "color_basic",
    "color_one_crossing", "color_thomassen", "coloring_ok",
    "first_violation", "gen_instance", "is_choosable", "outer_boundary",
    "parse_instance", "planarize", "reduce_by_partial_coloring",
    "render_svg", "run_experiment", "select_x", "serialize_instance",
    "solve_exact", "solve_exact_stats", "special_subgraphs",
    "un_planarize", "verify_theorem_batch",
]
