"""Exchange format: canonical form, round trips, error reporting."""

import glob
import os

import pytest

from planecolor.errors import FormatError, StructuralError
from planecolor.ioformat import parse_instance, serialize_instance

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden_files():
    return sorted(glob.glob(os.path.join(GOLDEN, "*.txt")))


def test_corpus_is_nonempty():
    assert len(golden_files()) >= 8


@pytest.mark.parametrize("path", golden_files(),
                         ids=[os.path.basename(p) for p in golden_files()])
def test_round_trip(path):
    text = open(path).read()
    inst = parse_instance(text)
    canon = serialize_instance(inst)
    # serialize . parse is idempotent, parse . serialize is the identity
    assert parse_instance(canon) == inst
    assert serialize_instance(parse_instance(canon)) == canon
    if os.path.basename(path) != "messy.txt":
        assert canon == text


def test_messy_file_normalizes_to_triangle():
    messy = parse_instance(open(os.path.join(GOLDEN, "messy.txt")).read())
    triangle = open(os.path.join(GOLDEN, "triangle.txt")).read()
    assert serialize_instance(messy) == triangle
    assert messy == parse_instance(triangle)


def test_list_deduplication():
    inst = parse_instance(
        "GRAPH 2\nROT 0: 1\nROT 1: 0\nOUTER 0 1\nLIST 0: 1 1 2\nLIST 1: 3\n")
    assert inst.lists[0] == {1, 2}


def test_parse_error_carries_line_number():
    with pytest.raises(FormatError) as exc:
        parse_instance("GRAPH 1\nROT 0:\nOUTER x 0\n")
    assert exc.value.line == 3
    assert "line 3" in str(exc.value)


def test_unknown_directive():
    with pytest.raises(FormatError, match="unknown directive"):
        parse_instance("GRAPH 0\nFROB 1 2\n")


def test_graph_line_must_come_first():
    with pytest.raises(FormatError, match="must start with a GRAPH"):
        parse_instance("ROT 0: 1\n")


def test_rot_count_mismatch():
    with pytest.raises(FormatError, match="1 ROT lines"):
        parse_instance("GRAPH 2\nROT 0: 1\n")


def test_duplicate_sections_rejected():
    base = "GRAPH 2\nROT 0: 1\nROT 1: 0\n"
    for extra in ("PATH 0\nPATH 1\n", "OUTER 0 1\nOUTER 1 0\n",
                  "LIST 0: 1\nLIST 0: 2\n"):
        with pytest.raises(FormatError, match="duplicate"):
            parse_instance(base + extra)


def test_rotation_asymmetry_is_semantic_error():
    with pytest.raises(StructuralError):
        parse_instance("GRAPH 2\nROT 0: 1\nROT 1:\n")


def test_crossed_path_edge_rejected():
    # 2x2 grid drawn with crossing diagonals; the path runs through one
    text = ("GRAPH 4\n"
            "ROT 0: 1 3 2\nROT 1: 3 2 0\nROT 2: 3 0 1\nROT 3: 2 0 1\n"
            "OUTER 0 1\nCROSS 0 3 1 2\n"
            "LIST 0: 1\nLIST 1: 2\nLIST 2: 1 2 3\nLIST 3: 1 2 3\n"
            "PATH 0 3\n")
    with pytest.raises(StructuralError,
                       match="path may not be crossed"):
        parse_instance(text)


def test_path_off_outer_face_rejected():
    # path vertex 4 is the interior hub of a wheel
    text = ("GRAPH 5\n"
            "ROT 0: 1 4 3\nROT 1: 2 4 0\nROT 2: 3 4 1\nROT 3: 0 4 2\n"
            "ROT 4: 0 1 2 3\nOUTER 0 3\n"
            + "".join("LIST %d: 1 2 3\n" % v for v in range(5))
            + "PATH 4\n")
    with pytest.raises(StructuralError):
        parse_instance(text)


def test_crossing_sections_round_trip():
    text = open(os.path.join(GOLDEN, "two-crossings.txt")).read()
    inst = parse_instance(text)
    assert len(inst.drawing.crossings) == 2
    assert serialize_instance(inst).count("CROSS") == 2
