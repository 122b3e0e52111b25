import json
import subprocess
import sys
from pathlib import Path

import pytest

from christoffel import ValidationError, make_normal, window_edges
from christoffel.cli import main
from christoffel.io import graph_from_json, graph_to_dot, graph_to_json
from christoffel.render import RenderSpec, render, render_christoffel_word
from make_golden import STDOUT, SVG, TEXT, capture

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted({**SVG, **TEXT}))
def test_golden_files(name, tmp_path):
    argv = {**SVG, **TEXT}[name]
    target = tmp_path / name
    assert main(argv + ["-o", str(target)]) == 0
    assert target.read_bytes() == (GOLDEN / name).read_bytes()


@pytest.mark.parametrize("name", sorted(STDOUT))
def test_golden_stdout(name):
    code, out = capture(STDOUT[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_word(capsys):
    assert run(capsys, "word", "-p", "8", "-q", "5") == (0, "aabaababaabab\n", "")


def test_lineword(capsys):
    assert run(capsys, "lineword", "-a", "2,5", "-x", "0,0", "-i", "2", "-n", "7")[1] == "abbabbb\n"


def test_flipcheck(capsys):
    assert run(capsys, "flipcheck", "-a", "2,5") == (0, "t=(-2,1) PASS\n", "")
    assert run(capsys, "flipcheck", "-a", "2,3,5", "-t=1,0,0")[:2] == (1, "t=(1,0,0) FAIL\n")
    assert run(capsys, "flipcheck", "-a", "15,11,10", "-w", "18", "-t=0,1,-1")[1] == "t=(0,1,-1) PASS\n"


def test_pirillo_fig_lattice(capsys):
    code, out, err = run(capsys, "pirillo", "-K", "0,4,1;-2,0,3;1,1,1")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert "t=(0,-1,1) christoffel a=(3,7,8) omega=18" in lines
    assert "t=(0,1,-1) complement-of-reversal b=(3,7,8) omega=18 (width graph a=(15,11,10))" in lines


def test_pirillo_adds_the_diagonal(capsys):
    code, out, err = run(capsys, "pirillo", "-K", "0,4,1;-2,0,3")
    assert code == 0
    assert "adding (1,1,1)" in err
    assert out == run(capsys, "pirillo", "-K", "0,4,1;-2,0,3;1,1,1")[1]


def test_kernel(capsys):
    code, out, _ = run(capsys, "kernel", "-a", "2,3,5")
    assert code == 0
    assert out.splitlines()[1] == "index: 10"
    assert out.rstrip().endswith("(equal)")


def test_tile_and_surface(capsys):
    assert run(capsys, "tile", "-a", "2,3,5", "--point", "3/5,1/5,0")[1] == "base=(1,1,1) omitted=3 spanning=(1,2)\n"
    assert run(capsys, "surface", "-a", "2,3,5", "--point=-1,-1,-1")[1] == "in_surface=False\nf=(0,0,0)\nt=-1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["kernel", "-a", "2,4"],
        ["word", "-p", "2", "-q", "4"],
        ["flipcheck", "-a", "2,x"],
        ["tile", "-a", "2,3,5", "--point", "0,0,0"],
        ["graph", "-a", "2,5", "--window", "0:0,0:2"],
        ["render", "--target", "h"],
        ["pirillo", "-K", ";"],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ") and err.count("\n") == 1


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "graph", "-a", "3,4,6", "--format", "dot")[1]
    assert first == run(capsys, "graph", "-a", "3,4,6", "--format", "dot")[1]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "christoffel", "word", "-p", "3", "-q", "2"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == "aabab\n"


# -- io / render -------------------------------------------------------------


@pytest.mark.parametrize("box", [None, ((-2, 3), (-1, 4), (0, 2))])
def test_json_round_trip(box):
    nd = make_normal((3, 4, 6))
    X = window_edges(nd, box)
    text = graph_to_json(nd, X)
    nd2, Y = graph_from_json(text)
    assert nd2 == nd
    assert Y.edges == X.edges and Y.periodic == X.periodic and Y.window == X.window
    assert graph_to_json(nd2, Y) == text
    doc = json.loads(text)
    assert set(doc) == {"a", "omega", "edges", "window"}


def test_json_width_graph_round_trip():
    nd = make_normal((15, 11, 10), 18)
    X = window_edges(nd)
    nd2, Y = graph_from_json(graph_to_json(nd, X))
    assert nd2.omega == 18 and Y == X


def test_json_rejects_malformed():
    with pytest.raises(ValidationError):
        graph_from_json('{"a": [2, 5]}')
    with pytest.raises(ValidationError):
        graph_from_json('{"a": [2, 5], "omega": 7, "edges": [], "window": {"kind": "disk"}}')


def test_dot_colours_legs_red():
    nd = make_normal((2, 5))
    dot = graph_to_dot(nd, window_edges(nd))
    assert '"0,0" -> "1,0" [color=red' in dot
    assert dot.count("color=red") == 2


def test_render_targets_are_deterministic():
    nd = make_normal((2, 3, 5))
    for target in ("i", "g", "parallelogram"):
        assert render(nd, RenderSpec(target)) == render(nd, RenderSpec(target))
    svg = render_christoffel_word(8, 5)
    assert svg.count("<line") == 14
    with pytest.raises(ValidationError):
        RenderSpec("x")
    with pytest.raises(ValidationError):
        render(nd, RenderSpec("h"))
