import json

import pytest

from thetaspan.main import main
from thetaspan.utils.point_io import dump_points, load_points


@pytest.fixture
def points_file(tmp_path, make_points):
    target = tmp_path / "points.csv"
    dump_points(make_points(25, 10), target)
    return target


def test_build_then_ratio_from_dot(tmp_path, points_file):
    dot_file = tmp_path / "graph.dot"
    assert main(["build", "--points", str(points_file), "--format", "dot", "--out", str(dot_file)]) == 0
    out = tmp_path / "ratio.json"
    assert main(["ratio", "--graph", str(dot_file), "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["ratio"] >= 1.0
    assert report["connected"] is True
    assert report["per_pair_ratios"] is None


def test_tampered_dot_is_rejected(tmp_path, points_file, capsys):
    dot_file = tmp_path / "graph.dot"
    main(["build", "--points", str(points_file), "--format", "dot", "--out", str(dot_file)])
    lines = dot_file.read_text().splitlines()
    edge_line = next(i for i, line in enumerate(lines) if "--" in line)
    del lines[edge_line]
    dot_file.write_text("\n".join(lines) + "\n")
    assert main(["ratio", "--graph", str(dot_file)]) == 6
    assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])["message"] == "GraphIntegrityError"


def test_svg_highlight(tmp_path, points_file):
    out = tmp_path / "graph.svg"
    args = ["build", "--points", str(points_file), "--format", "svg", "--highlight-path", "0", "24"]
    assert main(args + ["--out", str(out)]) == 0
    assert 'class="hop"' in out.read_text()


def test_path_modes(tmp_path, points_file):
    out = tmp_path / "path.json"
    assert main(["path", "--points", str(points_file), "--source", "0", "--dest", "7", "--out", str(out)]) == 0
    constructive = json.loads(out.read_text())
    assert constructive["vertices"][0] == 0 and constructive["vertices"][-1] == 7
    assert constructive["case_trace"]

    args = ["path", "--points", str(points_file), "--source", "0", "--dest", "7", "--shortest"]
    assert main(args + ["--out", str(out)]) == 0
    shortest = json.loads(out.read_text())
    assert shortest["length"] <= constructive["length"] * (1 + 1e-9)


def test_route(tmp_path, points_file):
    out = tmp_path / "route.json"
    status = main(["route", "--points", str(points_file), "--source", "3", "--dest", "11", "--out", str(out)])
    outcome = json.loads(out.read_text())
    assert status == (0 if outcome["reached"] else 1)
    assert outcome["path"]["vertices"][0] == 3

    assert main(["route", "--points", str(points_file), "--all", "--out", str(out)]) == 0
    table = json.loads(out.read_text())
    assert len(table["pairs"]) + len(table["unreached"]) == 25 * 24


def test_route_needs_endpoints(points_file):
    assert main(["route", "--points", str(points_file)]) == 3


def test_out_of_range_vertex(points_file):
    assert main(["path", "--points", str(points_file), "--source", "0", "--dest", "99"]) == 3


def test_verify(tmp_path, points_file):
    out = tmp_path / "report.json"
    assert main(["verify", "--points", str(points_file), "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert {check["name"] for check in report["checks"]} >= {"edge_count", "connectivity", "spanning_ratio"}


def test_gen_theorem3(tmp_path):
    out = tmp_path / "t3.csv"
    assert main(["gen", "theorem3", "--epsilon", "1e-5", "--out", str(out)]) == 0
    assert len(load_points(out)) == 6


def test_gen_adversary_with_four_cycles(tmp_path, capsys):
    out = tmp_path / "spiral.csv"
    assert main(["gen", "adversary", "--cycles", "4", "--epsilon", "1e-6", "--out", str(out)]) == 0
    assert len(load_points(out)) == 36
    assert "19 main steps" in capsys.readouterr().err


def test_parse_errors_map_to_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n0,0\n1,oops\n")
    assert main(["ratio", "--points", str(bad)]) == 4
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["message"] == "PointParseError"
    assert error["context"] == {"line": 3, "column": 2}


def test_single_point_has_no_ratio(tmp_path):
    lone = tmp_path / "lone.csv"
    lone.write_text("0,0\n")
    assert main(["ratio", "--points", str(lone)]) == 3
