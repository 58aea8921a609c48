import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from rotcolor.cli import parse_angle, pi_multiple, run
from rotcolor.svg import coloring_svg, trochoid_svg
from rotcolor.trochoid import trochoid_coloring, trochoid_trace
from rotcolor.diagram import torus_diagram

from conftest import DATA

NS = "{http://www.w3.org/2000/svg}"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv) + ["--json"], out)
    return code, json.loads(out.getvalue()), out.getvalue()


def test_alexander_trefoil():
    code, rep, _ = call("alexander", str(DATA / "trefoil.pd"))
    assert code == 0 and rep["command"] == "alexander"
    assert rep["results"]["alexander"] == "t^2 - t + 1"
    assert set(rep) == {"command", "inputs", "results", "tolerances"}


def test_alexander_all_and_torus():
    code, rep, _ = call("alexander", "--torus", "3", "4", "--all")
    assert code == 0
    r = rep["results"]
    assert r["alexander"] == "t^6 - t^5 + t^3 - t + 1" and r["matches_closed_form"]
    assert r["elementary_divisors"][0] == r["alexander"]


def test_colorable_reports():
    code, rep, _ = call("colorable", str(DATA / "trefoil.pd"))
    r = rep["results"]
    assert code == 0 and r["colorable"] and r["dimensions"] == [2, 2]
    assert sorted(a["pi"] for a in r["witness_angles"]) == ["-1/3", "1/3"]
    code, rep, _ = call("colorable", str(DATA / "figure_eight.pd"))
    assert code == 0 and rep["results"]["colorable"] is False and rep["results"]["witness_angles"] == []


def test_errors_exit_one():
    code, rep, _ = call("alexander", "--torus", "4", "2")
    assert code == 1 and rep["error"]["code"] == "NotCoprime"
    code, rep, _ = call("alexander", str(DATA / "missing.pd"))
    assert code == 1 and rep["error"]["code"] == "IOError"


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as e:
        run(["bogus"], io.StringIO())
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["colorings", "--torus", "3", "2"], io.StringIO())
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["alexander"], io.StringIO())
    assert e.value.code == 2


def test_json_is_deterministic():
    a = call("trochoid", "4", "1", "3", "1")[2]
    b = call("trochoid", "4", "1", "3", "1")[2]
    assert a == b
    rep = json.loads(a)
    assert rep["results"]["theta"]["pi"] == "1/6" and rep["results"]["steps"] == 3


def test_colorings_round_trip(tmp_path):
    code, rep, text = call("colorings", str(DATA / "trefoil.pd"), "--angle", "pi/3")
    assert code == 0 and rep["results"]["dimension"] == 2
    f = tmp_path / "c.json"
    f.write_text(text)
    code, rep, _ = call("check-coloring", str(f))
    assert code == 0 and rep["results"]["ok"]
    # a corrupted center must be caught
    data = json.loads(text)
    data["results"]["colorings"][0]["centers"][1][0] += 1e-3
    f.write_text(json.dumps(data))
    code, rep, _ = call("check-coloring", str(f))
    assert code == 1 and rep["error"]["code"] == "ColoringCheckFailed"


def test_color_torus_and_factorization(tmp_path):
    svg = tmp_path / "t.svg"
    code, rep, _ = call("color-torus", "4", "3", "1", "1", "--svg", str(svg))
    assert code == 0 and rep["results"]["check"]["ok"] and rep["results"]["nontrivial"]
    ET.parse(svg)
    code, rep, _ = call("verify-factorization", "3", "4")
    r = rep["results"]
    assert code == 0 and r["ok"] and r["n_angles"] == 6 and r["r"] == 0


def test_stderr_summary_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "rotcolor", "alexander", str(DATA / "figure_eight.pd")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "t^2 - 3t + 1" in proc.stderr
    assert json.loads(proc.stdout)["results"]["alexander"] == "t^2 - 3t + 1"


def test_angle_helpers():
    assert parse_angle("pi/3") == math.pi / 3
    assert parse_angle("-5pi/6") == -5 * math.pi / 6
    assert parse_angle("2*pi/7") == 2 * math.pi / 7
    assert parse_angle("1.5") == 1.5
    assert pi_multiple(math.pi / 6) == "1/6"
    assert pi_multiple(1.0) is None


def test_trochoid_svg_structure():
    root = ET.fromstring(trochoid_svg(trochoid_trace(4, 1, 3, 1)))
    steps = [g for g in root.iter(NS + "g") if g.get("class") == "placement"]
    assert len(steps) == 4
    assert root.find(NS + "g[@id='fixed']") is not None
    labels = [t.text for t in root.iter(NS + "text")]
    assert any("=" in s for s in labels)  # z_i0 = z_{i+1,m-1} share a point


def test_zero_angle_svg():
    root = ET.fromstring(trochoid_svg(trochoid_trace(3, 1, 3, 1)))
    assert len([g for g in root.iter(NS + "g") if g.get("class") == "placement"]) == 4


def test_coloring_svg():
    d = torus_diagram(3, 2)
    root = ET.fromstring(coloring_svg(d, trochoid_coloring(3, 2, 1, 1)))
    assert len(root.find(NS + "g[@id='crossings']")) == 4


def test_golden_svg():
    assert trochoid_svg(trochoid_trace(5, 2, 3, 1)) == (DATA / "trochoid_5_2_3_1.svg").read_text()
