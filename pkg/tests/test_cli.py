from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from qfgeom.cli import EXIT_FAIL, EXIT_IO, EXIT_OK, EXIT_PARSE, main

GOLDEN = Path(__file__).parent / "golden"
SVG = "{http://www.w3.org/2000/svg}"

TRISECT = "point a = (0, 0)\npoint b = (3, 3)\nlet c = trisect1(a, b)\nlet d = trisect2(a, b)\n" \
          "assert C(a, c, c, d)\nassert C(c, d, d, b)\n"


def _strict_json(text: str):
    def bad(token):
        raise ValueError(f"non-standard JSON token {token}")
    return json.loads(text, parse_constant=bad)


@pytest.fixture
def script(tmp_path):
    def write(text: str, name: str = "s.geo") -> str:
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write


# -- run ---------------------------------------------------------------------------------


def test_run_all_pass(script, capsys):
    assert main(["run", script(TRISECT)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "6 passed, 0 failed, 0 errors"


def test_run_failing_assertion(script, capsys):
    path = script("point a = (0,0)\npoint b = (1,0)\npoint c = (5,0)\nassert B(a, c, b)\n")
    assert main(["run", path]) == EXIT_FAIL
    assert "FAIL     4  assert B(a, c, b)" in capsys.readouterr().out


def test_run_construction_error(script, capsys):
    assert main(["run", str(GOLDEN / "10_failures.geo")]) == EXIT_FAIL
    assert "UndefinedOutsideDomain" in capsys.readouterr().out


def test_run_parse_error(script, capsys):
    assert main(["run", script("let q = mid(a)\n")]) == EXIT_PARSE
    err = capsys.readouterr().err
    assert "1:9: error: ArityMismatch" in err


def test_run_missing_file(tmp_path, capsys):
    assert main(["run", str(tmp_path / "absent.geo")]) == EXIT_IO
    assert "cannot read" in capsys.readouterr().err


def test_run_unwritable_output(script, tmp_path):
    assert main(["run", script(TRISECT), "--out", str(tmp_path / "no" / "such" / "dir.txt")]) == EXIT_IO


def test_run_json_to_file(script, tmp_path):
    out = tmp_path / "report.json"
    assert main(["run", script(TRISECT), "--format", "json", "--out", str(out)]) == EXIT_OK
    doc = _strict_json(out.read_text(encoding="utf-8"))
    assert doc["summary"] == {"pass": 6, "fail": 0, "error": 0}
    assert [s["verdict"] for s in doc["statements"]] == ["PASS"] * 6


def test_run_reports_unused_point_warning(script, capsys):
    assert main(["run", script("point a = (0,0)\npoint b = (1,1)\nquery L(a, a, a)\n")]) == EXIT_OK
    assert "UnusedPoint" in capsys.readouterr().err


def test_golden_corpus_exit_statuses(capsys):
    for p in sorted(GOLDEN.glob("*.geo")):
        want = {"10_failures": EXIT_FAIL, "12_diagnostics": EXIT_PARSE}.get(p.stem, EXIT_OK)
        assert main(["run", str(p)]) == want, p.name
    capsys.readouterr()


# -- suites -------------------------------------------------------------------------------


def test_axioms_subset(capsys):
    assert main(["axioms", "--filter", "AX0*", "--n", "20"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 9 and all(l.startswith("PASS AX0") for l in lines)


def test_axioms_seed_one(capsys):
    assert main(["axioms", "--seed", "1", "--n", "100"]) == EXIT_OK
    assert "36/36 specs passed, 0 violations" in capsys.readouterr().out


def test_axioms_ignore_theorem_filter(capsys):
    assert main(["axioms", "--filter", "THM*", "--n", "5", "--format", "json"]) == EXIT_OK
    assert _strict_json(capsys.readouterr().out)["summary"]["specs"] == 0


def test_theorems_json_reproducible(capsys):
    args = ["theorems", "--filter", "THM-crossbar", "--n", "15", "--seed", "9", "--format", "json"]
    assert main(args) == EXIT_OK
    a = _strict_json(capsys.readouterr().out)
    assert main(args) == EXIT_OK
    b = _strict_json(capsys.readouterr().out)
    for doc in (a, b):
        doc["summary"].pop("seconds")
        doc["specs"][0].pop("seconds")
    assert a == b
    assert a["seed"] == 9 and a["n"] == 15 and a["specs"][0]["satisfied"] == 15


def test_suite_under_mutation_fails(capsys):
    from qfgeom.conformance.mutants import mutated

    with mutated("between"):
        assert main(["axioms", "--filter", "AX0*", "--n", "20"]) == EXIT_FAIL
    assert "FAIL AX03" in capsys.readouterr().out


def test_bad_n_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["axioms", "--n", "0"])
    assert info.value.code == 2


# -- render --------------------------------------------------------------------------------


def _svg(path) -> ET.Element:
    return ET.parse(path).getroot()


def test_render_trisection(script, tmp_path):
    out = tmp_path / "t.svg"
    assert main(["render", script(TRISECT), "--out", str(out)]) == EXIT_OK
    root = _svg(out)
    assert root.tag == f"{SVG}svg" and root.get("version") == "1.1"
    labels = sorted(t.text for t in root.iter(f"{SVG}text"))
    assert labels == ["a", "b", "c", "d"]
    circles = [(float(c.get("cx")), float(c.get("cy"))) for c in root.iter(f"{SVG}circle")]
    (x0, y0), (x1, y1) = circles[0], circles[-1]
    for x, y in circles:  # all on one segment
        assert abs((x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)) < 1e-6


def test_render_empty_script(script, capsys):
    assert main(["render", script("")]) == EXIT_OK
    root = ET.fromstring(capsys.readouterr().out)
    assert root.tag == f"{SVG}svg" and len(root) == 0


def test_render_space_script_has_z_markers(tmp_path):
    out = tmp_path / "s.svg"
    assert main(["render", str(GOLDEN / "08_space.geo"), "--out", str(out)]) == EXIT_OK
    root = _svg(out)
    dashed = [g for g in root.iter(f"{SVG}g") if g.get("stroke-dasharray")]
    assert dashed and len(list(dashed[0])) >= 1


def test_render_is_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    main(["render", str(GOLDEN / "05_perpendiculars.geo"), "--out", str(a)])
    main(["render", str(GOLDEN / "05_perpendiculars.geo"), "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_render_refuses_erroring_script(capsys):
    assert main(["render", str(GOLDEN / "10_failures.geo")]) == EXIT_FAIL
    assert "UndefinedOutsideDomain" in capsys.readouterr().err


def test_render_parse_error(script, capsys):
    assert main(["render", script("point a = (0,\n")]) == EXIT_PARSE
    capsys.readouterr()


# -- installed entry point -----------------------------------------------------------------


def test_module_entry_point(script):
    r = subprocess.run([sys.executable, "-m", "qfgeom.cli", "run", script(TRISECT)],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "6 passed" in r.stdout


def test_console_script_installed(script):
    import shutil

    exe = shutil.which("qfgeom")
    if exe is None:
        pytest.skip("console script not on PATH")
    r = subprocess.run([exe, "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("qfgeom ")
