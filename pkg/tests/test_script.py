from __future__ import annotations

import json
import os
import re
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from qfgeom.exactnum import Q, sqrt
from qfgeom.script import (
    FUNCS, RELS, Assertion, Diagnostics, LetBinding, PointDecl, Query, Script,
    ScriptError, evaluate, format_report, parse, parse_number, parse_or_raise,
)
from qfgeom.script.syntax import NumBin, NumInt, NumNeg, NumSqrt

from helpers import fuzz_inputs

GOLDEN = Path(__file__).parent / "golden"
SCRIPTS = sorted(GOLDEN.glob("*.geo"))
# set QFGEOM_REGEN=1 to rewrite the pinned files after an intended change
REGEN = os.environ.get("QFGEOM_REGEN") == "1"


def _run(text: str):
    return evaluate(parse_or_raise(text))


def _pinned(path: Path, actual):
    if REGEN:
        path.write_text(json.dumps(actual, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return json.loads(path.read_text(encoding="utf-8"))


# -- golden corpus ----------------------------------------------------------------


def test_corpus_size_and_coverage():
    assert len(SCRIPTS) >= 10
    funcs, rels = set(), set()
    for p in SCRIPTS:
        res = parse(p.read_text(encoding="utf-8"))
        if isinstance(res, Diagnostics):
            continue
        for s in res.statements:
            if isinstance(s, LetBinding):
                funcs.add(s.func)
            elif isinstance(s, (Assertion, Query)):
                rels.add(s.rel)
    assert funcs == set(FUNCS)
    assert rels == set(RELS)


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
def test_golden_report(path):
    text = path.read_text(encoding="utf-8")
    res = parse(text)
    if isinstance(res, Diagnostics):
        actual = [d.to_json() for d in res]
        assert actual == _pinned(path.with_suffix(".diagnostics.json"), actual)
        return
    actual = evaluate(res).to_json()
    assert actual == _pinned(path.with_suffix(".report.json"), actual)


@pytest.mark.parametrize(
    "path", [p for p in SCRIPTS if p.stem not in ("10_failures", "12_diagnostics")], ids=lambda p: p.stem)
def test_golden_scripts_pass(path):
    # each assertion encodes a hand-derived fact about the figure
    report = _run(path.read_text(encoding="utf-8"))
    bad = [s.source for s in report.statements if s.verdict != "PASS"]
    assert bad == []


def test_failure_script_verdicts():
    report = _run((GOLDEN / "10_failures.geo").read_text(encoding="utf-8"))
    got = [(s.line, s.verdict, (s.error or {}).get("kind")) for s in report.statements if s.verdict != "PASS"]
    assert got == [
        (7, "FAIL", None),
        (8, "FAIL", None),
        (14, "ERROR", "UndefinedOutsideDomain"),
        (15, "ERROR", "Unavailable"),
        (18, "ERROR", "InvalidNumber"),
        (19, "ERROR", "Unavailable"),
        (20, "ERROR", "InvalidNumber"),
        (21, "ERROR", "DegenerateAngle"),
        (22, "ERROR", "Unavailable"),
    ]
    cross = next(s for s in report.statements if s.line == 14)
    assert list(cross.witness) == ["g", "p", "b", "r"]
    assert cross.witness["r"] == ["2", "1", "0"]
    query = next(s for s in report.statements if s.line == 16)
    assert query.verdict == "PASS" and query.value is True


def test_diagnostics_script_kinds():
    res = parse((GOLDEN / "12_diagnostics.geo").read_text(encoding="utf-8"))
    assert isinstance(res, Diagnostics)
    assert [(d.line, d.kind) for d in res] == [
        (3, "SyntaxError"),
        (4, "ArityMismatch"),
        (5, "UnknownIdentifier"),
        (6, "UnknownIdentifier"),
        (7, "DuplicateIdentifier"),
        (8, "SyntaxError"),
        (9, "ArityMismatch"),
        (10, "SyntaxError"),
    ]
    assert all(d.line >= 1 and d.column >= 1 for d in res)


# -- parse -------------------------------------------------------------------------


def test_parse_three_statements():
    s = parse("point a = (0,0,0)\nlet m = mid(a,a)\nassert B(a,m,a) == false")
    assert isinstance(s, Script) and len(s) == 3
    assert s.statements[2] == Assertion("B", ("a", "m", "a"), False, True)


def test_arity_mismatch_reported_before_binding():
    d = parse("let q = mid(a)")
    assert isinstance(d, Diagnostics)
    assert [(x.kind, x.line) for x in d] == [("ArityMismatch", 1)]


def test_undeclared_point():
    d = parse("point a = (0,0)\npoint b = (1,0)\npoint c = (0,1)\nassert Par(a,b,c,d)")
    assert [(x.kind, x.line, x.column, x.related) for x in d] == [("UnknownIdentifier", 4, 18, "d")]


def test_comments_blank_lines_and_default_z():
    s = parse_or_raise("# header\n\npoint a = (1, 2)   # trailing\nquery T(a, a, a)\n")
    assert len(s) == 2
    r = evaluate(s)
    assert r.statements[0].value == ["1", "2", "0"]


def test_unused_point_warns():
    s = parse_or_raise("point a = (0,0)\npoint b = (1,0)\nquery L(a, a, a)\n")
    assert [(w.severity, w.kind, w.related) for w in s.warnings] == [("warning", "UnusedPoint", "b")]


def test_parse_or_raise_carries_diagnostics():
    with pytest.raises(ScriptError) as info:
        parse_or_raise("point = (0,0)")
    assert info.value.diagnostics[0].kind == "SyntaxError"


@pytest.mark.parametrize("text, value", [
    ("-3/4 + 2*sqrt(5)/7", Q("-3/4") + 2 * sqrt(Q(5)) / 7),
    ("1 - 2 - 3", Q(-4)),
    ("1 - (2 - 3)", Q(2)),
    ("2*3/4", Q("3/2")),
    ("--5", Q(5)),
    ("sqrt(sqrt(16))", Q(2)),
])
def test_number_expressions(text, value):
    assert parse_number(text) == value


def test_number_depth_limit_is_a_diagnostic():
    deep = "point a = (" + "(" * 500 + "1" + ")" * 500 + ", 0)"
    d = parse(deep)
    assert isinstance(d, Diagnostics) and d[0].kind == "SyntaxError"


# -- render round trip ---------------------------------------------------------------

NAMES = [f"p{i}" for i in range(6)]


def _nums(depth: int):
    base = st.builds(NumInt, st.integers(0, 10**6))
    if depth == 0:
        return base
    sub = _nums(depth - 1)
    return st.one_of(
        base,
        st.builds(NumNeg, sub),
        st.builds(NumSqrt, sub),
        st.builds(NumBin, st.sampled_from("+-*/"), sub, sub),
    )


@st.composite
def scripts(draw):
    stmts = []
    bound = []
    for name in NAMES[: draw(st.integers(1, len(NAMES)))]:
        coords = draw(st.lists(_nums(3), min_size=2, max_size=3))
        stmts.append(PointDecl(name, tuple(coords)))
        bound.append(name)
    for i in range(draw(st.integers(0, 6))):
        kind = draw(st.sampled_from(["let", "assert", "query"]))
        table = FUNCS if kind == "let" else RELS
        head = draw(st.sampled_from(sorted(table)))
        args = tuple(draw(st.lists(st.sampled_from(bound), min_size=table[head].arity,
                                   max_size=table[head].arity)))
        if kind == "let":
            stmts.append(LetBinding(f"q{i}", head, args))
            bound.append(f"q{i}")
        elif kind == "assert":
            explicit = draw(st.booleans())
            expected = draw(st.booleans()) if explicit else True
            stmts.append(Assertion(head, args, expected, explicit))
        else:
            stmts.append(Query(head, args))
    return Script(tuple(stmts))


@given(scripts())
def test_parse_render_identity(script):
    again = parse(script.render())
    assert isinstance(again, Script), str(again)
    assert again == script
    assert again.render() == script.render()


@pytest.mark.parametrize("path", [p for p in SCRIPTS if p.stem != "12_diagnostics"], ids=lambda p: p.stem)
def test_golden_render_identity(path):
    s = parse_or_raise(path.read_text(encoding="utf-8"))
    assert parse_or_raise(s.render()) == s


# -- evaluate and report ------------------------------------------------------------


def test_trisection_script():
    r = _run("point a = (0,0)\npoint b = (3,3)\nlet c = trisect1(a,b)\n"
             "let d = trisect2(a,b)\nassert C(a,c,c,d)\nassert C(c,d,d,b)\n")
    assert r.ok and r.summary() == {"pass": 6, "fail": 0, "error": 0}


def test_crossbow_same_side_reports_witness():
    r = _run("point d = (0,0)\npoint a = (0,1)\npoint b = (4,0)\npoint c = (2,1)\nlet x = cb(d,a,b,c)\n")
    entry = r.statements[-1]
    assert entry.verdict == "ERROR"
    assert entry.error["kind"] == "UndefinedOutsideDomain"
    assert entry.witness == {"d": ["0", "0", "0"], "a": ["0", "1", "0"],
                             "b": ["4", "0", "0"], "c": ["2", "1", "0"]}


def test_empty_script():
    r = evaluate(parse_or_raise(""))
    assert r.statements == [] and r.summary() == {"pass": 0, "fail": 0, "error": 0}
    assert json.loads(format_report(r, "json")) == {"statements": [], "summary": {"pass": 0, "fail": 0, "error": 0}}


def test_failed_assertion_text_carries_exact_coordinates():
    r = _run("point a = (0,0)\npoint b = (sqrt(2),0)\npoint c = (1,1)\nassert B(a,c,b)\n")
    text = format_report(r, "text")
    assert re.search(r"^FAIL\s+4\s+assert B\(a, c, b\)$", text, re.M)
    assert "b = (sqrt(2), 0, 0)" in text
    assert text.splitlines()[-1] == "3 passed, 1 failed, 0 errors"


def test_json_schema_round_trip():
    r = _run((GOLDEN / "10_failures.geo").read_text(encoding="utf-8"))
    doc = json.loads(format_report(r, "json"))
    assert set(doc) == {"statements", "summary"}
    assert [s["index"] for s in doc["statements"]] == list(range(len(r.statements)))
    for s in doc["statements"]:
        assert {"index", "kind", "verdict"} <= set(s)
        assert s["verdict"] in ("PASS", "FAIL", "ERROR")
    assert doc["summary"] == r.summary()


def test_format_rejects_unknown():
    with pytest.raises(ValueError):
        format_report(_run(""), "xml")


def test_evaluation_is_deterministic():
    text = (GOLDEN / "05_perpendiculars.geo").read_text(encoding="utf-8")
    assert _run(text).to_json() == _run(text).to_json()


# -- fuzz ---------------------------------------------------------------------------

def test_parser_fuzz_smoke():
    # the full-size run lives in the acceptance suite
    for text in fuzz_inputs(3000, seed=7):
        assert isinstance(parse(text), (Script, Diagnostics))


@given(st.text(max_size=200))
def test_parser_total_on_arbitrary_text(text):
    assert isinstance(parse(text), (Script, Diagnostics))


@pytest.mark.parametrize("text", ["point a = (1 +", "point a = (1, 2 *", "point a = (sqrt(", "point a = (-"])
def test_truncated_number_at_end_of_input(text):
    d = parse(text)
    assert isinstance(d, Diagnostics) and d[0].kind == "SyntaxError"
