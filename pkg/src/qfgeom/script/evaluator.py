"""Straight-line evaluation of parsed scripts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..construct import ConstructionError
from ..exactnum import DivisionByZero, NegativeRadicand, Q
from ..geom import DegenerateAngle, Point
from .syntax import Assertion, LetBinding, PointDecl, Query, Script
from .tables import FUNCS, RELS

PASS, FAIL, ERROR = "PASS", "FAIL", "ERROR"


def _exprs(p: Point) -> List[str]:
    return list(p.to_exprs())


@dataclass
class StatementResult:
    index: int
    kind: str
    source: str
    line: int
    verdict: str
    value: Optional[object] = None  # coordinates for bindings, truth value for relations
    witness: Optional[Dict[str, List[str]]] = None
    error: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"index": self.index, "kind": self.kind, "verdict": self.verdict,
               "line": self.line, "source": self.source}
        if self.value is not None:
            out["value"] = self.value
        if self.witness is not None:
            out["witness"] = self.witness
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class RunReport:
    statements: List[StatementResult] = field(default_factory=list)
    points: Dict[str, Point] = field(default_factory=dict, repr=False)

    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for s in self.statements:
            counts[s.verdict.lower()] += 1
        return counts

    @property
    def ok(self) -> bool:
        s = self.summary()
        return s["fail"] == 0 and s["error"] == 0

    def to_json(self) -> dict:
        return {"statements": [s.to_json() for s in self.statements], "summary": self.summary()}


def _points_json(names, env) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for n in names:
        if n not in out:
            out[n] = _exprs(env[n])
    return out


def _construction_witness(pts, names, env) -> Dict[str, List[str]]:
    # label by argument name when the failing construction is the statement's own
    if len(pts) == len(names) and len(set(names)) == len(names) and all(
            p == env[n] for p, n in zip(pts, names)):
        return _points_json(names, env)
    return {f"#{k}": _exprs(p) for k, p in enumerate(pts)}


def evaluate(script: Script) -> RunReport:
    """Run every statement in order; failures are recorded, never raised."""
    report = RunReport()
    env: Dict[str, Point] = {}
    failed: Dict[str, int] = {}  # name -> line of the statement that failed to bind it
    for i, st in enumerate(script.statements):
        src = st.render()
        res = StatementResult(i, st.kind, src, st.line, PASS)
        report.statements.append(res)
        names = [] if isinstance(st, PointDecl) else list(st.args)
        missing = [n for n in names if n in failed]
        if missing:
            res.verdict = ERROR
            res.error = {"kind": "Unavailable", "message": f"{missing[0]!r} was not bound (line {failed[missing[0]]} failed)"}
            if isinstance(st, (PointDecl, LetBinding)):
                failed[st.name] = st.line
            continue
        try:
            if isinstance(st, PointDecl):
                coords = [c.evaluate() for c in st.coords]
                if len(coords) == 2:
                    coords.append(Q(0))
                env[st.name] = Point(*coords)
                res.value = _exprs(env[st.name])
            elif isinstance(st, LetBinding):
                env[st.name] = FUNCS[st.func].fn(*(env[n] for n in names))
                res.value = _exprs(env[st.name])
            else:
                truth = bool(RELS[st.rel].fn(*(env[n] for n in names)))
                res.value = truth
                if isinstance(st, Assertion) and truth != st.expected:
                    res.verdict = FAIL
                    res.witness = _points_json(names, env)
        except ConstructionError as exc:
            res.verdict = ERROR
            res.error = {"kind": exc.reason.value, "construction": exc.construction, "message": exc.detail}
            res.witness = _construction_witness(exc.witness, names, env)
        except DegenerateAngle as exc:
            res.verdict = ERROR
            res.error = {"kind": "DegenerateAngle", "message": str(exc)}
            res.witness = _points_json(names, env)
        except (DivisionByZero, NegativeRadicand) as exc:
            res.verdict = ERROR
            res.error = {"kind": "InvalidNumber", "message": str(exc)}
        if res.verdict == ERROR and isinstance(st, (PointDecl, LetBinding)):
            failed[st.name] = st.line
    report.points = env
    return report


def format_report(report: RunReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_json(), indent=2, ensure_ascii=False)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = []
    for s in report.statements:
        line = f"{s.verdict:<5} {s.line:>4}  {s.source}"
        if s.kind == "query" and s.value is not None:
            line += f"  -> {'true' if s.value else 'false'}"
        if s.error is not None:
            line += f"  [{s.error['kind']}: {s.error['message']}]"
        lines.append(line)
        if s.witness and s.verdict != PASS:
            for name, c in s.witness.items():
                lines.append(f"        {name} = ({', '.join(c)})")
    sm = report.summary()
    lines.append(f"{sm['pass']} passed, {sm['fail']} failed, {sm['error']} errors")
    return "\n".join(lines)
