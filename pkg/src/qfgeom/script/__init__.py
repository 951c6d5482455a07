"""Construction scripts: parse, evaluate, report and draw.

A script is a straight-line list of statements::

    point a = (0, 0)
    point b = (3, 0)
    let c = trisect1(a, b)
    assert B(a, c, b)
    query Right(a, c, b)
"""

from __future__ import annotations

from .diagnostics import Diagnostic, Diagnostics
from .evaluator import RunReport, StatementResult, evaluate, format_report
from .numbers import parse_number
from .parser import ScriptError, parse, parse_or_raise
from .svg import render_svg
from .syntax import Assertion, LetBinding, PointDecl, Query, Script
from .tables import FUNCS, RELS

__all__ = [
    "Assertion",
    "Diagnostic",
    "Diagnostics",
    "FUNCS",
    "LetBinding",
    "PointDecl",
    "Query",
    "RELS",
    "RunReport",
    "Script",
    "ScriptError",
    "StatementResult",
    "evaluate",
    "format_report",
    "parse",
    "parse_number",
    "parse_or_raise",
    "render_svg",
]
