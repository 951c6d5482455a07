"""Geometry scripts, then a small conformance run and a deliberately broken predicate.

Run with ``python3 demos/03_scripts_and_conformance.py``.
"""

from __future__ import annotations

from qfgeom.conformance import run_suite
from qfgeom.conformance.mutants import MUTANTS, first_failure
from qfgeom.script import Diagnostics, evaluate, format_report, parse

SOURCE = """\
point a = (0, 0)
point b = (3, 3)
let c = trisect1(a, b)
let d = trisect2(a, b)
assert B(a, c, d)
assert C(a, c, c, d)
assert C(a, c, a, b) == false
query T(a, b, c)
"""

script = parse(SOURCE)
print(format_report(evaluate(script)))

# Errors come back as diagnostics with positions instead of exceptions.
broken = parse("point a = (1, 2\npoint b = (0, 0)\nlet m = mid(b, z)\n")
assert isinstance(broken, Diagnostics)
for diag in broken:
    print(diag)

# The axioms, checked on random configurations with exact coordinates.
report = run_suite("AX0[1-4]*", seed=7, n=50)
print()
print(report.to_text())

# Weaken a single predicate and the suite finds a violated axiom.
name = sorted(MUTANTS)[0]
found = first_failure(name)
print(f"\nmutant {name!r} first breaks", found["spec"] if found else "nothing")
