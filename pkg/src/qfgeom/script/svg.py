"""Orthographic SVG figures for evaluated scripts."""

from __future__ import annotations

from typing import Dict, List, Tuple
from xml.sax.saxutils import escape

from ..exactnum import approx
from .evaluator import RunReport
from .syntax import Assertion, Query, Script
from .tables import RELS

SIZE = 480
MARGIN = 40


def _float(x) -> float:
    iv = approx(x, 64)
    return float((iv.lo + iv.hi) / 2)


def _collect(script: Script, report: RunReport) -> Tuple[List[str], List[Tuple[str, str]]]:
    names: List[str] = []
    segs: List[Tuple[str, str]] = []
    for st in script.statements:
        if not isinstance(st, (Assertion, Query)):
            continue
        if any(n not in report.points for n in st.args):
            continue
        for n in st.args:
            if n not in names:
                names.append(n)
        for i, j in RELS[st.rel].segments:
            u, v = st.args[i], st.args[j]
            if u != v and (u, v) not in segs and (v, u) not in segs:
                segs.append((u, v))
    return names, segs


def render_svg(script: Script, report: RunReport) -> str:
    """Points and segments named in assertions and queries, projected onto z = 0.

    Points off that plane carry a dashed marker whose length shows z.
    """
    names, segs = _collect(script, report)
    xyz: Dict[str, Tuple[float, float, float]] = {
        n: tuple(_float(c) for c in report.points[n]) for n in names
    }
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">')
    if not xyz:
        return head + "</svg>\n"
    xs = [p[0] for p in xyz.values()]
    ys = [p[1] for p in xyz.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (SIZE - 2 * MARGIN) / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def scr(p) -> Tuple[float, float]:
        return SIZE / 2 + (p[0] - cx) * k, SIZE / 2 - (p[1] - cy) * k

    out = [head, '<g stroke="black" stroke-width="1.5" fill="none">']
    for u, v in segs:
        (x1, y1), (x2, y2) = scr(xyz[u]), scr(xyz[v])
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append('<g stroke="gray" stroke-width="1" stroke-dasharray="4 3">')
    for n in names:
        z = xyz[n][2]
        if abs(z) > 1e-12:
            x, y = scr(xyz[n])
            out.append(f'<line x1="{x:.2f}" y1="{y:.2f}" x2="{x:.2f}" y2="{y - z * k:.2f}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="14">')
    for n in names:
        x, y = scr(xyz[n])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        out.append(f'<text x="{x + 6:.2f}" y="{y - 6:.2f}">{escape(n)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
