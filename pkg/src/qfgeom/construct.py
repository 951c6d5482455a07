"""Constructions as exact coordinate maps.

Primitive constructions (ext, mid, ats, crossbow, cci, ortho) are computed
analytically.  Derived ones (drop_perp, trisect, line_circle, plane_meet, ...)
are built from the primitives following the constructive recipes, so a
mistake in a primitive shows up in every composite that uses it.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Sequence, Tuple

from .exactnum import ConstructibleReal, Q
from .geom import (
    ALPHA,
    BETA,
    GAMMA,
    Point,
    _cross,
    _d2,
    _dot,
    _is_zero_vec,
    colinear,
    opposite_orientation,
    seg_congruent,
    seg_less,
    triangle,
)

__all__ = [
    "ConstructionError",
    "Reason",
    "angle_bisector",
    "ato",
    "ats",
    "cci",
    "cci_second",
    "crossbow",
    "doub",
    "drop_perp",
    "erect_perp",
    "ext",
    "isosceles_apex",
    "lf",
    "line_circle",
    "mid",
    "ortho",
    "perp_bisector",
    "plane_meet",
    "right_ref",
    "segment_circle",
    "trisect",
]

_HALF = Q("1/2")


class Reason(Enum):
    UNDEFINED = "UndefinedOutsideDomain"
    DEGENERATE = "DegenerateInput"


class ConstructionError(Exception):
    """A construction was applied outside the domain where it is defined."""

    def __init__(self, construction: str, reason: Reason, witness: Sequence[Point], detail: str = ""):
        self.construction = construction
        self.reason = reason
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"{construction}: {reason.value}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


def _undefined(name: str, pts, detail: str = "") -> ConstructionError:
    return ConstructionError(name, Reason.UNDEFINED, pts, detail)


def _degenerate(name: str, pts, detail: str = "") -> ConstructionError:
    return ConstructionError(name, Reason.DEGENERATE, pts, detail)


def _axpy(k, v: Point, base: Point) -> Point:
    """base + k*v"""
    return Point(base.x + k * v.x, base.y + k * v.y, base.z + k * v.z)


# -- primitive constructions ---------------------------------------------------


def mid(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) * _HALF, (a.y + b.y) * _HALF, (a.z + b.z) * _HALF)


def doub(a: Point, b: Point) -> Point:
    """Reflection of a through b (2b - a)."""
    return Point(2 * b.x - a.x, 2 * b.y - a.y, 2 * b.z - a.z)


def ext(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Extend ab beyond b by the length of cd."""
    if a == b:
        raise _undefined("ext", (a, b, c, d), "a = b")
    cd2 = _d2(c, d)
    if cd2.sign() == 0:
        return b
    k = (cd2 / _d2(a, b)).sqrt()
    return _axpy(k, b - a, b)


def lf(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Lay off the length cd from a toward b."""
    if a == b:
        raise _undefined("lf", (a, b, c, d), "a = b")
    return ext(doub(b, a), a, c, d)


def ats(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> Point:
    """Copy angle abc to vertex e along ray ed, on f's side, with length |bc|."""
    if not triangle(a, b, c) or not triangle(d, e, f):
        raise _undefined("ats", (a, b, c, d, e, f), "both triples must be triangles")
    ba = a - b
    bc = c - b
    ed = d - e
    ef = f - e
    ba2 = _dot(ba, ba)
    ed2 = _dot(ed, ed)
    # component of ef orthogonal to ed, scaled by |ed|^2 to stay division free
    w = Point(
        ef.x * ed2 - _dot(ef, ed) * ed.x,
        ef.y * ed2 - _dot(ef, ed) * ed.y,
        ef.z * ed2 - _dot(ef, ed) * ed.z,
    )
    cr = _cross(ba, bc)
    along = _dot(ba, bc) / (ba2 * ed2).sqrt()
    across = (_dot(cr, cr) / (ba2 * _dot(w, w))).sqrt()
    return Point(
        e.x + along * ed.x + across * w.x,
        e.y + along * ed.y + across * w.y,
        e.z + along * ed.z + across * w.z,
    )


def ato(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> Point:
    """Angle transport to the side of de opposite f."""
    if not triangle(a, b, c) or not triangle(d, e, f):
        raise _undefined("ato", (a, b, c, d, e, f), "both triples must be triangles")
    return ats(a, b, c, d, e, doub(f, e))


def crossbow(d: Point, a: Point, b: Point, c: Point) -> Point:
    """Point where line bd crosses segment ac."""
    if not opposite_orientation(d, b, a, d, b, c):
        raise _undefined("crossbow", (d, a, b, c), "a and c not on opposite sides of bd")
    bd = d - b
    n = _cross(c - a, bd)
    t = -_dot(_cross(a - b, bd), n) / _dot(n, n)
    return _axpy(t, c - a, a)


def _canonical(n: Point) -> Point:
    for comp in (n.z, n.y, n.x):
        s = comp.sign()
        if s:
            return n if s > 0 else Point(-n.x, -n.y, -n.z)
    return n


def _axis_normal(v: Point) -> Point:
    """A canonical vector orthogonal to v (v nonzero)."""
    v2 = _dot(v, v)
    n = Point(-v.z * v.x / v2, -v.z * v.y / v2, 1 - v.z * v.z / v2)
    if _is_zero_vec(n):
        n = Point(1 - v.x * v.x / v2, -v.x * v.y / v2, -v.x * v.z / v2)
    return _canonical(n)


def _cci_normal(c1: Point, a: Point, b: Point, c2: Point, d: Point) -> Point:
    v = c2 - c1
    for p in (a, b, d):
        n = _cross(p - c1, v)
        if not _is_zero_vec(n):
            return _canonical(n)
    return _axis_normal(v)


def _cci_core(c1: Point, a: Point, b: Point, c2: Point, d: Point, n: Point, name: str) -> Point:
    pts = (c1, a, b, c2, d)
    if not seg_congruent(c1, a, c1, b):
        raise _undefined(name, pts, "c1a and c1b differ")
    if not seg_less(c2, a, c2, d):
        raise _undefined(name, pts, "a not inside the second circle")
    if not seg_less(c2, d, c2, b):
        raise _undefined(name, pts, "b not outside the second circle")
    for p in (a, b, c2, d):
        if _dot(n, p - c1).sign() != 0:
            raise _undefined(name, pts, "points are not coplanar")
    v = c2 - c1
    big_d = _dot(v, v)
    r1 = _d2(c1, a)
    r2 = _d2(c2, d)
    s = r1 - r2 + big_d
    disc = 4 * big_d * r1 - s * s
    if disc.sign() <= 0:
        raise _undefined(name, pts, "circles do not cross")
    along = s / (2 * big_d)
    m = _cross(n, v)
    across = (disc / (4 * big_d * big_d * _dot(n, n))).sqrt()
    return Point(
        c1.x + along * v.x + across * m.x,
        c1.y + along * v.y + across * m.y,
        c1.z + along * v.z + across * m.z,
    )


def cci(c1: Point, a: Point, b: Point, c2: Point, d: Point) -> Point:
    """Intersection of circle (c1, |c1a|) with circle (c2, |c2d|).

    The two candidates are told apart by a canonical normal of the common
    plane (first nonzero of its z, y, x components positive); the point
    returned lies along normal x (c2 - c1).
    """
    return _cci_core(c1, a, b, c2, d, _cci_normal(c1, a, b, c2, d), "cci")


def _cci_in_plane(c1, a, b, c2, d, n: Point) -> Point:
    return _cci_core(c1, a, b, c2, d, _canonical(n), "cci")


def ortho(a: Point, b: Point, c: Point) -> Point:
    """Point o with abo and cbo right angles and |bo| = |ab|."""
    if a == b or c == b:
        raise _degenerate("ortho", (a, b, c), "a = b or c = b")
    v = a - b
    v2 = _dot(v, v)
    n = _cross(v, c - b)
    if _is_zero_vec(n):
        mags = [abs(v.x), abs(v.y), abs(v.z)]
        i = 0
        for j in (1, 2):
            if (mags[j] - mags[i]).sign() < 0:
                i = j
        comps = [v.x, v.y, v.z]
        unit = [Q(0), Q(0), Q(0)]
        unit[i] = Q(1)
        k = comps[i] / v2
        n = Point(unit[0] - k * v.x, unit[1] - k * v.y, unit[2] - k * v.z)
    return _axpy((v2 / _dot(n, n)).sqrt(), n, b)


# -- derived constructions -------------------------------------------------------


def drop_perp(a: Point, b: Point, c: Point) -> Point:
    """Foot of the perpendicular from c to line ab (reflect c, then crossbow)."""
    if not triangle(a, b, c):
        raise _undefined("drop_perp", (a, b, c), "a, b, c not a triangle")
    c_ref = ato(a, b, c, a, b, c)
    return crossbow(b, c, a, c_ref)


def cci_second(c1: Point, a: Point, b: Point, c2: Point, d: Point) -> Point:
    """The other circle-circle intersection: reflect cci's point across c1c2."""
    y = cci(c1, a, b, c2, d)
    p = drop_perp(c1, c2, y)
    return doub(y, p)


def right_ref() -> Tuple[Point, Point, Point]:
    """Reference right angle (alpha, d, beta) built from the base triple."""
    d = mid(ALPHA, lf(BETA, GAMMA, ALPHA, BETA))
    return ALPHA, d, BETA


def erect_perp(at: Point, a: Point, b: Point, f: Point) -> Point:
    """Point x on f's side of ab with a right angle at ``at`` (``at`` on line ab)."""
    if a == b:
        raise _degenerate("erect_perp", (at, a, b, f), "a = b")
    if not colinear(a, b, at, strict=False):
        raise _undefined("erect_perp", (at, a, b, f), "foot not on line ab")
    arm = a if a != at else b
    if not triangle(arm, at, f):
        raise _degenerate("erect_perp", (at, a, b, f), "side point on the line")
    r0, r1, r2 = right_ref()
    return ats(r0, r1, r2, arm, at, f)


def _side_point(a: Point, b: Point) -> Point:
    for g in (GAMMA, BETA, ALPHA):
        if triangle(a, b, g):
            return g
    raise AssertionError("base triple is a triangle")  # pragma: no cover


def perp_bisector(a: Point, b: Point, side: Optional[Point] = None) -> Point:
    """Far endpoint of a perpendicular bisector of ab, toward ``side``."""
    if a == b:
        raise _degenerate("perp_bisector", (a, b), "a = b")
    if side is None:
        side = _side_point(a, b)
    return erect_perp(mid(a, b), a, b, side)


def isosceles_apex(a: Point, b: Point) -> Point:
    return perp_bisector(a, b)


def angle_bisector(a: Point, b: Point, c: Point) -> Point:
    """Point x with abx and xbc congruent halves of abc."""
    if not triangle(a, b, c):
        raise _degenerate("angle_bisector", (a, b, c), "angle is degenerate")
    return mid(lf(b, a, b, c), c)


def trisect(a: Point, b: Point) -> Tuple[Point, Point]:
    """Points c, d with ac, cd, db congruent, via parallel-line crossbows."""
    if a == b:
        raise _degenerate("trisect", (a, b), "a = b")
    g = _side_point(a, b)
    g1 = doub(a, g)
    g2 = doub(g, g1)
    x = doub(g2, mid(g1, b))
    d = crossbow(x, a, g1, b)
    y = doub(g1, mid(g, d))
    c = crossbow(y, a, g, d)
    return c, d


def _line_circle(c: Point, d: Point, a: Point, b: Point, name: str):
    if a == b or c == d:
        raise _undefined(name, (c, d, a, b), "a = b or c = d")
    if not seg_less(c, a, c, d):
        raise _undefined(name, (c, d, a, b), "a not inside the circle")
    if not triangle(a, b, c):
        # centre on the line: lay the radius off both ways along it
        x = lf(c, _axpy(1, b - a, c), c, d)
        return x, doub(x, c), c
    p = drop_perp(a, b, c)
    c1 = doub(c, p)
    e = ext(c, c1, c, d)
    g = ext(e, c1, c, d)
    x = _cci_in_plane(c1, g, e, c, d, _cross(b - a, c - a))
    return x, doub(x, p), p


def line_circle(c: Point, d: Point, a: Point, b: Point) -> Tuple[Point, Point]:
    """Two points of line ab at distance |cd| from c."""
    x, y, _ = _line_circle(c, d, a, b, "line_circle")
    return x, y


def segment_circle(c: Point, d: Point, a: Point, b: Point) -> Point:
    """Point z strictly between a and b with |cz| = |cd|."""
    if not seg_less(c, d, c, b):
        raise _undefined("segment_circle", (c, d, a, b), "b not outside the circle")
    x, _, p = _line_circle(c, d, a, b, "segment_circle")
    # p is the foot from c; b lies outside so p != b, and the crossing between
    # a and b is the one on b's side of p
    return lf(p, b, p, x)


def _plane_triangle(a: Point, b: Point, c: Point, x: Point) -> Tuple[Point, Point]:
    """Points u, v with T(x,u,v), both in plane abc."""
    r0, r1, r2 = right_ref()
    y = lf(b, ats(r0, r1, r2, a, b, c), a, b)
    u = ext(b, a, x, y)
    v = _cci_in_plane(x, u, doub(u, x), u, x, _cross(b - a, c - a))
    return u, v


def plane_meet(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point, x: Point) -> Point:
    """A second common point of planes abc and def, given a common point x."""
    from .geom import coplanar

    if not (coplanar(a, b, c, x) and coplanar(d, e, f, x)):
        raise _undefined("plane_meet", (a, b, c, d, e, f, x), "x not on both planes")
    u, v = _plane_triangle(a, b, c, x)
    s, t = _plane_triangle(d, e, f, x)
    return ortho(ortho(u, x, v), x, ortho(s, x, t))
