"""Points and exact relations of the geometry.

Every predicate reduces to exact sign tests on ConstructibleReal values, so
verdicts never depend on floating point.  Degenerate inputs yield ``False``
(or :attr:`Side.NEITHER`) rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Tuple

from .exactnum import ConstructibleReal, Q
from .exactnum.real import _coerce

__all__ = [
    "ALPHA",
    "BETA",
    "GAMMA",
    "BASE",
    "BaseTriple",
    "DegenerateAngle",
    "AnglePair",
    "P",
    "Point",
    "RelationQuery",
    "Side",
    "ARITY",
    "angle_congruent",
    "angle_less",
    "angle_pair_class",
    "between",
    "colinear",
    "convex_quad",
    "coplanar",
    "interior",
    "opposite_orientation",
    "opposite_side",
    "parallel",
    "parallelogram",
    "right_angle",
    "same_direction",
    "same_orientation",
    "same_side",
    "seg_congruent",
    "seg_less",
    "side_of_line",
    "side_of_plane",
    "supplementary",
    "triangle",
    "vertical",
]


@dataclass(frozen=True, eq=False)
class Point:
    x: ConstructibleReal
    y: ConstructibleReal
    z: ConstructibleReal

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, ConstructibleReal):
                object.__setattr__(self, name, _coerce(v))

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return (
            (self.x - other.x).sign() == 0
            and (self.y - other.y).sign() == 0
            and (self.z - other.z).sign() == 0
        )

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __add__(self, o: "Point") -> "Point":
        return Point(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Point") -> "Point":
        return Point(self.x - o.x, self.y - o.y, self.z - o.z)

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k, self.z * k)

    def to_exprs(self) -> Tuple[str, str, str]:
        return (self.x.to_expr(), self.y.to_expr(), self.z.to_expr())

    def to_decimals(self) -> Tuple[str, str, str]:
        return (self.x.to_decimal(), self.y.to_decimal(), self.z.to_decimal())

    def __repr__(self) -> str:
        return "P(" + ", ".join(self.to_exprs()) + ")"


def P(x, y, z=0) -> Point:
    """Point from rationals (ints, Fractions, ``"p/q"`` strings) or reals."""
    return Point(_coerce(x), _coerce(y), _coerce(z))


@dataclass(frozen=True)
class BaseTriple:
    alpha: Point
    beta: Point
    gamma: Point


ALPHA = P(0, 0, 0)
BETA = P(1, 0, 0)
GAMMA = P(0, 1, 0)
BASE = BaseTriple(ALPHA, BETA, GAMMA)


class Side(Enum):
    SAME = "Same"
    OPPOSITE = "Opposite"
    NEITHER = "Neither"


class AnglePair(Enum):
    SUPPLEMENTARY = "Supplementary"
    VERTICAL = "Vertical"
    NEITHER = "Neither"


class DegenerateAngle(ValueError):
    """An angle argument is not a triangle."""


ARITY = {
    "B": 3, "L": 3, "Lt": 3, "T": 3, "SD": 3, "C": 4, "AC": 6, "SO": 6, "OO": 6,
    "SS": 4, "OS": 4, "Int": 4, "PL": 4, "SSP": 5, "OSP": 5, "Par": 4,
    "SegLt": 4, "AngLt": 6, "Right": 3, "Pgram": 4, "PgramN": 4, "CQuad": 4,
    "Suppl": 4, "Vert": 5,
}


@dataclass(frozen=True)
class RelationQuery:
    kind: str
    args: Tuple[Point, ...]
    verdict: bool

    def __post_init__(self) -> None:
        if ARITY.get(self.kind) != len(self.args):
            raise ValueError(f"{self.kind} expects {ARITY.get(self.kind)} points")


# -- exact vector helpers ----------------------------------------------------


def _dot(u: Point, v: Point) -> ConstructibleReal:
    return u.x * v.x + u.y * v.y + u.z * v.z


def _cross(u: Point, v: Point) -> Point:
    return Point(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


def _d2(a: Point, b: Point) -> ConstructibleReal:
    d = a - b
    return _dot(d, d)


def _is_zero_vec(v: Point) -> bool:
    # cheap components first: float filters settle most nonzero cases
    return v.x.sign() == 0 and v.y.sign() == 0 and v.z.sign() == 0


def _det(u: Point, v: Point, w: Point) -> ConstructibleReal:
    return _dot(u, _cross(v, w))


# -- order and incidence -----------------------------------------------------


def between(a: Point, b: Point, c: Point) -> bool:
    """B(a,b,c): b strictly inside segment ac."""
    if _dot(a - b, c - b).sign() >= 0:
        return False
    return _is_zero_vec(_cross(b - a, c - a))


def colinear(a: Point, b: Point, c: Point, strict: bool = True) -> bool:
    """L (strict) or L-tilde (nonstrict) colinearity."""
    if not strict:
        return _is_zero_vec(_cross(b - a, c - a))
    return between(a, b, c) or between(a, c, b) or between(b, a, c)


def triangle(a: Point, b: Point, c: Point) -> bool:
    return not _is_zero_vec(_cross(b - a, c - a))


def same_direction(a: Point, b: Point, c: Point) -> bool:
    """SD(a,b,c) as the four-case disjunction."""
    if between(a, b, c) or between(a, c, b):
        return True
    ab = a == b
    cb = c == b
    return (not ab and cb) or (ab and not cb)


# -- congruence ----------------------------------------------------------------


def seg_congruent(a: Point, b: Point, c: Point, d: Point) -> bool:
    return (_d2(a, b) - _d2(c, d)).sign() == 0


def seg_less(a: Point, b: Point, c: Point, d: Point) -> bool:
    """ab < cd by squared lengths."""
    return (_d2(a, b) - _d2(c, d)).sign() < 0


def angle_congruent(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> bool:
    if not (triangle(a, b, c) and triangle(d, e, f)):
        return False
    p = _dot(a - b, c - b)
    q = _dot(d - e, f - e)
    if p.sign() != q.sign():
        return False
    lhs = p * p * _d2(d, e) * _d2(f, e)
    rhs = q * q * _d2(a, b) * _d2(c, b)
    return (lhs - rhs).sign() == 0


# -- orientation -------------------------------------------------------------


def coplanar(a: Point, b: Point, c: Point, d: Point) -> bool:
    """PL_abc(d)."""
    if not triangle(a, b, c):
        return False
    return _det(b - a, c - a, d - a).sign() == 0


def _orientation_dot(a, b, c, d, e, f):
    """None unless both triples are triangles and d,e,f lie in plane abc."""
    n1 = _cross(a - b, c - b)
    if _is_zero_vec(n1):
        return None
    n2 = _cross(d - e, f - e)
    if _is_zero_vec(n2):
        return None
    for p in (d, e, f):
        if _dot(n1, p - b).sign() != 0:
            return None
    return _dot(n1, n2).sign()


def same_orientation(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> bool:
    s = _orientation_dot(a, b, c, d, e, f)
    return s is not None and s > 0


def opposite_orientation(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> bool:
    s = _orientation_dot(a, b, c, d, e, f)
    return s is not None and s <= 0


def interior(d: Point, a: Point, b: Point, c: Point) -> bool:
    """Int(d, abc)."""
    return same_orientation(c, b, d, c, b, a) and same_orientation(a, b, d, a, b, c)


def same_side(c: Point, d: Point, a: Point, b: Point) -> bool:
    """SS(c,d,ab)."""
    return same_orientation(a, b, c, a, b, d)


def opposite_side(c: Point, d: Point, a: Point, b: Point) -> bool:
    """OS(c,d,ab)."""
    return opposite_orientation(a, b, c, a, b, d)


def side_of_line(c: Point, d: Point, a: Point, b: Point) -> Side:
    s = _orientation_dot(a, b, c, a, b, d)
    if s is None:
        return Side.NEITHER
    return Side.SAME if s > 0 else Side.OPPOSITE


def angle_less(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> bool:
    """abc < def, evaluated through the angle transport construction."""
    if not (triangle(a, b, c) and triangle(d, e, f)):
        raise DegenerateAngle("angle_less needs two non-degenerate angles")
    from .construct import ats

    return interior(ats(a, b, c, d, e, f), d, e, f)


def right_angle(a: Point, b: Point, c: Point) -> bool:
    return triangle(a, b, c) and _dot(a - b, c - b).sign() == 0


def supplementary(d: Point, b: Point, a: Point, c: Point) -> bool:
    """Angles dba and dbc are supplementary."""
    return between(a, b, c) and triangle(a, c, d)


def vertical(a: Point, b: Point, c: Point, d: Point, e: Point) -> bool:
    """Angle acd is vertical to angle bce."""
    return between(a, c, b) and between(d, c, e) and triangle(a, c, d)


def angle_pair_class(first: Sequence[Point], second: Sequence[Point]) -> AnglePair:
    """Classify two angles given as (arm, vertex, arm) triples."""
    p, v, q = first
    r, w, s = second
    if v != w:
        return AnglePair.NEITHER
    for x1, y1 in ((p, q), (q, p)):
        for x2, y2 in ((r, s), (s, r)):
            if x1 == x2 and supplementary(x1, v, y1, y2):
                return AnglePair.SUPPLEMENTARY
            if vertical(x1, x2, v, y1, y2):
                return AnglePair.VERTICAL
    return AnglePair.NEITHER


# -- space -------------------------------------------------------------------


def side_of_plane(x: Point, y: Point, a: Point, b: Point, c: Point) -> Side:
    n = _cross(b - a, c - a)
    if _is_zero_vec(n):
        return Side.NEITHER
    sx = _dot(n, x - a).sign()
    sy = _dot(n, y - a).sign()
    if sx == 0 or sy == 0:
        return Side.NEITHER
    if sx * sy < 0 and triangle(x, b, y):
        return Side.OPPOSITE
    return Side.SAME


# -- parallels -----------------------------------------------------------------


def parallel(a: Point, b: Point, c: Point, d: Point) -> bool:
    """ab parallel cd, via doub(b, mid(a,c))."""
    from .construct import doub, mid

    if not triangle(a, b, c) or c == d:
        return False
    return colinear(c, doub(b, mid(a, c)), d, strict=False)


def parallelogram(a: Point, b: Point, c: Point, d: Point, mode: str = "flat-allowed") -> bool:
    from .construct import mid

    if mode == "convex":
        return convex_quad(a, b, c, d)
    flat = mid(a, c) == mid(b, d)
    if mode == "flat-allowed":
        return flat
    if mode == "nonflat":
        return flat and triangle(a, b, c)
    raise ValueError(f"unknown parallelogram mode {mode!r}")


def convex_quad(a: Point, b: Point, c: Point, d: Point) -> bool:
    return interior(d, a, b, c) and interior(a, b, c, d)


def points_of(*pts: Iterable[Point]) -> list:
    return [p for group in pts for p in group]
