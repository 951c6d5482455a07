"""Construction and relation names available in scripts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from .. import construct as K
from .. import geom as G


@dataclass(frozen=True)
class Func:
    arity: int
    fn: Callable
    doc: str


@dataclass(frozen=True)
class Rel:
    arity: int
    fn: Callable
    # index pairs drawn as segments in rendered figures
    segments: Tuple[Tuple[int, int], ...]


FUNCS: Dict[str, Func] = {
    "ext": Func(4, K.ext, "extend ab beyond b by |cd|"),
    "doub": Func(2, K.doub, "reflection of a through b"),
    "lf": Func(4, K.lf, "lay off |cd| from a toward b"),
    "mid": Func(2, K.mid, "midpoint"),
    "ats": Func(6, K.ats, "copy angle abc onto ray ed, on f's side"),
    "ato": Func(6, K.ato, "copy angle abc onto ray ed, opposite f"),
    "cb": Func(4, K.crossbow, "crossbow: line bd meets segment ac"),
    "cci": Func(5, K.cci, "circle-circle intersection"),
    "cci2": Func(5, K.cci_second, "the other circle-circle intersection"),
    "ortho": Func(3, K.ortho, "orthogonal point at b"),
    "dropperp": Func(3, K.drop_perp, "foot of the perpendicular from c to ab"),
    "erectperp": Func(4, K.erect_perp, "perpendicular erected at a point of ab"),
    "bisect": Func(3, K.angle_bisector, "point on the bisector of angle abc"),
    "apex": Func(2, K.isosceles_apex, "apex of an isosceles triangle on ab"),
    "trisect1": Func(2, lambda a, b: K.trisect(a, b)[0], "first trisection point"),
    "trisect2": Func(2, lambda a, b: K.trisect(a, b)[1], "second trisection point"),
    "lci1": Func(4, lambda c, d, a, b: K.line_circle(c, d, a, b)[0], "first line-circle point"),
    "lci2": Func(4, lambda c, d, a, b: K.line_circle(c, d, a, b)[1], "second line-circle point"),
    "sci": Func(4, K.segment_circle, "segment-circle point"),
    "planemeet": Func(7, K.plane_meet, "second common point of two planes"),
}

_TRI = ((0, 1), (1, 2), (2, 0))
_ANG2 = ((0, 1), (1, 2), (3, 4), (4, 5))
_QUAD = ((0, 1), (1, 2), (2, 3), (3, 0))


def _ssp(x, y, a, b, c):
    return G.side_of_plane(x, y, a, b, c) is G.Side.SAME


def _osp(x, y, a, b, c):
    return G.side_of_plane(x, y, a, b, c) is G.Side.OPPOSITE


RELS: Dict[str, Rel] = {
    "B": Rel(3, G.between, ((0, 2),)),
    "L": Rel(3, G.colinear, ((0, 1), (1, 2))),
    "Lt": Rel(3, lambda a, b, c: G.colinear(a, b, c, strict=False), ((0, 1), (1, 2))),
    "T": Rel(3, G.triangle, _TRI),
    "SD": Rel(3, G.same_direction, ((0, 1), (0, 2))),
    "C": Rel(4, G.seg_congruent, ((0, 1), (2, 3))),
    "AC": Rel(6, G.angle_congruent, _ANG2),
    "SO": Rel(6, G.same_orientation, _ANG2),
    "OO": Rel(6, G.opposite_orientation, _ANG2),
    "SS": Rel(4, G.same_side, ((2, 3),)),
    "OS": Rel(4, G.opposite_side, ((2, 3), (0, 1))),
    "Int": Rel(4, G.interior, ((2, 1), (2, 3), (2, 0))),
    "PL": Rel(4, G.coplanar, _TRI),
    "SSP": Rel(5, _ssp, ((2, 3), (3, 4), (4, 2))),
    "OSP": Rel(5, _osp, ((2, 3), (3, 4), (4, 2), (0, 1))),
    "Par": Rel(4, G.parallel, ((0, 1), (2, 3))),
    "SegLt": Rel(4, G.seg_less, ((0, 1), (2, 3))),
    "AngLt": Rel(6, G.angle_less, _ANG2),
    "Right": Rel(3, G.right_angle, ((0, 1), (1, 2))),
    "Pgram": Rel(4, G.parallelogram, _QUAD),
    "PgramN": Rel(4, lambda a, b, c, d: G.parallelogram(a, b, c, d, mode="nonflat"), _QUAD),
    "CQuad": Rel(4, G.convex_quad, _QUAD),
}
