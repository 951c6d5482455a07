"""Solid geometry: coplanarity, orthogonals, plane intersections, sides of a plane."""

from __future__ import annotations

from .. import construct as K
from .. import geom as G
from ..geom import _cross, _dot
from .axioms import _mixed_on_line
from .core import spec
from .sampler import Sampler, is_tri, lerp, same_pt


def _pl(a, b, c, x) -> bool:
    return G.coplanar(a, b, c, x)


def _osp(x, y, a, b, c) -> bool:
    return G.side_of_plane(x, y, a, b, c) is G.Side.OPPOSITE


def _ssp(x, y, a, b, c) -> bool:
    return G.side_of_plane(x, y, a, b, c) is G.Side.SAME


def _nc(a, b, c) -> bool:
    return G.colinear(a, b, c, strict=False)


def _plane_pt(s: Sampler, a, b, c):
    """A point of plane abc as an affine combination (sometimes irrational)."""
    u, v = s.q(3, 2), s.q(3, 2)
    if s.coin(s.radical_rate):
        u = u * s.t01()
    return a + (b - a).scale(u) + (c - a).scale(v)


def _plane_tri(s: Sampler, a, b, c):
    while True:
        d, e, f = (_plane_pt(s, a, b, c) for _ in range(3))
        if is_tri(d, e, f):
            return d, e, f


def _space_tri(s: Sampler):
    while True:
        a, b, c = s.space(), s.space(), s.space()
        if is_tri(a, b, c):
            return a, b, c


def _normal(a, b, c):
    return _cross(b - a, c - a)


def _sided(s: Sampler, a, b, c, sign: int):
    """A point off plane abc with the given sign of its normal offset."""
    p = _plane_pt(s, a, b, c)
    return p + _normal(a, b, c).scale(sign * s.pos(3, 3))


def _frame_tri(s: Sampler):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


# -- coplanarity ------------------------------------------------------------------


@spec("THM-solid-accoplanar", "triangle-space", "T(a,b,c)", "PL_abc(a) ∧ PL_abc(c)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: _pl(p.a, p.b, p.c, p.a) and _pl(p.a, p.b, p.c, p.c))
def _acc(s):
    a, b, c = _space_tri(s)
    return dict(a=a, b=b, c=c)


@spec("THM-solid-permute", "plane", "PL_abc(x)", "PL_bac(x) ∧ PL_cba(x)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.x),
      post=lambda p: _pl(p.b, p.a, p.c, p.x) and _pl(p.c, p.b, p.a, p.x))
def _perm(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, x=_plane_pt(s, a, b, c) if s.coin(0.8) else s.off())


@spec("THM-solid-coplanar-transfer-both-ways", "plane",
      "PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f) ∧ T(d,e,f)", "PL_abc(x) ↔ PL_def(x)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and _pl(p.a, p.b, p.c, p.e) and _pl(p.a, p.b, p.c, p.f)
      and G.triangle(p.d, p.e, p.f),
      post=lambda p: _pl(p.a, p.b, p.c, p.x) == _pl(p.d, p.e, p.f, p.x))
def _ctb(s):
    a, b, c = s.tri()
    d, e, f = _plane_tri(s, a, b, c)
    x = _plane_pt(s, a, b, c) if s.coin() else s.off()
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x)


@spec("THM-solid-colinear-coplanar", "plane", "PL_abc(d) ∧ PL_abc(e) ∧ L(d,e,f)", "PL_abc(f)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and _pl(p.a, p.b, p.c, p.e) and G.colinear(p.d, p.e, p.f),
      post=lambda p: _pl(p.a, p.b, p.c, p.f))
def _colcop(s):
    a, b, c = s.tri()
    d = _plane_pt(s, a, b, c)
    e = _plane_pt(s, a, b, c)
    if same_pt(d, e):
        return None
    return dict(a=a, b=b, c=c, d=d, e=e, f=_mixed_on_line(s, d, e))


@spec("THM-solid-parallel-coplanar", "parallel-space", "ab∥cd", "PL_abc(d)",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d), post=lambda p: _pl(p.a, p.b, p.c, p.d))
def _parcop(s):
    a, b, c = _space_tri(s)
    k = s.q(3, 2) or 1
    d = c + (b - a).scale(k) if s.coin(0.85) else s.space()
    return dict(a=a, b=b, c=c, d=d)


# -- orthogonals ---------------------------------------------------------------------


@spec("THM-solid-ortho-not-coplanar", "triangle-space", "T(a,b,c)", "¬PL_abc(o(a,b,c))",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: not _pl(p.a, p.b, p.c, K.ortho(p.a, p.b, p.c)))
def _onc(s):
    a, b, c = _space_tri(s)
    return dict(a=a, b=b, c=c)


def _perp_at(s: Sampler, a, b, c):
    """d off plane abc with bd perpendicular to the plane at b."""
    return b + _normal(a, b, c).scale(s.q(3, 3) or 1)


@spec("THM-solid-perpendicular-to-all-of-plane", "right-space",
      "abd right ∧ cbd right ∧ PL_abc(x) ∧ x≠b", "xbd right",
      pre=lambda p: G.right_angle(p.a, p.b, p.d) and G.right_angle(p.c, p.b, p.d) and _pl(p.a, p.b, p.c, p.x)
      and p.x != p.b,
      post=lambda p: G.right_angle(p.x, p.b, p.d))
def _pap(s):
    a, b, c = _space_tri(s)
    x = _plane_pt(s, a, b, c)
    return dict(a=a, b=b, c=c, d=_perp_at(s, a, b, c), x=x)


@spec("THM-solid-ortho-perpendicular-to-plane", "plane", "PL_abc(x) ∧ x≠b", "x b o(a,b,c) right",
      pre=lambda p: _pl(p.a, p.b, p.c, p.x) and p.x != p.b,
      post=lambda p: G.right_angle(p.x, p.b, K.ortho(p.a, p.b, p.c)))
def _opp(s):
    a, b, c = _space_tri(s)
    return dict(a=a, b=b, c=c, x=_plane_pt(s, a, b, c))


@spec("THM-solid-prop13", "right-space", "T(a,b,c) ∧ abd right ∧ cbd right", "L̃(b,d,o(a,b,c))",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.right_angle(p.a, p.b, p.d) and G.right_angle(p.c, p.b, p.d),
      post=lambda p: _nc(p.b, p.d, K.ortho(p.a, p.b, p.c)))
def _p13(s):
    a, b, c = _space_tri(s)
    d = _perp_at(s, a, b, c) if s.coin(0.85) else s.space()
    return dict(a=a, b=b, c=c, d=d)


def _two_planes(s: Sampler, parallel_shift: bool):
    a, b, c = _space_tri(s)
    d, e, f = _plane_tri(s, a, b, c)
    if parallel_shift:
        off = _normal(a, b, c).scale(s.q(3, 3) or 1)
        d, e, f = d + off, e + off, f + off
    return a, b, c, d, e, f


@spec("THM-solid-orthogonals-parallel", "plane-pair",
      "PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f) ∧ T(d,e,f) ∧ e≠b", "b o(a,b,c) ∥ e o(d,e,f)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and _pl(p.a, p.b, p.c, p.e) and _pl(p.a, p.b, p.c, p.f)
      and G.triangle(p.d, p.e, p.f) and p.e != p.b,
      post=lambda p: G.parallel(p.b, K.ortho(p.a, p.b, p.c), p.e, K.ortho(p.d, p.e, p.f)),
      note="e≠b is required: with e = b the two segments share an endpoint and cannot be parallel.")
def _orthpar(s):
    a, b, c, d, e, f = _two_planes(s, False)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("THM-solid-parallel-to-normal-right", "plane",
      "PL_abc(d) ∧ b o(a,b,c) ∥ de ∧ PL_abc(x) ∧ x≠d", "xde right",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and G.parallel(p.b, K.ortho(p.a, p.b, p.c), p.d, p.e)
      and _pl(p.a, p.b, p.c, p.x) and p.x != p.d,
      post=lambda p: G.right_angle(p.x, p.d, p.e),
      note="x≠d is required for the angle xde to exist.")
def _ptnr(s):
    a, b, c = _space_tri(s)
    d = _plane_pt(s, a, b, c)
    e = d + _normal(a, b, c).scale(s.q(3, 3) or 1)
    return dict(a=a, b=b, c=c, d=d, e=e, x=_plane_pt(s, a, b, c))


@spec("THM-solid-same-plane", "plane-pair",
      "b o(abc) ∥ e o(def) ∧ PL_abc(x) ∧ PL_def(x) ∧ PL_abc(y)", "PL_def(y)",
      pre=lambda p: G.parallel(p.b, K.ortho(p.a, p.b, p.c), p.e, K.ortho(p.d, p.e, p.f))
      and _pl(p.a, p.b, p.c, p.x) and _pl(p.d, p.e, p.f, p.x) and _pl(p.a, p.b, p.c, p.y),
      post=lambda p: _pl(p.d, p.e, p.f, p.y))
def _sp(s):
    a, b, c, d, e, f = _two_planes(s, s.coin(0.2))
    x = _plane_pt(s, a, b, c)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x, y=_plane_pt(s, a, b, c))


@spec("THM-solid-same-plane-corollary", "plane-pair",
      "b o(abc) ∥ e o(def) ∧ PL_abc(x) ∧ ¬PL_def(x)", "¬(PL_abc(y) ∧ PL_def(y))",
      pre=lambda p: G.parallel(p.b, K.ortho(p.a, p.b, p.c), p.e, K.ortho(p.d, p.e, p.f))
      and _pl(p.a, p.b, p.c, p.x) and not _pl(p.d, p.e, p.f, p.x),
      post=lambda p: not (_pl(p.a, p.b, p.c, p.y) and _pl(p.d, p.e, p.f, p.y)))
def _spc(s):
    a, b, c, d, e, f = _two_planes(s, True)
    x = _plane_pt(s, a, b, c)
    y = s.choice([_plane_pt(s, a, b, c), _plane_pt(s, d, e, f), s.space()])
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x, y=y)


# -- plane intersections ---------------------------------------------------------------


def _pm_post(p) -> bool:
    q = K.plane_meet(p.a, p.b, p.c, p.d, p.e, p.f, p.x)
    return _pl(p.a, p.b, p.c, q) and _pl(p.d, p.e, p.f, q) and q != p.x


@spec("THM-solid-plane-meet", "plane-pair", "PL_abc(x) ∧ PL_def(x)", "PL_abc(p) ∧ PL_def(p) ∧ p≠x",
      pre=lambda p: _pl(p.a, p.b, p.c, p.x) and _pl(p.d, p.e, p.f, p.x), post=_pm_post)
def _pm(s):
    a, b, c = _space_tri(s)
    x = _plane_pt(s, a, b, c)
    if s.coin(0.15):
        d, e, f = _plane_tri(s, a, b, c)
    else:
        d = x
        e, f = s.space(), s.space()
        if not is_tri(d, e, f):
            return None
        d, e, f = _plane_tri(s, d, e, f)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x)


@spec("THM-solid-planes-meet-in-lines", "plane-pair",
      "PL_abc(x) ∧ PL_def(x) ∧ PL_abc(y) ∧ PL_def(y) ∧ ¬PL_abc(d)", "L̃(x,y,p), p = plane_meet(abc,def,x)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.x) and _pl(p.d, p.e, p.f, p.x) and _pl(p.a, p.b, p.c, p.y)
      and _pl(p.d, p.e, p.f, p.y) and not _pl(p.a, p.b, p.c, p.d),
      post=lambda p: _nc(p.x, p.y, K.plane_meet(p.a, p.b, p.c, p.d, p.e, p.f, p.x)))
def _pml(s):
    x = s.space()
    y = s.space() if s.coin(0.85) else x
    g, h = s.space(), s.space()
    if same_pt(x, y):
        y = x + (g - h)
    if not (is_tri(x, y, g) and is_tri(x, y, h)):
        return None
    a, b, c = _plane_tri(s, x, y, g)
    d, e, f = _plane_tri(s, x, y, h)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x, y=y)


# -- vertical angle lemmas ----------------------------------------------------------------


def _vert(s: Sampler):
    a, b, c = s.tri()
    return a, b, c, s.beyond(a, b), s.beyond(c, b)


@spec("THM-solid-vertical-lemma-1", "vertical",
      "T(a,b,c) ∧ B(a,b,a') ∧ B(c,b,c') ∧ T(a,b,x) ∧ T(c,b,x) ∧ PL_abc(x)",
      "Int(x,abc) ∨ Int(x,abc') ∨ Int(x,a'bc) ∨ Int(x,a'bc')",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.between(p.a, p.b, p.a2) and G.between(p.c, p.b, p.c2)
      and G.triangle(p.a, p.b, p.x) and G.triangle(p.c, p.b, p.x) and _pl(p.a, p.b, p.c, p.x),
      post=lambda p: G.interior(p.x, p.a, p.b, p.c) or G.interior(p.x, p.a, p.b, p.c2)
      or G.interior(p.x, p.a2, p.b, p.c) or G.interior(p.x, p.a2, p.b, p.c2),
      note="Planar lemma; x is taken in the plane abc.")
def _vl1(s):
    a, b, c, a2, c2 = _vert(s)
    return dict(a=a, b=b, c=c, a2=a2, c2=c2, x=s.pt())


@spec("THM-solid-vertical-lemma-2", "vertical",
      "B(a,b,a') ∧ B(c,b,c') ∧ Int(x,abc) ∧ B(x,b,x')", "Int(x',a'bc')",
      pre=lambda p: G.between(p.a, p.b, p.a2) and G.between(p.c, p.b, p.c2) and G.interior(p.x, p.a, p.b, p.c)
      and G.between(p.x, p.b, p.x2),
      post=lambda p: G.interior(p.x2, p.a2, p.b, p.c2))
def _vl2(s):
    a, b, c, a2, c2 = _vert(s)
    x = lerp(b, s.between(a, c), s.choice([s.t01(), s.gt1()]))
    return dict(a=a, b=b, c=c, a2=a2, c2=c2, x=x, x2=s.beyond(x, b))


# -- sides of a plane ---------------------------------------------------------------------


def _os_pair(s: Sampler, a, b, c, avoid=()):
    """x, y strictly on opposite sides of plane abc, with T(x,v,y) for v in avoid."""
    for _ in range(20):
        x, y = _sided(s, a, b, c, 1), _sided(s, a, b, c, -1)
        if s.coin():
            x, y = y, x
        if all(is_tri(x, v, y) for v in avoid):
            return x, y
    return None


def _ss_pair(s: Sampler, a, b, c):
    sign = 1 if s.coin() else -1
    return _sided(s, a, b, c, sign), _sided(s, a, b, c, sign)


@spec("THM-solid-OS-transfer", "plane-sides",
      "PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f) ∧ T(d,e,f) ∧ OS(x,y,abc) ∧ T(x,e,y)", "OS(x,y,def)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and _pl(p.a, p.b, p.c, p.e) and _pl(p.a, p.b, p.c, p.f)
      and G.triangle(p.d, p.e, p.f) and _osp(p.x, p.y, p.a, p.b, p.c) and G.triangle(p.x, p.e, p.y),
      post=lambda p: _osp(p.x, p.y, p.d, p.e, p.f),
      note="T(x,e,y) is required by the side-of-plane definition relative to def.")
def _ost(s):
    a, b, c, d, e, f = _two_planes(s, False)
    xy = _os_pair(s, a, b, c, (b, e))
    if xy is None:
        return None
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=xy[0], y=xy[1])


@spec("THM-solid-SS-transfer", "plane-sides",
      "PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f) ∧ T(d,e,f) ∧ SS(x,y,abc), x and y strictly on one side", "SS(x,y,def)",
      pre=lambda p: _pl(p.a, p.b, p.c, p.d) and _pl(p.a, p.b, p.c, p.e) and _pl(p.a, p.b, p.c, p.f)
      and G.triangle(p.d, p.e, p.f) and _ssp(p.x, p.y, p.a, p.b, p.c),
      post=lambda p: _ssp(p.x, p.y, p.d, p.e, p.f),
      note="Degenerate same-side pairs (x, b, y colinear) are excluded by the generator.")
def _sst(s):
    a, b, c, d, e, f = _two_planes(s, False)
    x, y = _ss_pair(s, a, b, c)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x, y=y)


@spec("THM-solid-OS-plane-1", "plane-sides", "OS(x,y,abc)", "OS(y,x,abc)",
      pre=lambda p: _osp(p.x, p.y, p.a, p.b, p.c), post=lambda p: _osp(p.y, p.x, p.a, p.b, p.c))
def _osp1(s):
    a, b, c = _space_tri(s)
    xy = _os_pair(s, a, b, c, (b,))
    return None if xy is None else dict(a=a, b=b, c=c, x=xy[0], y=xy[1])


@spec("THM-solid-OS-plane-2", "plane-sides", "OS(x,y,abc) ∧ T(x,a,y) ∧ T(x,c,y)", "OS(x,y,bac) ∧ OS(x,y,cba)",
      pre=lambda p: _osp(p.x, p.y, p.a, p.b, p.c) and G.triangle(p.x, p.a, p.y) and G.triangle(p.x, p.c, p.y),
      post=lambda p: _osp(p.x, p.y, p.b, p.a, p.c) and _osp(p.x, p.y, p.c, p.b, p.a),
      note="T(x,a,y) and T(x,c,y) are required for the permuted planes.")
def _osp2(s):
    a, b, c = _space_tri(s)
    xy = _os_pair(s, a, b, c, (a, b, c))
    return None if xy is None else dict(a=a, b=b, c=c, x=xy[0], y=xy[1])


@spec("THM-solid-OS-plane-3", "plane-sides", "OS(x,y,abc) ∧ OS(y,z,abc)", "SS(x,z,abc)",
      pre=lambda p: _osp(p.x, p.y, p.a, p.b, p.c) and _osp(p.y, p.z, p.a, p.b, p.c),
      post=lambda p: _ssp(p.x, p.z, p.a, p.b, p.c))
def _osp3(s):
    a, b, c = _space_tri(s)
    xy = _os_pair(s, a, b, c, (b,))
    if xy is None:
        return None
    x, y = xy
    sx = _dot(_normal(a, b, c), x - a).sign()
    return dict(a=a, b=b, c=c, x=x, y=y, z=_sided(s, a, b, c, sx))


@spec("THM-solid-SS-plane-1", "plane-sides", "T(a,b,c) ∧ ¬PL_abc(x)", "SS(x,x,abc)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and not _pl(p.a, p.b, p.c, p.x),
      post=lambda p: _ssp(p.x, p.x, p.a, p.b, p.c))
def _ssp1(s):
    a, b, c = _space_tri(s)
    return dict(a=a, b=b, c=c, x=_sided(s, a, b, c, 1 if s.coin() else -1))


@spec("THM-solid-SS-plane-2", "plane-sides", "SS(x,y,abc)", "SS(y,x,abc)",
      pre=lambda p: _ssp(p.x, p.y, p.a, p.b, p.c), post=lambda p: _ssp(p.y, p.x, p.a, p.b, p.c),
      note="Includes degenerate same-side pairs with x, b, y colinear.")
def _ssp2(s):
    a, b, c = _space_tri(s)
    if s.coin(0.2):
        x = _sided(s, a, b, c, 1)
        return dict(a=a, b=b, c=c, x=x, y=s.beyond(x, b))
    x, y = _ss_pair(s, a, b, c)
    return dict(a=a, b=b, c=c, x=x, y=y)


@spec("THM-solid-SS-plane-3", "plane-sides", "SS(x,y,abc), x and y strictly on one side", "SS(x,y,bac) ∧ SS(x,y,cba)",
      pre=lambda p: _ssp(p.x, p.y, p.a, p.b, p.c), post=lambda p: _ssp(p.x, p.y, p.b, p.a, p.c)
      and _ssp(p.x, p.y, p.c, p.b, p.a),
      note="Degenerate same-side pairs (x, b, y colinear) are excluded by the generator.")
def _ssp3(s):
    a, b, c = _space_tri(s)
    x, y = _ss_pair(s, a, b, c)
    return dict(a=a, b=b, c=c, x=x, y=y)


@spec("THM-solid-SS-plane-4", "plane-sides", "SS(x,y,abc) ∧ SS(y,z,abc), strictly on one side", "SS(x,z,abc)",
      pre=lambda p: _ssp(p.x, p.y, p.a, p.b, p.c) and _ssp(p.y, p.z, p.a, p.b, p.c),
      post=lambda p: _ssp(p.x, p.z, p.a, p.b, p.c),
      note="Degenerate same-side pairs (x, b, y colinear) are excluded by the generator.")
def _ssp4(s):
    a, b, c = _space_tri(s)
    sign = 1 if s.coin() else -1
    x, y, z = (_sided(s, a, b, c, sign) for _ in range(3))
    return dict(a=a, b=b, c=c, x=x, y=y, z=z)


@spec("THM-solid-SS-OS-plane", "plane-sides", "SS(x,y,abc) ∧ OS(y,z,abc) ∧ T(x,b,z)", "OS(x,z,abc)",
      pre=lambda p: _ssp(p.x, p.y, p.a, p.b, p.c) and _osp(p.y, p.z, p.a, p.b, p.c) and G.triangle(p.x, p.b, p.z),
      post=lambda p: _osp(p.x, p.z, p.a, p.b, p.c),
      note="The printed conclusion names SS; OS is the relation that holds.")
def _ssos(s):
    a, b, c = _space_tri(s)
    sign = 1 if s.coin() else -1
    x, y = _sided(s, a, b, c, sign), _sided(s, a, b, c, sign)
    return dict(a=a, b=b, c=c, x=x, y=y, z=_sided(s, a, b, c, -sign))
