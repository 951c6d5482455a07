"""The 36 axioms, numbered in order of appearance (modified 6 and 31 in place)."""

from __future__ import annotations

from .. import construct as K
from .. import geom as G
from .core import always, spec
from .sampler import Sampler, apply, d2, is_tri, lerp, orient_sign, same_pt


def _pair(s: Sampler):
    a = s.pt()
    return a, s.distinct(a)


def _mixed_on_line(s: Sampler, a, c):
    """Interior, exterior or random point of line ac, or a plain random point."""
    r = s.rng.random()
    if r < 0.4:
        return s.between(a, c)
    if r < 0.6:
        return s.beyond(a, c)
    if r < 0.8:
        return s.beyond(c, a)
    if r < 0.9:
        return s.choice([a, c])
    return s.pt()


def _oriented(s: Sampler, ref, want: int):
    """A triangle in the frame plane whose orientation against ``ref`` has sign ``want``."""
    d, e, f = s.tri()
    if orient_sign(*ref, d, e, f) != want:
        d, f = f, d
    return d, e, f


def _similar(s: Sampler, a, b, c, mirror: bool = False):
    """A copy of angle abc placed elsewhere, arms rescaled independently."""
    e = s.space()
    rf = s.rotation()
    va, vc = (a - b).scale(s.pos(3, 3)), (c - b).scale(s.pos(3, 3))
    d, f = e + apply(rf, va), e + apply(rf, vc)
    return (f, e, d) if mirror else (d, e, f)


# -- order ---------------------------------------------------------------------


@spec("AX01-between-distinct", "interpolate", "B(a,b,c)", "a≠b ∧ a≠c",
      pre=lambda p: G.between(p.a, p.b, p.c),
      post=lambda p: p.a != p.b and p.a != p.c)
def _ax01(s):
    a, c = _pair(s)
    return dict(a=a, b=_mixed_on_line(s, a, c), c=c)


@spec("AX02-between-reverse", "interpolate", "B(a,b,c)", "B(c,b,a)",
      pre=lambda p: G.between(p.a, p.b, p.c),
      post=lambda p: G.between(p.c, p.b, p.a))
def _ax02(s):
    a, c = _pair(s)
    return dict(a=a, b=_mixed_on_line(s, a, c), c=c)


@spec("AX03-between-exclusive", "line-mix", "true", "¬(B(a,b,c) ∧ B(a,c,b))",
      pre=always,
      post=lambda p: not (G.between(p.a, p.b, p.c) and G.between(p.a, p.c, p.b)))
def _ax03(s):
    a, c = _pair(s)
    return dict(a=a, b=_mixed_on_line(s, a, c), c=c)


@spec("AX04-unique-line", "colinear", "L(a,b,c) ∧ L(a,b,d) ∧ c≠d", "L(a,c,d)",
      pre=lambda p: G.colinear(p.a, p.b, p.c) and G.colinear(p.a, p.b, p.d) and p.c != p.d,
      post=lambda p: G.colinear(p.a, p.c, p.d),
      note="As printed the axiom fails for c = d (L(a,c,c) is false); the premise c≠d is made explicit.")
def _ax04(s):
    a, b = _pair(s)
    return dict(a=a, b=b, c=_mixed_on_line(s, a, b), d=_mixed_on_line(s, a, b))


@spec("AX05-base-triangle", "constant", "true", "T(α,β,γ)",
      pre=always, post=lambda p: G.triangle(G.ALPHA, G.BETA, G.GAMMA))
def _ax05(s):
    return {}


# -- orientation -------------------------------------------------------------------


@spec("AX06-SO-triangles-coplanar", "orientation", "SO(abc,def)",
      "T(a,b,c) ∧ T(d,e,f) ∧ PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f)",
      pre=lambda p: G.same_orientation(p.a, p.b, p.c, p.d, p.e, p.f),
      post=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f)
      and G.coplanar(p.a, p.b, p.c, p.d) and G.coplanar(p.a, p.b, p.c, p.e) and G.coplanar(p.a, p.b, p.c, p.f),
      note="Modified form with coplanarity conclusions.")
def _ax06(s):
    a, b, c = s.tri()
    d, e, f = _oriented(s, (a, b, c), 1)
    if s.coin(0.1):
        d = s.off()
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("AX07-SO-reflexive", "triangle", "T(a,b,c)", "SO(abc,abc)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.same_orientation(p.a, p.b, p.c, p.a, p.b, p.c),
      note="SO implies T(a,b,c), so reflexivity is read for triangles.")
def _ax07(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("AX08-SO-symmetric-transitive", "orientation", "SO(abc,def) ∧ SO(def,ghi)",
      "SO(def,abc) ∧ SO(abc,ghi)",
      pre=lambda p: G.same_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
      and G.same_orientation(p.d, p.e, p.f, p.g, p.h, p.i),
      post=lambda p: G.same_orientation(p.d, p.e, p.f, p.a, p.b, p.c)
      and G.same_orientation(p.a, p.b, p.c, p.g, p.h, p.i),
      note="Printed form SO(abc,def) ∧ SO(abc,ghi) → SO(abc,ghi) is vacuous; symmetry and transitivity are checked instead.")
def _ax08(s):
    a, b, c = s.tri()
    d, e, f = _oriented(s, (a, b, c), 1)
    g, h, i = _oriented(s, (a, b, c), 1)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i)


@spec("AX09-SO-ray", "ray", "T(a,b,c) ∧ SD(b,a,e)", "SO(abc,ebc)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.same_direction(p.b, p.a, p.e),
      post=lambda p: G.same_orientation(p.a, p.b, p.c, p.e, p.b, p.c))
def _ax09(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, e=s.ray_point(b, a))


@spec("AX10-OO-reverse", "triangle", "T(a,b,c)", "OO(abc,cba)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.opposite_orientation(p.a, p.b, p.c, p.c, p.b, p.a))
def _ax10(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("AX11-OO-OO-SO", "orientation", "OO(abc,def) ∧ OO(def,ghi)", "SO(abc,ghi)",
      pre=lambda p: G.opposite_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
      and G.opposite_orientation(p.d, p.e, p.f, p.g, p.h, p.i),
      post=lambda p: G.same_orientation(p.a, p.b, p.c, p.g, p.h, p.i))
def _ax11(s):
    a, b, c = s.tri()
    d, e, f = _oriented(s, (a, b, c), -1)
    g, h, i = _oriented(s, (a, b, c), 1)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i)


@spec("AX12-intersect-OO", "interpolate", "B(a,b,c) ∧ T(a,c,d)", "OO(dba,dbc)",
      pre=lambda p: G.between(p.a, p.b, p.c) and G.triangle(p.a, p.c, p.d),
      post=lambda p: G.opposite_orientation(p.d, p.b, p.a, p.d, p.b, p.c))
def _ax12(s):
    a, c, d = s.tri()
    return dict(a=a, b=s.between(a, c), c=c, d=d)


def _opposite_sides(s: Sampler, b, d):
    """a, c strictly on opposite sides of line bd in the frame plane."""
    a = s.off_line(b, d)
    c = s.off_line(b, d)
    if s.side(b, d, a) == s.side(b, d, c):
        c = s.other_side(b, d, c)
    return a, c


@spec("AX13-crossbow", "opposite-sides", "OO(dba,dbc)", "L̃(b,cb(d,abc),d) ∧ B(a,cb(d,abc),c)",
      pre=lambda p: G.opposite_orientation(p.d, p.b, p.a, p.d, p.b, p.c),
      post=lambda p: _crossbow_post(p))
def _ax13(s):
    b, d = _pair(s)
    a, c = _opposite_sides(s, b, d)
    return dict(a=a, b=b, c=c, d=d)


def _crossbow_post(p):
    x = K.crossbow(p.d, p.a, p.b, p.c)
    return G.colinear(p.b, x, p.d, strict=False) and G.between(p.a, x, p.c)


@spec("AX14-triangle-OO", "triangle", "T(a,b,c)", "OO(abc,bac)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.opposite_orientation(p.a, p.b, p.c, p.b, p.a, p.c))
def _ax14(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


# -- congruence ------------------------------------------------------------------------


@spec("AX15-segment-reflexive", "points", "true", "C(ab,ab) ∧ C(ab,ba)",
      pre=always,
      post=lambda p: G.seg_congruent(p.a, p.b, p.a, p.b) and G.seg_congruent(p.a, p.b, p.b, p.a))
def _ax15(s):
    a = s.space()
    return dict(a=a, b=a if s.coin(0.1) else s.space())


def _ext_inputs(s: Sampler, allow_null: bool):
    a = s.space()
    b = s.space()
    while same_pt(a, b):
        b = s.space()
    c = s.space()
    d = c if allow_null and s.coin(0.15) else s.space()
    if s.coin(s.radical_rate):
        d = lerp(c, d, s.t01())
    return dict(a=a, b=b, c=c, d=d)


@spec("AX16-ext-congruent", "points", "a≠b", "C(b,ext(ab,cd),c,d)",
      pre=lambda p: p.a != p.b,
      post=lambda p: G.seg_congruent(p.b, K.ext(p.a, p.b, p.c, p.d), p.c, p.d))
def _ax16(s):
    return _ext_inputs(s, True)


@spec("AX17-ext-between", "points", "a≠b ∧ c≠d", "B(a,b,ext(ab,cd))",
      pre=lambda p: p.a != p.b and p.c != p.d,
      post=lambda p: G.between(p.a, p.b, K.ext(p.a, p.b, p.c, p.d)))
def _ax17(s):
    return _ext_inputs(s, False)


@spec("AX18-ext-unique", "extension", "(B(a,b,x) ∨ b=x) ∧ C(bx,cd)", "x = ext(ab,cd)",
      pre=lambda p: (G.between(p.a, p.b, p.x) or p.b == p.x) and G.seg_congruent(p.b, p.x, p.c, p.d)
      and p.a != p.b,
      post=lambda p: p.x == K.ext(p.a, p.b, p.c, p.d),
      note="a≠b is implicit: B(a,b,x) forces it, and b=x with a=b leaves ext undefined.")
def _ax18(s):
    a = s.space()
    b = s.space()
    while same_pt(a, b):
        b = s.space()
    x = b if s.coin(0.15) else s.beyond(a, b)
    c = s.space()
    d = c + s.rotate(x - b)
    return dict(a=a, b=b, x=x, c=c, d=d)


def _congruent_copy(s: Sampler, a, b):
    c = s.space()
    return c, c + s.rotate(b - a)


@spec("AX19-segment-transitive", "rotation", "C(ab,cd) ∧ C(ab,ef)", "C(cd,ef)",
      pre=lambda p: G.seg_congruent(p.a, p.b, p.c, p.d) and G.seg_congruent(p.a, p.b, p.e, p.f),
      post=lambda p: G.seg_congruent(p.c, p.d, p.e, p.f))
def _ax19(s):
    a, b = s.space(), s.space()
    if s.coin(s.radical_rate):
        b = lerp(a, b, s.t01())
    c, d = _congruent_copy(s, a, b)
    e, f = _congruent_copy(s, b, a)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("AX20-segment-addition", "rotation", "B(a,b,c) ∧ B(d,e,f) ∧ C(ab,de) ∧ C(bc,ef)", "C(ac,df)",
      pre=lambda p: G.between(p.a, p.b, p.c) and G.between(p.d, p.e, p.f)
      and G.seg_congruent(p.a, p.b, p.d, p.e) and G.seg_congruent(p.b, p.c, p.e, p.f),
      post=lambda p: G.seg_congruent(p.a, p.c, p.d, p.f))
def _ax20(s):
    a, c = _pair(s)
    b = s.between(a, c)
    d = s.space()
    rf = s.rotation()
    e = d + apply(rf, b - a)
    f = e + apply(rf, c - b)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("AX21-AC-triangles", "similar", "AC(abc,def)", "T(a,b,c) ∧ T(d,e,f)",
      pre=lambda p: G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f),
      post=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f))
def _ax21(s):
    a, b, c = s.tri()
    d, e, f = _similar(s, a, b, c, mirror=s.coin())
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("AX22-ats", "two-triangles", "T(a,b,c) ∧ T(d,e,f)",
      "AC(abc,de·ats) ∧ SS(ats,f,de) ∧ C(bc,e·ats)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f),
      post=lambda p: _ats_post(p))
def _ax22(s):
    a, b, c = s.tri()
    s.new_frame()
    d, e, f = s.tri()
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


def _ats_post(p):
    x = K.ats(p.a, p.b, p.c, p.d, p.e, p.f)
    return (G.angle_congruent(p.a, p.b, p.c, p.d, p.e, x) and G.same_side(x, p.f, p.d, p.e)
            and G.seg_congruent(p.b, p.c, p.e, x))


@spec("AX23-ats-unique", "angle-copy", "AC(abc,dex) ∧ SS(f,x,de) ∧ C(bc,ex)", "x = ats(abc,def)",
      pre=lambda p: G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.x) and G.same_side(p.f, p.x, p.d, p.e)
      and G.seg_congruent(p.b, p.c, p.e, p.x),
      post=lambda p: p.x == K.ats(p.a, p.b, p.c, p.d, p.e, p.f))
def _ax23(s):
    d, e, f = s.tri()
    x = s.off_line(d, e)
    if s.side(d, e, x) != s.side(d, e, f):
        x = s.other_side(d, e, x)
    if s.coin(s.radical_rate):
        x = lerp(e, x, s.t01() + 1)
    # angle abc is a rotated, rescaled copy of dex, so the premise holds by construction
    rf = s.rotation()
    b = s.space()
    a = b + apply(rf, (d - e).scale(s.pos(3, 3)))
    c = b + apply(rf, x - e)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x)


@spec("AX24-same-ray-AC", "ray", "SD(b,c,d) ∧ T(a,b,c)", "AC(abc,abd)",
      pre=lambda p: G.same_direction(p.b, p.c, p.d) and G.triangle(p.a, p.b, p.c),
      post=lambda p: G.angle_congruent(p.a, p.b, p.c, p.a, p.b, p.d))
def _ax24(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=s.ray_point(b, c))


@spec("AX25-AC-reflexive-reverse", "triangle", "T(a,b,c)", "AC(abc,abc) ∧ AC(abc,cba)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.angle_congruent(p.a, p.b, p.c, p.a, p.b, p.c)
      and G.angle_congruent(p.a, p.b, p.c, p.c, p.b, p.a),
      note="AC implies T, so the axiom is read for triangles.")
def _ax25(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("AX26-AC-transitive", "similar", "AC(abc,def) ∧ AC(abc,ghi)", "AC(def,ghi)",
      pre=lambda p: G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f)
      and G.angle_congruent(p.a, p.b, p.c, p.g, p.h, p.i),
      post=lambda p: G.angle_congruent(p.d, p.e, p.f, p.g, p.h, p.i))
def _ax26(s):
    a, b, c = s.tri()
    d, e, f = _similar(s, a, b, c, mirror=s.coin())
    g, h, i = _similar(s, a, b, c, mirror=s.coin())
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i)


@spec("AX27-SAS", "congruent", "T(a,b,c) ∧ T(d,e,f) ∧ C(ab,de) ∧ C(ac,df) ∧ AC(bac,edf)", "AC(abc,def)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f)
      and G.seg_congruent(p.a, p.b, p.d, p.e) and G.seg_congruent(p.a, p.c, p.d, p.f)
      and G.angle_congruent(p.b, p.a, p.c, p.e, p.d, p.f),
      post=lambda p: G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f))
def _ax27(s):
    a, b, c = s.tri()
    o = s.space()
    rf = s.rotation()

    def img(p):
        return o + apply(rf, p - a)

    return dict(a=a, b=b, c=c, d=img(a), e=img(b), f=img(c))


# -- midpoints ------------------------------------------------------------------------------


@spec("AX28-midpoint", "points", "a≠b", "B(a,mid(a,b),b) ∧ C(a·mid(a,b), b·mid(a,b))",
      pre=lambda p: p.a != p.b,
      post=lambda p: G.between(p.a, K.mid(p.a, p.b), p.b)
      and G.seg_congruent(p.a, K.mid(p.a, p.b), p.b, K.mid(p.a, p.b)),
      note="The printed congruence C(ac,bc) has an unbound c; read with c = mid(a,b).")
def _ax28(s):
    a, b = s.space(), s.space()
    if s.coin(s.radical_rate):
        b = lerp(a, b, s.t01() + 1)
    return dict(a=a, b=b)


@spec("AX29-midpoint-idempotent", "points", "true", "mid(a,a) = a",
      pre=always, post=lambda p: K.mid(p.a, p.a) == p.a)
def _ax29(s):
    a = s.space()
    if s.coin(s.radical_rate):
        a = lerp(a, s.space(), s.t01())
    return dict(a=a)


@spec("AX30-bisymmetry", "points", "true", "mid(mid(a,b),mid(c,d)) = mid(mid(a,c),mid(b,d))",
      pre=always,
      post=lambda p: K.mid(K.mid(p.a, p.b), K.mid(p.c, p.d)) == K.mid(K.mid(p.a, p.c), K.mid(p.b, p.d)))
def _ax30(s):
    pts = [s.space() for _ in range(4)]
    if s.coin(s.radical_rate):
        pts[0] = lerp(pts[0], pts[1], s.t01())
    return dict(zip("abcd", pts))


# -- circles --------------------------------------------------------------------------------


def _cci_premise(p) -> bool:
    return (G.seg_congruent(p.c1, p.a, p.c1, p.b) and G.seg_less(p.c2, p.a, p.c2, p.d)
            and G.seg_less(p.c2, p.d, p.c2, p.b)
            and G.coplanar(p.a, p.c1, p.b, p.d) and G.coplanar(p.a, p.c1, p.b, p.c2))


def _cci_post(p) -> bool:
    x = K.cci(p.c1, p.a, p.b, p.c2, p.d)
    return (G.seg_congruent(p.c1, x, p.c1, p.a) and G.seg_congruent(p.c2, x, p.c2, p.d)
            and G.coplanar(p.a, p.c1, p.b, x))


def draw_cci(s: Sampler, diametric: bool = False):
    """Two crossing circles: a inside and b outside circle (c2, |c2d|)."""
    for _ in range(30):
        c1 = s.pt()
        r = s.pos(6, 2)
        a = s.on_circle(c1, r)
        b = lerp(a, c1, 2) if diametric else s.on_circle(c1, r)
        if not diametric and not is_tri(a, c1, b):
            continue
        c2 = s.pt()
        da, db = d2(c2, a), d2(c2, b)
        sg = (da - db).sign()
        if sg == 0:
            continue
        if sg > 0:
            a, b = b, a
        d = lerp(a, b, s.t01())
        if (d2(c2, a) - d2(c2, d)).sign() < 0 and (d2(c2, d) - d2(c2, b)).sign() < 0:
            return dict(c1=c1, a=a, b=b, c2=c2, d=d)
    return None


@spec("AX31-cci", "crossing-circles",
      "C(c1a,c1b) ∧ c2a<c2d ∧ c2d<c2b ∧ PL_{a c1 b}(d) ∧ PL_{a c1 b}(c2)",
      "C(c1x,c1a) ∧ C(c2x,c2d) ∧ PL_{a c1 b}(x), x = cci(c1,a,b,c2,d)",
      pre=_cci_premise, post=_cci_post,
      note="Modified form with coplanarity premises and conclusion.")
def _ax31(s):
    return draw_cci(s)


# -- space ------------------------------------------------------------------------------------


@spec("AX32-coplanar-triangle", "plane", "PL_abc(d)", "T(a,b,c)",
      pre=lambda p: G.coplanar(p.a, p.b, p.c, p.d),
      post=lambda p: G.triangle(p.a, p.b, p.c))
def _ax32(s):
    a, b, c = s.tri()
    if s.coin(0.2):
        c = _mixed_on_line(s, a, b)
    return dict(a=a, b=b, c=c, d=s.pt())


@spec("AX33-coplanar-vertex", "triangle", "T(a,b,c)", "PL_abc(b)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.coplanar(p.a, p.b, p.c, p.b))
def _ax33(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("AX34-coplanar-transfer", "plane",
      "PL_abc(d) ∧ PL_abc(e) ∧ PL_abc(f) ∧ T(d,e,f) ∧ PL_abc(x)", "PL_def(x)",
      pre=lambda p: G.coplanar(p.a, p.b, p.c, p.d) and G.coplanar(p.a, p.b, p.c, p.e)
      and G.coplanar(p.a, p.b, p.c, p.f) and G.triangle(p.d, p.e, p.f) and G.coplanar(p.a, p.b, p.c, p.x),
      post=lambda p: G.coplanar(p.d, p.e, p.f, p.x))
def _ax34(s):
    a, b, c = s.tri()
    d, e, f = s.tri()
    x = s.pt() if s.coin(0.9) else s.off()
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, x=x)


@spec("AX35-ortho-right", "points", "a≠b ∧ c≠b", "abo(a,b,c) right ∧ cbo(a,b,c) right",
      pre=lambda p: p.a != p.b and p.c != p.b,
      post=lambda p: G.right_angle(p.a, p.b, K.ortho(p.a, p.b, p.c))
      and G.right_angle(p.c, p.b, K.ortho(p.a, p.b, p.c)))
def _ax35(s):
    a, b = s.space(), s.space()
    if s.coin(0.25):
        c = s.choice([a, lerp(a, b, s.q(4, 2))])
    else:
        c = s.space()
    return dict(a=a, b=b, c=c)


@spec("AX36-normal-perpendicular-coplanar", "plane", "T(a,b,c) ∧ dbo(a,b,c) right", "PL_abc(d)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.right_angle(p.d, p.b, K.ortho(p.a, p.b, p.c)),
      post=lambda p: G.coplanar(p.a, p.b, p.c, p.d))
def _ax36(s):
    a, b, c = s.tri()
    d = s.distinct(b) if s.coin(0.9) else s.off()
    return dict(a=a, b=b, c=c, d=d)
