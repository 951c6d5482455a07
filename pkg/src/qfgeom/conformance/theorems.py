"""Planar theorems: orientation, sides, separation, congruence, parallels, circles."""

from __future__ import annotations

from .. import construct as K
from .. import geom as G
from ..exactnum import Q
from .axioms import _mixed_on_line, _opposite_sides, _oriented, _pair, draw_cci, _cci_premise
from .core import always, spec
from .sampler import Sampler, apply, d2, is_tri, lerp, orient_sign, same_pt
from ..geom import _cross, _dot


# -- shared draws ----------------------------------------------------------------


def _interior_pt(s: Sampler, a, b, c):
    """A point strictly inside angle abc."""
    return lerp(b, s.between(a, c), s.choice([s.t01(), s.gt1()]))


def _same_side_pt(s: Sampler, a, b, ref):
    p = s.off_line(a, b)
    if s.side(a, b, p) != s.side(a, b, ref):
        p = s.other_side(a, b, p)
    return p


def _opp_side_pt(s: Sampler, a, b, ref):
    p = s.off_line(a, b)
    if s.side(a, b, p) == s.side(a, b, ref):
        p = s.other_side(a, b, p)
    return p


def _scalar(s: Sampler, sign: int = 0):
    k = s.pos(4, 3)
    if s.coin(s.radical_rate):
        k = Q(k) * s.t01()
    if sign < 0 or (sign == 0 and s.coin()):
        k = -k
    return k


def _par(s: Sampler, a, b, c, sign: int = 0):
    """d with ab parallel to cd: c moved along b - a."""
    return c + (b - a).scale(_scalar(s, sign))


def _line_d2(c, d, p):
    """Squared distance from p to line cd times |cd|^2."""
    w = _cross(d - c, p - c)
    return _dot(w, w)


def _cos_key(a, b, c) -> float:
    u, v = a - b, c - b
    return float(_dot(u, v)) / (float(_dot(u, u)) * float(_dot(v, v))) ** 0.5


def _sorted_by_angle(tris):
    """Triangles ordered by increasing angle at the middle vertex (float guided)."""
    return sorted(tris, key=lambda t: -_cos_key(*t))


def _nc(a, b, c):
    return G.colinear(a, b, c, strict=False)


def _try(fn) -> bool:
    try:
        return bool(fn())
    except K.ConstructionError:
        return False


# -- orientation -------------------------------------------------------------------


@spec("THM-SO-OO-OO", "orientation", "SO(abc,def) ∧ OO(def,ghi)", "OO(abc,ghi)",
      pre=lambda p: G.same_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
      and G.opposite_orientation(p.d, p.e, p.f, p.g, p.h, p.i),
      post=lambda p: G.opposite_orientation(p.a, p.b, p.c, p.g, p.h, p.i))
def _so_oo(s):
    a, b, c = s.tri()
    d, e, f = _oriented(s, (a, b, c), 1)
    g, h, i = _oriented(s, (a, b, c), -1)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i)


@spec("THM-SO-OO-reverse-both", "orientation", "SO(abc,def) ∨ OO(abc,def)",
      "(SO(abc,def) → SO(cba,fed)) ∧ (OO(abc,def) → OO(cba,fed))",
      pre=lambda p: G.same_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
      or G.opposite_orientation(p.a, p.b, p.c, p.d, p.e, p.f),
      post=lambda p: (not G.same_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
                      or G.same_orientation(p.c, p.b, p.a, p.f, p.e, p.d))
      and (not G.opposite_orientation(p.a, p.b, p.c, p.d, p.e, p.f)
           or G.opposite_orientation(p.c, p.b, p.a, p.f, p.e, p.d)))
def _so_rev(s):
    a, b, c = s.tri()
    d, e, f = s.tri()
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("THM-OO-line", "opposite-sides", "L(a,b,c) ∧ OO(abd,abe)", "OO(cbd,cbe)",
      pre=lambda p: G.colinear(p.a, p.b, p.c) and G.opposite_orientation(p.a, p.b, p.d, p.a, p.b, p.e),
      post=lambda p: G.opposite_orientation(p.c, p.b, p.d, p.c, p.b, p.e))
def _oo_line(s):
    a, b = _pair(s)
    d, e = _opposite_sides(s, a, b)
    return dict(a=a, b=b, c=_mixed_on_line(s, a, b), d=d, e=e)


@spec("THM-Int-OO", "interior", "Int(d,abc)", "OO(dba,dbc)",
      pre=lambda p: G.interior(p.d, p.a, p.b, p.c),
      post=lambda p: G.opposite_orientation(p.d, p.b, p.a, p.d, p.b, p.c))
def _int_oo(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=_interior_pt(s, a, b, c))


@spec("THM-between-side-Int", "interpolate", "T(a,b,c) ∧ B(a,d,c)", "Int(d,abc)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.between(p.a, p.d, p.c),
      post=lambda p: G.interior(p.d, p.a, p.b, p.c))
def _bsi(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=s.between(a, c))


@spec("THM-crossbar", "interior", "Int(d,abc)", "SD(b,cb(d,abc),d)",
      pre=lambda p: G.interior(p.d, p.a, p.b, p.c),
      post=lambda p: G.same_direction(p.b, K.crossbow(p.d, p.a, p.b, p.c), p.d))
def _crossbar(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=_interior_pt(s, a, b, c))


@spec("THM-SO-Int", "same-side", "SO(cbd,cba) ∧ T(a,d,b)", "Int(d,abc) ∨ Int(a,dbc)",
      pre=lambda p: G.same_orientation(p.c, p.b, p.d, p.c, p.b, p.a) and G.triangle(p.a, p.d, p.b),
      post=lambda p: G.interior(p.d, p.a, p.b, p.c) or G.interior(p.a, p.d, p.b, p.c))
def _so_int(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=_same_side_pt(s, b, c, a))


@spec("THM-SO-no-intersection", "same-side", "SO(cbd,cba) ∧ B(a,x,d)", "¬L̃(b,x,c)",
      pre=lambda p: G.same_orientation(p.c, p.b, p.d, p.c, p.b, p.a) and G.between(p.a, p.x, p.d),
      post=lambda p: not _nc(p.b, p.x, p.c))
def _so_noint(s):
    a, b, c = s.tri()
    d = _same_side_pt(s, b, c, a)
    return dict(a=a, b=b, c=c, d=d, x=s.between(a, d))


def _pasch_draw(s: Sampler):
    a, b, c = s.tri()
    d = s.between(a, b)
    e = s.off_line(a, b)
    if s.coin(0.15):
        e = lerp(d, c, s.q(4, 2))  # e on line dc: premise T(e,d,c) fails, tests the filter
    return dict(a=a, b=b, c=c, d=d, e=e)


def _pasch_premise(p) -> bool:
    return (G.triangle(p.a, p.b, p.c) and G.between(p.a, p.d, p.b) and G.triangle(p.a, p.b, p.e)
            and G.triangle(p.e, p.d, p.c) and G.coplanar(p.a, p.b, p.c, p.e))


@spec("THM-Pasch-lemma", "pasch", "T(a,b,c) ∧ B(a,d,b) ∧ T(a,b,e) ∧ T(e,d,c) ∧ PL_abc(e)",
      "OO(edb,edc) ∨ OO(edc,eda)",
      pre=_pasch_premise,
      post=lambda p: G.opposite_orientation(p.e, p.d, p.b, p.e, p.d, p.c)
      or G.opposite_orientation(p.e, p.d, p.c, p.e, p.d, p.a),
      note="Planar lemma; e is taken in the plane abc.")
def _pasch_lemma(s):
    return _pasch_draw(s)


@spec("THM-orient-lemma3", "interpolate", "T(a,b,c) ∧ B(a,d,b) ∧ B(b,e,c) ∧ B(a,f,c)", "T(d,e,f)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.between(p.a, p.d, p.b) and G.between(p.b, p.e, p.c)
      and G.between(p.a, p.f, p.c),
      post=lambda p: G.triangle(p.d, p.e, p.f))
def _ol3(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=s.between(a, b), e=s.between(b, c), f=s.between(a, c))


def _misses_open_segment(e, d, b, c) -> bool:
    """No x with B(b,x,c) and L̃(e,d,x), for coplanar points and e ≠ d."""
    crosses = G.opposite_side(b, c, e, d)
    inside = _nc(e, d, b) and _nc(e, d, c)
    return not (crosses or inside)


def _pasch_post(p) -> bool:
    def part(u):
        x = K.crossbow(p.e, u, p.d, p.c)
        return _nc(p.d, x, p.e) and G.between(u, x, p.c)

    P = _try(lambda: part(p.a))
    Q_ = _try(lambda: part(p.b))
    R = _misses_open_segment(p.e, p.d, p.b, p.c)
    S = _misses_open_segment(p.e, p.d, p.a, p.c)
    return (P and R) or (Q_ and S)


@spec("THM-Pasch", "pasch", "A ≡ T(a,b,c) ∧ B(a,d,b) ∧ T(a,b,e) ∧ T(e,d,c) ∧ PL_abc(e)",
      "(P ∧ R) ∨ (Q ∧ S)",
      pre=_pasch_premise, post=_pasch_post,
      note="R and S quantify over x; they are decided exactly as 'line ed misses the open segment'.")
def _pasch(s):
    return _pasch_draw(s)


# -- sides of a line -----------------------------------------------------------------


def _ss_draw(s: Sampler, n: int = 2):
    a, b = _pair(s)
    ref = s.off_line(a, b)
    pts = [ref] + [_same_side_pt(s, a, b, ref) for _ in range(n - 1)]
    return a, b, pts


@spec("THM-SS-line-1", "triangle", "T(a,b,c)", "SS(c,c,ab)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.same_side(p.c, p.c, p.a, p.b))
def _ss1(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("THM-SS-line-2", "same-side", "SS(c,d,ab)", "SS(d,c,ab)",
      pre=lambda p: G.same_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.same_side(p.d, p.c, p.a, p.b))
def _ss2(s):
    a, b, (c, d) = _ss_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-SS-line-3", "same-side", "SS(c,d,ab)", "SS(c,d,ba)",
      pre=lambda p: G.same_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.same_side(p.c, p.d, p.b, p.a))
def _ss3(s):
    a, b, (c, d) = _ss_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-SS-line-4", "same-side", "SS(c,d,ab) ∧ SS(d,e,ab)", "SS(c,e,ab)",
      pre=lambda p: G.same_side(p.c, p.d, p.a, p.b) and G.same_side(p.d, p.e, p.a, p.b),
      post=lambda p: G.same_side(p.c, p.e, p.a, p.b),
      note="Printed premise SS(c,d,ad) is read as SS(c,d,ab).")
def _ss4(s):
    a, b, (c, d, e) = _ss_draw(s, 3)
    return dict(a=a, b=b, c=c, d=d, e=e)


def _rebase_draw(s: Sampler, same: bool):
    a, b = _pair(s)
    c = _mixed_on_line(s, a, b) if s.coin(0.8) else b
    d = _mixed_on_line(s, a, b)
    e = s.off_line(a, b)
    f = _same_side_pt(s, a, b, e) if same else _opp_side_pt(s, a, b, e)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


def _rebase_premise(p) -> bool:
    return (p.a != p.b and p.c != p.d and _nc(p.a, p.b, p.c) and _nc(p.b, p.c, p.d)
            and _nc(p.a, p.b, p.d))


_REBASE_NOTE = ("L̃(a,b,d) is added: with b = c the printed premises allow any d, and the "
                "conclusion then fails.")


@spec("THM-SS-rebase", "colinear", "a≠b ∧ c≠d ∧ L̃(a,b,c) ∧ L̃(b,c,d) ∧ L̃(a,b,d) ∧ SS(e,f,ab)", "SS(e,f,cd)",
      pre=lambda p: _rebase_premise(p) and G.same_side(p.e, p.f, p.a, p.b),
      post=lambda p: G.same_side(p.e, p.f, p.c, p.d), note=_REBASE_NOTE)
def _ss_rebase(s):
    return _rebase_draw(s, True)


@spec("THM-not-SS-OS", "plane", "T(a,b,c) ∧ T(a,b,d) ∧ PL_abc(d) ∧ ¬SS(c,d,ab)", "OS(c,d,ab)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.a, p.b, p.d) and G.coplanar(p.a, p.b, p.c, p.d)
      and not G.same_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.opposite_side(p.c, p.d, p.a, p.b),
      note="Coplanarity PL_abc(d) is required in space.")
def _not_ss(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=s.off_line(a, b))


def _os_draw(s: Sampler):
    a, b = _pair(s)
    c = s.off_line(a, b)
    d = _opp_side_pt(s, a, b, c)
    return a, b, c, d


@spec("THM-OS-line-1", "opposite-sides", "OS(c,d,ab)", "OS(d,c,ab)",
      pre=lambda p: G.opposite_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.opposite_side(p.d, p.c, p.a, p.b))
def _os1(s):
    a, b, c, d = _os_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-OS-line-2", "opposite-sides", "OS(c,d,ab)", "OS(c,d,ba)",
      pre=lambda p: G.opposite_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.opposite_side(p.c, p.d, p.b, p.a))
def _os2(s):
    a, b, c, d = _os_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-OS-line-3", "opposite-sides", "OS(c,d,ab) ∧ OS(d,e,ab)", "SS(c,e,ab)",
      pre=lambda p: G.opposite_side(p.c, p.d, p.a, p.b) and G.opposite_side(p.d, p.e, p.a, p.b),
      post=lambda p: G.same_side(p.c, p.e, p.a, p.b),
      note="Printed premise OS(c,d,ad) is read as OS(c,d,ab).")
def _os3(s):
    a, b, c, d = _os_draw(s)
    return dict(a=a, b=b, c=c, d=d, e=_opp_side_pt(s, a, b, d))


@spec("THM-OS-rebase", "colinear", "a≠b ∧ c≠d ∧ L̃(a,b,c) ∧ L̃(b,c,d) ∧ L̃(a,b,d) ∧ OS(e,f,ab)", "OS(e,f,cd)",
      pre=lambda p: _rebase_premise(p) and G.opposite_side(p.e, p.f, p.a, p.b),
      post=lambda p: G.opposite_side(p.e, p.f, p.c, p.d), note=_REBASE_NOTE)
def _os_rebase(s):
    return _rebase_draw(s, False)


# -- line separation ---------------------------------------------------------------------


def _line3(s: Sampler):
    a, b = _pair(s)
    return dict(a=a, b=b, c=_mixed_on_line(s, a, b))


@spec("THM-line-separation-1-1", "colinear", "L(a,b,c) ∧ ¬SD(a,b,c)", "B(b,a,c)",
      pre=lambda p: G.colinear(p.a, p.b, p.c) and not G.same_direction(p.a, p.b, p.c),
      post=lambda p: G.between(p.b, p.a, p.c))
def _ls11(s):
    return _line3(s)


@spec("THM-line-separation-1-2", "colinear", "L(a,b,c) ∧ ¬B(b,a,c)", "SD(a,b,c)",
      pre=lambda p: G.colinear(p.a, p.b, p.c) and not G.between(p.b, p.a, p.c),
      post=lambda p: G.same_direction(p.a, p.b, p.c))
def _ls12(s):
    return _line3(s)


_SD_NOTE = "a≠b is required: SD(a,a,c) holds for every c≠a, and the printed statement then fails."


@spec("THM-line-separation-1", "points", "a≠b", "SD(a,b,b)",
      pre=lambda p: p.a != p.b, post=lambda p: G.same_direction(p.a, p.b, p.b),
      note="SD(a,a,a) is false, so a≠b is required.")
def _ls1(s):
    a, b = _pair(s)
    return dict(a=a, b=b)


def _sd_draw(s: Sampler, allow_equal: bool = False):
    a = s.pt()
    b = s.distinct(a) if not (allow_equal and s.coin(0.1)) else a
    c = s.ray_point(a, b) if not same_pt(a, b) else s.distinct(a)
    return a, b, c


@spec("THM-line-separation-2", "ray", "SD(a,b,c) ∧ a≠b", "SD(a,c,b)",
      pre=lambda p: G.same_direction(p.a, p.b, p.c) and p.a != p.b,
      post=lambda p: G.same_direction(p.a, p.c, p.b), note=_SD_NOTE)
def _ls2(s):
    a, b, c = _sd_draw(s)
    return dict(a=a, b=b, c=c)


@spec("THM-line-separation-3", "ray", "SD(a,b,c) ∧ SD(a,c,d)", "SD(a,b,d)",
      pre=lambda p: G.same_direction(p.a, p.b, p.c) and G.same_direction(p.a, p.c, p.d),
      post=lambda p: G.same_direction(p.a, p.b, p.d))
def _ls3(s):
    a, b, c = _sd_draw(s, allow_equal=True)
    d = s.ray_point(a, c)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-line-separation-4", "ray", "SD(a,b,c) ∧ B(d,a,c) ∧ a≠b", "B(d,a,b)",
      pre=lambda p: G.same_direction(p.a, p.b, p.c) and G.between(p.d, p.a, p.c) and p.a != p.b,
      post=lambda p: G.between(p.d, p.a, p.b), note=_SD_NOTE)
def _ls4(s):
    a, b, c = _sd_draw(s)
    return dict(a=a, b=b, c=c, d=s.beyond(c, a))


@spec("THM-line-separation-5", "colinear", "B(b,a,c) ∧ B(d,a,c)", "SD(a,b,d)",
      pre=lambda p: G.between(p.b, p.a, p.c) and G.between(p.d, p.a, p.c),
      post=lambda p: G.same_direction(p.a, p.b, p.d))
def _ls5(s):
    a, c = _pair(s)
    return dict(a=a, b=s.beyond(c, a), c=c, d=s.beyond(c, a))


# -- segment and angle order ------------------------------------------------------------


@spec("THM-segment-less-transitive", "lengths", "ab<cd ∧ cd<ef", "ab<ef",
      pre=lambda p: G.seg_less(p.a, p.b, p.c, p.d) and G.seg_less(p.c, p.d, p.e, p.f),
      post=lambda p: G.seg_less(p.a, p.b, p.e, p.f))
def _slt(s):
    segs = []
    for _ in range(3):
        u = s.space()
        v = u if s.coin(0.1) else s.space()
        if s.coin(s.radical_rate):
            v = lerp(u, v, s.t01())
        segs.append((u, v))
    segs.sort(key=lambda uv: float(d2(*uv)))
    (a, b), (c, d), (e, f) = segs
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


@spec("THM-layoff", "points", "a≠b", "C(a,lf(ab,cd),c,d) ∧ SD(a,lf(ab,cd),b)",
      pre=lambda p: p.a != p.b,
      post=lambda p: G.seg_congruent(p.a, K.lf(p.a, p.b, p.c, p.d), p.c, p.d)
      and G.same_direction(p.a, K.lf(p.a, p.b, p.c, p.d), p.b))
def _layoff(s):
    a = s.space()
    b = s.space()
    while same_pt(a, b):
        b = s.space()
    c = s.space()
    d = c if s.coin(0.1) else s.space()
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-segment-less-layoff", "lengths", "c≠d", "ab<cd ↔ B(c,lf(cd,ab),d) ∨ (a=b ∧ c≠d)",
      pre=lambda p: p.c != p.d,
      post=lambda p: G.seg_less(p.a, p.b, p.c, p.d)
      == (G.between(p.c, K.lf(p.c, p.d, p.a, p.b), p.d) or (p.a == p.b and p.c != p.d)),
      note="The coordinate order on lengths agrees with the layoff definition.")
def _sll(s):
    a, c = s.space(), s.space()
    b = a if s.coin(0.1) else s.space()
    d = s.space()
    while same_pt(c, d):
        d = s.space()
    if s.coin(0.15):
        d = c + s.rotate(b - a)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-congruent-angles-same-ray", "ray", "AC(abc,abd) ∧ SS(c,d,ab)", "SD(b,c,d)",
      pre=lambda p: G.angle_congruent(p.a, p.b, p.c, p.a, p.b, p.d) and G.same_side(p.c, p.d, p.a, p.b),
      post=lambda p: G.same_direction(p.b, p.c, p.d))
def _casr(s):
    a, b, c = s.tri()
    d = lerp(b, c, s.choice([s.t01(), s.gt1()])) if s.coin(0.8) else _same_side_pt(s, a, b, c)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-angle-less-transitive", "angles", "abc<def ∧ def<ghi", "abc<ghi",
      pre=lambda p: G.angle_less(p.a, p.b, p.c, p.d, p.e, p.f) and G.angle_less(p.d, p.e, p.f, p.g, p.h, p.i),
      post=lambda p: G.angle_less(p.a, p.b, p.c, p.g, p.h, p.i))
def _alt(s):
    tris = []
    for _ in range(3):
        s.new_frame()
        tris.append(s.tri())
    (a, b, c), (d, e, f), (g, h, i) = _sorted_by_angle(tris)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i)


# -- perpendiculars --------------------------------------------------------------------------


@spec("THM-drop-perpendicular", "triangle", "T(a,b,c)", "L̃(a,p,b) ∧ (apc right ∨ bpc right), p = drop_perp(a,b,c)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: _dp_post(p))
def _dp(s):
    a, b, c = s.tri()
    if s.coin(0.1):
        c = lerp(a, _right_at(s, a, b), s.pos(3, 2))  # foot lands on a
    return dict(a=a, b=b, c=c)


def _right_at(s: Sampler, a, b):
    """A frame-plane point x with bax right."""
    n = s.normal()
    w = _cross(n, b - a)
    return a + w


def _dp_post(p) -> bool:
    x = K.drop_perp(p.a, p.b, p.c)
    return _nc(p.a, x, p.b) and (G.right_angle(p.a, x, p.c) or G.right_angle(p.b, x, p.c))


@spec("THM-right-angle-construction", "constant", "true", "αdβ right, d = mid(α, lf(βγ, αβ))",
      pre=always, post=lambda p: G.right_angle(*K.right_ref()))
def _rac(s):
    return {}


@spec("THM-right-angle-supplement", "triangle", "T(a,b,c)", "abc right ↔ abc ≅ its supplement",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.right_angle(p.a, p.b, p.c)
      == G.angle_congruent(p.a, p.b, p.c, p.c, p.b, K.doub(p.a, p.b)),
      note="The right-angle predicate agrees with the supplement definition.")
def _ras(s):
    a, b, c = s.tri()
    if s.coin(0.4):
        c = lerp(b, _right_at(s, b, a), s.pos(3, 2))
    return dict(a=a, b=b, c=c)


# -- midpoints and parallelograms --------------------------------------------------------------


def _suppes(p) -> bool:
    a, b, b2, a2 = p.a, p.b, p.b2, p.a2
    m, d = K.mid, K.doub
    items = [
        m(a, a) == a,
        m(a, b) == m(b, a),
        not (m(a, b) == m(a, b2)) or b == b2,
        not (d(a, b) == d(b, a)) or a == b,
        not (d(a, b) == d(a, b2)) or b == b2,
        not (d(a, b) == d(a2, b)) or a == a2,
        m(a, d(a, b)) == b,
        _nc(a, b, m(a, b)),
    ]
    return all(items)


@spec("THM-midpoint-identities", "points", "true", "the eight mid/doub identities and cancellation laws",
      pre=always, post=_suppes)
def _mid_ids(s):
    a = s.space()
    b = a if s.coin(0.1) else s.space()
    if s.coin(s.radical_rate):
        b = lerp(a, b, s.t01() + 1)
    b2 = b if s.coin(0.3) else s.space()
    a2 = a if s.coin(0.3) else s.space()
    return dict(a=a, b=b, b2=b2, a2=a2)


def _pg(a, b, c, d) -> bool:
    return G.parallelogram(a, b, c, d)


def _pgram_draw(s: Sampler, flat_rate: float = 0.2):
    a, c = s.space(), s.space()
    b = _mixed_on_line(s, a, c) if s.coin(flat_rate) else s.space()
    return a, b, c, K.doub(b, K.mid(a, c))


@spec("THM-parallelogram-flip", "parallelogram", "P(a,b,c,d)", "P(c,b,a,d)",
      pre=lambda p: _pg(p.a, p.b, p.c, p.d), post=lambda p: _pg(p.c, p.b, p.a, p.d))
def _pgf(s):
    a, b, c, d = _pgram_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-parallelogram-not-swapped", "parallelogram", "b≠c ∧ P(a,b,c,d)", "¬P(a,c,b,d)",
      pre=lambda p: p.b != p.c and _pg(p.a, p.b, p.c, p.d), post=lambda p: not _pg(p.a, p.c, p.b, p.d))
def _pgn(s):
    a, b, c, d = _pgram_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-parallelogram-permutations", "parallelogram", "P(a,b,c,d)",
      "P(b,c,d,a) ∧ P(c,d,a,b) ∧ P(d,a,b,c) ∧ P(c,b,a,d) ∧ P(b,a,d,c) ∧ P(a,d,c,b) ∧ P(d,c,b,a)",
      pre=lambda p: _pg(p.a, p.b, p.c, p.d),
      post=lambda p: all(_pg(*q) for q in (
          (p.b, p.c, p.d, p.a), (p.c, p.d, p.a, p.b), (p.d, p.a, p.b, p.c), (p.c, p.b, p.a, p.d),
          (p.b, p.a, p.d, p.c), (p.a, p.d, p.c, p.b), (p.d, p.c, p.b, p.a))))
def _pgp(s):
    a, b, c, d = _pgram_draw(s)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-parallelogram-fourth-point", "points", "true", "P(a,b,c,doub(b,mid(a,c)))",
      pre=always, post=lambda p: _pg(p.a, p.b, p.c, K.doub(p.b, K.mid(p.a, p.c))))
def _pg4(s):
    a, b, c = s.space(), s.space(), s.space()
    if s.coin(s.radical_rate):
        b = lerp(a, b, s.t01())
    return dict(a=a, b=b, c=c)


@spec("THM-parallelogram-unique", "parallelogram", "P(a,b,c,d) ∧ P(a,b,c,d')", "d = d'",
      pre=lambda p: _pg(p.a, p.b, p.c, p.d) and _pg(p.a, p.b, p.c, p.d2),
      post=lambda p: p.d == p.d2)
def _pgu(s):
    a, b, c, d = _pgram_draw(s)
    d2_ = a + c - b if s.coin(0.7) else s.space()
    return dict(a=a, b=b, c=c, d=d, d2=d2_)


@spec("THM-parallelogram-transitive", "parallelogram", "P(a,b,c,d) ∧ P(c,d,e,f)", "P(a,b,f,e)",
      pre=lambda p: _pg(p.a, p.b, p.c, p.d) and _pg(p.c, p.d, p.e, p.f),
      post=lambda p: _pg(p.a, p.b, p.f, p.e))
def _pgt(s):
    a, b, c, d = _pgram_draw(s)
    e = s.space()
    return dict(a=a, b=b, c=c, d=d, e=e, f=K.doub(d, K.mid(c, e)))


# -- parallels --------------------------------------------------------------------------------


def _par_draw(s: Sampler, sign: int = 0):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=_par(s, a, b, c, sign))


@spec("THM-parallel-1", "parallelogram", "T(a,b,c) ∧ P(a,b,c,d)", "ab∥cd ∧ bc∥ad",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and _pg(p.a, p.b, p.c, p.d),
      post=lambda p: G.parallel(p.a, p.b, p.c, p.d) and G.parallel(p.b, p.c, p.a, p.d))
def _par1(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=K.doub(b, K.mid(a, c)))


@spec("THM-parallel-2", "parallel", "ab∥cd", "a, b, c, d pairwise distinct",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d),
      post=lambda p: all(u != v for i, u in enumerate((p.a, p.b, p.c, p.d)) for v in (p.a, p.b, p.c, p.d)[i + 1:]))
def _par2(s):
    return _par_draw(s)


@spec("THM-parallel-3", "parallel", "ab∥cd", "cd∥ab",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d), post=lambda p: G.parallel(p.c, p.d, p.a, p.b))
def _par3(s):
    return _par_draw(s)


@spec("THM-parallel-4", "parallel", "ab∥cd", "ba∥cd",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d), post=lambda p: G.parallel(p.b, p.a, p.c, p.d))
def _par4(s):
    return _par_draw(s)


def _three_lines(s: Sampler, r_on_pq: float = 0.0):
    a, b = _pair(s)
    p_ = s.off_line(a, b)
    q = _par(s, a, b, p_)
    r = _mixed_on_line(s, p_, q) if s.coin(r_on_pq) else s.off_line(a, b)
    rs = _par(s, a, b, r)
    return dict(a=a, b=b, p=p_, q=q, r=r, s=rs)


@spec("THM-parallel-5", "parallel", "ab∥pq ∧ ab∥rs ∧ T(p,q,r)", "pq∥rs",
      pre=lambda p: G.parallel(p.a, p.b, p.p, p.q) and G.parallel(p.a, p.b, p.r, p.s) and G.triangle(p.p, p.q, p.r),
      post=lambda p: G.parallel(p.p, p.q, p.r, p.s))
def _par5(s):
    return _three_lines(s)


@spec("THM-parallel-segment-1", "parallel", "ab∥cd ∧ L̃(c,d,x) ∧ x≠c", "ab∥cx",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d) and _nc(p.c, p.d, p.x) and p.x != p.c,
      post=lambda p: G.parallel(p.a, p.b, p.c, p.x),
      note="x≠c is required, since ab∥cc is false by definition.")
def _pseg1(s):
    inst = _par_draw(s)
    inst["x"] = _mixed_on_line(s, inst["c"], inst["d"])
    return inst


@spec("THM-parallel-segment-2", "parallel", "ab∥cd ∧ L̃(a,b,y) ∧ y≠a", "ay∥cd",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d) and _nc(p.a, p.b, p.y) and p.y != p.a,
      post=lambda p: G.parallel(p.a, p.y, p.c, p.d),
      note="y≠a is required, since T(a,a,c) is false.")
def _pseg2(s):
    inst = _par_draw(s)
    inst["y"] = _mixed_on_line(s, inst["a"], inst["b"])
    return inst


@spec("THM-not-parallel-test", "points", "T(c,d,doub(b,mid(a,c)))", "¬ab∥cd",
      pre=lambda p: G.triangle(p.c, p.d, K.doub(p.b, K.mid(p.a, p.c))),
      post=lambda p: not G.parallel(p.a, p.b, p.c, p.d))
def _npt(s):
    a, b, c = s.tri()
    d = s.pt() if s.coin(0.8) else s.off()
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-parallel-implies-linear", "parallel", "ab∥pq ∧ ab∥rs ∧ ¬pq∥rs", "L̃(p,q,r)",
      pre=lambda p: G.parallel(p.a, p.b, p.p, p.q) and G.parallel(p.a, p.b, p.r, p.s)
      and not G.parallel(p.p, p.q, p.r, p.s),
      post=lambda p: _nc(p.p, p.q, p.r),
      note="Printed premise ab∥cd is read as ab∥pq.")
def _pil(s):
    return _three_lines(s, r_on_pq=0.5)


@spec("THM-AIAT-converse", "parallel", "ab∥cd ∧ OS(b,d,ac)", "cab ≅ acd",
      pre=lambda p: G.parallel(p.a, p.b, p.c, p.d) and G.opposite_side(p.b, p.d, p.a, p.c),
      post=lambda p: G.angle_congruent(p.c, p.a, p.b, p.a, p.c, p.d))
def _aiatc(s):
    return _par_draw(s, -1 if s.coin(0.9) else 1)


@spec("THM-AIAT", "alternate-angles", "cab ≅ acd ∧ OS(b,d,ac)", "ab∥cd",
      pre=lambda p: G.angle_congruent(p.c, p.a, p.b, p.a, p.c, p.d) and G.opposite_side(p.b, p.d, p.a, p.c),
      post=lambda p: G.parallel(p.a, p.b, p.c, p.d))
def _aiat(s):
    a, b, c = s.tri()
    if s.coin():
        d = lerp(c, K.ato(c, a, b, a, c, b), s.choice([s.t01(), s.gt1()]))
    else:
        d = _par(s, a, b, c, -1)
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-nonflat-parallelogram-opposite", "parallelogram", "P̂(a,b,c,d)",
      "C(ab,cd) ∧ C(bc,da) ∧ AC(dab,bcd) ∧ AC(abc,cda)",
      pre=lambda p: G.parallelogram(p.a, p.b, p.c, p.d, mode="nonflat"),
      post=lambda p: G.seg_congruent(p.a, p.b, p.c, p.d) and G.seg_congruent(p.b, p.c, p.d, p.a)
      and G.angle_congruent(p.d, p.a, p.b, p.b, p.c, p.d) and G.angle_congruent(p.a, p.b, p.c, p.c, p.d, p.a))
def _nfp(s):
    a, b, c, d = _pgram_draw(s, flat_rate=0.1)
    return dict(a=a, b=b, c=c, d=d)


# -- convex quadrilaterals ----------------------------------------------------------------


def _cq(p) -> bool:
    return G.convex_quad(p.a, p.b, p.c, p.d)


def _cquad_draw(s: Sampler):
    a, b, c = s.tri()
    d = lerp(b, s.between(a, c), s.gt1())
    return dict(a=a, b=b, c=c, d=d)


@spec("THM-convex-quad", "convex-quad", "Int(d,abc) ∧ Int(a,bcd)", "Int(b,cda) ∧ Int(c,dab)",
      pre=_cq, post=lambda p: G.interior(p.b, p.c, p.d, p.a) and G.interior(p.c, p.d, p.a, p.b))
def _cqt(s):
    return _cquad_draw(s)


@spec("THM-convex-quad-observation-1", "convex-quad", "abcd convex", "SS(c,d,ab)",
      pre=_cq, post=lambda p: G.same_side(p.c, p.d, p.a, p.b))
def _cqo1(s):
    return _cquad_draw(s)


@spec("THM-convex-quad-observation-2", "parallelogram", "P̂(a,b,c,d)", "abcd convex",
      pre=lambda p: G.parallelogram(p.a, p.b, p.c, p.d, mode="nonflat"), post=_cq)
def _cqo2(s):
    a, b, c, d = _pgram_draw(s, flat_rate=0.1)
    return dict(a=a, b=b, c=c, d=d)


def _is_pgram_hat(p) -> bool:
    return (G.parallel(p.a, p.b, p.c, p.d) and G.parallel(p.b, p.c, p.a, p.d)
            and G.parallelogram(p.a, p.b, p.c, p.d, mode="nonflat"))


def _cq_or_kite(s: Sampler):
    """Parallelograms plus convex quadrilaterals with one pair of equal sides."""
    if s.coin(0.7):
        a, b, c = s.tri()
        return dict(a=a, b=b, c=c, d=a + c - b)
    return _cquad_draw(s)


@spec("THM-convex-quad-sides", "convex-quad", "abcd convex ∧ C(ab,cd) ∧ C(bc,ad)", "ab∥cd ∧ bc∥ad ∧ P̂(a,b,c,d)",
      pre=lambda p: _cq(p) and G.seg_congruent(p.a, p.b, p.c, p.d) and G.seg_congruent(p.b, p.c, p.a, p.d),
      post=_is_pgram_hat)
def _cqs(s):
    return _cq_or_kite(s)


@spec("THM-convex-quad-angles", "convex-quad", "abcd convex ∧ AC(dab,bcd) ∧ AC(abc,cda)", "ab∥cd ∧ bc∥ad ∧ P̂(a,b,c,d)",
      pre=lambda p: _cq(p) and G.angle_congruent(p.d, p.a, p.b, p.b, p.c, p.d)
      and G.angle_congruent(p.a, p.b, p.c, p.c, p.d, p.a),
      post=_is_pgram_hat)
def _cqa(s):
    return _cq_or_kite(s)


# -- triangles ------------------------------------------------------------------------------


@spec("THM-length-sides-triangle", "triangle", "T(a,b,c) ∧ abc < acb", "ac < ab",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.angle_less(p.a, p.b, p.c, p.a, p.c, p.b),
      post=lambda p: G.seg_less(p.a, p.c, p.a, p.b))
def _lst(s):
    a, b, c = s.tri()
    if _cos_key(a, b, c) < _cos_key(a, c, b):
        b, c = c, b
    return dict(a=a, b=b, c=c)


@spec("THM-crossbow-feasibility", "interpolate", "T(a,b,c) ∧ B(a,x,c)", "bx<ba ∨ bx<bc",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.between(p.a, p.x, p.c),
      post=lambda p: G.seg_less(p.b, p.x, p.b, p.a) or G.seg_less(p.b, p.x, p.b, p.c))
def _cbf(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, x=s.between(a, c))


@spec("THM-exterior-angle", "triangle", "T(a,b,c)", "abc < a c doub(b,c) ∧ bac < a c doub(b,c)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.angle_less(p.a, p.b, p.c, p.a, p.c, K.doub(p.b, p.c))
      and G.angle_less(p.b, p.a, p.c, p.a, p.c, K.doub(p.b, p.c)),
      note="The second printed comparison names acb, the adjacent angle; the remote angle bac is checked.")
def _ext_angle(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


@spec("THM-triangle-inequality", "triangle", "T(a,b,c)", "ac < a·ext(ab,bc)",
      pre=lambda p: G.triangle(p.a, p.b, p.c),
      post=lambda p: G.seg_less(p.a, p.c, p.a, K.ext(p.a, p.b, p.b, p.c)))
def _tri_ineq(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c)


def _equidistance_post(p) -> bool:
    x = K.drop_perp(p.c, p.d, p.a)
    y = K.drop_perp(p.c, p.d, p.b)
    lhs = G.parallel(p.a, p.b, p.c, p.d)
    rhs = G.same_side(p.a, p.b, p.c, p.d) and G.seg_congruent(p.a, x, p.b, y)
    return lhs == rhs


@spec("THM-equidistance", "parallel-mix", "T(b,c,d) ∧ T(a,c,d) ∧ a≠b",
      "ab∥cd ↔ SS(a,b,cd) ∧ ax ≅ by (x, y feet of perpendiculars on cd)",
      pre=lambda p: G.triangle(p.b, p.c, p.d) and G.triangle(p.a, p.c, p.d) and p.a != p.b,
      post=_equidistance_post,
      note="a≠b is required: with a=b the right side holds while ab∥cd is false.")
def _equi(s):
    c, d = _pair(s)
    a = s.off_line(c, d)
    r = s.rng.random()
    if r < 0.45:
        b = _par(s, c, d, a)
    elif r < 0.6:
        b = s.other_side(c, d, a)  # mirror image across a point of cd: equal distance, opposite side
    elif r < 0.9:
        b = s.off_line(c, d)
    else:
        b = s.off()
    return dict(a=a, b=b, c=c, d=d)


def _npe_post(p) -> bool:
    x = K.drop_perp(p.c, p.d, p.a)
    y = K.drop_perp(p.c, p.d, p.b)
    part1 = G.opposite_side(p.a, p.e, p.c, p.d) or _nc(p.c, p.d, p.e) or G.same_side(p.a, p.e, p.c, p.d)
    part2 = True
    if G.same_side(p.a, p.e, p.c, p.d):
        z = K.drop_perp(p.c, p.d, p.e)
        part2 = G.seg_less(p.e, z, p.a, x)
    w = K.drop_perp(p.c, p.d, p.g)
    part3 = G.same_side(p.b, p.g, p.c, p.d) and G.seg_less(p.b, y, p.g, w)
    return part1 and part2 and part3


def _npe_premise(p) -> bool:
    if not (G.triangle(p.a, p.c, p.d) and G.triangle(p.b, p.c, p.d) and G.same_side(p.a, p.b, p.c, p.d)):
        return False
    x = K.drop_perp(p.c, p.d, p.a)
    y = K.drop_perp(p.c, p.d, p.b)
    return G.seg_less(p.a, x, p.b, y) and G.between(p.e, p.a, p.b) and G.between(p.a, p.b, p.g)


@spec("THM-nonparallel-extension", "diverging", "SS(a,b,cd) ∧ ax<by ∧ B(e,a,b) ∧ B(a,b,g)",
      "[OS(a,e,cd) ∨ L̃(c,d,e) ∨ SS(a,e,cd)] ∧ [SS(a,e,cd) → ez<ax] ∧ SS(b,g,cd) ∧ gw>by",
      pre=_npe_premise, post=_npe_post,
      note="Printed 'ax < bx' is read as ax < by, and w as the foot from g.")
def _npe(s):
    c, d = _pair(s)
    a = s.off_line(c, d)
    b = _same_side_pt(s, c, d, a)
    sg = (_line_d2(c, d, a) - _line_d2(c, d, b)).sign()
    if sg == 0:
        return None
    if sg > 0:
        a, b = b, a
    return dict(a=a, b=b, c=c, d=d, e=s.beyond(b, a), g=s.beyond(a, b))


@spec("THM-angle-opens", "similar", "T(b,a,d) ∧ B(a,b,c) ∧ bd∥ce ∧ L(a,d,e)", "bd < ce",
      pre=lambda p: G.triangle(p.b, p.a, p.d) and G.between(p.a, p.b, p.c) and G.parallel(p.b, p.d, p.c, p.e)
      and G.colinear(p.a, p.d, p.e),
      post=lambda p: G.seg_less(p.b, p.d, p.c, p.e))
def _opens(s):
    a, b, d = s.tri()
    k = s.gt1()
    return dict(a=a, b=b, c=lerp(a, b, k), d=d, e=lerp(a, d, k))


def _trisect_post(p) -> bool:
    c, d = K.trisect(p.a, p.b)
    third = Q("1/3")
    return (G.seg_congruent(p.a, c, c, d) and G.seg_congruent(c, d, d, p.b)
            and G.between(p.a, c, d) and G.between(c, d, p.b)
            and c == lerp(p.a, p.b, third) and d == lerp(p.a, p.b, 2 * third))


@spec("THM-trisect", "points", "a≠b", "ac ≅ cd ≅ db ∧ B(a,c,d) ∧ B(c,d,b), c and d the affine thirds",
      pre=lambda p: p.a != p.b, post=_trisect_post)
def _tris(s):
    a = s.space()
    b = s.space()
    while same_pt(a, b):
        b = s.space()
    if s.coin(s.radical_rate):
        b = lerp(a, b, s.t01() + 1)
    return dict(a=a, b=b)


def _congruent_triangle(s: Sampler, a, b, c):
    o = s.space()
    rf = s.rotation()
    return tuple(o + apply(rf, q - a) for q in (a, b, c))


def _tri_pair(s: Sampler):
    a, b, c = s.tri()
    d, e, f = _congruent_triangle(s, a, b, c)
    if s.coin(0.2):
        f = lerp(d, f, s.gt1())  # break one side: premise usually fails
    return dict(a=a, b=b, c=c, d=d, e=e, f=f)


_MODEL_NOTE = "Checked as a property of the coordinate model."


@spec("THM-SAS", "congruent", "T ∧ T ∧ C(ab,de) ∧ C(bc,ef) ∧ AC(abc,def)", "C(ac,df) ∧ AC(bac,edf) ∧ AC(bca,efd)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f) and G.seg_congruent(p.a, p.b, p.d, p.e)
      and G.seg_congruent(p.b, p.c, p.e, p.f) and G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f),
      post=lambda p: G.seg_congruent(p.a, p.c, p.d, p.f) and G.angle_congruent(p.b, p.a, p.c, p.e, p.d, p.f)
      and G.angle_congruent(p.b, p.c, p.a, p.e, p.f, p.d), note=_MODEL_NOTE)
def _sas(s):
    return _tri_pair(s)


@spec("THM-ASA", "congruent", "T ∧ T ∧ AC(cab,fde) ∧ C(ab,de) ∧ AC(abc,def)", "C(bc,ef) ∧ C(ac,df)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f)
      and G.angle_congruent(p.c, p.a, p.b, p.f, p.d, p.e) and G.seg_congruent(p.a, p.b, p.d, p.e)
      and G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f),
      post=lambda p: G.seg_congruent(p.b, p.c, p.e, p.f) and G.seg_congruent(p.a, p.c, p.d, p.f), note=_MODEL_NOTE)
def _asa(s):
    return _tri_pair(s)


@spec("THM-SSS", "congruent", "T ∧ T ∧ C(ab,de) ∧ C(bc,ef) ∧ C(ca,fd)", "AC(abc,def) ∧ AC(bca,efd) ∧ AC(cab,fde)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.d, p.e, p.f) and G.seg_congruent(p.a, p.b, p.d, p.e)
      and G.seg_congruent(p.b, p.c, p.e, p.f) and G.seg_congruent(p.c, p.a, p.f, p.d),
      post=lambda p: G.angle_congruent(p.a, p.b, p.c, p.d, p.e, p.f) and G.angle_congruent(p.b, p.c, p.a, p.e, p.f, p.d)
      and G.angle_congruent(p.c, p.a, p.b, p.f, p.d, p.e), note=_MODEL_NOTE)
def _sss(s):
    return _tri_pair(s)


# -- circles --------------------------------------------------------------------------------


def _cci2_post(p) -> bool:
    x = K.cci_second(p.c1, p.a, p.b, p.c2, p.d)
    y = K.cci(p.c1, p.a, p.b, p.c2, p.d)
    return (G.seg_congruent(p.c1, x, p.c1, p.a) and G.seg_congruent(p.c2, x, p.c2, p.d) and x != y
            and G.coplanar(p.a, p.c1, p.b, x))


@spec("THM-cci-second", "crossing-circles", "C(c1a,c1b) ∧ c2a<c2d ∧ c2d<c2b ∧ PL_{a c1 b}(d) ∧ PL_{a c1 b}(c2)",
      "C(c1x,c1a) ∧ C(c2x,c2d) ∧ x ≠ cci(c1,a,b,c2,d) ∧ PL_{a c1 b}(x)",
      pre=_cci_premise, post=_cci2_post)
def _cci2(s):
    return draw_cci(s)


def _in_plane_rot(s: Sampler, v):
    # a vector of length |v| in the frame plane, rotated by a rational angle
    e1, e2, _ = s.frame.e
    u, w = s.unit_dir()
    # components of v in the frame basis
    a = v.x * e1[0] + v.y * e1[1] + v.z * e1[2]
    b = v.x * e2[0] + v.y * e2[1] + v.z * e2[2]
    ra, rb = a * u - b * w, a * w + b * u
    return s.frame.at(ra, rb) - s.frame.at(0, 0)


def _lc_draw(s: Sampler, segment: bool):
    c = s.pt()
    d = s.distinct(c)
    a = lerp(c, c + _in_plane_rot(s, d - c), s.t01() if s.coin(0.9) else Q(0))
    if segment:
        b = c + _in_plane_rot(s, d - c).scale(1 + s.pos(3, 2))
    elif s.coin(0.1):
        b = lerp(a, c, s.q(4, 2)) if not same_pt(a, c) else s.distinct(a)
    else:
        b = s.distinct(a)
    return dict(c=c, d=d, a=a, b=b)


def _lc_post(p) -> bool:
    x, y = K.line_circle(p.c, p.d, p.a, p.b)
    return (x != y and _nc(p.a, p.b, x) and _nc(p.a, p.b, y)
            and G.seg_congruent(p.c, p.d, p.c, y) and G.seg_congruent(p.c, p.d, p.c, x))


@spec("THM-line-circle", "circle-line", "ca<cd ∧ c≠d ∧ a≠b", "x≠y ∧ L̃(a,b,x) ∧ L̃(a,b,y) ∧ cd ≅ cy ≅ cx",
      pre=lambda p: G.seg_less(p.c, p.a, p.c, p.d) and p.c != p.d and p.a != p.b,
      post=_lc_post)
def _lc(s):
    return _lc_draw(s, False)


@spec("THM-segment-circle", "circle-line", "ca<cd ∧ cd<cb", "B(a,z,b) ∧ cz ≅ cd",
      pre=lambda p: G.seg_less(p.c, p.a, p.c, p.d) and G.seg_less(p.c, p.d, p.c, p.b),
      post=lambda p: G.between(p.a, K.segment_circle(p.c, p.d, p.a, p.b), p.b)
      and G.seg_congruent(p.c, K.segment_circle(p.c, p.d, p.a, p.b), p.c, p.d))
def _sc(s):
    return _lc_draw(s, True)


@spec("THM-colinear-equidistant-unique", "colinear", "L(c1,c2,x) ∧ c1x ≅ c1y ∧ c2x ≅ c2y", "x = y",
      pre=lambda p: G.colinear(p.c1, p.c2, p.x) and G.seg_congruent(p.c1, p.x, p.c1, p.y)
      and G.seg_congruent(p.c2, p.x, p.c2, p.y),
      post=lambda p: p.x == p.y)
def _ceu(s):
    c1, c2 = _pair(s)
    x = _mixed_on_line(s, c1, c2)
    if s.coin(0.7):
        # the same point reached along another route
        y = K.doub(K.doub(x, c1), c1) if s.coin() else K.mid(x, x)
    else:
        y = s.on_circle(c1, 1)
    return dict(c1=c1, c2=c2, x=x, y=y)


@spec("THM-perpendicular-bisector", "bisector", "a≠b ∧ ca ≅ cb", "c = mid(a,b) ∨ a·mid(a,b)·c right",
      pre=lambda p: p.a != p.b and G.seg_congruent(p.c, p.a, p.c, p.b),
      post=lambda p: p.c == K.mid(p.a, p.b) or G.right_angle(p.a, K.mid(p.a, p.b), p.c))
def _pbl(s):
    a = s.space()
    b = s.space()
    while same_pt(a, b):
        b = s.space()
    m = K.mid(a, b)
    c = m if s.coin(0.15) else m + _cross(s.space(), b - a)
    return dict(a=a, b=b, c=c)


def _circumcenter(a, b, d):
    u, v = b - a, d - a
    w = _cross(u, v)
    ww = _dot(w, w)
    num = _cross(w, u).scale(_dot(v, v)) + _cross(v, w).scale(_dot(u, u))
    return a + num.scale(1 / (2 * ww))


@spec("THM-unique-center", "circle", "a,b,d distinct ∧ c1a≅c1b≅c1d ∧ c2a≅c2b≅c2d ∧ PL_abd(c1) ∧ PL_abd(c2)",
      "c1 = c2",
      pre=lambda p: p.a != p.b and p.a != p.d and p.b != p.d
      and G.seg_congruent(p.c1, p.a, p.c1, p.b) and G.seg_congruent(p.c1, p.a, p.c1, p.d)
      and G.seg_congruent(p.c2, p.a, p.c2, p.b) and G.seg_congruent(p.c2, p.a, p.c2, p.d)
      and G.coplanar(p.a, p.b, p.d, p.c1) and G.coplanar(p.a, p.b, p.d, p.c2),
      post=lambda p: p.c1 == p.c2,
      note="Centres are restricted to the plane of a, b, d; in space they form a line.")
def _uc(s):
    c1 = s.pt()
    r = s.pos(6, 2)
    a, b, d = (s.on_circle(c1, r) for _ in range(3))
    if not is_tri(a, b, d):
        return None
    return dict(a=a, b=b, d=d, c1=c1, c2=_circumcenter(a, b, d))


# -- supplementary and vertical angles ----------------------------------------------------


def _supp_draw(s: Sampler):
    a, b, d = s.tri()
    return a, b, s.beyond(a, b), d


@spec("THM-supplements-congruent", "supplementary",
      "dba, dbc supplementary ∧ hfe, hfg supplementary ∧ AC(dba,hfe)", "AC(dbc,hfg)",
      pre=lambda p: G.supplementary(p.d, p.b, p.a, p.c) and G.supplementary(p.h, p.f, p.e, p.g)
      and G.angle_congruent(p.d, p.b, p.a, p.h, p.f, p.e),
      post=lambda p: G.angle_congruent(p.d, p.b, p.c, p.h, p.f, p.g), note=_MODEL_NOTE)
def _suppc(s):
    a, b, c, d = _supp_draw(s)
    o = s.space()
    rf = s.rotation()
    e, f, h = (o + apply(rf, q - b) for q in (a, b, d))
    e = lerp(f, e, s.choice([s.t01(), s.gt1()]))
    h = lerp(f, h, s.choice([s.t01(), s.gt1()]))
    g = s.beyond(e, f)
    return dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h)


@spec("THM-vertical-angles-congruent", "vertical", "acd vertical to bce", "AC(acd,bce)",
      pre=lambda p: G.vertical(p.a, p.b, p.c, p.d, p.e),
      post=lambda p: G.angle_congruent(p.a, p.c, p.d, p.b, p.c, p.e), note=_MODEL_NOTE)
def _vac(s):
    a, c, d = s.tri()
    return dict(a=a, b=s.beyond(a, c), c=c, d=d, e=s.beyond(d, c))


def _pair_class_post(p) -> bool:
    got = G.angle_pair_class((p.d, p.b, p.a), (p.x, p.b, p.y))
    if G.supplementary(p.d, p.b, p.a, p.y) and p.x == p.d:
        return got is G.AnglePair.SUPPLEMENTARY
    if G.vertical(p.a, p.y, p.b, p.d, p.x):
        return got is G.AnglePair.VERTICAL
    return got is G.AnglePair.NEITHER


@spec("THM-angle-pair-classification", "supplementary", "T(a,b,d)",
      "angle_pair_class agrees with the supplementary and vertical definitions",
      pre=lambda p: G.triangle(p.a, p.b, p.d), post=_pair_class_post)
def _apc(s):
    a, b, d = s.tri()
    r = s.rng.random()
    if r < 0.4:
        x, y = d, s.beyond(a, b)
    elif r < 0.8:
        x, y = s.beyond(d, b), s.beyond(a, b)
    else:
        x, y = s.pt(), s.pt()
    return dict(a=a, b=b, d=d, x=x, y=y)


def _side_class_post(p) -> bool:
    side = G.side_of_line(p.c, p.d, p.a, p.b)
    return (side is not G.Side.NEITHER and (side is G.Side.SAME) == G.same_side(p.c, p.d, p.a, p.b)
            and (side is G.Side.OPPOSITE) == G.opposite_side(p.c, p.d, p.a, p.b))


@spec("THM-side-of-line-classification", "plane", "T(a,b,c) ∧ T(a,b,d) ∧ PL_abc(d)",
      "side_of_line(c,d,ab) is SAME exactly when SS(c,d,ab) and OPPOSITE exactly when OS(c,d,ab)",
      pre=lambda p: G.triangle(p.a, p.b, p.c) and G.triangle(p.a, p.b, p.d) and G.coplanar(p.a, p.b, p.c, p.d),
      post=_side_class_post)
def _scl(s):
    a, b, c = s.tri()
    return dict(a=a, b=b, c=c, d=s.off_line(a, b))
