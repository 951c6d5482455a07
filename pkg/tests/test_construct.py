from __future__ import annotations

import random
from fractions import Fraction

import pytest
from mpmath import mp, mpf, sqrt as msqrt

from qfgeom import construct as K
from qfgeom import geom as G
from qfgeom.construct import ConstructionError, Reason
from qfgeom.exactnum import Q, sqrt
from qfgeom.geom import P, Side

from helpers import add, close, cross, dot, frac, mq, pt, scale, sub, tri, vec

O = P(0, 0, 0)
X = P(1, 0, 0)
Y = P(0, 1, 0)
Z = P(0, 0, 1)


def _raises(reason: Reason, fn, *args):
    with pytest.raises(ConstructionError) as info:
        fn(*args)
    assert info.value.reason is reason
    assert info.value.witness
    return info.value


# -- segment constructions -----------------------------------------------------------------


def test_ext_examples():
    assert K.ext(O, X, O, P(1, 1)) == P(1 + sqrt(2), 0)
    assert K.ext(O, X, Y, Y) == X
    err = _raises(Reason.UNDEFINED, K.ext, X, X, O, Y)
    assert err.construction == "ext" and err.reason.value == "UndefinedOutsideDomain"


def test_ext_postconditions_and_uniqueness():
    rng = random.Random(1)
    for _ in range(300):
        a, b, c, d = (pt(vec(rng, planar=False)) for _ in range(4))
        if a == b:
            continue
        r = K.ext(a, b, c, d)
        assert G.seg_congruent(b, r, c, d)
        if c != d:
            assert G.between(a, b, r)
        # any point on ray a->b beyond b at distance |cd| equals r
        u = b - a
        k = ((G._d2(c, d)) / G._dot(u, u)).sqrt()
        assert P(b.x + k * u.x, b.y + k * u.y, b.z + k * u.z) == r


def test_doub_mid_lf_examples():
    assert K.doub(O, P(1, 2)) == P(2, 4)
    assert K.doub(X, X) == X
    assert K.mid(O, P(2, 0)) == X
    assert K.mid(Y, Y) == Y
    b3 = P(3, 0)
    assert K.lf(O, b3, Y, P(0, 3)) == P(2, 0)
    assert K.lf(O, b3, Y, Y) == O
    assert K.lf(O, b3, O, b3) == b3
    _raises(Reason.UNDEFINED, K.lf, X, X, O, Y)


def test_midpoint_identities_on_random_points():
    rng = random.Random(2)
    for _ in range(300):
        a, b, c, d = (pt(vec(rng, planar=False)) for _ in range(4))
        assert K.mid(a, K.doub(a, b)) == b
        assert K.mid(K.mid(a, b), K.mid(c, d)) == K.mid(K.mid(a, c), K.mid(b, d))
        if a != b:
            assert G.between(a, K.mid(a, b), b)
            assert K.doub(a, b) == K.ext(a, b, a, b)
            x = K.lf(a, b, c, d)
            assert G.seg_congruent(a, x, c, d)
            if c != d:
                assert G.same_direction(a, x, b)


# -- angle transport ----------------------------------------------------------------------


def test_ats_examples():
    a, b, c = X, O, Y  # right angle, |bc| = 1
    d, e, f = P(3, 0), P(2, 0), P(2, 5)
    assert K.ats(a, b, c, d, e, f) == P(2, 1)
    assert K.ato(a, b, c, d, e, f) == P(2, -1)
    rng = random.Random(3)
    for _ in range(100):
        t = list(map(pt, tri(rng)))
        assert K.ats(*t, *t) == t[2]


def _ats_formula(a, b, c, d, e, f):
    """The closed form, in 50-digit floats."""
    with mp.workdps(50):
        A, B, C, D, E, F = ([mq(v) for v in p] for p in (a, b, c, d, e, f))

        def sub_(p, q):
            return [x - y for x, y in zip(p, q)]

        def dot_(p, q):
            return sum(x * y for x, y in zip(p, q))

        ba, bc = sub_(A, B), sub_(C, B)
        cos = dot_(ba, bc) / msqrt(dot_(ba, ba) * dot_(bc, bc))
        sin = msqrt(1 - cos * cos)
        u = sub_(D, E)
        nu = msqrt(dot_(u, u))
        u = [x / nu for x in u]
        w = sub_(F, E)
        w = [x - dot_(w, u) * y for x, y in zip(w, u)]
        nw = msqrt(dot_(w, w))
        w = [x / nw for x in w]
        r = msqrt(dot_(bc, bc))
        return [ei + r * (cos * ui + sin * wi) for ei, ui, wi in zip(E, u, w)]


def test_ats_random_against_formula_and_axioms():
    rng = random.Random(4)
    for i in range(300):
        planar = i % 2 == 0
        a, b, c = tri(rng, planar)
        d, e, f = tri(rng, planar)
        A, B, C, D, E, F = map(pt, (a, b, c, d, e, f))
        x = K.ats(A, B, C, D, E, F)
        assert close(x, _ats_formula(a, b, c, d, e, f))
        assert G.angle_congruent(A, B, C, D, E, x)
        assert G.seg_congruent(B, C, E, x)
        assert G.side_of_line(x, F, D, E) is Side.SAME
        assert G.coplanar(D, E, F, x)
        y = K.ato(A, B, C, D, E, F)
        assert G.side_of_line(y, F, D, E) is Side.OPPOSITE
        assert G.colinear(D, E, K.mid(x, y), strict=False)


def test_ats_degenerate():
    _raises(Reason.UNDEFINED, K.ats, O, X, P(2, 0), X, O, Y)
    _raises(Reason.UNDEFINED, K.ats, X, O, Y, X, O, P(3, 0))


# -- crossbow -----------------------------------------------------------------------------


def test_crossbow_examples():
    assert K.crossbow(P(0, 2), P(-1, 1), O, P(1, 1)) == Y
    err = _raises(Reason.UNDEFINED, K.crossbow, P(0, 2), P(-1, 1), O, P(-2, 1))
    assert len(err.witness) == 4


def _line_hit(a, c, b, d):
    """Parameter t with a + t(c-a) on line bd, solved in rationals (planar)."""
    ac, bd, ab = sub(c, a), sub(d, b), sub(b, a)
    den = ac[0] * bd[1] - ac[1] * bd[0]
    return (ab[0] * bd[1] - ab[1] * bd[0]) / den


def test_crossbow_matches_line_intersection():
    rng = random.Random(5)
    hits = 0
    while hits < 300:
        a, b, c = tri(rng)
        d = vec(rng)
        A, B, C, D = map(pt, (a, b, c, d))
        if not G.opposite_orientation(D, B, A, D, B, C):
            continue
        hits += 1
        t = _line_hit(a, c, b, d)
        assert 0 < t < 1
        x = K.crossbow(D, A, B, C)
        assert x == pt(add(a, scale(t, sub(c, a))))
        # feasibility: bx < ba or bx < bc
        assert G.seg_less(B, x, B, A) or G.seg_less(B, x, B, C)


# -- circles ----------------------------------------------------------------------------------


def test_cci_unit_example():
    c1, a, b, c2, d = O, X, P(-1, 0), X, P(1, 1)
    x = K.cci(c1, a, b, c2, d)
    assert x == P(Q("1/2"), sqrt(3) / 2)
    assert G.seg_congruent(c1, x, O, X) and G.seg_congruent(c2, x, O, X)
    assert K.cci_second(c1, a, b, c2, d) == P(Q("1/2"), -sqrt(3) / 2)


def test_cci_preconditions():
    _raises(Reason.UNDEFINED, K.cci, O, P(3, 0), P(-3, 0), X, P(1, 1))  # a outside circle 2
    _raises(Reason.UNDEFINED, K.cci, O, X, P(-2, 0), X, P(1, 1))  # c1a vs c1b
    _raises(Reason.UNDEFINED, K.cci, O, X, P(0, 0, -1), X, P(1, 1))  # not coplanar


def _cci_instance(rng, planar=True):
    while True:
        c1, c2 = vec(rng, planar), vec(rng, planar)
        if c1 == c2:
            continue
        # a on circle 1 inside circle 2, b the antipode outside
        t = Fraction(rng.randint(1, 9), 10)
        a = add(c1, scale(t, sub(c2, c1)))
        b = add(c1, scale(-t, sub(c2, c1)))
        # pick d at a distance between |c2 a| and |c2 b|
        ra, rb = dot(sub(c2, a), sub(c2, a)), dot(sub(c2, b), sub(c2, b))
        k = Fraction(rng.randint(1, 9), 10)
        r2 = ra + k * (rb - ra)
        off = vec(rng, planar)
        if not any(cross(sub(off, c1), sub(c2, c1))):
            continue
        return map(pt, (c1, a, b, c2)), c2, r2, off


def test_cci_random_instances():
    rng = random.Random(6)
    for _ in range(150):
        (c1, a, b, c2), c2v, r2, _ = _cci_instance(rng)
        d = P(Q(c2v[0]) + Q(r2).sqrt(), c2v[1], c2v[2])
        x = K.cci(c1, a, b, c2, d)
        y = K.cci_second(c1, a, b, c2, d)
        for p in (x, y):
            assert G.seg_congruent(c1, p, c1, a)
            assert G.seg_congruent(c2, p, c2, d)
        assert x != y
        assert K.cci(c1, a, b, c2, d) == x  # deterministic


def test_line_circle_examples():
    x, y = K.line_circle(O, X, P(0, Q("1/2")), P(1, Q("1/2")))
    want = {(sqrt(3) / 2).to_expr(), (-sqrt(3) / 2).to_expr()}
    assert {x.x.to_expr(), y.x.to_expr()} == want
    assert x.y == Q("1/2") == y.y
    assert K.segment_circle(O, X, O, P(3, 0)) == X
    _raises(Reason.UNDEFINED, K.line_circle, O, X, P(0, 2), P(1, 2))


def test_line_circle_random():
    rng = random.Random(7)
    done = 0
    while done < 150:
        c, a, b = (pt(vec(rng)) for _ in range(3))
        d = pt(vec(rng))
        if a == b or c == d or not G.seg_less(c, a, c, d):
            continue
        done += 1
        x, y = K.line_circle(c, d, a, b)
        assert x != y
        for p in (x, y):
            assert G.seg_congruent(c, p, c, d)
            assert G.colinear(a, b, p, strict=False)
        if G.seg_less(c, d, c, b):
            z = K.segment_circle(c, d, a, b)
            assert G.between(a, z, b) and G.seg_congruent(c, z, c, d)


def test_segment_circle_layoff_toward_a_can_miss_the_segment():
    # counterexample to laying off from the perpendicular foot toward a
    c, d = O, P(3, Q("-7/2"))
    a, b = P(Q("-9/8"), Q("1/4")), P(Q("365/34"), Q("-285/68"))
    assert G.seg_less(c, a, c, d) and G.seg_less(c, d, c, b)
    x, _ = K.line_circle(c, d, a, b)
    p = K.drop_perp(a, b, c)
    naive = K.lf(p, a, p, x)
    assert not G.between(a, naive, b)
    z = K.segment_circle(c, d, a, b)
    assert G.between(a, z, b) and G.seg_congruent(c, z, c, d)


# -- perpendiculars and derived ----------------------------------------------------------------


def test_ortho_examples():
    assert K.ortho(X, O, Y) == Z
    o = K.ortho(X, O, P(2, 0))  # colinear fallback
    assert G.right_angle(X, O, o) and G.right_angle(P(2, 0), O, o)
    assert G.seg_congruent(O, o, O, X)
    _raises(Reason.DEGENERATE, K.ortho, X, X, Y)


def test_ortho_random():
    rng = random.Random(8)
    for _ in range(200):
        a, b, c = map(pt, tri(rng, planar=False))
        o = K.ortho(a, b, c)
        assert G.right_angle(a, b, o) and G.right_angle(c, b, o)
        assert not G.coplanar(a, b, c, o)


def test_drop_perp_examples_and_projection_oracle():
    assert K.drop_perp(O, P(4, 0), P(1, 2)) == X
    assert K.drop_perp(O, P(4, 0), P(0, 3)) == O  # right angle already at a
    _raises(Reason.UNDEFINED, K.drop_perp, O, X, P(2, 0))
    rng = random.Random(9)
    for i in range(300):
        a, b, c = tri(rng, planar=i % 3 != 0)
        ab = sub(b, a)
        foot = add(a, scale(dot(sub(c, a), ab) / dot(ab, ab), ab))
        p = K.drop_perp(*map(pt, (a, b, c)))
        assert p == pt(foot)
        if pt(foot) != pt(c):
            assert G.colinear(pt(a), pt(b), p, strict=False)


def test_right_ref_and_erect_perp():
    r0, r1, r2 = K.right_ref()
    assert G.right_angle(r0, r1, r2)
    x = K.erect_perp(X, O, P(5, 0), P(0, 5))
    assert x.x == 1 and x.y > 0
    assert G.right_angle(O, X, x)
    assert G.side_of_line(x, P(0, 5), O, P(5, 0)) is Side.SAME
    _raises(Reason.UNDEFINED, K.erect_perp, Y, O, X, P(0, 5))
    _raises(Reason.DEGENERATE, K.erect_perp, O, O, O, Y)


def test_angle_bisector_examples():
    x = K.angle_bisector(X, O, Y)
    assert G.colinear(O, x, P(1, 1))
    assert G.angle_congruent(X, O, x, x, O, Y)
    rng = random.Random(10)
    for _ in range(150):
        a, b, c = map(pt, tri(rng))
        x = K.angle_bisector(a, b, c)
        assert G.angle_congruent(a, b, x, x, b, c)
        assert G.interior(x, a, b, c)
    _raises(Reason.DEGENERATE, K.angle_bisector, O, X, P(2, 0))


def test_isosceles_apex_and_perp_bisector():
    rng = random.Random(11)
    for _ in range(100):
        a, b = pt(vec(rng)), pt(vec(rng))
        if a == b:
            continue
        t = K.isosceles_apex(a, b)
        assert G.seg_congruent(a, t, b, t) and G.triangle(a, b, t)
        s = pt(vec(rng))
        if G.triangle(a, b, s):
            q = K.perp_bisector(a, b, s)
            assert G.right_angle(a, K.mid(a, b), q)
            assert G.same_side(q, s, a, b)


def test_trisect_examples_and_affine_oracle():
    c, d = K.trisect(O, P(3, 3))
    assert (c, d) == (P(1, 1), P(2, 2))
    _raises(Reason.DEGENERATE, K.trisect, X, X)
    rng = random.Random(12)
    for i in range(200):
        a, b = vec(rng, planar=i % 2 == 0), vec(rng, planar=i % 2 == 0)
        if a == b:
            continue
        A, B = pt(a), pt(b)
        c, d = K.trisect(A, B)
        assert c == pt(add(a, scale(Fraction(1, 3), sub(b, a))))
        assert d == pt(add(a, scale(Fraction(2, 3), sub(b, a))))
        assert G.seg_congruent(A, c, c, d) and G.seg_congruent(c, d, d, B)
        assert G.between(A, c, d) and G.between(c, d, B)


# -- planes -----------------------------------------------------------------------------------


def test_plane_meet_example():
    a, b, c = O, X, Y  # z = 0
    d, e, f = P(5, 0, 0), Z, P(1, 0, 1)  # y = 0
    x = P(2, 0, 0)
    p = K.plane_meet(a, b, c, d, e, f, x)
    assert p.y == 0 and p.z == 0 and p != x
    _raises(Reason.UNDEFINED, K.plane_meet, a, b, c, d, e, f, P(2, 1, 0))


def test_plane_meet_identical_planes():
    a, b, c = O, X, Y
    p = K.plane_meet(a, b, c, P(3, 0), P(0, 3), P(1, 1), P(2, 2))
    assert G.coplanar(a, b, c, p) and p != P(2, 2)


def test_plane_meet_on_common_line():
    rng = random.Random(13)
    for _ in range(25):
        x, y = vec(rng, False), vec(rng, False)
        if x == y:
            continue
        a, d = vec(rng, False), vec(rng, False)
        if not (any(cross(sub(y, x), sub(a, x))) and any(cross(sub(y, x), sub(d, x)))):
            continue
        if not any(cross(cross(sub(y, x), sub(a, x)), cross(sub(y, x), sub(d, x)))):
            continue  # same plane
        X_, Y_, A, D = map(pt, (x, y, a, d))
        p = K.plane_meet(A, X_, Y_, D, Y_, X_, X_)
        assert G.coplanar(A, X_, Y_, p) and G.coplanar(D, Y_, X_, p)
        assert p != X_
        assert G.colinear(X_, Y_, p, strict=False)


def test_outputs_coplanar_with_planar_inputs():
    rng = random.Random(14)
    for _ in range(50):
        a, b, c = map(pt, tri(rng, planar=False))
        n = K.ortho(a, b, c)
        for out in (K.mid(a, c), K.ext(a, b, b, c), K.ats(a, b, c, c, a, b), K.drop_perp(a, b, c),
                    K.angle_bisector(a, b, c), K.erect_perp(b, a, b, c)):
            assert G.coplanar(a, b, c, out)
        assert not G.coplanar(a, b, c, n)


def test_determinism():
    args = (P(1, 2), P(-3, 5), P(4, Q("7/3")), P(0, -2), P(2, 2), P(-1, 9))
    one = K.ats(*args).to_exprs()
    assert all(K.ats(*args).to_exprs() == one for _ in range(3))
