"""Constructions in the coordinate model, and what happens when one is undefined.

Run with ``python3 demos/02_constructions.py``.
"""

from __future__ import annotations

from qfgeom import P, Q, sqrt
from qfgeom import construct as K
from qfgeom import geom as G

a, b = P(0, 0), P(1, 0)

# Unit circles about a and b meet at the apex of an equilateral triangle.
# (-1, 0) lies on the first circle outside the second, as the construction requires.
apex = K.cci(a, b, P(-1, 0), b, P(1, 1))
print("circle-circle meet:", apex)
print("  equals (1/2, sqrt3/2):", apex == P(Q("1/2"), sqrt(3) / 2))
print("  equilateral:", G.seg_congruent(a, b, b, apex) and G.seg_congruent(b, apex, apex, a))

# Trisection lands on the affine thirds, with no rounding anywhere.
c, d = K.trisect(P(0, 0), P(3, 3))
print("trisect (0,0)-(3,3):", c, d)

# Midpoints are bisymmetric; the identity holds exactly even with radical coordinates.
p, q, r, s = P(sqrt(2), 1), P(0, sqrt(3)), P(5, -2), P(Q("1/3"), sqrt(5))
lhs = K.mid(K.mid(p, q), K.mid(r, s))
rhs = K.mid(K.mid(p, r), K.mid(q, s))
print("mid(mid(p,q),mid(r,s)) == mid(mid(p,r),mid(q,s)):", lhs == rhs)

# The foot of the perpendicular from (2, 5) to the line through (0,0) and (4,1) makes a right angle.
foot = K.drop_perp(P(0, 0), P(4, 1), P(2, 5))
print("perpendicular foot:", foot, " right angle:", G.right_angle(P(2, 5), foot, P(0, 0)))

# An undefined construction raises with a reason and the offending points.
try:
    K.ext(a, a, a, b)
except K.ConstructionError as exc:
    print("ext with a repeated point:", exc.reason.value, "-", exc.detail)
