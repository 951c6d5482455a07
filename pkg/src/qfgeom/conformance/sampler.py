"""Seeded point sampling for premise-directed instance generation.

Planar configurations are drawn in a 2D parameter plane and mapped into
space by a rational rigid motion (a rotation built from an integer
quaternion plus a rational translation).  Rigid motions preserve every
relation, so planar recipes stay valid, while the points still exercise
the full 3D predicates.  About half the frames are the identity, which
keeps many instances on the plane z = 0.

The helpers here never call the public predicates of :mod:`qfgeom.geom`;
they use raw exact vector algebra so that a mutated predicate cannot
steer its own test instances.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Tuple

from ..exactnum import ConstructibleReal, Q
from ..exactnum.real import _coerce
from ..geom import Point, _cross, _dot, _is_zero_vec

Num = ConstructibleReal


def is_tri(a: Point, b: Point, c: Point) -> bool:
    return not _is_zero_vec(_cross(b - a, c - a))


def same_pt(a: Point, b: Point) -> bool:
    return _is_zero_vec(a - b)


def lerp(a: Point, b: Point, t) -> Point:
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z))


class Frame:
    """Rigid motion p(s, t, h) = o + s*e1 + t*e2 + h*e3 with rational entries."""

    def __init__(self, origin: Tuple[Fraction, ...], cols) -> None:
        self.o = [Q(v) for v in origin]
        self.e = [[Q(v) for v in col] for col in cols]

    def at(self, s, t, h=0) -> Point:
        s, t, h = _coerce(s), _coerce(t), _coerce(h)
        e1, e2, e3 = self.e
        return Point(
            self.o[0] + s * e1[0] + t * e2[0] + h * e3[0],
            self.o[1] + s * e1[1] + t * e2[1] + h * e3[1],
            self.o[2] + s * e1[2] + t * e2[2] + h * e3[2],
        )


IDENTITY = Frame((0, 0, 0), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def rotation_frame(w: int, x: int, y: int, z: int, origin) -> Frame:
    n = w * w + x * x + y * y + z * z
    r = [
        [w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z],
    ]
    cols = [[Fraction(r[i][j], n) for i in range(3)] for j in range(3)]
    return Frame(origin, cols)


class Sampler:
    """Random small-rational geometry driven by a ``random.Random``."""

    def __init__(self, rng: random.Random, radical_rate: float = 0.25, spatial_rate: float = 0.5):
        self.rng = rng
        self.radical_rate = radical_rate
        self.spatial_rate = spatial_rate
        self.frame = IDENTITY

    # -- scalars ---------------------------------------------------------

    def q(self, lim: int = 12, den: int = 4) -> Fraction:
        return Fraction(self.rng.randint(-lim, lim), self.rng.randint(1, den))

    def pos(self, lim: int = 8, den: int = 4) -> Fraction:
        return Fraction(self.rng.randint(1, lim), self.rng.randint(1, den))

    def t01(self) -> Num:
        """A number strictly between 0 and 1, sometimes irrational."""
        den = self.rng.randint(2, 9)
        k = self.rng.randint(1, den - 1)
        if self.rng.random() < self.radical_rate:
            return Q(Fraction(k, den)).sqrt()
        return Q(Fraction(k, den))

    def gt1(self) -> Num:
        """A number strictly greater than 1."""
        return 1 + self.pos(4, 3) * self.t01() * 2

    # -- frames and points -------------------------------------------------

    def new_frame(self) -> Frame:
        if self.rng.random() >= self.spatial_rate:
            self.frame = IDENTITY
        else:
            while True:
                quat = [self.rng.randint(-3, 3) for _ in range(4)]
                if any(quat):
                    break
            origin = [self.q(6, 2) for _ in range(3)]
            self.frame = rotation_frame(*quat, origin)
        return self.frame

    def pt(self) -> Point:
        return self.frame.at(self.q(), self.q())

    def off(self, sign: int = 0) -> Point:
        """A point off the frame plane; ``sign`` fixes the side when nonzero."""
        h = self.pos()
        if sign < 0 or (sign == 0 and self.rng.random() < 0.5):
            h = -h
        return self.frame.at(self.q(), self.q(), h)

    def space(self) -> Point:
        return Point(Q(self.q()), Q(self.q()), Q(self.q()))

    def distinct(self, *avoid: Point) -> Point:
        while True:
            p = self.pt()
            if not any(same_pt(p, a) for a in avoid):
                return p

    def tri(self) -> Tuple[Point, Point, Point]:
        while True:
            a, b, c = self.pt(), self.pt(), self.pt()
            if is_tri(a, b, c):
                return a, b, c

    def off_line(self, a: Point, b: Point) -> Point:
        while True:
            c = self.pt()
            if is_tri(a, b, c):
                return c

    def between(self, a: Point, c: Point) -> Point:
        return lerp(a, c, self.t01())

    def beyond(self, a: Point, b: Point) -> Point:
        """c with B(a, b, c)."""
        return lerp(a, b, self.gt1())

    def on_line(self, a: Point, b: Point) -> Point:
        """A point of line ab, including a and b themselves now and then."""
        r = self.rng.random()
        if r < 0.1:
            return a
        if r < 0.2:
            return b
        t = self.q(6, 3)
        if self.rng.random() < self.radical_rate:
            t = Q(t) * Q(2).sqrt()
        return lerp(a, b, t)

    def ray_point(self, b: Point, a: Point) -> Point:
        """e with SD(b, a, e) and b != a: a point on the open ray from b through a."""
        r = self.rng.random()
        if r < 0.15:
            return a
        if r < 0.55:
            return lerp(b, a, self.t01())
        return lerp(b, a, self.gt1())

    def choice(self, seq):
        return seq[self.rng.randrange(len(seq))]

    def coin(self, p: float = 0.5) -> bool:
        return self.rng.random() < p

    # -- exact helpers tied to the current frame ---------------------------

    def normal(self) -> Point:
        e3 = self.frame.e[2]
        return Point(e3[0], e3[1], e3[2])

    def side(self, a: Point, b: Point, p: Point) -> int:
        """Sign of p relative to the directed line ab inside the frame plane."""
        return _dot(self.normal(), _cross(b - a, p - a)).sign()

    def other_side(self, a: Point, b: Point, p: Point) -> Point:
        """A point on the far side of line ab from p (point reflection through the line)."""
        return lerp(p, lerp(a, b, self.q(3, 2)), 2)

    def rotation(self) -> Frame:
        """A random rational rotation about the origin."""
        quat = [self.rng.randint(-3, 3) for _ in range(3)] + [self.rng.randint(1, 3)]
        return rotation_frame(*quat, (0, 0, 0))

    def rotate(self, v: Point) -> Point:
        """v under a random rational rotation (exact lengths preserved)."""
        return apply(self.rotation(), v)

    def unit_dir(self) -> Tuple[Fraction, Fraction]:
        """A rational point on the unit circle."""
        t = self.q(6, 4)
        n = 1 + t * t
        return (1 - t * t) / n, 2 * t / n

    def on_circle(self, c: Point, r) -> Point:
        """A point of the circle in the frame plane with centre c and radius r."""
        u, v = self.unit_dir()
        e1, e2, _ = self.frame.e
        r = _coerce(r)
        return Point(
            c.x + r * (u * e1[0] + v * e2[0]),
            c.y + r * (u * e1[1] + v * e2[1]),
            c.z + r * (u * e1[2] + v * e2[2]),
        )


def apply(f: Frame, v: Point) -> Point:
    return f.at(v.x, v.y, v.z)


def orient_sign(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> int:
    return _dot(_cross(a - b, c - b), _cross(d - e, f - e)).sign()


def d2(a: Point, b: Point):
    v = a - b
    return _dot(v, v)
