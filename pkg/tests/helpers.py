"""Random rational configurations and a multiprecision float oracle."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence, Tuple

from mpmath import mp, mpf

from qfgeom.exactnum import approx
from qfgeom.geom import P, Point

Vec = Tuple[Fraction, Fraction, Fraction]


def frac(rng: random.Random, lim: int = 12, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-lim * den, lim * den), rng.randint(1, den))


def vec(rng: random.Random, planar: bool = True) -> Vec:
    return (frac(rng), frac(rng), Fraction(0) if planar else frac(rng))


def pt(v: Sequence) -> Point:
    return P(*v)


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def scale(k, u: Vec) -> Vec:
    return tuple(k * a for a in u)


def dot(u: Vec, v: Vec):
    return sum(a * b for a, b in zip(u, v))


def cross(u: Vec, v: Vec) -> Vec:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def is_triangle(a: Vec, b: Vec, c: Vec) -> bool:
    return any(cross(sub(b, a), sub(c, a)))


def tri(rng: random.Random, planar: bool = True):
    while True:
        a, b, c = vec(rng, planar), vec(rng, planar), vec(rng, planar)
        if is_triangle(a, b, c):
            return a, b, c


def mq(q) -> mpf:
    q = Fraction(q)
    return mpf(q.numerator) / q.denominator


def floats(p: Point):
    """Coordinates at 50 digits, from the kernel's own certified enclosure."""
    out = []
    for c in p:
        iv = approx(c, 180)
        out.append(mpf(iv.lo.numerator) / mpf(iv.lo.denominator))
    return out


def close(p: Point, expected: Sequence, tol: float = 1e-40) -> bool:
    with mp.workdps(60):
        return all(abs(x - mpf(e)) < tol for x, e in zip(floats(p), expected))


# -- parser fuzz input ----------------------------------------------------------------------

_VOCAB = (["point", "let", "assert", "query", "sqrt", "true", "false", "==", "=", "(", ")", ",",
           "+", "-", "*", "/", "#", "\n", " ", "a", "b", "1", "0", "3/4", "99999999999999999999"]
          + ["mid", "ext", "cci", "planemeet", "trisect1", "B", "C", "AC", "SSP", "Pgram", "nope"])


def _corpus_lines():
    from pathlib import Path

    lines = []
    for p in sorted((Path(__file__).parent / "golden").glob("*.geo")):
        lines.extend(l for l in p.read_text(encoding="utf-8").splitlines() if l.strip())
    return lines


def _mutate(rng: random.Random, lines) -> str:
    """A few corpus lines in random order, sometimes with characters edited."""
    picked = [rng.choice(lines) for _ in range(rng.randrange(1, 12))]
    out = []
    for line in picked:
        if rng.random() < 0.3 and line:
            i = rng.randrange(len(line))
            op = rng.randrange(3)
            if op == 0:
                line = line[:i] + line[i + 1:]
            elif op == 1:
                line = line[:i] + rng.choice("(),=+-*/ #ab019") + line[i:]
            else:
                line = line[:i] + rng.choice("(),=+-*/ #ab019") + line[i + 1:]
        out.append(line)
    return "\n".join(out)


def fuzz_inputs(n: int, seed: int = 0):
    """Raw unicode noise, token soup from the script vocabulary, and edited corpus lines."""
    rng = random.Random(seed)
    lines = _corpus_lines()
    for _ in range(n):
        u = rng.random()
        if u < 0.2:
            yield "".join(chr(rng.randrange(0, 0x250)) for _ in range(rng.randrange(0, 40)))
        elif u < 0.5:
            yield " ".join(rng.choice(_VOCAB) for _ in range(rng.randrange(0, 30)))
        else:
            yield _mutate(rng, lines)
