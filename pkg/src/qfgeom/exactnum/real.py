"""The ConstructibleReal expression type."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple, Union

from gmpy2 import mpq
from mpmath import libmp

from . import tower as tw
from .tower import TOWER

_INF = math.inf

Rationalish = Union[int, Fraction, "mpq", str]


class DivisionByZero(ZeroDivisionError):
    """Divisor of a ConstructibleReal division is exactly zero."""


class NegativeRadicand(ValueError):
    """Square root requested of an exactly negative ConstructibleReal."""


class Order(Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Interval:
    """Closed interval with dyadic rational endpoints."""

    lo: mpq
    hi: mpq

    def contains(self, q) -> bool:
        q = mpq(q)
        return self.lo <= q <= self.hi

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _rational_iv(q: mpq) -> Tuple[float, float]:
    try:
        f = float(q)
    except OverflowError:
        return (-_INF, _INF)
    if mpq(f) == q:
        return (f, f)
    return (_down(f), _up(f))


def _iv_mul(a, b):
    alo, ahi = a
    blo, bhi = b
    ps = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
    if any(math.isnan(p) for p in ps):
        return (-_INF, _INF)
    return (_down(min(ps)), _up(max(ps)))


def _iv_div(a, b):
    blo, bhi = b
    if blo <= 0 <= bhi:
        return (-_INF, _INF)
    return _iv_mul(a, (_down(1.0 / bhi), _up(1.0 / blo)))


def _iv_sqrt(a):
    lo, hi = a
    lo = _down(math.sqrt(lo)) if lo > 0 else 0.0
    hi = _up(math.sqrt(hi)) if hi >= 0 else 0.0
    return (max(lo, 0.0), hi)


def _as_mpq(v) -> mpq:
    if isinstance(v, str):
        return mpq(Fraction(v.strip()))
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return mpq(v)


class ConstructibleReal:
    """An exact real built from rationals by field operations and square roots.

    Values are immutable.  Each node keeps a rigorous float enclosure; the
    exact tower form is computed lazily and cached once.
    """

    __slots__ = ("_op", "_args", "_q", "_fiv", "_tower", "_sgn")

    def __init__(self, value: Rationalish = 0) -> None:
        q = _as_mpq(value)
        self._op = "q"
        self._args: tuple = ()
        self._q = q
        self._fiv = _rational_iv(q)
        self._tower = None
        self._sgn = (q > 0) - (q < 0)

    @classmethod
    def _node(cls, op: str, args: tuple, fiv) -> "ConstructibleReal":
        obj = cls.__new__(cls)
        obj._op = op
        obj._args = args
        obj._q = None
        obj._fiv = fiv
        obj._tower = None
        lo, hi = fiv
        obj._sgn = 1 if lo > 0 else (-1 if hi < 0 else None)
        return obj

    # -- structure ----------------------------------------------------------

    @property
    def op(self) -> str:
        return self._op

    @property
    def args(self) -> tuple:
        return self._args

    def is_rational(self) -> bool:
        return self._q is not None

    def as_rational(self) -> mpq:
        if self._q is None:
            raise ValueError("not a rational leaf")
        return self._q

    def float_interval(self) -> Tuple[float, float]:
        return self._fiv

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._q is not None and o._q is not None:
            return ConstructibleReal(self._q + o._q)
        if o._q is not None and o._q == 0:
            return self
        if self._q is not None and self._q == 0:
            return o
        (alo, ahi), (blo, bhi) = self._fiv, o._fiv
        return ConstructibleReal._node("add", (self, o), (_down(alo + blo), _up(ahi + bhi)))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._q is not None and o._q is not None:
            return ConstructibleReal(self._q - o._q)
        if o._q is not None and o._q == 0:
            return self
        (alo, ahi), (blo, bhi) = self._fiv, o._fiv
        return ConstructibleReal._node("sub", (self, o), (_down(alo - bhi), _up(ahi - blo)))

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._q is not None and o._q is not None:
            return ConstructibleReal(self._q * o._q)
        for a, b in ((self, o), (o, self)):
            if a._q is not None:
                if a._q == 0:
                    return ZERO
                if a._q == 1:
                    return b
        return ConstructibleReal._node("mul", (self, o), _iv_mul(self._fiv, o._fiv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if o.sign() == 0:
            raise DivisionByZero("division by an exactly zero value")
        if self._q is not None and o._q is not None:
            return ConstructibleReal(self._q / o._q)
        if o._q is not None and o._q == 1:
            return self
        return ConstructibleReal._node("div", (self, o), _iv_div(self._fiv, o._fiv))

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        if self._q is not None:
            return ConstructibleReal(-self._q)
        lo, hi = self._fiv
        return ConstructibleReal._node("neg", (self,), (-hi, -lo))

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sqrt(self) -> "ConstructibleReal":
        s = self.sign()
        if s < 0:
            raise NegativeRadicand("square root of a negative value")
        if s == 0:
            return ZERO
        if self._q is not None:
            r = _rational_sqrt(self._q)
            if r is not None:
                return ConstructibleReal(r)
        node = ConstructibleReal._node("sqrt", (self,), _iv_sqrt(self._fiv))
        node._sgn = 1
        return node

    # -- exact queries --------------------------------------------------------

    def tower_form(self) -> tw.Elem:
        """Exact canonical-ish form in the global quadratic tower."""
        if self._tower is not None:
            return self._tower
        stack = [self]
        while stack:
            node = stack[-1]
            if node._tower is not None:
                stack.pop()
                continue
            if node._q is not None:
                node._tower = tw.constant(node._q)
                stack.pop()
                continue
            pending = [a for a in node._args if a._tower is None]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            node._tower = _combine(node._op, [a._tower for a in node._args])
        return self._tower

    def sign(self) -> int:
        s = self._sgn
        if s is None:
            s = TOWER.sign(self.tower_form())
            self._sgn = s
        return s

    def approx(self, bits: int) -> Interval:
        return approx(self, bits)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() == 0

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # equality is semantic

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def __bool__(self):
        return self.sign() != 0

    def __float__(self):
        iv = approx(self, 60)
        return float((iv.lo + iv.hi) / 2)

    # -- rendering ------------------------------------------------------------

    def to_expr(self) -> str:
        if self._q is not None:
            return tw._render_q(self._q)
        return TOWER.render(self.tower_form())

    def to_decimal(self) -> str:
        return to_decimal(self)

    def __repr__(self) -> str:
        return f"CR({self.to_expr()})"

    def __str__(self) -> str:
        return self.to_expr()


def _coerce(v):
    if isinstance(v, ConstructibleReal):
        return v
    if isinstance(v, (int, Fraction, str)) or type(v).__name__ == "mpq":
        return ConstructibleReal(v)
    return NotImplemented


def _rational_sqrt(q: mpq):
    from gmpy2 import is_square, isqrt

    n, d = q.numerator, q.denominator
    if is_square(n) and is_square(d):
        return mpq(isqrt(n), isqrt(d))
    return None


def _combine(op: str, forms: list) -> tw.Elem:
    if op == "add":
        return tw.add(forms[0], forms[1])
    if op == "sub":
        return tw.sub(forms[0], forms[1])
    if op == "mul":
        return TOWER.mul(forms[0], forms[1])
    if op == "div":
        return TOWER.div(forms[0], forms[1])
    if op == "neg":
        return tw.neg(forms[0])
    if op == "sqrt":
        return TOWER.sqrt(forms[0])
    raise AssertionError(op)


ZERO = ConstructibleReal(0)
ONE = ConstructibleReal(1)


def Q(value: Rationalish) -> ConstructibleReal:
    """Rational literal."""
    return ConstructibleReal(value)


def sqrt(x) -> ConstructibleReal:
    return _coerce(x).sqrt()


def sign(x) -> int:
    return _coerce(x).sign()


def arith(op: str, x, y=None) -> ConstructibleReal:
    x = _coerce(x)
    if op == "neg":
        return -x
    y = _coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def compare(x, y) -> Order:
    return Order((_coerce(x) - _coerce(y)).sign())


def equals(x, y) -> bool:
    return (_coerce(x) - _coerce(y)).sign() == 0


# -- arbitrary precision enclosure (independent of the tower) ----------------


class _Straddle(Exception):
    pass


def _mp_interval(x: ConstructibleReal, prec: int):
    memo: Dict[int, tuple] = {}
    stack = [x]
    while stack:
        node = stack[-1]
        nid = id(node)
        if nid in memo:
            stack.pop()
            continue
        if node._q is not None:
            n, d = int(node._q.numerator), int(node._q.denominator)
            memo[nid] = (libmp.from_rational(n, d, prec, "f"), libmp.from_rational(n, d, prec, "c"))
            stack.pop()
            continue
        pending = [a for a in node._args if id(a) not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        ivs = [memo[id(a)] for a in node._args]
        memo[nid] = _mp_op(node._op, ivs, prec)
    return memo[id(x)]


def _mp_mul(a, b, prec):
    cands_lo = [libmp.mpf_mul(p, q, prec, "f") for p in a for q in b]
    cands_hi = [libmp.mpf_mul(p, q, prec, "c") for p in a for q in b]
    lo = cands_lo[0]
    for c in cands_lo[1:]:
        if libmp.mpf_lt(c, lo):
            lo = c
    hi = cands_hi[0]
    for c in cands_hi[1:]:
        if libmp.mpf_gt(c, hi):
            hi = c
    return (lo, hi)


def _mp_op(op, ivs, prec):
    if op == "add":
        (alo, ahi), (blo, bhi) = ivs
        return (libmp.mpf_add(alo, blo, prec, "f"), libmp.mpf_add(ahi, bhi, prec, "c"))
    if op == "sub":
        (alo, ahi), (blo, bhi) = ivs
        return (libmp.mpf_sub(alo, bhi, prec, "f"), libmp.mpf_sub(ahi, blo, prec, "c"))
    if op == "neg":
        lo, hi = ivs[0]
        return (libmp.mpf_neg(hi), libmp.mpf_neg(lo))
    if op == "mul":
        return _mp_mul(ivs[0], ivs[1], prec)
    if op == "div":
        blo, bhi = ivs[1]
        if libmp.mpf_sign(blo) <= 0 <= libmp.mpf_sign(bhi):
            raise _Straddle
        inv = (libmp.mpf_div(libmp.fone, bhi, prec, "f"), libmp.mpf_div(libmp.fone, blo, prec, "c"))
        return _mp_mul(ivs[0], inv, prec)
    if op == "sqrt":
        lo, hi = ivs[0]
        if libmp.mpf_sign(hi) < 0:
            raise _Straddle
        lo = libmp.mpf_sqrt(lo, prec, "f") if libmp.mpf_sign(lo) > 0 else libmp.fzero
        return (lo, libmp.mpf_sqrt(hi, prec, "c"))
    raise AssertionError(op)


def _to_mpq(v) -> mpq:
    p, q = libmp.to_rational(v)
    return mpq(int(p), int(q))


def approx(x, bits: int) -> Interval:
    """Enclosing interval of width at most ``2**(1-bits) * max(1, |x|)``.

    Evaluated by outward-rounded multiprecision interval arithmetic over the
    expression tree; the quadratic tower is never consulted.
    """
    if bits < 2:
        raise ValueError("bits must be at least 2")
    x = _coerce(x)
    if x._q is not None:
        return Interval(x._q, x._q)
    prec = bits + 20
    while True:
        try:
            lo, hi = _mp_interval(x, prec)
        except _Straddle:
            prec *= 2
            continue
        lo_q, hi_q = _to_mpq(lo), _to_mpq(hi)
        floor_mag = min(abs(lo_q), abs(hi_q)) if lo_q * hi_q > 0 else mpq(0)
        tol = mpq(2) ** (1 - bits) * max(mpq(1), floor_mag)
        if hi_q - lo_q <= tol:
            return Interval(lo_q, hi_q)
        prec *= 2
        if prec > 1 << 20:
            raise RuntimeError("precision limit reached")  # pragma: no cover


# -- decimal rendering --------------------------------------------------------


def _exact_decimal(q: mpq):
    d = int(q.denominator)
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return None
    k = max(twos, fives)
    scaled = abs(q) * 10**k
    digits = str(int(scaled))
    if k:
        digits = digits.rjust(k + 1, "0")
        digits = digits[:-k] + "." + digits[-k:]
    return ("-" if q < 0 else "") + digits


def to_decimal(x) -> str:
    """Shortest decimal inside the 64-bit enclosure; ``~`` marks inexact."""
    x = _coerce(x)
    q = x._q
    if q is None:
        form = x.tower_form()
        if all(not m for m in form):
            q = form.get(tw.ONE, mpq(0))
    if q is not None:
        exact = _exact_decimal(q)
        if exact is not None:
            return exact
        iv = Interval(*(_to_mpq(v) for v in _mp_interval(ConstructibleReal(q), 64)))
    else:
        iv = approx(x, 64)
    mid = (iv.lo + iv.hi) / 2
    for k in range(0, 400):
        scale = mpq(10) ** k
        cand = mpq(round(mid * scale)) / scale
        if iv.lo <= cand <= iv.hi:
            s = _exact_decimal(cand)
            return s + "~"
    return _exact_decimal(mpq(round(mid * 10**30)) / 10**30) + "~"  # pragma: no cover
