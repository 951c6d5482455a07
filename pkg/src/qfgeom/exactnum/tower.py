"""Exact arithmetic in a growing tower of real quadratic extensions of Q.

An element is a dict mapping a monomial (frozenset of generator indices) to a
rational coefficient.  Generator ``i`` stands for the positive square root of
its radicand, an element built only from generators ``< i``.  The tower is
global and append-only; every appended generator is immutable afterwards.

The tower is not required to be *proper*: a generator may happen to lie in
the field below it.  Zero tests never rely on canonical form, only on
:meth:`Tower.sign`, which is exact for any tower.
"""

from __future__ import annotations

import math
import threading
from typing import Dict, FrozenSet, Optional, Tuple

from gmpy2 import gcd, is_square, isqrt, lcm, mpq

Monomial = FrozenSet[int]
Elem = Dict[Monomial, mpq]

ONE: Monomial = frozenset()
_INF = math.inf

_SMALL_PRIMES = [p for p in range(2, 256) if all(p % d for d in range(2, int(p**0.5) + 1))]


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _q_interval(c) -> Tuple[float, float]:
    try:
        f = float(c)
    except OverflowError:
        return (-_INF, _INF)
    return (_down(f), _up(f))


def constant(q) -> Elem:
    q = mpq(q)
    return {ONE: q} if q else {}


def add(x: Elem, y: Elem) -> Elem:
    if not x:
        return y
    if not y:
        return x
    out = dict(x)
    for m, c in y.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v = v + c
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def neg(x: Elem) -> Elem:
    return {m: -c for m, c in x.items()}


def sub(x: Elem, y: Elem) -> Elem:
    return add(x, neg(y))


def scale(x: Elem, q) -> Elem:
    q = mpq(q)
    if not q:
        return {}
    return {m: c * q for m, c in x.items()}


def top(x: Elem) -> int:
    t = -1
    for m in x:
        if m:
            k = max(m)
            if k > t:
                t = k
    return t


def split(x: Elem, k: int) -> Tuple[Elem, Elem]:
    """Write ``x = a + b*g_k`` with ``a``, ``b`` free of generator ``k``."""
    a: Elem = {}
    b: Elem = {}
    for m, c in x.items():
        if k in m:
            b[m - {k}] = c
        else:
            a[m] = c
    return a, b


def key(x: Elem):
    return frozenset(x.items())


class Tower:
    """Registry of square-root generators plus exact field operations."""

    def __init__(self) -> None:
        self._radicands: list = []
        self._gen_iv: list = []
        self._index: dict = {}
        self._lock = threading.Lock()
        self._mono: dict = {}
        self._mono_iv: dict = {}
        # denesting memo: key -> root, or key -> depth at which no root was found
        self._roots: dict = {}
        self._no_root: dict = {}

    def __len__(self) -> int:
        return len(self._radicands)

    def radicand(self, i: int) -> Elem:
        return self._radicands[i]

    def generator(self, i: int) -> Elem:
        return {frozenset((i,)): mpq(1)}

    # -- multiplication -------------------------------------------------

    def _mono_mul(self, m1: Monomial, m2: Monomial) -> Elem:
        common = m1 & m2
        if not common:
            return {m1 | m2: mpq(1)}
        k = (m1, m2)
        hit = self._mono.get(k)
        if hit is not None:
            return hit
        i = max(common)
        s = frozenset((i,))
        res = self.mul(self._mono_mul(m1 - s, m2 - s), self._radicands[i])
        if len(self._mono) > 500_000:
            self._mono.clear()
        self._mono[k] = res
        return res

    def mul(self, x: Elem, y: Elem) -> Elem:
        if not x or not y:
            return {}
        out: Elem = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c = c1 * c2
                if not (m1 & m2):
                    m = m1 | m2
                    out[m] = out.get(m, 0) + c
                else:
                    for m, c3 in self._mono_mul(m1, m2).items():
                        out[m] = out.get(m, 0) + c * c3
        return {m: c for m, c in out.items() if c}

    def inv(self, x: Elem) -> Elem:
        k = top(x)
        if k < 0:
            return {ONE: 1 / x[ONE]}
        a, b = split(x, k)
        r = self._radicands[k]
        norm = sub(self.mul(a, a), self.mul(self.mul(b, b), r))
        if self.sign(norm) == 0:
            # improper generator: a == b*g_k as reals, so x == 2a
            return self.inv(scale(a, 2))
        conj = sub(a, self.mul(b, self.generator(k)))
        return self.mul(conj, self.inv(norm))

    def div(self, x: Elem, y: Elem) -> Elem:
        return self.mul(x, self.inv(y))

    # -- interval filter --------------------------------------------------

    def _monomial_iv(self, m: Monomial) -> Tuple[float, float]:
        hit = self._mono_iv.get(m)
        if hit is not None:
            return hit
        lo, hi = 1.0, 1.0
        for i in m:
            glo, ghi = self._gen_iv[i]
            lo = _down(lo * glo)
            hi = _up(hi * ghi)
        res = (max(lo, 0.0), hi)
        self._mono_iv[m] = res
        return res

    def interval(self, x: Elem) -> Tuple[float, float]:
        lo = hi = 0.0
        for m, c in x.items():
            clo, chi = _q_interval(c)
            if m:
                mlo, mhi = self._monomial_iv(m)
                if clo >= 0:
                    tlo, thi = clo * mlo, chi * mhi
                elif chi <= 0:
                    tlo, thi = clo * mhi, chi * mlo
                else:
                    tlo, thi = clo * mhi, chi * mhi
                lo = _down(lo + _down(tlo))
                hi = _up(hi + _up(thi))
            else:
                lo = _down(lo + clo)
                hi = _up(hi + chi)
        if math.isnan(lo) or math.isnan(hi):
            return (-_INF, _INF)
        return (lo, hi)

    # -- exact sign -------------------------------------------------------

    def sign(self, x: Elem) -> int:
        if not x:
            return 0
        lo, hi = self.interval(x)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        k = top(x)
        if k < 0:
            c = x[ONE]
            return (c > 0) - (c < 0)
        a, b = split(x, k)
        sa = self.sign(a)
        sb = self.sign(b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        d = sub(self.mul(a, a), self.mul(self.mul(b, b), self._radicands[k]))
        return sa * self.sign(d)

    # -- square roots -------------------------------------------------------

    def _register(self, prim: Elem) -> int:
        k = key(prim)
        hit = self._index.get(k)
        if hit is not None:
            return hit
        rlo, rhi = self.interval(prim)
        glo = max(0.0, _down(math.sqrt(rlo))) if rlo > 0 else 0.0
        ghi = _up(math.sqrt(rhi)) if rhi < _INF else _INF
        with self._lock:
            hit = self._index.get(k)
            if hit is not None:
                return hit
            i = len(self._radicands)
            self._radicands.append(prim)
            self._gen_iv.append((glo, ghi))
            self._index[k] = i
            return i

    def _sqrt_rational(self, q: mpq) -> Elem:
        den = q.denominator
        m = q.numerator * den
        s = 1
        radicals = []
        for p in _SMALL_PRIMES:
            if m < p:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                s *= p ** (e // 2)
                if e % 2:
                    radicals.append(p)
        if m > 1:
            if is_square(m):
                s *= isqrt(m)
            else:
                radicals.append(m)
        gens = [self._register({ONE: mpq(r)}) for r in radicals]
        return {frozenset(gens): mpq(s, den)}

    def _content(self, x: Elem) -> Tuple[mpq, Elem]:
        nums = [c.numerator for c in x.values()]
        dens = [c.denominator for c in x.values()]
        g = nums[0]
        for n in nums[1:]:
            g = gcd(g, n)
        l = dens[0]
        for d in dens[1:]:
            l = lcm(l, d)
        c = mpq(abs(g), l)
        return c, scale(x, 1 / c)

    def _try_sqrt(self, x: Elem, adjoin: bool, depth: int = 0) -> Optional[Elem]:
        if adjoin:
            return self._find_sqrt(x, True, depth)
        key = frozenset(x.items())
        hit = self._roots.get(key)
        if hit is not None:
            return hit
        if self._no_root.get(key, 99) <= depth:
            return None
        y = self._find_sqrt(x, False, depth)
        if y is None:
            self._no_root[key] = depth
        else:
            self._roots[key] = y
        return y

    def _find_sqrt(self, x: Elem, adjoin: bool, depth: int) -> Optional[Elem]:
        # Rational square roots are always adjoined (prime by prime); other
        # radicands get a fresh generator only when ``adjoin`` is set.  This
        # keeps the result independent of which generators already exist.
        k = top(x)
        if k < 0:
            return self._sqrt_rational(x[ONE])
        a, b = split(x, k)
        if depth < 6:
            r = self._radicands[k]
            norm = sub(self.mul(a, a), self.mul(self.mul(b, b), r))
            sn = self.sign(norm)
            if sn == 0:
                # improper generator: x == 2a
                return self._try_sqrt(scale(a, 2), adjoin, depth + 1)
            if sn > 0:
                root_n = self._try_sqrt(norm, False, depth + 1)
                if root_n is not None:
                    for cand in (add(a, root_n), sub(a, root_n)):
                        u2 = scale(cand, mpq(1, 2))
                        if self.sign(u2) <= 0:
                            continue
                        u = self._try_sqrt(u2, False, depth + 1)
                        if u is None:
                            continue
                        v = self.mul(b, self.inv(scale(u, 2)))
                        y = add(u, self.mul(v, self.generator(k)))
                        if self.sign(y) < 0:
                            y = neg(y)
                        if self.sign(sub(self.mul(y, y), x)) == 0:
                            return y
        if not adjoin:
            return None
        c, prim = self._content(x)
        root_c = self._sqrt_rational(c)
        g = self._register(prim)
        return self.mul(root_c, self.generator(g))

    def sqrt(self, x: Elem) -> Elem:
        s = self.sign(x)
        if s < 0:
            raise ValueError("square root of a negative element")
        if s == 0:
            return {}
        return self._try_sqrt(x, True)

    # -- rendering ----------------------------------------------------------

    def render(self, x: Elem, _memo: Optional[dict] = None) -> str:
        """Exact expression string, e.g. ``1/2 + 3*sqrt(2)``."""
        if not x:
            return "0"
        memo = {} if _memo is None else _memo
        rows = []
        for m, c in x.items():
            factors = sorted(f"sqrt({self._render_gen(i, memo)})" for i in m)
            rows.append((len(factors), factors, c))
        rows.sort(key=lambda r: (r[0], r[1]))
        terms = []
        for _, factors, c in rows:
            mag = abs(c)
            if not factors:
                body = _render_q(mag)
            elif mag == 1:
                body = "*".join(factors)
            elif mag.denominator == 1:
                body = "*".join([str(mag.numerator)] + factors)
            else:
                head = [] if mag.numerator == 1 else [str(mag.numerator)]
                body = "*".join(head + factors) + f"/{mag.denominator}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out

    def _render_gen(self, i: int, memo: dict) -> str:
        s = memo.get(i)
        if s is None:
            s = self.render(self._radicands[i], memo)
            memo[i] = s
        return s


def _render_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


TOWER = Tower()
