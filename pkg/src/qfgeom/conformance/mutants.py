"""Deliberately corrupted predicates for harness sensitivity checks.

Each entry flips one predicate's sign convention (or its truth value when it
has no sign to flip).  :func:`mutated` swaps the replacement into
:mod:`qfgeom.geom` for the duration of a ``with`` block; every spec looks
predicates up through that module, so the suite sees the corruption.  Not
used by the library itself.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Callable, Dict, Iterator, List, Optional

from .. import geom as G
from ..geom import Side, AnglePair, _cross, _dot, _is_zero_vec, _orientation_dot

_ORIG = {name: getattr(G, name) for name in (
    "between", "colinear", "triangle", "same_direction", "seg_congruent", "seg_less",
    "angle_congruent", "coplanar", "same_orientation", "opposite_orientation", "interior",
    "same_side", "opposite_side", "side_of_line", "angle_less", "right_angle", "supplementary",
    "vertical", "angle_pair_class", "side_of_plane", "parallel", "parallelogram", "convex_quad",
)}


def _negate(name: str) -> Callable:
    orig = _ORIG[name]
    return lambda *args, **kw: not orig(*args, **kw)


def _swap_side(fn: Callable) -> Callable:
    swap = {Side.SAME: Side.OPPOSITE, Side.OPPOSITE: Side.SAME, Side.NEITHER: Side.NEITHER}
    return lambda *args: swap[fn(*args)]


def _between_outside(a, b, c) -> bool:
    if _dot(a - b, c - b).sign() <= 0:
        return False
    return _is_zero_vec(_cross(b - a, c - a))


def _seg_greater(a, b, c, d) -> bool:
    return _ORIG["seg_less"](c, d, a, b)


def _angle_congruent_flipped(a, b, c, d, e, f) -> bool:
    # congruent up to reflecting the second angle's cosine
    if not (G.triangle(a, b, c) and G.triangle(d, e, f)):
        return False
    p = _dot(a - b, c - b)
    q = _dot(d - e, f - e)
    if p.sign() != -q.sign():
        return False
    lhs = p * p * G._d2(d, e) * G._d2(f, e)
    rhs = q * q * G._d2(a, b) * G._d2(c, b)
    return (lhs - rhs).sign() == 0


def _so_flipped(a, b, c, d, e, f) -> bool:
    s = _orientation_dot(a, b, c, d, e, f)
    return s is not None and s < 0


def _oo_flipped(a, b, c, d, e, f) -> bool:
    s = _orientation_dot(a, b, c, d, e, f)
    return s is not None and s >= 0


def _angle_greater(a, b, c, d, e, f) -> bool:
    return _ORIG["angle_less"](d, e, f, a, b, c)


def _pair_swapped(first, second) -> AnglePair:
    got = _ORIG["angle_pair_class"](first, second)
    return {AnglePair.SUPPLEMENTARY: AnglePair.VERTICAL,
            AnglePair.VERTICAL: AnglePair.SUPPLEMENTARY}.get(got, got)


MUTANTS: Dict[str, Callable] = {
    "between": _between_outside,
    "colinear": _negate("colinear"),
    "triangle": _negate("triangle"),
    "same_direction": _negate("same_direction"),
    "seg_congruent": _negate("seg_congruent"),
    "seg_less": _seg_greater,
    "angle_congruent": _angle_congruent_flipped,
    "coplanar": _negate("coplanar"),
    "same_orientation": _so_flipped,
    "opposite_orientation": _oo_flipped,
    "interior": _negate("interior"),
    "same_side": lambda c, d, a, b: _ORIG["opposite_side"](c, d, a, b),
    "opposite_side": lambda c, d, a, b: _ORIG["same_side"](c, d, a, b),
    "side_of_line": _swap_side(_ORIG["side_of_line"]),
    "angle_less": _angle_greater,
    "right_angle": _negate("right_angle"),
    "supplementary": _negate("supplementary"),
    "vertical": _negate("vertical"),
    "angle_pair_class": _pair_swapped,
    "side_of_plane": _swap_side(_ORIG["side_of_plane"]),
    "parallel": _negate("parallel"),
    "parallelogram": _negate("parallelogram"),
    "convex_quad": _negate("convex_quad"),
}


@contextmanager
def mutated(name: str) -> Iterator[None]:
    """Temporarily replace ``geom.<name>`` with its mutant."""
    setattr(G, name, MUTANTS[name])
    try:
        yield
    finally:
        setattr(G, name, _ORIG[name])


def first_failure(name: str, seed: int = 42, n: int = 20, specs: Optional[List] = None) -> Optional[dict]:
    """Run the suite under one mutant until a spec fails; describe that failure."""
    from .core import all_specs, check

    with mutated(name):
        for sp in specs if specs is not None else all_specs():
            r = check(sp, seed, n, max_witnesses=1, stop_on_violation=True)
            if not r.ok:
                return {"spec": sp.id, "violations": r.violations, "error": r.error}
    return None
