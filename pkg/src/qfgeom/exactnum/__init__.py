"""Exact constructible-real arithmetic."""

from __future__ import annotations

from .real import (
    ONE,
    ZERO,
    ConstructibleReal,
    DivisionByZero,
    Interval,
    NegativeRadicand,
    Order,
    Q,
    approx,
    arith,
    compare,
    equals,
    sign,
    sqrt,
    to_decimal,
)

__all__ = [
    "ConstructibleReal",
    "DivisionByZero",
    "Interval",
    "NegativeRadicand",
    "ONE",
    "Order",
    "Q",
    "ZERO",
    "approx",
    "arith",
    "compare",
    "equals",
    "sign",
    "sqrt",
    "to_decimal",
]
