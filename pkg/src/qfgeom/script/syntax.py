"""Syntax tree for scripts and number expressions, with rendering back to source."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple, Union

from ..exactnum import ConstructibleReal, Q

# -- number expressions -----------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class NumInt:
    value: int

    def render(self) -> str:
        return str(self.value)

    def evaluate(self) -> ConstructibleReal:
        return Q(self.value)


@dataclass(frozen=True)
class NumNeg:
    operand: "Num"

    def render(self) -> str:
        inner = self.operand.render()
        return f"-({inner})" if isinstance(self.operand, NumBin) else f"-{inner}"

    def evaluate(self) -> ConstructibleReal:
        return -self.operand.evaluate()


@dataclass(frozen=True)
class NumSqrt:
    operand: "Num"

    def render(self) -> str:
        return f"sqrt({self.operand.render()})"

    def evaluate(self) -> ConstructibleReal:
        return self.operand.evaluate().sqrt()


@dataclass(frozen=True)
class NumBin:
    op: str
    left: "Num"
    right: "Num"

    def render(self) -> str:
        p = _PREC[self.op]
        lhs = self.left.render()
        if isinstance(self.left, NumBin) and _PREC[self.left.op] < p:
            lhs = f"({lhs})"
        rhs = self.right.render()
        # the grammar is left-associative, so an equal-precedence right operand needs parentheses
        if isinstance(self.right, NumBin) and _PREC[self.right.op] <= p:
            rhs = f"({rhs})"
        if p == 2:
            return f"{lhs}{self.op}{rhs}"
        return f"{lhs} {self.op} {rhs}"

    def evaluate(self) -> ConstructibleReal:
        a, b = self.left.evaluate(), self.right.evaluate()
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b


Num = Union[NumInt, NumNeg, NumSqrt, NumBin]

# -- statements ---------------------------------------------------------------------
# Source positions are carried for diagnostics but excluded from equality, so
# a re-parsed rendering compares equal to the original tree.


@dataclass(frozen=True)
class PointDecl:
    name: str
    coords: Tuple[Num, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    kind = "point"

    def render(self) -> str:
        return f"point {self.name} = ({', '.join(c.render() for c in self.coords)})"


@dataclass(frozen=True)
class LetBinding:
    name: str
    func: str
    args: Tuple[str, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    kind = "let"

    def render(self) -> str:
        return f"let {self.name} = {self.func}({', '.join(self.args)})"


@dataclass(frozen=True)
class Assertion:
    rel: str
    args: Tuple[str, ...]
    expected: bool = True
    explicit: bool = False
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    kind = "assert"

    def render(self) -> str:
        tail = f" == {'true' if self.expected else 'false'}" if self.explicit else ""
        return f"assert {self.rel}({', '.join(self.args)}){tail}"


@dataclass(frozen=True)
class Query:
    rel: str
    args: Tuple[str, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    kind = "query"

    def render(self) -> str:
        return f"query {self.rel}({', '.join(self.args)})"


Statement = Union[PointDecl, LetBinding, Assertion, Query]


@dataclass(frozen=True)
class Script:
    statements: Tuple[Statement, ...] = ()
    warnings: tuple = field(default=(), compare=False)

    def render(self) -> str:
        return "".join(s.render() + "\n" for s in self.statements)

    def __len__(self) -> int:
        return len(self.statements)
