"""Number expressions: integers, p/q, sqrt(...), and + - * / with the usual precedence."""

from __future__ import annotations

from typing import List

from ..exactnum import ConstructibleReal
from .lexer import Token, tokenize
from .syntax import Num, NumBin, NumInt, NumNeg, NumSqrt

# deep nesting is legal but bounded so hostile input cannot exhaust the stack
MAX_DEPTH = 200
MAX_OPS = 400


class NumberSyntaxError(ValueError):
    def __init__(self, message: str, token: Token):
        super().__init__(message)
        self.token = token


class NumParser:
    """Recursive-descent parser over a shared token list, starting at ``pos``."""

    def __init__(self, toks: List[Token], pos: int = 0):
        self.toks = toks
        self.pos = pos
        self.depth = 0
        self.ops = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def _take(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def _nest(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise NumberSyntaxError("number expression nested too deeply", self.peek())

    def _count(self) -> None:
        self.ops += 1
        if self.ops > MAX_OPS:
            raise NumberSyntaxError("number expression too long", self.peek())

    def expr(self) -> Num:
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self._take().text
            self._count()
            node = NumBin(op, node, self.term())
        return node

    def term(self) -> Num:
        node = self.unary()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            op = self._take().text
            self._count()
            node = NumBin(op, node, self.unary())
        return node

    def unary(self) -> Num:
        t = self.peek()
        if t.kind == "OP" and t.text == "-":
            self._take()
            self._count()
            self._nest()
            node = NumNeg(self.unary())
            self.depth -= 1
            return node
        return self.atom()

    def atom(self) -> Num:
        t = self._take()
        if t.kind == "INT":
            return NumInt(int(t.text))
        if t.kind == "KW" and t.text == "sqrt":
            self.expect("(")
            self._nest()
            inner = self.expr()
            self.depth -= 1
            self.expect(")")
            return NumSqrt(inner)
        if t.kind == "OP" and t.text == "(":
            self._nest()
            inner = self.expr()
            self.depth -= 1
            self.expect(")")
            return inner
        raise NumberSyntaxError(f"expected a number, found {_describe(t)}", t)

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.kind == "OP" and t.text == text:
            return self._take()
        raise NumberSyntaxError(f"expected {text!r}, found {_describe(t)}", t)


def _describe(t: Token) -> str:
    if t.kind == "EOF":
        return "end of input"
    if t.kind == "NEWLINE":
        return "end of line"
    return repr(t.text)


def parse_number_expr(text: str) -> Num:
    toks, diags = tokenize(text)
    if diags:
        raise ValueError(str(diags[0]))
    toks = [t for t in toks if t.kind != "NEWLINE"]
    p = NumParser(toks)
    node = p.expr()
    if p.peek().kind != "EOF":
        raise NumberSyntaxError(f"unexpected {_describe(p.peek())}", p.peek())
    return node


def parse_number(text: str) -> ConstructibleReal:
    """Exact value of an expression such as ``-3/4 + 2*sqrt(5)/7``."""
    return parse_number_expr(text).evaluate()
