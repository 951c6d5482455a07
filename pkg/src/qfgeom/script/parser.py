"""Statement parser with name binding and arity checks."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from .diagnostics import Diagnostic, Diagnostics
from .lexer import Token, tokenize
from .numbers import NumberSyntaxError, NumParser
from .syntax import Assertion, LetBinding, PointDecl, Query, Script, Statement
from .tables import FUNCS, RELS


class _Abort(Exception):
    """Raised inside a statement to skip to the next line."""


class _Parser:
    def __init__(self, toks: List[Token]):
        self.toks = toks
        self.pos = 0
        self.diags: List[Diagnostic] = []
        self.bound: Dict[str, Tuple[int, int]] = {}
        self.used: set = set()

    # -- token helpers ----------------------------------------------------------

    def peek(self) -> Token:
        return self.toks[self.pos]

    def take(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def fail(self, t: Token, message: str, kind: str = "SyntaxError") -> None:
        self.diags.append(Diagnostic.error(kind, message, t.line, t.col))
        raise _Abort

    def expect_op(self, text: str) -> Token:
        t = self.peek()
        if t.kind == "OP" and t.text == text:
            return self.take()
        self.fail(t, f"expected {text!r}, found {_describe(t)}")

    def expect_ident(self, what: str) -> Token:
        t = self.peek()
        if t.kind == "IDENT":
            return self.take()
        if t.kind == "KW":
            self.fail(t, f"keyword {t.text!r} cannot be used as {what}")
        self.fail(t, f"expected {what}, found {_describe(t)}")

    def end_of_statement(self) -> None:
        t = self.peek()
        if t.kind not in ("NEWLINE", "EOF"):
            self.fail(t, f"expected end of line, found {_describe(t)}")

    def skip_line(self) -> None:
        while self.peek().kind not in ("NEWLINE", "EOF"):
            self.take()

    # -- grammar --------------------------------------------------------------------

    def script(self) -> List[Statement]:
        stmts: List[Statement] = []
        while True:
            t = self.peek()
            if t.kind == "EOF":
                return stmts
            if t.kind == "NEWLINE":
                self.take()
                continue
            try:
                stmts.append(self.statement())
                self.end_of_statement()
            except _Abort:
                self.skip_line()

    def statement(self) -> Statement:
        t = self.take()
        if t.kind == "KW" and t.text == "point":
            return self.point(t)
        if t.kind == "KW" and t.text == "let":
            return self.let(t)
        if t.kind == "KW" and t.text == "assert":
            return self.assertion(t)
        if t.kind == "KW" and t.text == "query":
            return self.query(t)
        self.fail(t, f"expected 'point', 'let', 'assert' or 'query', found {_describe(t)}")

    def number(self):
        p = NumParser(self.toks, self.pos)
        try:
            node = p.expr()
        except NumberSyntaxError as exc:
            self.pos = p.pos
            self.fail(exc.token, str(exc))
        self.pos = p.pos
        return node

    def point(self, kw: Token) -> PointDecl:
        name = self.expect_ident("a point name")
        self.expect_op("=")
        self.expect_op("(")
        coords = [self.number()]
        while self.peek().kind == "OP" and self.peek().text == ",":
            self.take()
            coords.append(self.number())
        close = self.expect_op(")")
        if len(coords) not in (2, 3):
            self.fail(close, f"a point needs 2 or 3 coordinates, got {len(coords)}", "ArityMismatch")
        self.bind(name)
        return PointDecl(name.text, tuple(coords), kw.line, kw.col)

    def call(self, table: dict, what: str) -> Tuple[Token, Tuple[str, ...]]:
        head = self.peek()
        if head.kind not in ("IDENT", "KW"):
            self.fail(head, f"expected a {what} name, found {_describe(head)}")
        self.take()
        self.expect_op("(")
        args: List[Token] = []
        if not (self.peek().kind == "OP" and self.peek().text == ")"):
            args.append(self.expect_ident("a point name"))
            while self.peek().kind == "OP" and self.peek().text == ",":
                self.take()
                args.append(self.expect_ident("a point name"))
        self.expect_op(")")
        entry = table.get(head.text)
        if entry is None:
            self.fail(head, f"unknown {what} {head.text!r}", "UnknownIdentifier")
        if len(args) != entry.arity:
            self.fail(head, f"{head.text} takes {entry.arity} points, got {len(args)}", "ArityMismatch")
        for a in args:
            if a.text not in self.bound:
                self.diags.append(Diagnostic.error("UnknownIdentifier", f"{a.text!r} is not bound", a.line, a.col, a.text))
                raise _Abort
            self.used.add(a.text)
        return head, tuple(a.text for a in args)

    def let(self, kw: Token) -> LetBinding:
        name = self.expect_ident("a point name")
        self.expect_op("=")
        head, args = self.call(FUNCS, "construction")
        self.bind(name)
        return LetBinding(name.text, head.text, args, kw.line, kw.col)

    def assertion(self, kw: Token) -> Assertion:
        head, args = self.call(RELS, "relation")
        if self.peek().kind == "OP" and self.peek().text == "==":
            self.take()
            t = self.take()
            if t.kind != "KW" or t.text not in ("true", "false"):
                self.fail(t, f"expected 'true' or 'false', found {_describe(t)}")
            return Assertion(head.text, args, t.text == "true", True, kw.line, kw.col)
        return Assertion(head.text, args, True, False, kw.line, kw.col)

    def query(self, kw: Token) -> Query:
        head, args = self.call(RELS, "relation")
        return Query(head.text, args, kw.line, kw.col)

    def bind(self, name: Token) -> None:
        if name.text in self.bound:
            line, col = self.bound[name.text]
            self.fail(name, f"{name.text!r} is already bound at {line}:{col}", "DuplicateIdentifier")
        self.bound[name.text] = (name.line, name.col)


def _describe(t: Token) -> str:
    if t.kind == "EOF":
        return "end of input"
    if t.kind == "NEWLINE":
        return "end of line"
    return repr(t.text)


def parse(source: str) -> Union[Script, Diagnostics]:
    """Parse a script; returns a :class:`Script`, or :class:`Diagnostics` on any error.

    Unused point names produce warnings attached to the script.
    """
    toks, diags = tokenize(source)
    p = _Parser(toks)
    stmts = p.script()
    errors = Diagnostics(sorted(diags + p.diags, key=lambda d: (d.line, d.column)))
    if errors:
        return errors
    warnings = tuple(
        Diagnostic.warning("UnusedPoint", f"{name!r} is never used", line, col, name)
        for name, (line, col) in p.bound.items()
        if name not in p.used and _is_point_decl(stmts, name)
    )
    return Script(tuple(stmts), warnings)


def _is_point_decl(stmts, name: str) -> bool:
    return any(isinstance(s, PointDecl) and s.name == name for s in stmts)


def parse_or_raise(source: str) -> Script:
    result = parse(source)
    if isinstance(result, Diagnostics):
        raise ScriptError(result)
    return result


class ScriptError(ValueError):
    def __init__(self, diagnostics: Diagnostics):
        super().__init__(str(diagnostics))
        self.diagnostics = diagnostics
