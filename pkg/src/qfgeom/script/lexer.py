"""Tokenizer for construction scripts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple

from .diagnostics import Diagnostic

KEYWORDS = frozenset({"point", "let", "assert", "query", "true", "false", "sqrt"})

_SPEC = [
    ("COMMENT", r"\#[^\n]*"),
    ("NEWLINE", r"\r\n|\n|\r"),
    ("SKIP", r"[ \t\f\v]+"),
    ("INT", r"[0-9]+"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"==|[=(),+\-*/]"),
    ("BAD", r"."),
]
_RE = re.compile("|".join(f"(?P<{k}>{v})" for k, v in _SPEC), re.DOTALL)


@dataclass(frozen=True)
class Token:
    kind: str  # INT, IDENT, KW, OP, NEWLINE, EOF
    text: str
    line: int
    col: int


def tokenize(source: str) -> Tuple[List[Token], List[Diagnostic]]:
    """Split ``source`` into tokens; unknown characters become diagnostics."""
    toks: List[Token] = []
    diags: List[Diagnostic] = []
    line, line_start = 1, 0
    for m in _RE.finditer(source):
        kind = m.lastgroup
        text = m.group()
        col = m.start() - line_start + 1
        if kind == "NEWLINE":
            toks.append(Token("NEWLINE", text, line, col))
            line += 1
            line_start = m.end()
        elif kind in ("SKIP", "COMMENT"):
            continue
        elif kind == "BAD":
            diags.append(Diagnostic.error("SyntaxError", f"unexpected character {text!r}", line, col))
        elif kind == "IDENT" and text in KEYWORDS:
            toks.append(Token("KW", text, line, col))
        else:
            toks.append(Token(kind, text, line, col))
    toks.append(Token("EOF", "", line, len(source) - line_start + 1))
    return toks, diags
