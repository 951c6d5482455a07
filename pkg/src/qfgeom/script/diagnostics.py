"""Located messages produced by the parser and evaluator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    kind: str
    message: str
    line: int
    column: int
    related: Optional[str] = None

    @classmethod
    def error(cls, kind: str, message: str, line: int, column: int, related: Optional[str] = None) -> "Diagnostic":
        return cls("error", kind, message, line, column, related)

    @classmethod
    def warning(cls, kind: str, message: str, line: int, column: int, related: Optional[str] = None) -> "Diagnostic":
        return cls("warning", kind, message, line, column, related)

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.kind}: {self.message}"

    def to_json(self) -> dict:
        out = {"severity": self.severity, "kind": self.kind, "message": self.message,
               "line": self.line, "column": self.column}
        if self.related is not None:
            out["related"] = self.related
        return out


class Diagnostics(List[Diagnostic]):
    """The failure result of :func:`qfgeom.script.parse`."""

    @property
    def errors(self) -> List[Diagnostic]:
        return [d for d in self if d.severity == "error"]

    def __str__(self) -> str:
        return "\n".join(str(d) for d in self)
