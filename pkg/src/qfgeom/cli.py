"""Command-line front end.

Exit statuses: 0 success, 1 failed assertion / construction error / suite
violation, 2 script parse error, 3 input or output failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3


class _IOFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _IOFailure(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc


def _parse_file(path: str):
    from .script import Diagnostics, parse

    result = parse(_read(path))
    if isinstance(result, Diagnostics):
        for d in result:
            print(f"{path}:{d}", file=sys.stderr)
        return None
    return result


def cmd_run(args) -> int:
    from .script import evaluate, format_report

    script = _parse_file(args.path)
    if script is None:
        return EXIT_PARSE
    for w in script.warnings:
        print(f"{args.path}:{w}", file=sys.stderr)
    report = evaluate(script)
    _emit(format_report(report, args.format), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_render(args) -> int:
    from .script import evaluate, render_svg

    script = _parse_file(args.path)
    if script is None:
        return EXIT_PARSE
    report = evaluate(script)
    if report.summary()["error"]:
        bad = next(s for s in report.statements if s.verdict == "ERROR")
        print(f"{args.path}:{bad.line}: {bad.error['kind']}: {bad.error['message']}", file=sys.stderr)
        return EXIT_FAIL
    _emit(render_svg(script, report), args.out)
    return EXIT_OK


def _suite(args, prefix: str) -> int:
    from .conformance import run_suite
    from .conformance.core import select

    pattern = args.filter
    report = run_suite(pattern, seed=args.seed, n=args.n, specs=[s for s in select(pattern) if s.id.startswith(prefix)])
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2, ensure_ascii=False), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_axioms(args) -> int:
    return _suite(args, "AX")


def cmd_theorems(args) -> int:
    return _suite(args, "THM")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qfgeom", description="Exact constructive geometry toolkit.")
    ap.add_argument("--version", action="version", version=f"qfgeom {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate a .geo script")
    run.add_argument("path")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out")
    run.set_defaults(func=cmd_run)

    for name, func, default_filter in (("axioms", cmd_axioms, "AX*"), ("theorems", cmd_theorems, "THM*")):
        p = sub.add_parser(name, help=f"check the {name} on generated configurations")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--n", type=_positive, default=1000)
        p.add_argument("--filter", default=default_filter, help="glob over spec ids")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out")
        p.set_defaults(func=func)

    render = sub.add_parser("render", help="draw a .geo script as SVG")
    render.add_argument("path")
    render.add_argument("--out")
    render.set_defaults(func=cmd_render)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"qfgeom: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
