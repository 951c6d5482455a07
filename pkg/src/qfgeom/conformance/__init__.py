"""Axiom and theorem conformance harness."""

from __future__ import annotations

from .core import (
    CheckSpec,
    ConformanceReport,
    GeneratorExhausted,
    SpecResult,
    all_specs,
    check,
    generate,
    get_spec,
    replay,
    run_suite,
    select,
)

__all__ = [
    "CheckSpec",
    "ConformanceReport",
    "GeneratorExhausted",
    "SpecResult",
    "all_specs",
    "check",
    "generate",
    "get_spec",
    "replay",
    "run_suite",
    "select",
]
