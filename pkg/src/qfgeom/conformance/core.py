"""CheckSpec registry, instance generation and checking."""

from __future__ import annotations

import fnmatch
import random
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional

from .. import __version__
from ..construct import ConstructionError
from ..geom import DegenerateAngle, Point
from .sampler import Sampler

Instance = Dict[str, Point]
Gen = Callable[[Sampler], Optional[Instance]]
Pred = Callable[["Pts"], bool]

# draws allowed per requested instance before a generator gives up
DRAW_BUDGET = 50


class GeneratorExhausted(RuntimeError):
    """Premises could not be met within the draw budget."""

    def __init__(self, spec_id: str, draws: int, produced: int):
        self.spec_id = spec_id
        self.draws = draws
        self.produced = produced
        super().__init__(f"{spec_id}: premise unmet after {draws} draws ({produced} instances produced)")


class Pts(dict):
    """Instance points with attribute access: ``p.a`` is ``p["a"]``."""

    def __getattr__(self, name: str) -> Point:
        try:
            return self[name]
        except KeyError as exc:
            raise AttributeError(name) from exc


@dataclass(frozen=True)
class CheckSpec:
    id: str
    generator: str
    premise: str
    conclusion: str
    draw: Gen = field(repr=False, compare=False)
    holds_premise: Pred = field(repr=False, compare=False)
    holds_conclusion: Pred = field(repr=False, compare=False)
    note: str = ""


_REGISTRY: Dict[str, CheckSpec] = {}


def register(spec: CheckSpec) -> CheckSpec:
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate spec id {spec.id}")
    _REGISTRY[spec.id] = spec
    return spec


def spec(id: str, generator: str, premise: str, conclusion: str, *, pre: Pred, post: Pred, note: str = ""):
    """Decorator registering a draw function under ``id``."""

    def deco(fn: Gen) -> Gen:
        register(CheckSpec(id, generator, premise, conclusion, fn, pre, post, note))
        return fn

    return deco


def always(_p: Pts) -> bool:
    return True


def all_specs() -> List[CheckSpec]:
    _load()
    return list(_REGISTRY.values())


def get_spec(spec_id: str) -> CheckSpec:
    _load()
    return _REGISTRY[spec_id]


def select(pattern: str = "*") -> List[CheckSpec]:
    return [s for s in all_specs() if fnmatch.fnmatchcase(s.id, pattern)]


def _load() -> None:
    from . import axioms, solid, theorems  # noqa: F401  (registration side effects)


def spec_seed(spec_id: str, seed: int) -> int:
    return (int(seed) * 0x9E3779B97F4A7C15 ^ zlib.crc32(spec_id.encode())) & (2**64 - 1)


def _eval(pred: Pred, pts: Pts):
    """Evaluate a predicate, mapping construction failures to an error string."""
    try:
        return bool(pred(pts)), None
    except (ConstructionError, DegenerateAngle) as exc:
        return False, f"{type(exc).__name__}: {exc}"


def generate(spec: CheckSpec, seed: int, n: int, stats: Optional[dict] = None) -> Iterator[Pts]:
    """Yield ``n`` instances whose premise holds, deterministically in ``seed``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(spec_seed(spec.id, seed))
    sampler = Sampler(rng)
    produced = 0
    draws = 0
    misses = 0
    while produced < n:
        if misses >= DRAW_BUDGET:
            raise GeneratorExhausted(spec.id, draws, produced)
        draws += 1
        if stats is not None:
            stats["attempted"] = draws
        sampler.new_frame()
        raw = spec.draw(sampler)
        if raw is None:
            misses += 1
            continue
        pts = Pts(raw)
        ok, _ = _eval(spec.holds_premise, pts)
        if not ok:
            misses += 1
            continue
        misses = 0
        produced += 1
        yield pts


def point_exprs(p: Point) -> List[str]:
    return list(p.to_exprs())


@dataclass
class SpecResult:
    id: str
    seed: int
    attempted: int = 0
    satisfied: int = 0
    violations: List[dict] = field(default_factory=list)
    error: Optional[str] = None
    seconds: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations and self.error is None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "attempted": self.attempted,
            "satisfied": self.satisfied,
            "violations": self.violations,
            "seed": self.seed,
            "seconds": round(self.seconds, 3),
        }
        if self.error is not None:
            out["error"] = self.error
        if self.note:
            out["note"] = self.note
        return out


def check(spec: CheckSpec, seed: int, n: int, max_witnesses: int = 5, stop_on_violation: bool = False) -> SpecResult:
    """Evaluate premise -> conclusion on ``n`` generated instances."""
    res = SpecResult(spec.id, seed, note=spec.note)
    stats = {"attempted": 0}
    t0 = time.perf_counter()
    nviol = 0
    try:
        for index, pts in enumerate(generate(spec, seed, n, stats)):
            res.satisfied += 1
            ok, err = _eval(spec.holds_conclusion, pts)
            if ok:
                continue
            nviol += 1
            if len(res.violations) < max_witnesses:
                w = {"instance": index, "points": {k: point_exprs(v) for k, v in pts.items()}}
                if err:
                    w["error"] = err
                res.violations.append(w)
            if stop_on_violation:
                break
    except GeneratorExhausted as exc:
        res.error = str(exc)
    res.attempted = stats["attempted"]
    res.seconds = time.perf_counter() - t0
    if nviol > len(res.violations):
        res.note = (res.note + " " if res.note else "") + f"{nviol} violations in total; first {len(res.violations)} kept."
    return res


@dataclass
class ConformanceReport:
    results: List[SpecResult]
    seed: int
    n: int
    filter: str
    seconds: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def summary(self) -> dict:
        return {
            "specs": len(self.results),
            "passed": sum(r.ok for r in self.results),
            "failed": sum(not r.ok for r in self.results),
            "violations": sum(len(r.violations) for r in self.results),
            "instances": sum(r.satisfied for r in self.results),
            "seconds": round(self.seconds, 3),
        }

    def to_json(self) -> dict:
        return {
            "specs": [r.to_json() for r in self.results],
            "summary": self.summary(),
            "version": __version__,
            "seed": self.seed,
            "n": self.n,
            "filter": self.filter,
        }

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.id:<44} {r.satisfied:>6}/{r.attempted:<6} {r.seconds:7.2f}s"
            if r.error:
                line += f"  error: {r.error}"
            if r.violations:
                line += f"  violations: {len(r.violations)}"
            lines.append(line)
            for v in r.violations:
                pts = ", ".join(f"{k}=({', '.join(c)})" for k, c in v["points"].items())
                lines.append(f"    witness #{v['instance']}: {pts}" + (f" [{v['error']}]" if "error" in v else ""))
        s = self.summary()
        lines.append(
            f"{s['passed']}/{s['specs']} specs passed, {s['violations']} violations, "
            f"{s['instances']} instances, {s['seconds']}s"
        )
        return "\n".join(lines)


def run_suite(filter: str = "*", seed: int = 42, n: int = 1000,
              progress: Optional[Callable[[SpecResult], None]] = None,
              specs: Optional[List[CheckSpec]] = None) -> ConformanceReport:
    """Check every spec whose id matches ``filter`` (or the given ``specs``)."""
    t0 = time.perf_counter()
    results = []
    for sp in select(filter) if specs is None else specs:
        r = check(sp, seed, n)
        results.append(r)
        if progress is not None:
            progress(r)
    return ConformanceReport(results, seed, n, filter, time.perf_counter() - t0)


def replay(spec: CheckSpec, witness: dict) -> bool:
    """Re-evaluate a recorded witness from its expression strings.

    Returns the conclusion verdict (``False`` reproduces a violation).
    """
    from ..script.numbers import parse_number

    pts = Pts({k: Point(*(parse_number(c) for c in v)) for k, v in witness["points"].items()})
    premise, _ = _eval(spec.holds_premise, pts)
    if not premise:
        raise ValueError("witness premise does not hold")
    ok, _ = _eval(spec.holds_conclusion, pts)
    return ok
