"""Seeded generators and the law-suite runner."""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .errors import ConfigError
from .gp import GPMorphism, GPObject
from .matcat import Matrix
from .scalars import Gaussian, ScalarRing, gaussian

RESULTS = ("pass", "fail", "unknown")


# -- generators ------------------------------------------------------------------

def _rng(seed, *salt) -> random.Random:
    return random.Random(":".join(str(s) for s in (seed,) + salt))


def gen_scalar(rng: random.Random, ring: ScalarRing, height: int):
    if height <= 0:
        return rng.choice((ring.zero, ring.one))
    if ring.kind == "prime":
        return rng.randrange(ring.modulus)
    if ring.kind == "integer":
        return rng.randint(-height, height)

    def part():
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    re = part()
    im = part() if rng.random() < 0.5 else Fraction(0)
    return Gaussian.from_parts(re, im)


def gen_matrix(seed, rows: int, cols: int, height: int = 2, ring: ScalarRing | None = None) -> Matrix:
    """A reproducible matrix from ``seed``.

    One draw in ten is zero, one in ten an identity-like block, one in five a
    monomial matrix, and the rest dense with roughly a fifth of entries zero.
    ``height`` bounds numerators and denominators; height 0 gives 0/1 entries.
    """
    ring = ring or gaussian()
    rng = _rng(seed, rows, cols, height, ring.name)
    roll = rng.random()
    if rows == 0 or cols == 0 or roll < 0.1:
        return Matrix.zero(ring, rows, cols)
    if roll < 0.2:
        return Matrix(ring, rows, cols, [ring.one if i == j else ring.zero
                                         for i in range(rows) for j in range(cols)])
    if roll < 0.4:
        units = [ring.one] if height <= 0 else ring.units()
        entries = [ring.zero] * (rows * cols)
        targets = list(range(rows))
        rng.shuffle(targets)
        for j in range(min(rows, cols)):
            entries[targets[j] * cols + j] = rng.choice(units)
        return Matrix(ring, rows, cols, entries)
    return Matrix(ring, rows, cols, [ring.zero if rng.random() < 0.2 else gen_scalar(rng, ring, height)
                                     for _ in range(rows * cols)])


def gen_gp_morphism(seed, dom: int, cod: int, height: int = 2,
                    ring: ScalarRing | None = None) -> GPMorphism:
    return GPMorphism(GPObject(dom), GPObject(cod), gen_matrix(seed, cod, dom, height, ring))


def gen_dims(rng: random.Random, count: int, low: int, high: int) -> list[int]:
    return [rng.randint(low, high) for _ in range(count)]


# -- verdicts -----------------------------------------------------------------------

@dataclass(frozen=True)
class LawSuite:
    law: str
    backend: str
    mode: str
    seed: int
    trials: int


@dataclass
class Verdict:
    law: str
    backend: str
    mode: str
    result: str
    trials: int
    seed: int
    counterexample: Any = None
    notes: dict = field(default_factory=dict)
    runtime: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.result == "pass"

    def to_record(self) -> dict:
        """The JSON-lines record; runtime is left out so reruns compare byte-for-byte."""
        out = asdict(self)
        out.pop("runtime")
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, default=str)


@dataclass(frozen=True)
class SuiteConfig:
    """Everything a law suite needs to build its backends."""

    backend: str = "mat"
    ring: str = "gaussian"
    involution: str | None = None  # None picks the ring's default
    phases: tuple = ("1", "i", "-1", "-i")
    beta_phase: str = "1"
    dims_max: int = 3
    height: int = 2
    trials: int = 20
    seeds: tuple = (0,)
    laws: tuple = ()
    positivity_bound: int = 1
    functor: str = "ring-involution"
    gset_order: int = 2
    max_set_size: int = 2

    def __post_init__(self):
        if self.backend not in ("mat", "fincat"):
            raise ConfigError(f"unknown backend {self.backend!r}")
        if self.dims_max < 0 or self.height < 0 or self.trials < 0:
            raise ConfigError("dims_max, height and trials must be non-negative")
        if not self.seeds:
            raise ConfigError("at least one seed is required")


# -- shrinking ------------------------------------------------------------------------

def shrink_case(case: dict, fails, min_dim: int = 0) -> dict:
    """Greedy shrink: lower each dimension, then the entry height, while ``fails`` stays true."""
    case = dict(case)
    improved = True
    while improved:
        improved = False
        for i, d in enumerate(case.get("dims", [])):
            if d > min_dim:
                smaller = dict(case, dims=case["dims"][:i] + [d - 1] + case["dims"][i + 1:])
                if fails(smaller):
                    case, improved = smaller, True
                    break
    while case.get("height", 0) > 0:
        smaller = dict(case, height=case["height"] - 1)
        if not fails(smaller):
            break
        case = smaller
    return case


# -- runner ---------------------------------------------------------------------------

def _thread_cap() -> int:
    raw = os.environ.get("PHASECAT_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"PHASECAT_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError("PHASECAT_THREADS must be at least 1")
    return value


def plan(laws: Iterable[str], config: SuiteConfig) -> list[LawSuite]:
    from .laws import LAWS

    suites = []
    for law_id in laws:
        if law_id not in LAWS:
            raise ConfigError(f"unknown law {law_id!r}")
        law = LAWS[law_id]
        for seed in config.seeds:
            suites.append(LawSuite(law_id, config.backend, law.mode(config), seed, config.trials))
    return suites


def run_one(suite: LawSuite, config: SuiteConfig, context=None) -> Verdict:
    from .laws import LAWS, Context

    context = context or Context.from_config(config)
    start = time.perf_counter()
    verdict = LAWS[suite.law].run(context, suite)
    verdict.runtime = time.perf_counter() - start
    return verdict


def run_suite(laws: Sequence[str] | None, config: SuiteConfig) -> list[Verdict]:
    """Run each law once per configured seed; verdicts come back sorted by (law, seed).

    ``laws=None`` selects every law that applies to the configured backend.
    """
    from .laws import Context, default_laws

    if laws is None:
        laws = config.laws or default_laws(config)
    suites = plan(laws, config)
    if not suites:
        return []
    context = Context.from_config(config)
    with ThreadPoolExecutor(max_workers=min(_thread_cap(), len(suites))) as pool:
        verdicts = list(pool.map(lambda s: run_one(s, config, context), suites))
    return sorted(verdicts, key=lambda v: (v.law, v.seed))


def any_failed(verdicts: Iterable[Verdict]) -> bool:
    return any(v.result == "fail" for v in verdicts)


def write_jsonl(verdicts: Iterable[Verdict], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in verdicts:
            fh.write(v.to_json() + "\n")


def read_jsonl(path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def summarize(verdicts: Sequence[Verdict], title: str = "Law suite") -> str:
    """Markdown summary table."""
    lines = [f"# {title}", "", "| law | seed | mode | result | trials |", "|---|---|---|---|---|"]
    for v in verdicts:
        lines.append(f"| {v.law} | {v.seed} | {v.mode} | {v.result} | {v.trials} |")
    counts = {r: sum(v.result == r for v in verdicts) for r in RESULTS}
    lines += ["", ", ".join(f"{counts[r]} {r}" for r in RESULTS)]
    failed = [v for v in verdicts if v.result == "fail"]
    for v in failed:
        lines += ["", f"## {v.law} (seed {v.seed})", "", "```json",
                  json.dumps(v.counterexample, indent=2, sort_keys=True, default=str), "```"]
    return "\n".join(lines) + "\n"
