"""Command line entry point: ``phasecat verify | gp | oracle | report``.

Exit codes: 0 when every law passes, 1 when a law fails, 2 for usage or
configuration errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, replace
from pathlib import Path

import tomli

from .errors import ConfigError, PhasecatError, SizeLimit
from .gp import GPObject
from .matcat import injection
from .harness import SuiteConfig, any_failed, gen_gp_morphism, read_jsonl, run_suite, summarize, write_jsonl
from .laws import LAWS, Context

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# config key -> (SuiteConfig field, accepted types)
_KEYS = {
    "backend": ("backend", str),
    "ring": ("ring", str),
    "involution": ("involution", str),
    "phases": ("phases", list),
    "beta": ("beta_phase", (str, int)),
    "dims_max": ("dims_max", int),
    "height": ("height", int),
    "trials": ("trials", int),
    "seeds": ("seeds", list),
    "laws": ("laws", list),
    "positivity_bound": ("positivity_bound", int),
    "functor": ("functor", str),
    "group_order": ("gset_order", int),
    "max_set_size": ("max_set_size", int),
}


@dataclass(frozen=True)
class RunConfig:
    suite: SuiteConfig
    out: Path | None = None
    source: Path | None = None


def parse_config(data: dict, source: Path | None = None) -> RunConfig:
    """Validate a config mapping; unknown keys and wrong types are rejected."""
    kwargs = {}
    out = None
    for key, value in data.items():
        if key == "out":
            if not isinstance(value, str):
                raise ConfigError("out must be a string path")
            out = Path(value)
            continue
        if key not in _KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        name, types = _KEYS[key]
        if not isinstance(value, types) or isinstance(value, bool):
            raise ConfigError(f"{key} has the wrong type ({type(value).__name__})")
        if isinstance(value, list):
            value = tuple(str(v) if name == "phases" else v for v in value)
        if name == "beta_phase":
            value = str(value)
        kwargs[name] = value
    if "seeds" in kwargs and not all(isinstance(s, int) for s in kwargs["seeds"]):
        raise ConfigError("seeds must be integers")
    unknown = [law for law in kwargs.get("laws", ()) if law not in LAWS]
    if unknown:
        raise ConfigError(f"unknown laws: {unknown}")
    if kwargs.get("gset_order", 2) < 1:
        raise ConfigError("group_order must be positive")
    try:
        suite = SuiteConfig(**kwargs)
        Context(suite)
    except ConfigError:
        raise
    except (PhasecatError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    return RunConfig(suite, out, source)


def load_config(path) -> RunConfig:
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file {path} does not exist") from None
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return parse_config(data, path)


def _apply_flags(config: RunConfig, args) -> RunConfig:
    suite = config.suite
    changes = {}
    if getattr(args, "seed", None) is not None:
        changes["seeds"] = (args.seed,)
    if getattr(args, "dims_max", None) is not None:
        changes["dims_max"] = args.dims_max
    if getattr(args, "trials", None) is not None:
        changes["trials"] = args.trials
    suite = replace(suite, **changes)
    out = Path(args.out) if getattr(args, "out", None) else config.out
    return RunConfig(suite, out, config.source)


def _fmt(m) -> str:
    return f"{m.ring.name} {m.rows}x{m.cols}\n{m.pretty()}"


# -- subcommands ------------------------------------------------------------------------

def cmd_verify(args) -> int:
    config = _apply_flags(load_config(args.config), args)
    verdicts = run_suite(None, config.suite)
    title = f"Law suite: {config.source.name if config.source else 'config'}"
    summary = summarize(verdicts, title)
    if config.out is not None:
        config.out.mkdir(parents=True, exist_ok=True)
        write_jsonl(verdicts, config.out / "verdicts.jsonl")
        (config.out / "summary.md").write_text(summary, encoding="utf-8")
    print(summary, end="")
    return EXIT_FAIL if any_failed(verdicts) else EXIT_PASS


def cmd_gp(args) -> int:
    config = _apply_flags(load_config(args.config), args)
    if config.suite.backend != "mat":
        raise ConfigError("the gp command needs the mat backend")
    ctx = Context(config.suite)
    gp = ctx.gp
    dims = args.dims or [1]
    if any(d < 0 for d in dims):
        raise ConfigError("dims must be non-negative")
    objs = [GPObject(d) for d in dims]
    print(f"GP over {gp.ring.name} with phases {ctx.group.labels()}")
    for a in objs:
        print(f"object base dim {a.dim}: apex dim {a.apex}")
    print("beta:", _fmt(gp.beta().representative()))
    if len(objs) == 1 and objs[0].dim == 0:
        s = gp.structure(objs[0])
        k_i = s.coprojections[1]
        print("initial object 0^ = 0 + I")
        print("k_I is an isomorphism:", gp.base.is_iso(k_i))
        print("k_I:", _fmt(injection(gp.ring, (0, 1), 1)))
    if len(objs) >= 2:
        a, b = objs[0], objs[1]
        corner = gp.corner(a, b)
        print(f"tensor object: base dim {gp.tensor_obj(a, b).dim}, apex dim {gp.tensor_obj(a, b).apex}")
        print(f"corner c_{{{a.dim},{b.dim}}}:", _fmt(corner))
        seed = config.suite.seeds[0]
        f = gen_gp_morphism(f"{seed}:f", a.dim, a.dim, config.suite.height, gp.ring)
        g = gen_gp_morphism(f"{seed}:g", b.dim, b.dim, config.suite.height, gp.ring)
        print("sample f:", _fmt(f.representative()))
        print("sample g:", _fmt(g.representative()))
        print("f (x) g:", _fmt(gp.tensor(f, g).representative()))
        print("sigma:", _fmt(gp.braiding(a, b).representative()))
        print("coproduct apex dim:", gp.coproduct(a, b).apex.apex)
    if len(objs) >= 3:
        a, b, c = objs[:3]
        print("alpha:", _fmt(gp.associator(a, b, c).representative()))
    if args.assoc:
        if len(objs) < 3:
            raise ConfigError("--assoc needs at least three dims")
        a, b, c = objs[:3]
        d = objs[3] if len(objs) > 3 else objs[2]
        t, ident, alpha = gp.tensor, gp.identity, gp.associator
        lhs = alpha(a, b, gp.tensor_obj(c, d)) @ alpha(gp.tensor_obj(a, b), c, d)
        steps = [("alpha (x) id", t(alpha(a, b, c), ident(d))),
                 ("alpha_{A,BC,D}", alpha(a, gp.tensor_obj(b, c), d)),
                 ("id (x) alpha", t(ident(a), alpha(b, c, d)))]
        rhs = steps[2][1] @ steps[1][1] @ steps[0][1]
        print(f"pentagon transcript for dims {[o.dim for o in (a, b, c, d)]}")
        for name, m in steps:
            print(f"  {name}:", _fmt(m.representative()))
        print("  two-step side:", _fmt(lhs.representative()))
        print("  three-step side:", _fmt(rhs.representative()))
        ok = lhs == rhs
        print("pentagon holds:", ok)
        return EXIT_PASS if ok else EXIT_FAIL
    return EXIT_PASS


def cmd_oracle(args) -> int:
    config = _apply_flags(load_config(args.config), args)
    suite = config.suite
    if args.sizes is not None:
        suite = replace(suite, max_set_size=args.sizes)
    if suite.backend != "fincat":
        raise ConfigError("the oracle command needs the fincat backend")
    from .fincat import MAX_SET_SIZE

    if suite.max_set_size > MAX_SET_SIZE:
        raise SizeLimit(f"set size {suite.max_set_size} exceeds the limit of {MAX_SET_SIZE}")
    ctx = Context(suite)
    start = time.perf_counter()
    cat, q, base = ctx.gset_oracle()
    verdicts = run_suite(["fincat.oracle", "fincat.roundtrip"], suite)
    print(f"G-sets for Z{suite.gset_order}, base sizes <= {suite.max_set_size}")
    print(f"objects: {len(cat.objects)}, morphisms: {len(cat.morphisms)}, "
          f"quotient morphisms: {len(q.morphisms)}")
    oracle = next(v for v in verdicts if v.law == "fincat.oracle")
    print("| summands | witnesses | phases |")
    print("|---|---|---|")
    for pair, row in oracle.notes.get("pairs", {}).items():
        print(f"| {pair} | {row['witnesses']} | {row['phases']} |")
    for v in verdicts:
        print(f"{v.law}: {v.result} ({v.trials} checks)")
        if v.counterexample is not None:
            print(json.dumps(v.counterexample, sort_keys=True, default=str))
    print(f"elapsed {time.perf_counter() - start:.2f}s")
    return EXIT_FAIL if any_failed(verdicts) else EXIT_PASS


def cmd_report(args) -> int:
    path = Path(args.verdicts)
    if not path.exists():
        raise ConfigError(f"verdict file {path} does not exist")
    try:
        records = read_jsonl(path)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    from .harness import Verdict

    verdicts = [Verdict(**r) for r in records]
    text = summarize(verdicts, f"Report: {path.name}")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    print(text, end="")
    return EXIT_FAIL if any_failed(verdicts) else EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phasecat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("config", help="TOML run configuration")
        p.add_argument("--seed", type=int)
        p.add_argument("--dims-max", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--out")

    common(sub.add_parser("verify", help="run the configured law suites"))
    gp = sub.add_parser("gp", help="print GP structure for some base dims")
    common(gp)
    gp.add_argument("--dims", type=int, nargs="+")
    gp.add_argument("--assoc", action="store_true", help="print a pentagon transcript")
    oracle = sub.add_parser("oracle", help="exhaustive report on the finite G-set backend")
    common(oracle)
    oracle.add_argument("--sizes", type=int, help="largest base G-set size")
    report = sub.add_parser("report", help="summarize a verdict file")
    report.add_argument("verdicts")
    report.add_argument("--out")
    return parser


COMMANDS = {"verify": cmd_verify, "gp": cmd_gp, "oracle": cmd_oracle, "report": cmd_report}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, SizeLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
