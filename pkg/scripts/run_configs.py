"""Run ``phasecat verify`` on every shipped config and tabulate the exit codes.

The identity-involution config is expected to exit 1: it exists to show the
positive-freeness counterexample.
"""
import argparse
import contextlib
import io
from pathlib import Path

from phasecat.cli import main

ROOT = Path(__file__).resolve().parent.parent
EXPECTED = {"trivial-involution": 1}


def run(config: Path, out: Path, trials: int | None) -> int:
    argv = ["verify", str(config), "--out", str(out / config.stem)]
    if trials is not None:
        argv += ["--trials", str(trials)]
    with contextlib.redirect_stdout(io.StringIO()):
        return main(argv)


def cli():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(ROOT / "out"))
    parser.add_argument("--trials", type=int)
    args = parser.parse_args()
    surprises = 0
    for config in sorted((ROOT / "configs").glob("*.toml")):
        code = run(config, Path(args.out), args.trials)
        expected = EXPECTED.get(config.stem, 0)
        surprises += code != expected
        print(f"{config.stem:<24} exit {code} (expected {expected})")
    return 1 if surprises else 0


if __name__ == "__main__":
    raise SystemExit(cli())
