import json
from pathlib import Path

import pytest

from phasecat.cli import load_config, main, parse_config
from phasecat.errors import ConfigError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def write(tmp_path, text, name="run.toml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_shipped_configs_parse():
    for path in sorted(CONFIGS.glob("*.toml")):
        assert load_config(path).out is not None


def test_verify_gaussian_passes(tmp_path, capsys):
    out = tmp_path / "g4"
    code = main(["verify", str(CONFIGS / "gaussian4.toml"), "--trials", "3", "--out", str(out)])
    assert code == 0
    records = [json.loads(line) for line in (out / "verdicts.jsonl").read_text().splitlines()]
    assert records and all(r["result"] == "pass" for r in records)
    assert "0 fail" in (out / "summary.md").read_text()
    assert "gp.monoidal" in capsys.readouterr().out


def test_verify_identity_involution_fails_with_witness(tmp_path, capsys):
    out = tmp_path / "ti"
    code = main(["verify", str(CONFIGS / "trivial-involution.toml"), "--trials", "2", "--out", str(out)])
    assert code == 1
    summary = (out / "summary.md").read_text()
    assert "phased.positive_free" in summary
    assert '"i"' in summary and "witness" in summary
    records = {r["law"]: r for r in map(json.loads, (out / "verdicts.jsonl").read_text().splitlines())}
    assert records["gp.dagger_compact"]["result"] == "unknown"


def test_verify_is_reproducible(tmp_path):
    for name in ("a", "b"):
        main(["verify", str(CONFIGS / "gaussian4.toml"), "--trials", "2", "--out", str(tmp_path / name)])
    first = (tmp_path / "a" / "verdicts.jsonl").read_bytes()
    assert first == (tmp_path / "b" / "verdicts.jsonl").read_bytes()


def test_missing_config(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "absent.toml")]) == 2
    assert "does not exist" in capsys.readouterr().err


@pytest.mark.parametrize("text", [
    'ring = "gaussian"\ncolour = "red"\n',
    'trials = "many"\n',
    'phases = ["1", "2"]\n',
    'laws = ["gp.nothing"]\n',
    'backend = "tensor"\n',
    'ring = "gaussian"\n[[broken\n',
])
def test_bad_config(tmp_path, text):
    assert main(["verify", write(tmp_path, text)]) == 2


def test_parse_config_rejects_unknown_key():
    with pytest.raises(ConfigError):
        parse_config({"colour": "red"})


def test_unknown_subcommand():
    assert main(["frobnicate"]) == 2


def test_gp_two_dims_prints_corner(tmp_path, capsys):
    assert main(["gp", str(CONFIGS / "gaussian4.toml"), "--dims", "2", "2"]) == 0
    out = capsys.readouterr().out
    assert "corner c_{2,2}: Q[i]/conjugation 9x5" in out
    assert "apex dim 3" in out
    assert "sigma:" in out


def test_gp_initial_object(capsys):
    assert main(["gp", str(CONFIGS / "gaussian4.toml"), "--dims", "0"]) == 0
    assert "k_I is an isomorphism: True" in capsys.readouterr().out


def test_gp_pentagon_transcript(capsys):
    assert main(["gp", str(CONFIGS / "gaussian4.toml"), "--dims", "1", "2", "1", "--assoc"]) == 0
    out = capsys.readouterr().out
    assert "pentagon holds: True" in out
    assert "alpha:" in out


def test_gp_assoc_needs_three_dims():
    assert main(["gp", str(CONFIGS / "gaussian4.toml"), "--dims", "1", "--assoc"]) == 2


def test_gp_rejects_fincat_backend():
    assert main(["gp", str(CONFIGS / "z2-oracle.toml")]) == 2


def test_oracle_report(capsys):
    assert main(["oracle", str(CONFIGS / "z2-oracle.toml")]) == 0
    out = capsys.readouterr().out
    assert "fincat.oracle: pass" in out
    assert "fincat.roundtrip: pass" in out


def test_oracle_size_limit(capsys):
    assert main(["oracle", str(CONFIGS / "z2-oracle.toml"), "--sizes", "5"]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_report_roundtrip(tmp_path, capsys):
    out = tmp_path / "g4"
    main(["verify", str(CONFIGS / "gaussian4.toml"), "--trials", "1", "--out", str(out)])
    capsys.readouterr()
    summary = tmp_path / "again.md"
    assert main(["report", str(out / "verdicts.jsonl"), "--out", str(summary)]) == 0
    assert "Report: verdicts.jsonl" in summary.read_text()
    assert main(["report", str(tmp_path / "nope.jsonl")]) == 2
