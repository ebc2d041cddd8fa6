import json

import pytest
from hypothesis import given, strategies as st

from phasecat.errors import ConfigError
from phasecat.harness import (SuiteConfig, gen_gp_morphism, gen_matrix, read_jsonl, run_suite,
                              shrink_case, summarize, write_jsonl)
from phasecat.laws import LAWS, Context, default_laws, replay
from phasecat.scalars import gaussian, prime_field


@given(st.integers(0, 2 ** 32), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_gen_matrix_deterministic(seed, rows, cols, height):
    assert gen_matrix(seed, rows, cols, height) == gen_matrix(seed, rows, cols, height)


@given(st.integers(0, 10 ** 6))
def test_height_zero_gives_bits(seed):
    m = gen_matrix(seed, 3, 3, 0)
    r = m.ring
    assert all(x in (r.zero, r.one) for x in m.entries)


def test_invertible_draws_exist():
    assert any(gen_matrix(s, 2, 2, 3).is_invertible() for s in range(100))


def test_generator_covers_zero_identity_and_dense():
    draws = [gen_matrix(s, 2, 2, 2) for s in range(200)]
    assert any(m.is_zero() for m in draws)
    assert any(m.is_identity() for m in draws)
    assert any(all(x for x in m.entries) for m in draws)


def test_gp_generator_shape():
    f = gen_gp_morphism(3, 2, 4)
    assert f.block.shape == (4, 2)
    assert gen_gp_morphism(5, 1, 1, 2, prime_field(3)).block.ring == prime_field(3)


def test_shrink_dims_then_height():
    def fails(case):
        return case["dims"][0] >= 2 and case["height"] >= 1
    small = shrink_case({"seed": 1, "dims": [4, 3], "height": 3}, fails)
    assert small == {"seed": 1, "dims": [2, 0], "height": 1}


def test_empty_law_list():
    assert run_suite([], SuiteConfig()) == []


def test_unknown_law():
    with pytest.raises(ConfigError):
        run_suite(["no.such.law"], SuiteConfig())


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig(backend="tensor")
    with pytest.raises(ConfigError):
        SuiteConfig(seeds=())


def test_default_laws_per_backend():
    assert "fincat.oracle" in default_laws(SuiteConfig(backend="fincat"))
    assert "transport.adjunction" not in default_laws(SuiteConfig())
    assert "transport.adjunction" in default_laws(SuiteConfig(ring="F3", involution="identity",
                                                              phases=("1", "2"), functor="frobenius"))


def test_replay_determinism(tmp_path):
    config = SuiteConfig(trials=5, seeds=(0, 3), dims_max=2)
    laws = ["quotient.soundness", "gp.coproduct", "phased.positive_free"]
    first, second = run_suite(laws, config), run_suite(laws, config)
    assert [v.to_json() for v in first] == [v.to_json() for v in second]
    assert [(v.law, v.seed) for v in first] == sorted((v.law, v.seed) for v in first)
    path = tmp_path / "v.jsonl"
    write_jsonl(first, path)
    assert read_jsonl(path) == [json.loads(v.to_json()) for v in first]


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("PHASECAT_THREADS", "1")
    assert run_suite(["quotient.soundness"], SuiteConfig(trials=2))[0].passed
    monkeypatch.setenv("PHASECAT_THREADS", "zero")
    with pytest.raises(ConfigError):
        run_suite(["quotient.soundness"], SuiteConfig(trials=2))


def test_positive_free_failure_carries_witness():
    config = SuiteConfig(involution="identity", phases=("1", "-1"))
    (v,) = run_suite(["phased.positive_free"], config)
    assert v.result == "fail"
    assert v.counterexample["witness"]["entries"] == ["0", "i", "1", "0"]
    assert "phased.positive_free" in summarize([v])


def test_passing_case_does_not_replay_as_failure():
    law = LAWS["gp.coproduct"]
    ctx = Context(SuiteConfig())
    case = {"seed": 7, "dims": [1, 1, 1], "height": 2}
    assert law.failure(ctx, case) is None
    assert not replay("gp.coproduct", ctx, {"case": case})


def test_unknown_when_dagger_precondition_fails():
    config = SuiteConfig(involution="identity", phases=("1", "-1"), trials=2)
    (v,) = run_suite(["gp.dagger_biproduct"], config)
    assert v.result == "unknown"
    assert "positive-free" in v.notes["reason"]
