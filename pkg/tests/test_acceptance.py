"""Acceptance criteria, each at its exact threshold with zero tolerance.

Every test records one PASS/FAIL line, shown in the pytest terminal summary.
"""
import itertools
import random
import time

import pytest

from phasecat.fincat import cyclic_group
from phasecat.gp import GPCategory, GPObject, gset_gp_backend
from phasecat.harness import SuiteConfig, run_suite
from phasecat.phased import assoc_iso, bracketings
from phasecat.quotient import QuotCategory
from phasecat.scalars import prime_field, trivial_group, validate_phase_group
from phasecat.transport import adjunction_checks, projective_classes

from conftest import P4

GAUSSIAN = SuiteConfig(seeds=(0,))
ORACLE = SuiteConfig(backend="fincat", gset_order=2, max_set_size=2)
IDENTITY_INVOLUTION = SuiteConfig(involution="identity", phases=("1", "-1"))


def run(law, config=GAUSSIAN, **changes):
    config = SuiteConfig(**{**config.__dict__, **changes})
    (verdict,) = run_suite([law], config)
    return verdict


def describe(*verdicts):
    return ", ".join(f"{v.law} {v.result} x{v.trials}" for v in verdicts)


def test_quotient_soundness(criterion):
    start = time.perf_counter()
    v = run("quotient.soundness", trials=1000, dims_max=4)
    elapsed = time.perf_counter() - start
    ok = v.passed and v.trials == 1000 and elapsed < 5.0
    assert criterion(1, "quotient soundness", ok, f"{describe(v)}, {elapsed:.2f}s")


def test_phased_coproduct_clauses(criterion):
    sampled = run("phased.copair", trials=500, dims_max=4)
    oracle = run("fincat.oracle", ORACLE)
    ok = sampled.passed and sampled.trials == 500 and oracle.passed and oracle.mode.startswith("exhaustive")
    assert criterion(2, "phased coproduct clauses", ok, describe(sampled, oracle))
    # only free+free unions carry a nontrivial phase for Z2
    phase_counts = {pair: row["phases"] for pair, row in oracle.notes["pairs"].items()}
    assert sorted(set(phase_counts.values())) == [1, 2]


def test_canonical_isos_for_all_bracketings(criterion):
    quot = QuotCategory(P4)
    rng = random.Random(0)
    tuples = [d for k in (2, 3) for d in itertools.product(range(4), repeat=k)]
    tuples += [(3, 3, 3, 3), (0, 0, 0, 0)] + [tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(6)]
    checked = 0
    for dims in tuples:
        trees = list(bracketings(range(len(dims))))
        for t1, t2 in itertools.product(trees, repeat=2):
            iso = assoc_iso(quot, dims, t1, t2, seed=checked)
            assert quot.compose(iso.inverse, iso.forward) == quot.identity(sum(dims))
            assert quot.compose(iso.forward, iso.inverse) == quot.identity(sum(dims))
            checked += 1
    mediating = run("phased.assoc", trials=10, dims_max=3)
    ok = mediating.passed
    assert criterion(3, "canonical isos are two-sided inverses", ok,
                     f"{checked} bracketing pairs, {describe(mediating)}")


def test_gp_coproduct_uniqueness(criterion):
    v = run("gp.coproduct", trials=500, dims_max=4)
    ok = v.passed and v.trials == 500
    assert criterion(4, "GP coproduct uniqueness", ok, describe(v))


def test_gp_monoidal_coherence(criterion):
    start = time.perf_counter()
    monoidal = run("gp.monoidal", trials=50, dims_max=3)
    hexagon = run("gp.hexagon", trials=50, dims_max=3)
    elapsed = time.perf_counter() - start
    ok = monoidal.passed and hexagon.passed and monoidal.trials >= 50 and elapsed < 60.0
    assert criterion(5, "GP monoidal coherence", ok, f"{describe(monoidal, hexagon)}, {elapsed:.2f}s")


def test_global_phase_correspondence(criterion):
    v = run("gp.global_phases", dims_max=4)
    gp = GPCategory(P4)
    as_gp = [gp.scalar(p) for p in P4]
    exact = all(gp.scalar_action(gp.phase_as_global(u), gp.identity(GPObject(n))) == u
                for n in range(5) for u in gp.phases_of(GPObject(n)))
    ok = v.passed and len(set(as_gp)) == len(P4) and set(gp.global_phases()) == set(as_gp) and exact
    assert criterion(6, "global phases are scalars", ok, describe(v))


def test_roundtrip_equivalence(criterion):
    sampled = run("gp.roundtrip", trials=1000, dims_max=4)
    exhaustive = run("fincat.roundtrip", ORACLE)
    counts = gset_gp_backend(cyclic_group(2)).roundtrip()
    ok = sampled.passed and sampled.trials == 1000 and exhaustive.passed
    ok = ok and all(v == 0 for k, v in counts.items() if k != "pairs")
    assert criterion(7, "round-trip equivalences", ok, f"{describe(sampled, exhaustive)}, {counts['pairs']} G-set pairs")


def test_biproduct_and_dagger_laws(criterion):
    gp = GPCategory(P4)
    failures = []
    for n, m in itertools.product(range(5), repeat=2):
        data, verdict = gp.biproduct(GPObject(n), GPObject(m), dagger=True)
        failures += [(n, m, k) for k, held in gp.biproduct_equations(data, dagger=True).items() if not held]
    holds = run("phased.positive_free")
    refuted = run("phased.positive_free", IDENTITY_INVOLUTION)
    witness = refuted.counterexample or {}
    ok = (not failures and holds.passed and holds.mode.endswith("analytic")
          and refuted.result == "fail"
          and witness.get("witness", {}).get("entries") == ["0", "i", "1", "0"]
          and witness.get("gram", {}).get("entries") == ["1", "0", "0", "-1"])
    assert criterion(8, "biproduct and dagger laws", ok,
                     f"{len(failures)} equation failures, positive-free {holds.result} vs {refuted.result}")


def test_compact_closure(criterion):
    snakes = run("gp.compact", trials=40, dims_max=3)
    dagger = run("gp.dagger_compact", trials=40, dims_max=3)
    gp = GPCategory(P4)
    direct = all(gp.snakes_hold(gp.dagger_dual(GPObject(n))) for n in range(1, 4))
    ok = snakes.passed and dagger.passed and direct
    assert criterion(9, "compact closure", ok, describe(snakes, dagger))


def test_projective_counting(criterion):
    start = time.perf_counter()
    f2, f3 = prime_field(2), prime_field(3)
    counts = (projective_classes(f2, trivial_group(f2), 2),
              projective_classes(f3, validate_phase_group(f3, [1, 2]), 2))
    elapsed = time.perf_counter() - start
    ok = counts == (6, 24) and elapsed < 1.0
    assert criterion(10, "projective counting", ok, f"{counts}, {elapsed:.3f}s")


def test_transport_instances(criterion):
    functor = run("transport.functor", trials=100)
    f3 = prime_field(3)
    report = adjunction_checks(f3, validate_phase_group(f3, [1, 2]))
    ok = functor.passed and functor.trials == 100 and report.unit_iso and report.ok
    assert criterion(11, "functor transport and reflection", ok,
                     f"{describe(functor)}, F3 unit iso {report.unit_iso}")
