import itertools
import random

import pytest
from hypothesis import given, strategies as st

from phasecat.errors import NoPhase, NoZeroArrows
from phasecat.matcat import Matrix, permutation
from phasecat.phased import (PhasedStructure, assoc_iso, biproduct_equations,
                             biproduct_from_coproduct, bracketings, check_phase_generator,
                             check_positive_cancellation, check_positive_free, check_transitive,
                             copair, dagger_equations, find_phase, initial_collapse, is_phase,
                             mediating_iso, phase_inverse, random_binary_structure)
from phasecat.quotient import QuotCategory, induced_phased_structure
from phasecat.scalars import gaussian, trivial_group, validate_phase_group

from conftest import P4, QI, matrices

QUOT = QuotCategory(P4)


def row(*xs):
    return QUOT.cls(Matrix.row(QI, [QI.parse(x) for x in xs]))


def test_copair_of_identities():
    s = induced_phased_structure(QUOT, (1, 1))
    one = QUOT.identity(1)
    assert copair(s, one, one) == row("1", "1")


@st.composite
def copair_cases(draw):
    a, b, c = (draw(st.integers(0, 3)) for _ in range(3))
    seed = draw(st.integers(0, 10_000))
    return a, b, draw(matrices(c, a)), draw(matrices(c, b)), seed


@given(copair_cases())
def test_copair_equations_on_scrambled_apex(case):
    a, b, f, g, seed = case
    s = random_binary_structure(QUOT, a, b, random.Random(seed))
    h = copair(s, QUOT.cls(f), QUOT.cls(g))
    assert QUOT.compose(h, s.coprojections[0]) == QUOT.cls(f)
    assert QUOT.compose(h, s.coprojections[1]) == QUOT.cls(g)
    u = random.Random(seed).choice(s.phases)
    h2 = QUOT.compose(h, u)
    assert QUOT.compose(h, find_phase(s, h, h2)) == h2


def test_copair_with_zero_restricts():
    s = induced_phased_structure(QUOT, (2, 1))
    f = QUOT.cls(Matrix.from_rows(QI, [[1, "i"]]))
    h = copair(s, f, QUOT.zero(1, 1))
    assert QUOT.compose(h, s.coprojections[0]) == f


def test_find_phase_example():
    s = induced_phased_structure(QUOT, (1, 1))
    u = find_phase(s, row("1", "1"), row("1", "i"))
    assert u == QUOT.cls(Matrix.diag(QI, ["1", "i"]))
    assert find_phase(s, row("1", "1"), row("1", "1")) == QUOT.identity(2)
    with pytest.raises(NoPhase):
        find_phase(s, row("1", "1"), row("1", "2"))


def test_phases_are_isomorphisms():
    s = induced_phased_structure(QUOT, (2, 1))
    for u in s.phases:
        assert is_phase(s, u)
        assert QUOT.compose(phase_inverse(s, u), u) == QUOT.identity(3)


def test_mediating_iso_identity_and_permutation():
    s = induced_phased_structure(QUOT, (1, 2))
    assert mediating_iso(s, s).forward == QUOT.identity(3)
    perm = QUOT.cls(permutation(QI, [2, 0, 1]))
    kappas = tuple(QUOT.compose(perm, k) for k in s.coprojections)
    s2 = PhasedStructure(QUOT, s.summands, 3, kappas, tuple(QUOT.phases_for(kappas)))
    iso = mediating_iso(s, s2)
    assert iso.forward == perm


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_assoc_iso_all_bracketings(n):
    dims = [1, 2, 1, 2][:n]
    trees = list(bracketings(range(n)))
    assert len(trees) == [1, 1, 2, 5][n - 1]
    for t1, t2 in itertools.product(trees, repeat=2):
        iso = assoc_iso(QUOT, dims, t1, t2, seed=n)
        assert QUOT.compose(iso.inverse, iso.forward) == QUOT.identity(sum(dims))


def test_biproduct_standard_rows():
    s = biproduct_from_coproduct(induced_phased_structure(QUOT, (1, 1)))
    assert s.projections == (row("1", "0"), row("0", "1"))
    assert all(biproduct_equations(s).values())
    assert all(dagger_equations(s).values())


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 1000))
def test_biproduct_on_scrambled_apex(a, b, seed):
    s = biproduct_from_coproduct(random_binary_structure(QUOT, a, b, random.Random(seed)))
    assert all(biproduct_equations(s).values())


def test_finite_categories_have_no_zero_arrows():
    from phasecat.fincat import build_gset_category, cyclic_group, quotient_finite

    cat = build_gset_category(cyclic_group(2), 2)
    q = quotient_finite(cat, cat.trivial)
    pt = cat.object_of(((0,), (0,)))
    empty = cat.object_of(((), ()))
    apex, ka, kb = cat.coproduct(pt, empty)
    s = PhasedStructure(q, (pt, empty), apex, (q.cls(ka), q.cls(kb)), (q.identity(apex),))
    with pytest.raises(NoZeroArrows):
        biproduct_from_coproduct(s)


def test_initial_collapse():
    iso = initial_collapse(induced_phased_structure(QUOT, (2, 0)))
    assert QUOT.compose(iso.forward, iso.inverse) == QUOT.identity(2)


def test_phase_generator_holds():
    assert check_phase_generator(QUOT, trials=20).ok
    trivial = QuotCategory(trivial_group(QI))
    assert check_phase_generator(trivial, trials=5).ok


def test_phase_generator_duplicate_enumerator_refuted():
    s = induced_phased_structure(QUOT, (1, 1))
    res = check_phase_generator(QUOT, enumerator=[s.phases[0], s.phases[0]], trials=1)
    assert res.result == "refuted"
    assert res.counterexample["clause"] == "phase monic"


def test_positive_free_conjugation_analytic():
    res = check_positive_free(induced_phased_structure(QUOT, (1, 1)))
    assert res.ok and res.mode == "analytic"


def test_positive_free_refuted_without_conjugation():
    r = gaussian("identity")
    quot = QuotCategory(validate_phase_group(r, ["1", "-1"]))
    res = check_positive_free(induced_phased_structure(quot, (1, 1)))
    assert res.result == "refuted"
    assert res.counterexample["witness"]["entries"] == ["0", "i", "1", "0"]
    assert res.counterexample["gram"]["entries"] == ["1", "0", "0", "-1"]


def test_positive_free_trivial_group():
    quot = QuotCategory(trivial_group(QI))
    assert check_positive_free(induced_phased_structure(quot, (1, 1))).ok


def test_positive_cancellation():
    res = check_positive_cancellation(induced_phased_structure(QUOT, (1, 1)), trials=20)
    assert res.ok


def test_transitivity_on_diagonals():
    s1 = induced_phased_structure(QUOT, (1, 1))
    s2 = induced_phased_structure(QUOT, (2, 1))
    diag = QUOT.cls(Matrix.from_rows(QI, [[1, 0], [2, 0], [0, "i"]]))
    assert check_transitive(s1, s2, [diag]).ok
