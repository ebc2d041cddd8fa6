import pytest
from hypothesis import given, strategies as st

from phasecat.errors import DaggerNotClosed, DimMismatch
from phasecat.matcat import Matrix
from phasecat.quotient import (QuotCategory, QuotMorphism, brute_force_eq, canonical_rep,
                               eq_mod_phase, induced_phased_structure, orbit, quot_dagger)
from phasecat.scalars import gaussian, trivial_group, validate_phase_group

from conftest import P4, QI, composable, matrices, sized_matrices


def test_canonical_rep_example():
    f = Matrix.diag(QI, ["i", "1"])
    assert canonical_rep(f, P4) == Matrix.diag(QI, ["-1", "i"])


def test_zero_is_fixed():
    z = Matrix.zero(QI, 2, 3)
    assert canonical_rep(z, P4) == z


@given(sized_matrices())
def test_canonical_rep_idempotent_and_in_orbit(f):
    rep = canonical_rep(f, P4)
    assert canonical_rep(rep, P4) == rep
    assert rep in orbit(f, P4)


@given(sized_matrices(2), st.sampled_from(P4.elements))
def test_orbit_members_share_rep(f, p):
    assert canonical_rep(f.scale(p), P4) == canonical_rep(f, P4)


@given(matrices(2, 2), matrices(2, 2))
def test_eq_mod_phase_matches_orbit_scan(f, g):
    assert eq_mod_phase(f, g, P4) == brute_force_eq(f, g, P4)


def test_eq_mod_phase_examples():
    assert eq_mod_phase(Matrix.diag(QI, ["i"]), Matrix.diag(QI, ["1"]), P4)
    assert not eq_mod_phase(Matrix.diag(QI, ["2"]), Matrix.diag(QI, ["1"]), P4)
    with pytest.raises(DimMismatch):
        eq_mod_phase(Matrix.identity(QI, 1), Matrix.identity(QI, 2), P4)


@given(composable(), st.sampled_from(P4.elements), st.sampled_from(P4.elements))
def test_composition_independent_of_representatives(pair, p, q):
    f, g = pair
    quot = QuotCategory(P4)
    assert quot.compose(quot.cls(g.scale(q)), quot.cls(f.scale(p))) == quot.cls(g @ f)


@given(sized_matrices(2), sized_matrices(2), st.sampled_from(P4.elements))
def test_tensor_independent_of_representatives(f, g, p):
    quot = QuotCategory(P4)
    assert quot.tensor(quot.cls(f.scale(p)), quot.cls(g)) == quot.cls(f.kron(g))


@given(sized_matrices(2))
def test_identity_neutral(f):
    quot = QuotCategory(P4)
    assert quot.compose(quot.cls(f), quot.identity(f.cols)) == quot.cls(f)


def test_dagger_of_phase_multiple():
    f = Matrix.from_rows(QI, [["1", "2"], ["i", "0"]])
    quot = QuotCategory(P4)
    assert quot_dagger(quot.cls(f.scale(QI.parse("i")))) == quot.cls(f.dagger())


def test_dagger_needs_closed_group():
    r = gaussian()
    # every unit group of Q[i] is closed, so bypass validation to hit the guard
    closed = validate_phase_group(r, ["1", "-1"])
    assert closed.is_dagger_closed()
    bogus = type(closed)(r, (r.one, r.parse("i")), (True, True))
    with pytest.raises(DaggerNotClosed):
        quot_dagger(QuotMorphism(Matrix.identity(r, 1), bogus))


def test_induced_structure_on_one_plus_one():
    quot = QuotCategory(P4)
    s = induced_phased_structure(quot, (1, 1))
    assert len(s.phases) == 4
    assert len(set(s.phases)) == 4
    for u in s.phases:
        for v in s.phases:
            assert quot.compose(u, v) in s.phases


def test_trivial_group_has_single_phase():
    quot = QuotCategory(trivial_group(QI))
    assert induced_phased_structure(quot, (1, 1)).phases == (quot.identity(2),)
