from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from phasecat.errors import (DuplicateElement, MissingIdentity, NonInvertible,
                             NonInvertibleElement, NotClosed)
from phasecat.matcat import Matrix
from phasecat.scalars import (Gaussian, bounded_positive_witness, format_gaussian, gaussian,
                              integers, parse_gaussian, parse_ring, prime_field, trivial_group,
                              unitary_scalars, validate_phase_group)

from conftest import gaussians


@given(gaussians(), gaussians(), gaussians())
def test_gaussian_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@given(gaussians())
def test_gaussian_inverse(x):
    if x:
        assert x * x.inverse() == Gaussian(1)
    else:
        with pytest.raises(NonInvertible):
            x.inverse()


@given(gaussians(5))
def test_format_parse_roundtrip(x):
    assert parse_gaussian(format_gaussian(x)) == x


def test_parse_examples():
    assert parse_gaussian("i") == Gaussian(0, 1)
    assert parse_gaussian("-i") == Gaussian(0, -1)
    assert parse_gaussian("1/2-3/4i") == Gaussian.from_parts(Fraction(1, 2), Fraction(-3, 4))


def test_ring_descriptors():
    assert parse_ring("F3") == prime_field(3)
    assert parse_ring("prime(5)").modulus == 5
    assert parse_ring("gaussian", "identity").involution == "identity"
    assert parse_ring("Z") == integers()
    with pytest.raises(ValueError):
        parse_ring("octonions")
    with pytest.raises(ValueError):
        prime_field(4)


def test_prime_field_arithmetic():
    f = prime_field(5)
    assert f.inv(2) == 3
    assert f.mul(4, 4) == 1
    assert f.units() == [1, 2, 3, 4]
    with pytest.raises(NonInvertible):
        f.inv(0)


def test_phase_group_validation_order():
    r = gaussian()
    with pytest.raises(DuplicateElement):
        validate_phase_group(r, ["1", "1"])
    with pytest.raises(NonInvertibleElement):
        validate_phase_group(r, ["1", "0"])
    with pytest.raises(MissingIdentity):
        validate_phase_group(r, ["-1"])
    with pytest.raises(NotClosed):
        validate_phase_group(r, ["1", "i"])
    with pytest.raises(NotClosed):
        validate_phase_group(r, ["1", "2"])


def test_phase_group_properties(group):
    assert len(group) == 4
    assert group.all_unitary
    assert group.is_dagger_closed()
    table = group.multiplication_table()
    assert sorted(table[0]) == [0, 1, 2, 3]
    assert len(trivial_group(gaussian())) == 1


def test_unitary_scalars():
    r = gaussian()
    assert unitary_scalars(r, r.units()) == r.units()
    assert unitary_scalars(r, [Gaussian(2)]) == []


def test_positivity_analytic_under_conjugation():
    r = gaussian()
    target = Matrix.diag(r, [1, -1])
    verdict = bounded_positive_witness(r, target)
    assert verdict.result == "holds" and verdict.mode == "analytic"


def test_positivity_witness_under_identity_involution():
    r = gaussian("identity")
    target = Matrix.diag(r, [1, -1])
    verdict = bounded_positive_witness(r, target)
    assert verdict.result == "refuted"
    g = verdict.witness
    assert g.dagger() @ g == target
    assert g == Matrix.from_rows(r, [["0", "i"], ["1", "0"]])


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_small_elements_cover_the_box(a, b):
    r = gaussian()
    values = set(r.small_elements(4))
    assert Gaussian(a, b) in values
