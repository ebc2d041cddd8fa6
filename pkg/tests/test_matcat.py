import pytest
from hypothesis import given, strategies as st

from phasecat.errors import DimMismatch, NonInvertible
from phasecat.matcat import (Matrix, biproduct, braiding, compact, distributivity_iso, injection,
                             permutation, projection)
from phasecat.scalars import gaussian, integers, prime_field

from conftest import QI, composable, matrices, sized_matrices


@st.composite
def chains(draw):
    a, b, c, d = (draw(st.integers(0, 3)) for _ in range(4))
    return draw(matrices(b, a)), draw(matrices(c, b)), draw(matrices(d, c))


@given(chains())
def test_composition_associative(chain):
    f, g, h = chain
    assert h @ (g @ f) == (h @ g) @ f


@given(sized_matrices())
def test_identity_laws(m):
    assert Matrix.identity(QI, m.rows) @ m == m
    assert m @ Matrix.identity(QI, m.cols) == m


@given(composable())
def test_dagger_contravariant_involutive(pair):
    f, g = pair
    assert (g @ f).dagger() == f.dagger() @ g.dagger()
    assert f.dagger().dagger() == f


@given(composable(2), composable(2))
def test_kron_interchange(p, q):
    f1, g1 = p
    f2, g2 = q
    assert (g1 @ f1).kron(g2 @ f2) == g1.kron(g2) @ f1.kron(f2)


@given(sized_matrices(2), sized_matrices(2))
def test_braiding_natural(f, g):
    lhs = braiding(QI, f.rows, g.rows) @ f.kron(g)
    rhs = g.kron(f) @ braiding(QI, f.cols, g.cols)
    assert lhs == rhs


@given(st.integers(0, 3), st.integers(0, 3))
def test_biproduct_equations(n, m):
    assert biproduct(QI, n, m).verify()


@given(st.integers(0, 4))
def test_compact_snakes(n):
    assert compact(QI, n).verify()


@given(matrices(3, 3))
def test_inverse(m):
    if m.is_invertible():
        assert m @ m.inverse() == Matrix.identity(QI, 3)
        assert m.inverse(reverse_pivots=True) == m.inverse()
    else:
        with pytest.raises(NonInvertible):
            m.inverse()


def test_integer_inverse_needs_integrality():
    z = integers()
    assert Matrix.from_rows(z, [[1, 1], [0, 1]]).inverse() == Matrix.from_rows(z, [[1, -1], [0, 1]])
    with pytest.raises(NonInvertible):
        Matrix.from_rows(z, [[2, 0], [0, 1]]).inverse()


def test_prime_field_inverse():
    f = prime_field(3)
    m = Matrix.from_rows(f, [[1, 2], [0, 1]])
    assert m @ m.inverse() == Matrix.identity(f, 2)


def test_left_inverse_of_injection():
    k = injection(QI, (2, 3), 1)
    assert k.left_inverse() @ k == Matrix.identity(QI, 3)
    assert projection(QI, (2, 3), 1) @ k == Matrix.identity(QI, 3)


def test_dimension_errors():
    with pytest.raises(DimMismatch):
        Matrix.identity(QI, 2) @ Matrix.identity(QI, 3)
    with pytest.raises(DimMismatch):
        Matrix.from_rows(QI, [[1], [1, 2]])


def test_distributivity_iso_example():
    d = distributivity_iso(QI, 2, 1, 1)
    assert d == permutation(QI, [0, 2, 1, 3])
    assert d.is_invertible()


def test_json_roundtrip():
    m = Matrix.from_rows(QI, [["1/2+i", "0"], ["-i", "3"]])
    assert Matrix.from_json(QI, m.to_json()) == m


def test_rank():
    m = Matrix.from_rows(QI, [[1, 2], [2, 4]])
    assert m.rank() == 1
    assert not m.is_invertible()
