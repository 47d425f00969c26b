import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_j.errors import FieldMismatch
from drinfeld_j.fields import FqElem, PolyFq, field, is_irreducible, irreducibles, poly_gcd

F3 = field(3)
F9 = field(3, 2)


def el(fld, c):
    return FqElem(fld, c)


def poly(*cs):
    return PolyFq(F3, cs)


def test_prime_field_examples():
    assert el(F3, 2) + el(F3, 2) == el(F3, 1)
    assert el(F3, 2) ** 2 == el(F3, 1)


def test_f9_modulus_and_frobenius():
    w = el(F9, 3)  # digit encoding: w = 0 + 1*w
    assert w * w + el(F9, 1) == el(F9, 0)
    assert w.frobenius(1) == el(F9, 6)
    for c in range(9):
        assert el(F9, c).frobenius(2) == el(F9, c)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        el(F3, 1) + el(F9, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        el(F9, 4) / el(F9, 0)


def test_poly_examples():
    assert poly(1, 1) * poly(2, 1) == poly(2, 0, 1)
    assert divmod(poly(2, 0, 1), poly(1, 1)) == (poly(2, 1), poly())
    f = poly(1, 1, 0, 1)
    assert f(el(F3, 1)) == el(F3, 0)


def test_gcd_examples():
    assert poly_gcd(poly(2, 0, 1), poly(1, 1)) == poly(1, 1)
    assert poly_gcd(poly(1, 1, 0, 1), poly(1)) == poly(1)
    assert poly_gcd(poly(1, 1, 0, 1), poly(-1, 1)) == poly(2, 1)


def test_irreducible_counts():
    # number of monic irreducibles of degree d over F_3: 3, 3, 8, 18
    assert [len(irreducibles(F3, d)) for d in (1, 2, 3, 4)] == [3, 3, 8, 18]
    assert is_irreducible(poly(1, 0, 1))
    assert not is_irreducible(poly(2, 0, 1))


codes9 = st.integers(0, 8)


@settings(max_examples=1000, deadline=None)
@given(codes9, codes9, codes9)
def test_field_axioms(a, b, c):
    x, y, z = el(F9, a), el(F9, b), el(F9, c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if a:
        assert x * x.inverse() == el(F9, 1)


polys = st.lists(st.integers(0, 2), min_size=0, max_size=7).map(lambda cs: PolyFq(F3, cs))


@settings(max_examples=300, deadline=None)
@given(polys, polys)
def test_divmod_reconstruction(f, g):
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree() < g.degree()


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_degree_of_product(f, g):
    if f.is_zero() or g.is_zero():
        return
    assert (f * g).degree() == f.degree() + g.degree()
