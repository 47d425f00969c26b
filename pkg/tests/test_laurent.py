from hypothesis import given, settings, strategies as st

from drinfeld_j.fields import field
from drinfeld_j.laurent import LaurentSeries

F3 = field(3)
F9 = field(3, 2)


def series(fld, val, codes, prec):
    return LaurentSeries.from_codes(fld, val, codes, prec)


series9 = st.builds(
    lambda val, codes, extra: series(F9, val, [1 + codes[0] % 8] + codes[1:], val + len(codes) + extra),
    st.integers(-4, 4), st.lists(st.integers(0, 8), min_size=1, max_size=8), st.integers(0, 4))


def test_const_keeps_extension_codes():
    w = LaurentSeries.const(F9, 3)
    assert (w * w + 1).is_zero()


def test_precision_of_sum_and_product():
    a = series(F3, 0, [1, 2], 5)
    b = series(F3, 1, [1], 3)
    assert (a + b).prec == 3
    # product keeps the smaller relative precision
    assert (a * b).prec == 1 + min(5, 2)


def test_inverse_of_one_minus_u():
    s = series(F3, 0, [1, 2], 20)  # 1 - u
    inv = s.inverse()
    assert all(c == 1 for c in inv.codes()[:20])
    assert (s * inv - 1).is_zero()


def test_frobenius_is_pth_power():
    s = series(F9, -2, [3, 1, 5], 10)
    assert (s.frobenius(1) - s ** 3).is_zero()


def test_dict_round_trip():
    s = series(F9, -3, [4, 0, 7, 2], 6)
    d = s.to_dict()
    assert d["start"] == -3 and d["prec"] == 6
    assert (LaurentSeries.from_dict(F9, d) - s).is_zero()


@settings(max_examples=200, deadline=None)
@given(series9, series9, series9)
def test_ring_laws_to_precision(a, b, c):
    assert ((a + b) * c - (a * c + b * c)).is_zero()
    assert ((a * b) * c - a * (b * c)).is_zero()
    assert (a * b - b * a).is_zero()


@settings(max_examples=200, deadline=None)
@given(series9)
def test_inverse(a):
    assert (a * a.inverse() - 1).is_zero()
    assert a.inverse().rel_prec == a.rel_prec
