import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_j.errors import DomainMismatch, NonIntegralCoefficient, PrecisionLoss
from drinfeld_j.fields import PolyFq, RatFunc, field, irreducibles
from drinfeld_j.laurent import LaurentSeries
from drinfeld_j.ore import (FqDomain, LaurentDomain, PolyDomain, RatFuncDomain, TwistedPoly, tw_eval,
                            tw_monic, tw_mul, tw_reduce_mod, tw_rgcd, tw_right_divmod)

F3 = field(3)
F9 = field(3, 2)
DOM = RatFuncDomain(F3)
T = RatFunc.T(F3)
TAU = TwistedPoly.tau(DOM)
FQ9 = FqDomain(F9, 3)


def rf(coeffs):
    return RatFunc(PolyFq(F3, coeffs))


def test_multiplication_examples():
    assert tw_mul(TAU + T, TAU + T * 2) == TwistedPoly(DOM, [T * T * 2, T ** 3 * 2 + T, 1])
    assert tw_mul(TAU + T, TAU + T) == TwistedPoly(DOM, [T * T, T ** 3 + T, 1])
    f = TAU * TAU + T
    assert tw_mul(f, TwistedPoly.const(DOM, 1)) == f


def test_division_examples():
    Q, R = tw_right_divmod(TwistedPoly.tau(DOM, 2), TAU + T)
    assert Q == TAU - T ** 3 and R == TwistedPoly(DOM, [T ** 4])
    f = TAU * TAU + TAU * T + T
    assert tw_right_divmod(f, f) == (TwistedPoly.const(DOM, 1), TwistedPoly(DOM, []))
    rho = TAU + T
    Q, R = tw_right_divmod(tw_mul(rho, rho), rho)
    assert Q == rho and R.is_zero()
    with pytest.raises(ZeroDivisionError):
        tw_right_divmod(f, TwistedPoly(DOM, []))


def test_rgcd_examples():
    rho = TAU + T
    assert tw_rgcd([rho, tw_mul(rho, rho)]) == rho
    f = TAU.scale_left(T * 2) + T
    assert tw_rgcd([f]) == tw_monic(f)
    assert tw_rgcd([rho, TwistedPoly.const(DOM, 1)]) == TwistedPoly.const(DOM, 1)


def test_eval_examples():
    assert tw_eval(TAU + T, rf([1])) == T + rf([1])
    f = TAU * TAU + T
    g = TAU + T * T
    z = rf([1, 2, 1])
    assert tw_eval(tw_mul(f, g), z) == tw_eval(f, tw_eval(g, z))


def test_domain_mismatch():
    other = TwistedPoly.tau(PolyDomain(F3))
    with pytest.raises(DomainMismatch):
        tw_mul(TAU, other)


def test_laurent_division_precision_loss():
    L = LaurentDomain(F3, 3)
    weak = LaurentSeries.monomial(F3, 0, 1, prec=3)
    g = TwistedPoly(L, [LaurentSeries.const(F3, 1), weak])
    f = TwistedPoly.tau(L, 2)
    with pytest.raises(PrecisionLoss):
        tw_right_divmod(f, g)


def test_reduction_examples():
    P = PolyFq(F3, (1, 0, 1))
    rhoT = TwistedPoly(DOM, [T, 1])
    red, kept = tw_reduce_mod(rhoT, P)
    assert kept and red.degree() == 1
    rhoP = TwistedPoly(DOM, [T * T + 1, T ** 3 + T, 1])
    assert rhoP == tw_mul(rhoT, rhoT) + 1
    red, kept = tw_reduce_mod(rhoP, P)
    assert red == TwistedPoly.tau(red.dom, 2)
    r1, _ = tw_reduce_mod(rhoT, P)
    assert tw_reduce_mod(tw_mul(rhoT, rhoT), P)[0] == tw_mul(r1, r1)
    with pytest.raises(NonIntegralCoefficient):
        tw_reduce_mod(TwistedPoly(DOM, [RatFunc(PolyFq(F3, (1,)), PolyFq(F3, (0, 1)))]), P)


@pytest.mark.parametrize("P", irreducibles(F3, 2) + irreducibles(F3, 3)[:2], ids=str)
def test_carlitz_torsion_separable_mod_primes(P):
    """For P not dividing m, the reduced rho_m keeps a nonzero constant coefficient."""
    rhoT = TwistedPoly(DOM, [T, 1])
    for m in (PolyFq(F3, (0, 1)), PolyFq(F3, (1, 1))):
        rho_m = TwistedPoly(DOM, [])
        for c in reversed(m.c):
            rho_m = tw_mul(rho_m, rhoT) + rf([c])
        red, kept = tw_reduce_mod(rho_m, P)
        assert kept and not red.dom.is_zero(red.coeff(0))


def rand_tw(rng, dom, max_deg, elem):
    return TwistedPoly(dom, [elem(rng) for _ in range(rng.randint(1, max_deg + 1))])


def rand_rf(rng):
    return rf([rng.randrange(3) for _ in range(3)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_associativity_and_division(seed):
    rng = random.Random(seed)
    a, b, c = (rand_tw(rng, DOM, 3, rand_rf) for _ in range(3))
    assert tw_mul(tw_mul(a, b), c) == tw_mul(a, tw_mul(b, c))
    f = rand_tw(rng, DOM, 6, rand_rf)
    g = rand_tw(rng, DOM, 3, rand_rf)
    if not g.is_zero():
        Q, R = tw_right_divmod(f, g)
        assert tw_mul(Q, g) + R == f and R.degree() < g.degree()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_evaluation_is_additive(seed):
    rng = random.Random(seed)
    f = rand_tw(rng, DOM, 3, rand_rf)
    z1, z2 = rand_rf(rng), rand_rf(rng)
    assert tw_eval(f, z1 + z2) == tw_eval(f, z1) + tw_eval(f, z2)
    assert tw_eval(f, z1 * 2) == tw_eval(f, z1) * 2


def all_monic(dom, d):
    for cs in itertools.product(range(F9.q), repeat=d):
        yield TwistedPoly(dom, list(cs) + [1])


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_rgcd_is_maximal_common_right_divisor(seed):
    rng = random.Random(seed)
    elem = lambda r: r.randrange(F9.q)
    g0 = rand_tw(rng, FQ9, 1, elem)
    f = tw_mul(rand_tw(rng, FQ9, 1, elem), g0)
    h = tw_mul(rand_tw(rng, FQ9, 1, elem), g0)
    if f.is_zero() or h.is_zero():
        return
    g = tw_rgcd([f, h])
    assert g.lc() == FQ9.one()
    assert tw_right_divmod(f, g)[1].is_zero() and tw_right_divmod(h, g)[1].is_zero()
    best = 0
    for d in range(1, min(f.degree(), h.degree()) + 1):
        for cand in all_monic(FQ9, d):
            if tw_right_divmod(f, cand)[1].is_zero() and tw_right_divmod(h, cand)[1].is_zero():
                best = d
    assert g.degree() == best
