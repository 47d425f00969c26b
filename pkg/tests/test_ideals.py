import random

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_j.checks import brute_force_elements, random_element
from drinfeld_j.errors import ZeroModulus
from drinfeld_j.fields import PolyFq
from drinfeld_j.function_field import sgn_of, sign_representatives
from drinfeld_j.ideals import (DegreeBasis, class_group, ideal_from_generators, positive_elements,
                               principal_ideal, star_representative, torsion_representatives,
                               unit_ideal)


def test_hnf_examples(rational, elliptic, p0):
    F = elliptic.F
    assert p0.a == PolyFq(F, (0, 1)) and p0.b == PolyFq(F, (2,)) and p0.c == PolyFq(F, (1,))
    assert ideal_from_generators([elliptic.one()]) == unit_ideal(elliptic)
    T = rational.x()
    assert ideal_from_generators([T * T, T * T * T]) == principal_ideal(T * T)


def test_inverse_and_norm(elliptic, p0):
    assert p0 * p0.inverse() == unit_ideal(elliptic)
    assert p0.norm_degree() == 1
    assert (p0 * p0).norm_degree() == 2


def test_square_relations(elliptic):
    y = elliptic.y()
    assert principal_ideal(y) ** 2 == principal_ideal(y * y)
    f = elliptic.elem(elliptic.f)
    assert principal_ideal(y * y) == principal_ideal(f)
    p1 = ideal_from_generators([elliptic.x() - elliptic.one(), y])
    assert p1 * p1 == principal_ideal(elliptic.x() - elliptic.one())


def test_principal_examples(elliptic, p0):
    assert unit_ideal(elliptic).is_principal() == elliptic.one()
    for k in range(1, 9):
        assert ((p0 ** k).is_principal() is not None) == (k % 4 == 0)


def test_class_groups(rational, elliptic_classes, inert_classes):
    R = class_group(rational)
    assert (R.h, R.h_narrow, R.structure) == (1, 1, [])
    G = elliptic_classes
    assert (G.h, G.h_narrow, G.structure) == (4, 4, [4])
    assert (inert_classes.h, inert_classes.h_narrow) == (8, 32)
    assert inert_classes.structure == [2, 4]


@pytest.mark.parametrize("which", ["elliptic_classes", "inert_classes"])
def test_class_table_is_group(which, request):
    G = request.getfixturevalue(which)
    t = G.table
    n = G.h
    assert all(t[0][i] == i and t[i][0] == i for i in range(n))
    assert all(0 in t[i] for i in range(n))
    for i in range(n):
        for j in range(n):
            assert t[i][j] == t[j][i]
            for k in range(0, n, 3):
                assert t[t[i][j]][k] == t[i][t[j][k]]


def test_hnf_unique_under_permutation_and_scaling(elliptic):
    rng = random.Random(5)
    for _ in range(10):
        a = random_element(elliptic, rng, 3)
        b = random_element(elliptic, rng, 3)
        I = ideal_from_generators([a, b])
        assert ideal_from_generators([b * 2, a, a + b]) == I


def test_class_index_stable_under_principal_multipliers(elliptic, elliptic_classes, p0):
    rng = random.Random(7)
    i = elliptic_classes.index(p0)
    for _ in range(5):
        g = random_element(elliptic, rng, 4)
        assert elliptic_classes.index(p0 * g) == i


def test_star_representative_examples(elliptic, p0):
    g, star, B = star_representative(unit_ideal(elliptic))
    assert g == elliptic.one() and star == unit_ideal(elliptic)
    g, star, B = star_representative(p0)
    assert g == elliptic.x()
    assert star == p0 * elliptic.x().inverse()
    B = DegreeBasis(star, 8, first=elliptic.one())
    assert B.vectors[0] == elliptic.one()
    alpha1 = B.vectors[1]
    assert B.degrees[1] == 1
    assert alpha1 == (elliptic.y() + elliptic.one() * 2) * elliptic.x().inverse()
    assert B.first_degrees() == (1, 2)


@pytest.mark.parametrize("name", ["rational", "elliptic"])
def test_degree_basis_shape(name, request):
    M = request.getfixturevalue(name)
    B = DegreeBasis(unit_ideal(M), 12)
    S = sign_representatives(M)
    assert B.degrees == sorted(set(B.degrees))
    assert all(S.is_positive(v) for v in B.vectors)
    assert B.degrees[-1] - B.degrees[-2] == 1 and B.degrees[-2] - B.degrees[-3] == 1


def test_positive_elements_rational(rational):
    B = DegreeBasis(unit_ideal(rational), 3)
    got = sorted(tuple(e.u.c) for e in positive_elements(B, 1))
    assert got == [(0, 1), (1,), (1, 1), (2, 1)]
    by_deg = {}
    for e in positive_elements(B, 3):
        by_deg[e.degree()] = by_deg.get(e.degree(), 0) + 1
    assert by_deg == {0: 1, 1: 3, 2: 9, 3: 27}


@pytest.mark.parametrize("name", ["elliptic", "inert"])
def test_positive_elements_match_brute_force(name, request):
    M = request.getfixturevalue(name)
    S = sign_representatives(M)
    D = 5
    got = [e.key() for e in positive_elements(DegreeBasis(unit_ideal(M), D, S), D)]
    brute = {e.key() for e in brute_force_elements(M, D) if S.is_positive(e)}
    assert len(got) == len(set(got)) and set(got) == brute


def test_positive_elements_of_star_ideal(elliptic, p0):
    _, star, _ = star_representative(p0)
    B = DegreeBasis(star, 6, first=elliptic.one())
    S = sign_representatives(elliptic)
    elems = list(positive_elements(B, 6))
    assert [e for e in elems if e.degree() == 0] == [elliptic.one()]
    assert all(S.is_positive(e) and e in star for e in elems)
    keys = {e.key() for e in elems}
    # disjoint from nontrivial scalings when d_inf = 1
    assert all((e * 2).key() not in keys for e in elems)
    # stability: positive plus lower-degree element of the ideal stays in the set
    for e in elems:
        if e.degree() == 4:
            for f in elems:
                if f.degree() < 4:
                    assert (e + f).key() in keys and (e + f * 2).key() in keys


def test_torsion_representatives(rational, elliptic, p0):
    T = rational.x()
    reps = torsion_representatives(unit_ideal(rational), principal_ideal(T))
    assert sorted(tuple(r.u.c) for r in reps) == [(), (1,), (2,)]
    assert all(r.is_zero() or r.den == T.u for r in reps)
    assert torsion_representatives(unit_ideal(rational), unit_ideal(rational)) == [rational.zero()]
    m = principal_ideal(elliptic.x())
    reps = torsion_representatives(p0, m)
    assert len(reps) == 3 ** m.norm_degree()
    assert any(r.is_zero() for r in reps)
    big = m.inverse() * p0
    for i, r in enumerate(reps):
        assert r in big
        for s in reps[:i]:
            assert (r - s) not in p0


def test_torsion_zero_modulus(rational):
    zero = ideal_from_generators([rational.one()])
    zero.a = PolyFq(rational.F)
    with pytest.raises(ZeroModulus):
        torsion_representatives(unit_ideal(rational), zero)


@pytest.mark.parametrize("name", ["elliptic", "inert"])
def test_ideal_multiplicativity(name, request):
    M = request.getfixturevalue(name)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2 ** 32))
    def check(seed):
        rng = random.Random(seed)
        a, b, c = (random_element(M, rng, 3) for _ in range(3))
        I = ideal_from_generators([a, b])
        J = principal_ideal(c)
        assert (I * J).norm_degree() == I.norm_degree() + J.norm_degree()
        assert I * I.inverse() == unit_ideal(M)
        assert (I * J) * J.inverse() == I
        assert J.is_principal() is not None
    check()
