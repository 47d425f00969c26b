"""Fractional ideals of A as F_q[x]-lattices.

A fractional ideal is stored as (1/d) * M where M is an integral F_q[x]-module
in Hermite normal form with respect to the basis (1, y):

    M = F_q[x] * a  +  F_q[x] * (b + c y),   a, c monic, deg b < deg a.

For the rational model M = F_q[x] * a.  With d monic and gcd(a, b, c, d) = 1
the tuple (a, b, c, d) is unique, so ideal equality is tuple equality.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import BoundTooSmall, InputError, ZeroIdeal, ZeroModulus
from .fields import PolyFq, field, embedding, irreducibles, poly_gcd, poly_xgcd, polys_below
from .function_field import FFElement, sgn_of, sign_representatives


def _lcm(a, b):
    return (a * b // poly_gcd(a, b)).monic()


def _hnf(model, vectors):
    """(a, b, c) spanning the same F_q[x]-module as the integral vectors (P, Q)."""
    F = model.F
    zero = PolyFq(F)
    a = zero
    row = None
    for P, Q in vectors:
        if not Q:
            if P:
                a = poly_gcd(a, P) if a else P.monic()
            continue
        if row is None:
            row = (P, Q)
            continue
        b, c = row
        g, s, t = poly_xgcd(c, Q)
        row = (b * s + P * t, g)
        # kernel combination has zero y-part
        k = b * (Q // g) - P * (c // g)
        if k:
            a = poly_gcd(a, k) if a else k.monic()
    if row is None or not a:
        raise ZeroIdeal("generators span a module of rank < 2")
    b, c = row
    inv = F.inv(c.lc())
    b, c = (b.scale(inv)) % a, c.scale(inv)
    return a, b, c


class FracIdeal:
    """(1/d) <a, b + c y> (quadratic) or (a/d) (rational)."""

    __slots__ = ("model", "a", "b", "c", "d", "_basis", "_reduced")

    def __init__(self, model, a, b, c, d):
        self.model = model
        F = model.F
        one = PolyFq(F, (1,))
        if model.kind == "rational":
            b, c = PolyFq(F), one
            g = poly_gcd(a, d)
        else:
            g = poly_gcd(poly_gcd(poly_gcd(a, c), b) if b else poly_gcd(a, c), d)
        if g.degree() > 0:
            a, b, c, d = a // g, b // g, c // g, d // g
        d = d.monic()
        self.a, self.b, self.c, self.d = a.monic(), b, c, d
        self._basis = None
        self._reduced = None

    # -- identity ---------------------------------------------------------------
    def key(self):
        return (self.a.c, self.b.c, self.c.c, self.d.c)

    def __eq__(self, other):
        return isinstance(other, FracIdeal) and self.model == other.model and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.model.kind == "rational":
            core = f"({self.a})"
        else:
            cy = "y" if self.c.degree() == 0 else f"({self.c})*y"
            core = f"<{self.a}, {self.b} + {cy}>" if self.b else f"<{self.a}, {cy}>"
        return core if self.d.degree() == 0 else f"(1/({self.d}))*{core}"

    def to_json(self):
        return {"a": list(self.a.c), "b": list(self.b.c), "c": list(self.c.c), "d": list(self.d.c)}

    # -- basic data -------------------------------------------------------------
    def is_integral(self):
        return self.d.degree() == 0

    def generators(self):
        """Two F_q[x]-module generators (one for the rational model)."""
        M = self.model
        if M.kind == "rational":
            return [M.elem(self.a, (), self.d)]
        return [M.elem(self.a, (), self.d), M.elem(self.b, self.c, self.d)]

    def norm_degree(self):
        """deg of the norm: log_q of the index [A : ideal] for integral ideals."""
        if self.model.kind == "rational":
            return self.a.degree() - self.d.degree()
        return self.a.degree() + self.c.degree() - 2 * self.d.degree()

    def contains(self, e):
        M = self.model
        if e.is_zero():
            return True
        X, Y, D = e.u * self.d, e.v * self.d, e.den
        if M.kind == "rational":
            return (X % (D * self.a)).is_zero()
        Dc = D * self.c
        if (Y % Dc):
            return False
        t = Y // Dc
        return ((X - t * self.b * D) % (D * self.a)).is_zero()

    def __contains__(self, e):
        return self.contains(e)

    # -- arithmetic -------------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, FFElement):
            return ideal_from_generators([g * other for g in self.generators()])
        if self.model != other.model:
            raise InputError("ideals of different models")
        gens = [g * h for g in self.generators() for h in other.generators()]
        return ideal_from_generators(gens)

    __rmul__ = __mul__

    def inverse(self):
        M = self.model
        if M.kind == "rational":
            return FracIdeal(M, self.d, PolyFq(M.F), PolyFq(M.F, (1,)), self.a)
        # a0 * conj(a0) = (a c) for the integral part a0 = <a, b + c y>
        n = self.a * self.c
        conj_gen = M.elem(self.b - M.h * self.c, -self.c, (1,))
        gens = [M.elem(self.a * self.d, (), n), conj_gen * M.elem(self.d, (), n)]
        return ideal_from_generators(gens)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = unit_ideal(self.model)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __truediv__(self, other):
        if isinstance(other, FFElement):
            return self * other.inverse()
        return self * other.inverse()

    def conj(self):
        M = self.model
        if M.kind == "rational":
            return self
        return ideal_from_generators([g.conj() for g in self.generators()])

    # -- degree structure -------------------------------------------------------
    def reduced_basis(self):
        """F_q[x]-basis (e1, e2) whose leading terms never cancel.

        Then deg(s e1 + t e2) = max(deg(s e1), deg(t e2)) for all s, t, so
        {x^i e_j} is an F_q-basis adapted to the degree filtration.
        """
        if self._reduced is None:
            self._reduced = _reduce_pair(self.model, self.generators())
        return self._reduced

    def degree_basis(self, bound):
        return DegreeBasis(self, bound)

    def is_principal(self):
        """A generator if the ideal is principal, else None (exact test)."""
        n = self.norm_degree()
        M = self.model
        if M.kind == "rational":
            return M.elem(self.a, (), self.d)
        B = DegreeBasis(self, n)
        for e in B.vectors:
            if B.degree_of(e) == n:
                gen = e
                if ideal_from_generators([gen]) != self:
                    raise AssertionError("degree-matching element does not generate the ideal")
                return gen
        return None


def unit_ideal(model):
    one = PolyFq(model.F, (1,))
    zero = PolyFq(model.F)
    return FracIdeal(model, one, zero, one, one)


def ideal_from_generators(gens):
    """HNF of the A-module generated by a nonempty list of elements of K."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroIdeal("all generators are zero")
    M = gens[0].model
    F = M.F
    D = PolyFq(F, (1,))
    for g in gens:
        D = _lcm(D, g.den)
    if M.kind == "rational":
        a = PolyFq(F)
        for g in gens:
            P = g.u * (D // g.den)
            a = poly_gcd(a, P) if a else P.monic()
        return FracIdeal(M, a, PolyFq(F), PolyFq(F, (1,)), D)
    vecs = []
    for g in gens:
        k = D // g.den
        u, v = g.u * k, g.v * k
        vecs.append((u, v))
        vecs.append((v * M.f, u - M.h * v))
    a, b, c = _hnf(M, vecs)
    return FracIdeal(M, a, b, c, D)


def principal_ideal(e):
    return ideal_from_generators([e])


# -- reduced bases and degree filtrations ------------------------------------------

def _pullback(model, code):
    """F_q code of an F_inf code known to lie in F_q, else None."""
    try:
        return model.emb.index(code)
    except ValueError:
        return None


def _reduce_pair(model, gens):
    if model.kind == "rational":
        return list(gens)
    e1, e2 = gens
    Fi = model.Finf
    x = model.x()
    while True:
        d1, d2 = e1.degree(), e2.degree()
        s1, s2 = sgn_of(e1).code, sgn_of(e2).code
        if d1 > d2:
            e1, e2, d1, d2, s1, s2 = e2, e1, d2, d1, s2, s1
        if (d2 - d1) % 2:
            return [e1, e2]
        c = _pullback(model, Fi.div(s2, Fi.mul(s1, _sgn_pow(model, (d2 - d1) // 2))))
        if c is None:
            return [e1, e2]
        e2 = e2 - (x ** ((d2 - d1) // 2)) * e1 * c


_SGN_X = {}


def _sgn_pow(model, k):
    """sgn(x)^k as an F_inf code."""
    key = model
    if key not in _SGN_X:
        _SGN_X[key] = sgn_of(model.x()).code
    return model.Finf.pow(_SGN_X[key], k)


class DegreeBasis:
    """Positive F_q-basis {x^i e_j} of an ideal, sorted by degree, up to a bound.

    When d_inf = 1 degrees of distinct vectors are distinct.  When d_inf = 2
    a realized degree may carry two vectors whose signs are F_q-independent.
    """

    def __init__(self, ideal, bound, signs=None, first=None):
        self.ideal = ideal
        self.model = M = ideal.model
        self.signs = signs or sign_representatives(M)
        self.bound = bound
        Fi = M.Finf
        red = ideal.reduced_basis()
        dx = 1 if M.kind == "rational" else 2
        items = []
        for j, e in enumerate(red):
            de = e.degree()
            se = sgn_of(e).code
            i = 0
            xi = M.one()
            while de + dx * i <= bound:
                s = Fi.mul(se, _sgn_pow(M, i)) if M.kind != "rational" else se
                c = self.signs.positive_scalar(s)
                v = xi * e * c
                items.append((de + dx * i, j, v, Fi.mul(s, M.emb[c])))
                xi = xi * M.x()
                i += 1
        items.sort(key=lambda t: (t[0], t[1]))
        if first is not None and items and items[0][0] == first.degree():
            # put a preferred element (e.g. 1) at the front of its degree block
            d0 = items[0][0]
            block = [t for t in items if t[0] == d0]
            if len(block) == 1:
                items[0] = (d0, 0, first, sgn_of(first).code)
            else:
                # replace the block vector that keeps the signs independent
                sf = sgn_of(first).code
                for k, t in enumerate(block):
                    other = block[1 - k]
                    if _pullback(M, Fi.div(other[3], sf)) is None:
                        items[k] = (d0, 0, first, sf)
                        items[1 - k] = other
                        break
        self.vectors = [t[2] for t in items]
        self.degrees = [t[0] for t in items]
        self.sign_codes = [t[3] for t in items]

    def degree_of(self, e):
        return self.degrees[self.vectors.index(e)]

    def realized_degrees(self):
        return sorted(set(self.degrees))

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def split(self, D):
        """(top vectors of degree D with their sign codes, lower vectors)."""
        top = [(v, s) for v, dd, s in zip(self.vectors, self.degrees, self.sign_codes) if dd == D]
        low = [v for v, dd in zip(self.vectors, self.degrees) if dd < D]
        return top, low

    def positive_tops(self, D):
        """Positive elements of degree D that lie in the span of degree-D vectors."""
        M = self.model
        Fi = M.Finf
        top, _ = self.split(D)
        if not top:
            return []
        if len(top) == 1:
            return [top[0][0]]
        (v1, s1), (v2, s2) = top
        out = []
        for c1 in range(M.q):
            for c2 in range(M.q):
                if c1 == 0 and c2 == 0:
                    continue
                s = Fi.add(Fi.mul(M.emb[c1], s1), Fi.mul(M.emb[c2], s2))
                if self.signs.is_positive_sign(s):
                    out.append(v1 * c1 + v2 * c2 if c1 and c2 else (v1 * c1 if c1 else v2 * c2))
        return out

    def first_degrees(self):
        """(deg alpha_1, deg of the first nonconstant element of A); they differ for non-principal star ideals."""
        A_basis = DegreeBasis(unit_ideal(self.model), self.bound)
        a1 = next((d for d in self.degrees if d > 0), None)
        f1 = next((d for d in A_basis.degrees if d > 0), None)
        return a1, f1


def positive_elements(basis, max_degree):
    """Yield the positive elements of degree <= max_degree, grouped by degree."""
    M = basis.model
    for D in basis.realized_degrees():
        if D > max_degree:
            break
        _, low = basis.split(D)
        tops = basis.positive_tops(D)
        for t in tops:
            for coeffs in itertools.product(range(M.q), repeat=len(low)):
                e = t
                for c, v in zip(coeffs, low):
                    if c:
                        e = e + v * c
                yield e


def star_representative(ideal, signs=None):
    """(g, a*, basis) with g positive of minimal degree in a and a* = g^-1 a.

    Principal ideals return (generator, (1), basis of A).
    """
    M = ideal.model
    signs = signs or sign_representatives(M)
    gen = ideal.is_principal()
    if gen is not None:
        c = signs.positive_scalar(sgn_of(gen).code)
        one = unit_ideal(M)
        return gen * c, one, DegreeBasis(one, 0, signs, first=M.one())
    n = ideal.norm_degree()
    B = DegreeBasis(ideal, n + 2 * M.genus + 4, signs)
    d0 = B.degrees[0]
    cands = B.positive_tops(d0)
    g = min(cands, key=lambda e: e.key())
    star = ideal * g.inverse()
    return g, star, DegreeBasis(star, 0, signs, first=M.one())


def torsion_representatives(ideal, modulus):
    """Coset representatives of m^-1 a / a."""
    if not modulus.is_integral():
        raise InputError("modulus must be an integral ideal")
    if modulus.norm_degree() == 0 and modulus.key() == unit_ideal(modulus.model).key():
        return [ideal.model.zero()]
    if modulus.norm_degree() < 0 or not modulus.a:
        raise ZeroModulus("zero modulus")
    M = ideal.model
    big = modulus.inverse() * ideal
    D = _lcm(big.d, ideal.d)
    kb, ks = D // big.d, D // ideal.d
    if M.kind == "rational":
        A1, A0 = big.a * kb, ideal.a * ks
        q_a = A0 // A1
        return [M.elem(s * A1, (), D) for s in polys_below(M.F, q_a.degree())]
    A1, B1, C1 = big.a * kb, big.b * kb, big.c * kb
    A0, C0 = ideal.a * ks, ideal.c * ks
    qa, qc = A0 // A1, C0 // C1
    out = []
    for t in polys_below(M.F, qc.degree()):
        for s in polys_below(M.F, qa.degree()):
            out.append(M.elem(s * A1 + t * B1, t * C1, D))
    return out


# -- class groups ------------------------------------------------------------------

def point_count_class_number(model):
    """h_A from point counts over F_{q^k}, k <= g (independent of ideal arithmetic)."""
    if model.kind == "rational":
        return 1
    g = model.genus
    q = model.q
    s = []
    for k in range(1, g + 1):
        E = field(model.p, model.m * k)
        emb = embedding(model.F, E)
        Fc = [emb[c] for c in model.Ftot.c]
        n = 0
        for x in range(E.q):
            acc = 0
            for c in reversed(Fc):
                acc = E.add(E.mul(acc, x), c)
            n += 1 if acc == 0 else (2 if E.is_square(acc) else 0)
        if model.d_inf == 1:
            n += 1
        else:
            n += 2 if k % 2 == 0 else 0
        s.append(q ** k + 1 - n)
    # Newton identities for e_k of the inverse Frobenius roots
    e = [Fraction(1)]
    for k in range(1, g + 1):
        tot = sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k + 1))
        e.append(tot / k)
    coeffs = [(-1) ** k * e[k] for k in range(g + 1)]
    full = coeffs + [coeffs[j] * q ** (g - j) for j in range(g - 1, -1, -1)]
    hK = sum(full)
    if hK.denominator != 1:
        raise AssertionError("non-integral class number from point counts")
    return int(hK) * model.d_inf


def prime_ideals(model, bound):
    """Nonzero prime ideals of A lying over monic irreducibles of degree <= bound."""
    F = model.F
    out = []
    for n in range(1, bound + 1):
        for P in irreducibles(F, n):
            if model.kind == "rational":
                out.append(ideal_from_generators([model.elem(P)]))
                continue
            seen = set()
            for r in polys_below(F, n):
                val = (r * r + model.h * r - model.f) % P
                if val:
                    continue
                I = ideal_from_generators([model.elem(P), model.elem(-r, (1,))])
                if I not in seen:
                    seen.add(I)
                    out.append(I)
    return out


def reduce_ideal(I):
    """gamma * I for a minimal-degree gamma in I^-1: integral, same class, small norm."""
    J = I.inverse()
    B = DegreeBasis(J, J.norm_degree() + 2 * I.model.genus + 4)
    return I * B.vectors[0]


class IdealClassTable:
    """Cl(A) by closure of small primes under multiplication."""

    def __init__(self, model, degree_bound=None):
        self.model = model
        self.degree_bound = degree_bound if degree_bound is not None else 2 * model.genus + 2
        self.expected = point_count_class_number(model)
        one = unit_ideal(model)
        self.reps = [one]
        gens = prime_ideals(model, self.degree_bound)
        frontier = [one]
        while frontier:
            nxt = []
            for I in frontier:
                for P in gens:
                    J = reduce_ideal(I * P)
                    if self.index(J) is None:
                        self.reps.append(J)
                        nxt.append(J)
            frontier = nxt
        self.h = len(self.reps)
        if self.h != self.expected:
            raise BoundTooSmall(f"closure has {self.h} classes, point count gives {self.expected}")
        self.table = [[self.index(reduce_ideal(A * B)) for B in self.reps] for A in self.reps]
        self.orders = [self._order(i) for i in range(self.h)]
        self.structure = _invariant_factors(self.orders)
        self.n_signs = len(sign_representatives(model))
        self.h_narrow = self.h * self.n_signs

    def index(self, I):
        """Class index of an ideal, or None if its class is not in the table yet."""
        for k, R in enumerate(self.reps):
            if (I * R.inverse()).is_principal() is not None:
                return k
        return None

    def _order(self, i):
        k, cur = 1, i
        while cur != 0:
            cur = self.table[cur][i]
            k += 1
        return k

    def inverse_index(self, i):
        return self.table[i].index(0)

    def describe(self):
        return {
            "h": self.h,
            "h_narrow": self.h_narrow,
            "structure": self.structure,
            "degree_bound": self.degree_bound,
            "representatives": [repr(R) for R in self.reps],
            "orders": self.orders,
        }


def class_group(model, degree_bound=None):
    return IdealClassTable(model, degree_bound)


def _invariant_factors(orders):
    """Invariant factors of a finite abelian group from its element orders."""
    n = len(orders)
    if n == 1:
        return []
    primes = [l for l in range(2, n + 1) if n % l == 0 and all(l % r for r in range(2, l))]
    parts = {}
    for l in primes:
        # s_k = log_l #{x : l^k x = 0}
        sizes = []
        k = 1
        while True:
            cnt = sum(1 for o in orders if (l ** k) % o == 0)
            s = round(_log(cnt, l))
            sizes.append(s)
            if len(sizes) > 1 and sizes[-1] == sizes[-2]:
                break
            k += 1
        s = [0] + sizes
        # number of cyclic factors of order >= l^k is s_k - s_{k-1}
        ge = [s[k] - s[k - 1] for k in range(1, len(s))]
        exps = []
        for k in range(len(ge)):
            cnt = ge[k] - (ge[k + 1] if k + 1 < len(ge) else 0)
            exps += [k + 1] * cnt
        parts[l] = sorted(exps, reverse=True)
    width = max(len(v) for v in parts.values())
    factors = []
    for i in range(width):
        f = 1
        for l, exps in parts.items():
            if i < len(exps):
                f *= l ** exps[i]
        factors.append(f)
    return sorted(factors)


def _log(n, l):
    k = 0
    while n > 1:
        n //= l
        k += 1
    return k
