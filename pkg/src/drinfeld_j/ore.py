"""Twisted polynomials  sum c_k tau^k  with  tau a = a^q tau.

Coefficients live in a ``Domain``: a finite field, F_q[T], F_q(T), a
residue field F_q[T]/(P), or Laurent series at infinity.  The domain knows
how to apply the q-Frobenius and how to decide whether a coefficient is zero
(for Laurent series: zero to the tracked precision).
"""

from __future__ import annotations

import math

from .errors import DomainMismatch, NonIntegralCoefficient, PrecisionLoss
from .fields import FqElem, PolyFq, RatFunc, Residue, ResidueField
from .laurent import LaurentSeries

# a leading Laurent coefficient must carry this many certified digits to divide by
DIVISION_TOLERANCE = 5


def _subst_power(P, e):
    """P(T^e) for a polynomial with coefficients in the base field."""
    F = P.field
    out = [0] * (e * P.degree() + 1) if P else []
    for i, c in enumerate(P.c):
        out[i * e] = c
    return PolyFq(F, out)


class Domain:
    exact = True

    def __init__(self, q):
        self.q = q

    def is_zero(self, a):
        return a.is_zero()

    def frob(self, a, k=1):
        return a ** (self.q ** k)

    def inv(self, a):
        return 1 / a

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


class FqDomain(Domain):
    """Coefficients in a finite field containing F_q."""

    def __init__(self, fld, q):
        super().__init__(q)
        self.fld = fld

    def key(self):
        return ("fq", self.fld.p, self.fld.m, self.q)

    def zero(self):
        return FqElem(self.fld, 0)

    def one(self):
        return FqElem(self.fld, 1)

    def coerce(self, a):
        return a if isinstance(a, FqElem) else FqElem(self.fld, self.fld.scalar(a))

    def frob(self, a, k=1):
        return FqElem(self.fld, self.fld.frob(a.code, round(math.log(self.q, self.fld.p)) * k))

    def inv(self, a):
        return a.inverse()


class PolyDomain(Domain):
    """F_q[T]; division is only partial, so only multiplication and evaluation apply."""

    def __init__(self, F):
        super().__init__(F.q)
        self.F = F

    def key(self):
        return ("poly", self.F.p, self.F.m)

    def zero(self):
        return PolyFq(self.F)

    def one(self):
        return PolyFq(self.F, (1,))

    def coerce(self, a):
        return a if isinstance(a, PolyFq) else PolyFq(self.F, (a,))

    def frob(self, a, k=1):
        return _subst_power(a, self.q ** k)

    def inv(self, a):
        if a.degree() != 0:
            raise PrecisionLoss("non-constant polynomial is not invertible")
        return PolyFq(self.F, (self.F.inv(a.c[0]),))


class RatFuncDomain(Domain):
    def __init__(self, F):
        super().__init__(F.q)
        self.F = F

    def key(self):
        return ("ratfunc", self.F.p, self.F.m)

    def zero(self):
        return RatFunc(PolyFq(self.F))

    def one(self):
        return RatFunc(PolyFq(self.F, (1,)))

    def coerce(self, a):
        if isinstance(a, RatFunc):
            return a
        if isinstance(a, PolyFq):
            return RatFunc(a)
        return RatFunc(PolyFq(self.F, (a,)))

    def frob(self, a, k=1):
        e = self.q ** k
        return RatFunc(_subst_power(a.num, e), _subst_power(a.den, e))

    def inv(self, a):
        return self.one() / a


class ResidueDomain(Domain):
    def __init__(self, ring):
        super().__init__(ring.base.q)
        self.ring = ring

    def key(self):
        return ("residue", self.ring.modulus)

    def zero(self):
        return self.ring(PolyFq(self.ring.base))

    def one(self):
        return self.ring(PolyFq(self.ring.base, (1,)))

    def coerce(self, a):
        return a if isinstance(a, Residue) else self.ring(a if isinstance(a, PolyFq) else PolyFq(self.ring.base, (a,)))

    def frob(self, a, k=1):
        return a ** (self.q ** k)

    def inv(self, a):
        return self.one() / a


class LaurentDomain(Domain):
    """Laurent series at infinity over F_inf; zero means zero to precision."""

    exact = False

    def __init__(self, fld, q):
        super().__init__(q)
        self.fld = fld
        self.m = round(math.log(q, fld.p))

    def key(self):
        return ("laurent", self.fld.p, self.fld.m, self.q)

    def zero(self):
        return LaurentSeries.zero(self.fld)

    def one(self):
        return LaurentSeries.const(self.fld, 1)

    def coerce(self, a):
        if isinstance(a, LaurentSeries):
            return a
        return LaurentSeries.const(self.fld, a)

    def frob(self, a, k=1):
        return a.frobenius(self.m * k)

    def inv(self, a):
        if a.is_zero() or a.rel_prec < DIVISION_TOLERANCE:
            raise PrecisionLoss(f"coefficient has only {0 if a.is_zero() else a.rel_prec} certified digits")
        return a.inverse()


class TwistedPoly:
    __slots__ = ("dom", "c")

    def __init__(self, dom, coeffs):
        self.dom = dom
        c = [dom.coerce(a) for a in coeffs]
        while c and dom.is_zero(c[-1]):
            c.pop()
        self.c = c

    @classmethod
    def tau(cls, dom, k=1):
        return cls(dom, [dom.zero()] * k + [dom.one()])

    @classmethod
    def const(cls, dom, a):
        return cls(dom, [a])

    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1]

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else self.dom.zero()

    def _check(self, g):
        if not isinstance(g, TwistedPoly):
            return TwistedPoly.const(self.dom, g)
        if g.dom != self.dom:
            raise DomainMismatch(f"{self.dom.key()} vs {g.dom.key()}")
        return g

    def __add__(self, g):
        g = self._check(g)
        n = max(len(self.c), len(g.c))
        return TwistedPoly(self.dom, [self.coeff(k) + g.coeff(k) for k in range(n)])

    def __neg__(self):
        return TwistedPoly(self.dom, [-a for a in self.c])

    def __sub__(self, g):
        return self + (-self._check(g))

    def __mul__(self, g):
        return tw_mul(self, self._check(g))

    def scale_left(self, a):
        """a * self (constant on the left)."""
        return TwistedPoly(self.dom, [a * b for b in self.c])

    def __call__(self, z):
        return tw_eval(self, z)

    def __eq__(self, g):
        if not isinstance(g, TwistedPoly):
            return NotImplemented
        return self.dom == g.dom and (self - g).is_zero()

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k, a in enumerate(self.c):
            if self.dom.is_zero(a):
                continue
            mon = "" if k == 0 else ("tau" if k == 1 else f"tau^{k}")
            parts.append(f"({a!r})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)


def tw_mul(f, g):
    """f * g, with (a tau^i)(b tau^j) = a b^(q^i) tau^(i+j)."""
    if f.dom != g.dom:
        raise DomainMismatch(f"{f.dom.key()} vs {g.dom.key()}")
    dom = f.dom
    if not f.c or not g.c:
        return TwistedPoly(dom, [])
    out = [None] * (len(f.c) + len(g.c) - 1)
    for i, a in enumerate(f.c):
        if dom.is_zero(a):
            continue
        for j, b in enumerate(g.c):
            term = a * (dom.frob(b, i) if i else b)
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return TwistedPoly(dom, [dom.zero() if t is None else t for t in out])


def tw_right_divmod(f, g):
    """(Q, R) with f = Q * g + R and deg R < deg g."""
    if f.dom != g.dom:
        raise DomainMismatch(f"{f.dom.key()} vs {g.dom.key()}")
    if g.is_zero():
        raise ZeroDivisionError("right division by the zero twisted polynomial")
    dom = f.dom
    d = g.degree()
    lead_inv = dom.inv(g.lc())
    qc = [dom.zero()] * max(f.degree() - d + 1, 0)
    r = list(f.c)
    while len(r) - 1 >= d and r:
        k = len(r) - 1 - d
        top = r[-1]
        # a top that is only zero to precision still bounds the quotient coefficient
        if dom.exact and dom.is_zero(top):
            r.pop()
            continue
        c = top * dom.frob(lead_inv, k) if k else top * lead_inv
        qc[k] = qc[k] + c
        for j, b in enumerate(g.c[:-1]):
            r[k + j] = r[k + j] - c * (dom.frob(b, k) if k else b)
        r.pop()
    while r and dom.is_zero(r[-1]):
        r.pop()
    return TwistedPoly(dom, qc), TwistedPoly(dom, r)


def tw_monic(f):
    return f.scale_left(f.dom.inv(f.lc()))


def tw_rgcd(fs):
    """Monic right gcd: generator of the left ideal sum L{tau} f_i."""
    fs = [f for f in fs if not f.is_zero()]
    if not fs:
        raise ZeroDivisionError("right gcd of zero polynomials")
    g = fs[0]
    for h in fs[1:]:
        a, b = g, h
        if b.degree() > a.degree():
            a, b = b, a
        while not b.is_zero():
            _, r = tw_right_divmod(a, b)
            a, b = b, r
        g = a
    return tw_monic(g)


def tw_eval(f, z):
    """sum c_k z^(q^k)."""
    dom = f.dom
    acc = None
    zk = z
    for k, a in enumerate(f.c):
        if k:
            zk = dom.frob(zk, 1)
        if dom.is_zero(a):
            continue
        term = a * zk
        acc = term if acc is None else acc + term
    return acc if acc is not None else dom.zero()


def tw_reduce_mod(f, P):
    """Coefficientwise reduction of a twisted polynomial over F_q[T] or F_q(T) modulo P.

    Returns (reduced polynomial over F_q[T]/(P), degree preserved?).
    """
    ring = ResidueField(P)
    dom = ResidueDomain(ring)
    out = []
    for a in f.c:
        if isinstance(a, RatFunc):
            if a.den.degree() > 0:
                raise NonIntegralCoefficient(f"coefficient {a} is not a polynomial")
            a = a.num
        elif not isinstance(a, PolyFq):
            raise NonIntegralCoefficient(f"coefficient {a!r} is not a polynomial")
        out.append(ring(a))
    red = TwistedPoly(dom, out)
    return red, red.degree() == f.degree()
