"""Curve models, the fields A ⊂ K and the completion at infinity.

Two kinds of model are supported:

* ``rational``:  A = F_q[x], K = F_q(x), u = 1/x.
* ``quadratic``: A = F_q[x, y]/(y^2 + h(x) y - f(x)).  With F = f + h^2/4 and
  Y = y + h/2 (so Y^2 = F), infinity is ramified when deg F is odd
  (d_inf = 1, uniformizer u = x^g / Y) and inert when deg F is even with a
  non-square leading coefficient (d_inf = 2, u = 1/x, constants in F_{q^2}).

Degrees are normalised so that deg(x) = [K : F_q(x)], hence
deg(a) = deg_x N(a) for every a in K, and v(a) = -deg(a)/d_inf.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    InputError,
    PrecisionTooLow,
    SingularCurve,
    SplitInfinity,
    UnsupportedCharacteristic,
    ZeroElement,
)
from .fields import FqElem, PolyFq, embedding, field, poly_gcd
from .laurent import INF, LaurentSeries


class CurveModel:
    """A validated curve model together with its data at infinity."""

    def __init__(self, p, m=1, kind="rational", h=(), f=(), label=None):
        if p < 3:
            raise UnsupportedCharacteristic("q >= 3 with odd characteristic is required")
        if m < 1:
            raise InputError("extension degree m must be >= 1")
        self.p, self.m = p, m
        self.F = field(p, m)
        self.q = self.F.q
        self.kind = kind
        self.label = label
        F = self.F
        if kind == "rational":
            self.h = PolyFq(F)
            self.f = PolyFq(F)
            self.genus = 0
            self.d_inf = 1
            self.vx = -1
            self.Ftot = PolyFq(F)
        elif kind == "quadratic":
            self.h = PolyFq(F, list(h))
            self.f = PolyFq(F, list(f))
            half = F.inv(F.scalar(2))
            self.Ftot = self.f + (self.h * self.h).scale(F.mul(half, half))
            Fd = self.Ftot.degree()
            if Fd < 1:
                raise SingularCurve("f + h^2/4 must be non-constant")
            if poly_gcd(self.Ftot, self.Ftot.derivative()).degree() > 0:
                raise SingularCurve(f"affine curve is singular: {self.Ftot} is not squarefree")
            if Fd % 2 == 1:
                self.d_inf = 1
                self.genus = (Fd - 1) // 2
                self.vx = -2
            else:
                if F.is_square(self.Ftot.lc()):
                    raise SplitInfinity("two places above infinity (leading coefficient is a square)")
                self.d_inf = 2
                self.genus = (Fd - 2) // 2
                self.vx = -1
        else:
            raise InputError(f"unknown model kind {kind!r}")
        self.Finf = field(p, m * self.d_inf)
        self.emb = embedding(self.F, self.Finf)
        self._series_cache = {}

    # -- description ------------------------------------------------------------
    def describe(self):
        d = {"p": self.p, "m": self.m, "q": self.q, "kind": self.kind, "genus": self.genus,
             "d_inf": self.d_inf, "F_inf": f"F_{self.Finf.q}", "uniformizer": self.uniformizer()}
        if self.kind == "quadratic":
            d["h"] = list(self.h.c)
            d["f"] = list(self.f.c)
        if self.label:
            d["label"] = self.label
        return d

    def uniformizer(self):
        if self.kind == "rational" or self.d_inf == 2:
            return "1/x"
        return f"x^{self.genus}/(y + h/2)" if self.h else f"x^{self.genus}/y"

    def to_json(self):
        d = {"p": self.p, "m": self.m, "model": {"kind": self.kind}}
        if self.kind == "quadratic":
            d["model"]["h"] = list(self.h.c)
            d["model"]["f"] = list(self.f.c)
        if self.label:
            d["label"] = self.label
        return d

    def __eq__(self, other):
        return isinstance(other, CurveModel) and (self.p, self.m, self.kind, self.h, self.f) == (
            other.p, other.m, other.kind, other.h, other.f)

    def __hash__(self):
        return hash((self.p, self.m, self.kind, self.h, self.f))

    def __repr__(self):
        if self.kind == "rational":
            return f"CurveModel(F_{self.q}[x])"
        return f"CurveModel(y^2 + ({self.h})y = {self.f} over F_{self.q})"

    # -- elements ---------------------------------------------------------------
    def poly(self, coeffs):
        return PolyFq(self.F, coeffs)

    def elem(self, u=(), v=(), den=(1,)):
        """Element (u(x) + v(x) y)/den(x); arguments are PolyFq or coefficient lists."""
        to = lambda a: a if isinstance(a, PolyFq) else PolyFq(self.F, a)
        return FFElement(self, to(u), to(v), to(den))

    def const(self, c):
        return self.elem([c])

    def one(self):
        return self.const(1)

    def zero(self):
        return self.elem([])

    def x(self):
        return self.elem([0, 1])

    def y(self):
        if self.kind != "quadratic":
            raise InputError("rational model has no y")
        return self.elem([], [1])

    def ring_generators(self):
        return [self.x()] if self.kind == "rational" else [self.x(), self.y()]

    # -- the completion at infinity ---------------------------------------------
    def _embed_const(self, a):
        return self.emb[a]

    def _poly_series(self, P, X):
        """P(X) by Horner; P has coefficients in F_q."""
        Fi = self.Finf
        acc = None
        for c in reversed(P.c):
            term = LaurentSeries.const(Fi, self.emb[c])
            acc = term if acc is None else acc * X + term
        return acc if acc is not None else LaurentSeries.zero(Fi)

    def series(self, rel):
        """(X, y) as Laurent series in u; y has relative precision >= rel."""
        Fi = self.Finf
        if self.kind == "rational":
            return LaurentSeries.monomial(Fi, -1), None
        best = None
        for R, val in self._series_cache.items():
            if R >= rel and (best is None or R < best):
                best = R
        if best is not None:
            X, y = self._series_cache[best]
            return X, y
        rel = max(rel, 8)
        if self.d_inf == 1:
            X, Y = self._ramified_series(rel)
        else:
            X, Y = self._inert_series(rel)
        half = Fi.inv(Fi.scalar(2))
        y = Y - self._poly_series(self.h, X).scale(half) if self.h else Y
        self._series_cache[rel] = (X, y)
        return X, y

    def _ramified_series(self, R):
        # x = u^-2 xi with xi a unit; xi^{2g} = sum_i F_i u^{2(2g+1-i)} xi^i
        Fi = self.Finf
        g = self.genus
        top = 2 * g + 1
        Fc = [self.emb[self.Ftot.coeff(i)] for i in range(top + 1)]
        W = R + 4
        terms = [(i, LaurentSeries.monomial(Fi, 2 * (top - i), Fc[i])) for i in range(top + 1) if Fc[i]]
        xi = LaurentSeries.const(Fi, Fi.inv(Fc[top]), prec=W)
        for _ in range(math.ceil(math.log2(W)) + 2):
            pw = [LaurentSeries.const(Fi, 1, prec=W)]
            for _ in range(top):
                pw.append(pw[-1] * xi)
            P = -pw[2 * g] if g > 0 else LaurentSeries.const(Fi, Fi.neg(1), prec=W)
            dP = pw[2 * g - 1].scale(Fi.neg(Fi.scalar(2 * g))) if g > 0 else LaurentSeries.zero(Fi)
            for i, t in terms:
                P = P + t * pw[i]
                if i:
                    dP = dP + (t * pw[i - 1]).scale(Fi.scalar(i))
            xi = (xi - P / dP).truncate(W)
        # certify: residual zero to precision W
        pw = xi ** (2 * g) if g else LaurentSeries.const(Fi, 1, prec=W)
        resid = -pw
        for i, t in terms:
            resid = resid + t * (xi ** i if i else LaurentSeries.const(Fi, 1, prec=W))
        if not resid.truncate(W).is_zero():
            raise PrecisionTooLow("Newton iteration for x at infinity did not converge")
        X = xi.shift(-2)
        Y = (xi ** g if g else LaurentSeries.const(Fi, 1, prec=W)).shift(-top)
        return X, Y

    def _inert_series(self, R):
        Fi = self.Finf
        g = self.genus
        top = 2 * g + 2
        W = R + 4
        codes = [self.emb[self.Ftot.coeff(top - k)] for k in range(top + 1)]
        a = LaurentSeries.from_codes(Fi, 0, codes, prec=W)
        r0 = Fi.sqrt(codes[0])
        r = LaurentSeries.const(Fi, r0, prec=W)
        half = Fi.inv(Fi.scalar(2))
        for _ in range(math.ceil(math.log2(W)) + 2):
            r = ((r + a / r).scale(half)).truncate(W)
        if not (r * r - a).is_zero():
            raise PrecisionTooLow("square root at infinity did not converge")
        X = LaurentSeries.monomial(Fi, -1)
        Y = r.shift(-(g + 1))
        return X, Y

    def embed(self, a, prec):
        return embed_at_infinity(a, prec)


class FFElement:
    """(u(x) + v(x) y) / den(x) in K, in lowest terms with monic den."""

    __slots__ = ("model", "u", "v", "den")

    def __init__(self, model, u, v, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        F = model.F
        if model.kind == "rational" and v:
            raise InputError("rational model elements have no y part")
        if u or v:
            g = poly_gcd(poly_gcd(u, v) if (u and v) else (u if u else v), den)
            if g.degree() > 0:
                u, v, den = u // g, v // g, den // g
        else:
            den = PolyFq(F, (1,))
        lc = den.lc()
        if lc != 1:
            inv = F.inv(lc)
            u, v, den = u.scale(inv), v.scale(inv), den.scale(inv)
        self.model, self.u, self.v, self.den = model, u, v, den

    # arithmetic -----------------------------------------------------------------
    def _lift(self, b):
        if isinstance(b, FFElement):
            if b.model != self.model:
                raise InputError("elements of different models")
            return b
        if isinstance(b, (int, FqElem)):
            return self.model.const(b.code if isinstance(b, FqElem) else b)
        if isinstance(b, PolyFq):
            return self.model.elem(b)
        return NotImplemented

    def __add__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        if self.den == b.den:
            return FFElement(self.model, self.u + b.u, self.v + b.v, self.den)
        return FFElement(self.model, self.u * b.den + b.u * self.den, self.v * b.den + b.v * self.den,
                         self.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.model, -self.u, -self.v, self.den)

    def __sub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self + (-b)

    def __rsub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else b + (-self)

    def __mul__(self, b):
        if isinstance(b, FqElem) or isinstance(b, int):
            c = b.code if isinstance(b, FqElem) else self.model.F.scalar(b)
            return FFElement(self.model, self.u.scale(c), self.v.scale(c), self.den)
        b = self._lift(b)
        if b is NotImplemented:
            return b
        M = self.model
        vv = self.v * b.v
        u = self.u * b.u + vv * M.f
        v = self.u * b.v + self.v * b.u - vv * M.h
        return FFElement(M, u, v, self.den * b.den)

    __rmul__ = __mul__

    def conj(self):
        """Image under y -> -h - y."""
        return FFElement(self.model, self.u - self.v * self.model.h, -self.v, self.den)

    def norm(self):
        """N(self) = num/den as a pair of polynomials in x (num, den), den monic."""
        M = self.model
        n = self.u * self.u - M.h * self.u * self.v - M.f * self.v * self.v
        return n, self.den * self.den if M.kind == "quadratic" else self.den

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero element")
        M = self.model
        if M.kind == "rational":
            return FFElement(M, self.den, PolyFq(M.F), self.u)
        n = self.u * self.u - M.h * self.u * self.v - M.f * self.v * self.v
        c = self.conj()
        # 1/a = conj(a) / N(a),  N(a) = n / den^2
        return FFElement(M, c.u * self.den, c.v * self.den, n)

    def __truediv__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self * b.inverse()

    def __rtruediv__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else b * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = self.model.one()
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    # queries ----------------------------------------------------------------------
    def is_zero(self):
        return not self.u and not self.v

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self):
        return self.den.degree() == 0

    def degree(self):
        if self.is_zero():
            raise ZeroElement("degree of zero")
        n, d = self.norm()
        if self.model.kind == "rational":
            return self.u.degree() - self.den.degree()
        return n.degree() - d.degree()

    def valuation(self):
        deg = self.degree()
        return -deg // self.model.d_inf

    def key(self):
        """Coefficient tuple used for deterministic tie-breaks."""
        return (self.den.degree(), self.den.c, self.v.degree(), self.v.c, self.u.degree(), self.u.c)

    def __eq__(self, b):
        if isinstance(b, (int, FqElem, PolyFq)):
            b = self._lift(b)
        return isinstance(b, FFElement) and self.model == b.model and (self.u, self.v, self.den) == (b.u, b.v, b.den)

    def __hash__(self):
        return hash((self.u, self.v, self.den))

    def __repr__(self):
        parts = []
        if self.u:
            parts.append(f"{self.u}")
        if self.v:
            parts.append(f"({self.v})*y" if len([c for c in self.v.c if c]) > 1 else f"{self.v}*y")
        s = " + ".join(parts) if parts else "0"
        if self.den.degree() > 0:
            s = f"({s})/({self.den})"
        return s

    def to_json(self):
        return {"u": list(self.u.c), "v": list(self.v.c), "den": list(self.den.c)}


# ---------------------------------------------------------------------------

def parse_model(desc):
    """CurveModel from the structured description used by curve files.

    ``desc`` is a mapping with keys p, m (default 1), model.kind and, for
    quadratic models, model.h and model.f as coefficient lists (lowest first).
    """
    try:
        p = int(desc["p"])
        m = int(desc.get("m", 1))
        mod = desc.get("model", {"kind": "rational"})
        kind = mod.get("kind", "rational")
        h = [int(c) for c in mod.get("h", [])]
        f = [int(c) for c in mod.get("f", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed curve description: {exc}") from exc
    if p < 3:
        raise UnsupportedCharacteristic("q >= 3 with odd characteristic is required")
    from .fields import _is_prime
    if not _is_prime(p):
        raise InputError(f"p = {p} is not prime")
    q = p ** m
    h = [c % q if m > 1 else c % p for c in h]
    f = [c % q if m > 1 else c % p for c in f]
    return CurveModel(p, m, kind, h, f, desc.get("label"))


def degree_valuation(a):
    """(v_inf(a), deg(a)) for a nonzero element."""
    if a.is_zero():
        raise ZeroElement("valuation of zero")
    deg = a.degree()
    return -deg // a.model.d_inf, deg


def embed_at_infinity(a, prec):
    """Laurent expansion of a in u with absolute precision >= prec."""
    M = a.model
    Fi = M.Finf
    if a.is_zero():
        return LaurentSeries.zero(Fi, prec)
    if M.kind == "rational":
        X = LaurentSeries.monomial(Fi, -1)
        num = M._poly_series(a.u, X)
        den = M._poly_series(a.den, X)
        rel = prec - a.valuation() + 1
        return (num * den.inverse(rel_prec=rel)).truncate(prec)
    vx = M.vx
    vy = M.y().valuation()
    vd = vx * a.den.degree()
    vals = []
    if a.u:
        vals.append(vx * a.u.degree() - vd)
    if a.v:
        vals.append(vx * a.v.degree() + vy - vd)
    rel = prec - min(vals) + 2
    for _ in range(6):
        X, y = M.series(rel)
        U = M._poly_series(a.u, X) if a.u else None
        V = M._poly_series(a.v, X) * y if a.v else None
        num = U if V is None else (V if U is None else U + V)
        den = M._poly_series(a.den, X)
        res = num * den.inverse(rel_prec=rel)
        if res.prec >= prec:
            return res.truncate(prec)
        rel += prec - res.prec + 4
    raise PrecisionTooLow(f"could not reach precision {prec}")


def sgn_of(a):
    """Leading Laurent coefficient (an FqElem of F_inf)."""
    if isinstance(a, LaurentSeries):
        if a.is_zero():
            raise ZeroElement("sign of a series that is zero to precision")
        return a.leading()
    if a.is_zero():
        raise ZeroElement("sign of zero")
    return embed_at_infinity(a, a.valuation() + 1).leading()


class SignData:
    """Coset representatives S of F_inf^x / F_q^x and the positivity test."""

    def __init__(self, model, reps, require_one=True):
        Fi = model.Finf
        self.model = model
        self.reps = tuple(int(r) for r in reps)
        self._fq_star = [model.emb[c] for c in range(1, model.q)]
        expected = (Fi.q - 1) // (model.q - 1)
        cosets = {}
        for s in self.reps:
            if s == 0:
                raise InputError("0 cannot be a sign representative")
            key = min(Fi.mul(c, s) for c in self._fq_star)
            if key in cosets:
                raise InputError("two representatives in the same coset")
            cosets[key] = s
        if len(cosets) != expected:
            raise InputError(f"need {expected} coset representatives, got {len(cosets)}")
        if require_one and 1 not in self.reps:
            raise InputError("1 must belong to S")
        self._lookup = {}
        for s in self.reps:
            for c in self._fq_star:
                self._lookup[Fi.mul(c, s)] = (c, s)
        self._set = frozenset(self.reps)

    def is_positive_sign(self, code):
        return int(code) in self._set

    def is_positive(self, a):
        return self.is_positive_sign(sgn_of(a).code)

    def decompose(self, code):
        """(c, s) with code = c*s, c in F_q^x (as F_inf code), s in S."""
        return self._lookup[int(code)]

    def positive_scalar(self, code):
        """The c in F_q^x (as an F_q code) with c * code in S."""
        c, _ = self._lookup[int(code)]
        inv_c = self.model.Finf.inv(c)
        emb = self.model.emb
        return emb.index(inv_c)

    def __len__(self):
        return len(self.reps)

    def __repr__(self):
        return f"SignData(S={list(self.reps)})"


def sign_representatives(model):
    """Deterministic S: smallest code per coset, with 1 for the trivial coset."""
    Fi = model.Finf
    fq = [model.emb[c] for c in range(1, model.q)]
    seen = set()
    reps = []
    for s in range(1, Fi.q):
        if s in seen:
            continue
        coset = {Fi.mul(c, s) for c in fq}
        seen |= coset
        reps.append(1 if 1 in coset else min(coset))
    return SignData(model, reps)


def alternative_sign_representatives(model, rng=None):
    """A second S: a non-minimal (or random) element per coset, 1 not required."""
    Fi = model.Finf
    fq = [model.emb[c] for c in range(1, model.q)]
    seen = set()
    reps = []
    for s in range(1, Fi.q):
        if s in seen:
            continue
        coset = sorted({Fi.mul(c, s) for c in fq})
        seen |= set(coset)
        default = 1 if 1 in coset else coset[0]
        others = [c for c in coset if c != default] or coset
        reps.append(rng.choice(others) if rng is not None else others[-1])
    return SignData(model, reps, require_one=False)


FIXTURES = {"rational": "rational_f3.json", "elliptic": "elliptic_f3.json", "inert": "inert_f3.json"}


def load_curve(name_or_path):
    """CurveModel from a bundled fixture name or a JSON file path."""
    import json
    from importlib import resources
    try:
        if name_or_path in FIXTURES:
            text = resources.files("drinfeld_j").joinpath("data", FIXTURES[name_or_path]).read_text()
        else:
            with open(name_or_path) as fh:
                text = fh.read()
        desc = json.loads(text)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read curve {name_or_path!r}: {exc}") from exc
    return parse_model(desc)
