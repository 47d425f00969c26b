"""Rank-one Drinfeld modules attached to lattices a in K_inf.

The lattice is the ideal itself (scaling factor xi = 1), so every quantity
lives in K_inf.  Exponential coefficients c_n of e(z) = sum c_n z^(q^n) have
xi-weight 1 - q^n, as do the coefficients g_n of rho_a; only weight-0
combinations (J, j, normalized coefficients) are compared across lattices.

Two independent routes give the c_n:

* power sums:   z / e(z) = 1 - sum_k S_k z^k,  S_k = sum_{lambda != 0} lambda^-k;
* product:      e = lim e_{V_r} over growing F_q-spans V_r of the lattice.
"""

from __future__ import annotations

from .errors import (
    DomainMismatch,
    InconsistentSeries,
    InsufficientCoefficients,
    PrecisionLoss,
    PrecisionUnreachable,
    RemainderNotZero,
    UnsupportedInfinitePlace,
)
from . import zeta as _zeta
from .fields import PolyFq, RatFunc
from .function_field import embed_at_infinity, sgn_of, sign_representatives
from .ideals import DegreeBasis
from .laurent import LaurentSeries
from .ore import LaurentDomain, PolyDomain, RatFuncDomain, TwistedPoly, tw_mul, tw_rgcd, tw_right_divmod, tw_eval
from .zeta import ExpChain, j_denominator, zeta_values


class WeightedValue:
    """A K_inf number standing for xi^weight * value."""

    __slots__ = ("value", "weight")

    def __init__(self, value, weight):
        self.value = value
        self.weight = weight

    def __add__(self, other):
        if other.weight != self.weight:
            raise DomainMismatch(f"adding weights {self.weight} and {other.weight}")
        return WeightedValue(self.value + other.value, self.weight)

    def __sub__(self, other):
        if other.weight != self.weight:
            raise DomainMismatch(f"subtracting weights {self.weight} and {other.weight}")
        return WeightedValue(self.value - other.value, self.weight)

    def __mul__(self, other):
        if isinstance(other, WeightedValue):
            return WeightedValue(self.value * other.value, self.weight + other.weight)
        return WeightedValue(self.value * other, self.weight)

    def __pow__(self, k):
        return WeightedValue(self.value ** k, self.weight * k)

    def inverse(self):
        return WeightedValue(self.value.inverse(), -self.weight)

    def __repr__(self):
        return f"xi^{self.weight} * ({self.value})"


# -- exponential coefficients -------------------------------------------------------

def lattice_power_sums(ideal, max_n, prec, method="goss"):
    """[S_1, ..., S_max_n] over the nonzero elements of the ideal.

    Sums over the full lattice vanish unless (q-1) | n; otherwise they are
    -zeta^a(n) because the lattice is F_q^x times its positive part.
    """
    M = ideal.model
    q = M.q
    ns = [n for n in range(q - 1, max_n + 1, q - 1)]
    zs = zeta_values(ideal, ns, prec, method) if ns else {}
    out = []
    for n in range(1, max_n + 1):
        out.append(-zs[n].value if n in zs else LaurentSeries.zero(M.Finf))
    return out


def exponential_from_power_sums(sums, q, N):
    """[c_0..c_N] from z/e(z) = 1 - sum S_k z^k; checks non-q-power coefficients vanish."""
    top = q ** N - 1
    if len(sums) < top:
        raise InsufficientCoefficients(f"need power sums through n = {top}")
    fld = sums[0].field
    a = [LaurentSeries.const(fld, 1)]
    live = [k for k in range(1, top + 1) if not sums[k - 1].is_zero()]
    prec = min((s.prec for s in sums[:top]), default=None)
    qpows = {q ** i - 1 for i in range(N + 1)}
    for mm in range(1, top + 1):
        acc = None
        for k in live:
            if k > mm:
                break
            if mm - k in qpows or not a[mm - k].is_zero():
                term = sums[k - 1] * a[mm - k]
                acc = term if acc is None else acc + term
        val = acc if acc is not None else LaurentSeries.zero(fld, prec)
        if mm not in qpows:
            if not val.is_zero():
                raise InconsistentSeries(f"coefficient of z^{mm + 1} is {val}, expected 0")
        a.append(val)
    return [a[q ** i - 1] for i in range(N + 1)]


def exponential_by_power_sums(ideal, N, prec, max_rounds=8):
    """[c_0..c_N] from power sums, raising the working precision until each c_n has
    relative precision >= prec."""
    M = ideal.model
    work = prec + 8
    for _ in range(max_rounds):
        sums = lattice_power_sums(ideal, M.q ** N - 1, work)
        c = exponential_from_power_sums(sums, M.q, N)
        short = [n for n in range(1, N + 1) if c[n].is_zero() or c[n].rel_prec < prec]
        if not short:
            return [x.truncate_rel(prec) if i else x for i, x in enumerate(c)]
        lack = max(prec - (0 if c[n].is_zero() else c[n].rel_prec) for n in short)
        work += max(lack, work)
    raise PrecisionUnreachable("power-sum exponential did not reach the requested precision")


def exponential_by_product(ideal, N, prec, signs=None, max_vectors=400):
    """[c_0..c_N] as limits of the coefficients of e_{V_r}, each with relative precision >= prec.

    Stops once a step changes no coefficient within its certified digits;
    later steps change even less because |e_{V_r}(b_r)| increases with r.
    """
    M = ideal.model
    q = M.q
    rel = prec + 8
    bound = ideal.norm_degree() + 4 + _zeta.EXTRA_TRUNCATION
    for _ in range(12):
        basis = DegreeBasis(ideal, bound, signs or sign_representatives(M))
        S = [embed_at_infinity(v, v.valuation() + rel + 4) for v in basis.vectors]
        ch = ExpChain(M.Finf, q, rel + 4, q ** N)
        quiet = 0
        for s in S:
            before = list(ch.alphas)
            ch.add(ch.eval(s))
            settled = all(_settled(before[i], ch.alphas[i], prec) for i in range(1, N + 1))
            quiet = quiet + 1 if settled else 0
            if quiet >= 2 + _zeta.EXTRA_TRUNCATION:
                cs = ch.alphas[: N + 1]
                if all(c.rel_prec >= prec for c in cs[1:]):
                    return [c.truncate_rel(prec) if i else c for i, c in enumerate(cs)]
                break
        if len(S) > max_vectors:
            break
        bound = bound * 2 + 4
        rel += 8
    raise PrecisionUnreachable("product exponential did not settle")


def _settled(old, new, prec):
    if new.is_zero():
        return False
    d = new - old
    return d.is_zero() or d.val >= new.val + prec


# -- the module -----------------------------------------------------------------------

def module_from_exponential(c, a, rel):
    """[g_0 = a, g_1, ..., g_d] for rho_a, d = deg a, from e(az) = rho_a(e(z))."""
    d = a.degree()
    if len(c) <= d:
        raise InsufficientCoefficients(f"rho_a with deg a = {d} needs c_0..c_{d}")
    M = a.model
    A = embed_at_infinity(a, a.valuation() + rel)
    p_m = _qexp(M)
    g = [A]
    for k in range(1, d + 1):
        acc = c[k] * (A.frobenius(p_m * k) - A)
        for i in range(1, k):
            acc = acc - g[i] * c[k - i].frobenius(p_m * i)
        g.append(acc)
    return g


def _qexp(M):
    """log_p q, so that x^q is frobenius(_qexp)."""
    return M.m


class DrinfeldModule:
    """rho for the lattice ``ideal`` (xi = 1), from exponential coefficients c_0..c_N."""

    def __init__(self, model, ideal, c, prec, route="product", work=None):
        self.model = model
        self.work = work or prec + 8
        self.shift = 0
        self.reference = None
        self.source = None
        self.ideal = ideal
        self.c = list(c)
        self.prec = prec
        self.route = route
        self.dom = LaurentDomain(model.Finf, model.q)
        self._rho = {}
        self.explicit = {}

    @classmethod
    def from_lattice(cls, ideal, N=None, prec=40, route="product", signs=None, max_rounds=8):
        """Module of the lattice ``ideal``; c_n are recomputed at higher working
        precision until rho of each ring generator has ``prec`` certified digits."""
        M = ideal.model
        top = max(g.degree() for g in M.ring_generators())
        N = max(N or 0, top)
        work = prec + 8
        for _ in range(max_rounds):
            if route == "power_sums":
                c = exponential_by_power_sums(ideal, N, work)
            else:
                c = exponential_by_product(ideal, N, work, signs)
            mod = cls(M, ideal, c, prec, route, work)
            short = prec
            for a in M.ring_generators():
                f = mod.rho(a)
                # the top coefficient is small; cancellation can hide it entirely
                short = min([short] + [g.rel_prec for g in f.c] + ([0] if f.degree() < a.degree() else []))
            if short >= prec:
                return mod
            work += prec - short + 4
        raise PrecisionUnreachable(f"rho reached only {short} certified digits")

    def refined(self, work):
        """The same lattice with exponential coefficients at working precision ``work``."""
        if self.route == "carlitz":
            out = carlitz_reference(self.model, work, self.N)
            out.prec = self.prec
            return out
        if self.ideal is None:
            raise PrecisionUnreachable("module has no lattice to recompute from")
        if self.route == "power_sums":
            c = exponential_by_power_sums(self.ideal, self.N, work)
        else:
            c = exponential_by_product(self.ideal, self.N, work)
        return type(self)(self.model, self.ideal, c, self.prec, self.route, work)

    def conjugated(self, s):
        """u^-s rho u^s: g_i -> g_i u^(s(q^i - 1)), c_n -> c_n u^(s(q^n - 1)).

        This is the module of the lattice u^-s * ideal; J is unchanged.
        """
        q = self.model.q
        Fi = self.model.Finf

        def sc(vals):
            return [v * LaurentSeries.monomial(Fi, s * (q ** i - 1)) for i, v in enumerate(vals)]

        out = type(self)(self.model, self.ideal, sc(self.c), self.prec, self.route, self.work)
        out.shift = self.shift + s
        for a in self.model.ring_generators():
            out.explicit[(a.u, a.v, a.den)] = TwistedPoly(out.dom, sc(self.rho(a).c))
        return out

    @property
    def N(self):
        return len(self.c) - 1

    def weights(self):
        q = self.model.q
        return [1 - q ** n for n in range(len(self.c))]

    def c_weighted(self):
        return [WeightedValue(c, w) for c, w in zip(self.c, self.weights())]

    def rho(self, a):
        """rho_a as a TwistedPoly over Laurent series.

        Generators come from the exponential; any other a = u(x) + v(x) y is
        assembled from rho_x and rho_y, which needs no further c_n.
        """
        if not a.is_integral():
            raise InsufficientCoefficients(f"rho_a needs a in A, got {a}")
        key = (a.u, a.v, a.den)
        if key in self.explicit:
            return self.explicit[key]
        if key not in self._rho:
            M = self.model
            gens = M.ring_generators()
            if a.is_zero():
                self._rho[key] = TwistedPoly(self.dom, [])
            elif a.degree() == 0:
                self._rho[key] = TwistedPoly(self.dom, [embed_at_infinity(a, self.prec)])
            elif any(a == g for g in gens):
                g = module_from_exponential(self.c, a, self.work)
                self._rho[key] = TwistedPoly(self.dom, g)
            else:
                rx = self.rho(M.x())
                out = self._poly_in(a.u, rx)
                if a.v:
                    out = out + tw_mul(self._poly_in(a.v, rx), self.rho(M.y()))
                self._rho[key] = out
        return self._rho[key]

    def _poly_in(self, P, f):
        """P(f) for P in F_q[x] by Horner."""
        M = self.model
        acc = TwistedPoly(self.dom, [])
        for code in reversed(P.c):
            acc = tw_mul(acc, f) + TwistedPoly(self.dom, [LaurentSeries.const(M.Finf, M.emb[code])])
        return acc

    def generator_table(self):
        return {repr(a): self.rho(a) for a in self.model.ring_generators()}

    def J(self):
        return exponential_J(self.c, self.model.q)

    def j_inverse(self):
        return j_denominator(self.model, self.J(), self.prec + 2 * self.model.q ** 2)

    def to_json(self):
        q = self.model.q
        return {
            "ideal": repr(self.ideal),
            "route": self.route,
            "prec": self.prec,
            "c": [{"n": n, "xi_weight": 1 - q ** n, "value": c.to_dict()} for n, c in enumerate(self.c)],
            "rho": {name: [{"i": i, "xi_weight": 1 - q ** i, "value": g.to_dict()} for i, g in enumerate(f.c)]
                    for name, f in self.generator_table().items()},
        }


def j_from_module(mod):
    """(J, 1/j, j) from the exponential coefficients; j is None when 1/j vanishes identically."""
    from .zeta import rational_J
    M = mod.model
    J = mod.J()
    den = mod.j_inverse()
    if den.is_zero():
        if M.kind == "rational" and (J - rational_J(M, mod.prec + 2 * M.q ** 2)).truncate(J.prec).is_zero():
            return J, den, None
        raise PrecisionUnreachable("1/j vanished to working precision")
    return J, den, den.inverse()


def exponential_J(c, q):
    """J from c_1, c_2:  S_{q-1} = c_1,  S_{q^2-1} = c_2 - c_1^(q+1),  J = -S_{q^2-1}/S_{q-1}^(q+1)."""
    c1q = c[1] ** (q + 1)
    return 1 - c[2] * c1q.inverse()


def verify_functional_equation(mod, a, z_order):
    """Compare e(az) and rho_a(e(z)) coefficientwise through z^(q^z_order)."""
    if len(mod.c) <= z_order:
        raise InsufficientCoefficients(f"need c_0..c_{z_order}")
    M = mod.model
    pm = _qexp(M)
    A = embed_at_infinity(a, a.valuation() + mod.prec + 8)
    g = mod.rho(a).c
    rows = []
    ok = True
    for k in range(z_order + 1):
        lhs = mod.c[k] * A.frobenius(pm * k)
        rhs = None
        for i in range(0, min(k, len(g) - 1) + 1):
            t = g[i] * mod.c[k - i].frobenius(pm * i)
            rhs = t if rhs is None else rhs + t
        diff = lhs - rhs
        digits = diff.prec - lhs.val
        zero = diff.is_zero()
        ok = ok and zero and digits >= mod.prec
        rows.append({"k": k, "lhs_valuation": int(lhs.val), "certified_digits": int(digits), "vanishes": zero})
    return {"a": repr(a), "z_order": z_order, "rows": rows, "pass": ok}


# -- evaluation of the exponential --------------------------------------------------

def exp_evaluate(ideal, m, prec, signs=None, max_rounds=12):
    """e_a(m) with relative precision >= prec; exactly 0 when m lies in the ideal."""
    M = ideal.model
    if m.is_zero() or ideal.contains(m):
        return LaurentSeries.zero(M.Finf)
    q = M.q
    rel = prec + 8
    bound = max(ideal.norm_degree(), m.degree()) + 4 + _zeta.EXTRA_TRUNCATION
    for _ in range(max_rounds):
        basis = DegreeBasis(ideal, bound, signs or sign_representatives(M))
        S = [embed_at_infinity(v, v.valuation() + rel + 4) for v in basis.vectors]
        z = embed_at_infinity(m, m.valuation() + rel + 4)
        ch = ExpChain(M.Finf, q, rel + 4, 1)
        quiet = 0
        for s in S:
            d = ch.eval(s)
            ch.add(d)
            new = (z - z.frobenius(ch.m) * ch.dinv[-1]).truncate_rel(rel + 4)
            step = new - z
            z = new
            if z.is_zero():
                break
            small = step.is_zero() or step.val >= z.val + prec
            shrinking = d.val < z.val
            quiet = quiet + 1 if (small and shrinking) else 0
            if quiet >= 2 + _zeta.EXTRA_TRUNCATION:
                if z.rel_prec >= prec:
                    return z.truncate_rel(prec)
                break
        bound = bound * 2 + 4
        rel += 8
    raise PrecisionUnreachable("exponential product did not settle")


def torsion_check(mod, modulus, prec, signs=None):
    """rho_m(e(t)) for every t in m^-1 a / a, with m the monic generator of a principal modulus."""
    from .ideals import torsion_representatives
    gen = modulus.is_principal()
    if gen is None:
        raise InsufficientCoefficients("torsion check needs a principal modulus")
    reps = torsion_representatives(mod.ideal, modulus)
    rho = mod.rho(gen)
    out = []
    for t in reps:
        e = exp_evaluate(mod.ideal, t, prec, signs)
        if e.is_zero():
            out.append({"m": repr(t), "in_lattice": True, "vanishes": True, "certified_digits": None})
            continue
        val = tw_eval(rho, e)
        scale = max(int(-e.val), 0)
        out.append({"m": repr(t), "in_lattice": False, "vanishes": val.is_zero(),
                    "e_valuation": int(e.val), "residual_precision": int(val.prec) if val.prec != float("inf") else None})
    return out


# -- the star action ----------------------------------------------------------------

def star_action(mod, b, max_rounds=8):
    """(rho_b, b * rho).

    rho_b is the monic right gcd of rho_beta over the HNF generators beta of b;
    the image module has psi_a solved from rho_b rho_a = psi_a rho_b with zero
    remainder.  The Euclidean steps divide by small leading coefficients, so
    the working precision is doubled until rho_b has degree deg b and every
    psi coefficient keeps mod.prec certified digits.
    """
    if not b.is_integral():
        raise InsufficientCoefficients("star action needs an integral ideal")
    M = mod.model
    want = b.norm_degree()
    cur = mod
    for _ in range(max_rounds):
        try:
            iso = tw_rgcd([cur.rho(g) for g in b.generators()])
        except PrecisionLoss:
            iso = None
        if iso is not None and iso.degree() == want:
            images = {}
            short = mod.prec
            for a in M.ring_generators():
                Q, R = tw_right_divmod(tw_mul(iso, cur.rho(a)), iso)
                if not R.is_zero():
                    raise RemainderNotZero(f"right division left a remainder of degree {R.degree()}")
                images[a] = Q
                short = min([short] + [c.rel_prec for c in Q.c] + ([0] if Q.degree() < a.degree() else []))
            if short >= mod.prec:
                return iso, _image_module(cur, b, images)
        cur = cur.refined(2 * cur.work)
    raise PrecisionUnreachable(f"isogeny for {b} was not resolved; raise --prec")


def _image_module(mod, b, images):
    M = mod.model
    x = M.x()
    c = module_from_generator(M, x, images[x], max(mod.N, 2))
    lattice = None if mod.ideal is None else b.inverse() * mod.ideal
    out = DrinfeldModule(M, lattice, c, mod.prec, "star", mod.work)
    for a, f in images.items():
        out.explicit[(a.u, a.v, a.den)] = f
    out.source = mod
    return out


def intertwining_residual(iso, image, a):
    """rho_b rho_a - psi_a rho_b, with rho at the precision star_action settled on."""
    return tw_mul(iso, image.source.rho(a)) - tw_mul(image.rho(a), iso)


def module_from_generator(model, a, rho_a, N):
    """Exponential coefficients c_0..c_N of the module with the given rho_a.

    c_k (a^(q^k) - a) = sum_{i=1..min(k, d)} g_i c_{k-i}^(q^i).
    """
    pm = _qexp(model)
    g = rho_a.c
    A = g[0]
    c = [LaurentSeries.const(model.Finf, 1)]
    for k in range(1, N + 1):
        acc = None
        for i in range(1, min(k, len(g) - 1) + 1):
            t = g[i] * c[k - i].frobenius(pm * i)
            acc = t if acc is None else acc + t
        c.append(acc * (A.frobenius(pm * k) - A).inverse())
    return c


# -- sign normalization ---------------------------------------------------------------

def sign_normalization_analysis(mod):
    """Solve for w = xi^(q-1) making the top coefficients equal to sgn(a)."""
    M = mod.model
    if M.d_inf != 1:
        raise UnsupportedInfinitePlace("sign normalization is analysed only when d_inf = 1")
    q = M.q
    gens = M.ring_generators()
    data = []
    for a in gens:
        d = a.degree()
        g = mod.rho(a).c
        top = g[d] if len(g) > d else None
        if top is None or top.is_zero():
            raise PrecisionUnreachable(f"top coefficient of rho_{a} vanished to precision")
        s = sgn_of(a).code
        e = (q ** d - 1) // (q - 1)
        data.append((a, d, e, top.scale(M.Finf.inv(s))))
    # combine the constraints w^e = target with a Bezout relation on the exponents
    w = None
    exps = [t[2] for t in data]
    coeffs = _bezout(exps)
    for (a, d, e, target), k in zip(data, coeffs):
        if k:
            part = target ** k
            w = part if w is None else w * part
    residuals = []
    consistent = True
    for a, d, e, target in data:
        r = w ** e - target
        ok = r.is_zero()
        consistent = consistent and ok
        residuals.append({"a": repr(a), "exponent": e, "consistent": ok,
                          "residual_precision": None if r.prec == float("inf") else int(r.prec)})
    table = {}
    for a in gens:
        g = mod.rho(a).c
        table[repr(a)] = [gi * w.inverse() ** ((q ** i - 1) // (q - 1)) if i else gi for i, gi in enumerate(g)]
    cn = [cc * w.inverse() ** ((q ** n - 1) // (q - 1)) if n else cc for n, cc in enumerate(mod.c)]
    normed = DrinfeldModule(M, mod.ideal, cn, mod.prec, mod.route, mod.work)
    for a in gens:
        normed.explicit[(a.u, a.v, a.den)] = TwistedPoly(normed.dom, table[repr(a)])
    return {"w": w, "consistent": consistent, "constraints": residuals, "normalized_rho": table,
            "normalized_c": cn, "module": normed}


def _bezout(es):
    """Integers k_i with sum k_i e_i = gcd(es) (= 1 for the supported models)."""
    k = [1] + [0] * (len(es) - 1)
    g = es[0]
    for i in range(1, len(es)):
        old_r, r = g, es[i]
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        k = [x * old_s for x in k]
        k[i] = old_t
        g = old_r
    if g != 1:
        raise InconsistentSeries(f"exponents {es} have gcd {g}; w is not determined")
    return k


# -- the Carlitz module as an exact oracle ------------------------------------------------

class CarlitzReference:
    """rho_T = T + tau over F_q(T), with c_i = c_{i-1}^q / (T^(q^i) - T)."""

    def __init__(self, model, N, prec):
        if model.kind != "rational":
            raise DomainMismatch("the Carlitz module is defined for A = F_q[T]")
        self.model = model
        F = model.F
        q = model.q
        self.prec = prec
        T = RatFunc.T(F)
        self.rat = RatFuncDomain(F)
        self.poly = PolyDomain(F)
        self.rho_T = TwistedPoly(self.rat, [T, 1])
        c = [RatFunc(PolyFq(F, (1,)))]
        for i in range(1, N + 1):
            c.append(c[-1] ** q / (T ** (q ** i) - T))
        self.c_exact = c
        self.c = [_ratfunc_series(model, ci, prec) for ci in c]

    def rho_poly(self, a):
        """rho_a over F_q[T] for a polynomial a, by composing rho_T."""
        base = TwistedPoly(self.poly, [PolyFq.x(self.model.F), 1])
        acc = TwistedPoly(self.poly, [])
        power = TwistedPoly(self.poly, [PolyFq(self.model.F, (1,))])
        for coef in a.c:
            if coef:
                acc = acc + power.scale_left(PolyFq(self.model.F, (coef,)))
            power = tw_mul(power, base)
        return acc


    def module(self):
        """The same module over Laurent series, with rho_T = T + tau given explicitly."""
        M = self.model
        mod = DrinfeldModule(M, None, self.c, self.prec, "carlitz")
        T = M.x()
        mod.explicit[(T.u, T.v, T.den)] = TwistedPoly(mod.dom, [embed_at_infinity(T, T.valuation() + self.prec + 8), 1])
        return mod


def _ratfunc_series(model, r, prec):
    e = model.elem(r.num, (), r.den)
    if e.is_zero():
        return LaurentSeries.zero(model.Finf)
    return embed_at_infinity(e, e.valuation() + prec)


def carlitz_reference(model, prec=40, N=4):
    """The Carlitz module as a DrinfeldModule; ``.reference`` keeps the exact data."""
    ref = CarlitzReference(model, N, prec)
    mod = ref.module()
    mod.reference = ref
    return mod


def carlitz_reduction_checks(model, P, m):
    """Exact reduction facts for the Carlitz module at an irreducible P.

    rho_P reduces to tau^(deg P); rho_T keeps its degree; for P not dividing m
    the reduced rho_m has a nonzero constant term, so it is separable and
    torsion injects into the reduction.
    """
    from .fields import poly_gcd
    from .ore import tw_reduce_mod
    ref = CarlitzReference(model, 1, 8)
    T = PolyFq.x(model.F)
    red_P, _ = tw_reduce_mod(ref.rho_poly(P), P)
    d = P.degree()
    is_tau_power = red_P.degree() == d and all(c.is_zero() for c in red_P.c[:d]) and red_P.c[d] == red_P.dom.one()
    red_T, kept = tw_reduce_mod(ref.rho_poly(T), P)
    coprime = poly_gcd(P, m).degree() == 0
    red_m, _ = tw_reduce_mod(ref.rho_poly(m), P)
    separable = not red_m.c[0].is_zero() if red_m.c else False
    return {
        "P": repr(P), "m": repr(m),
        "rho_P_mod_P": repr(red_P), "rho_P_is_tau_power": is_tau_power,
        "rho_T_mod_P": repr(red_T), "rho_T_degree_preserved": kept,
        "P_coprime_to_m": coprime, "reduced_rho_m_separable": separable,
        "pass": is_tau_power and kept and (separable == coprime),
    }
