"""Partial zeta values over positive elements of an ideal, and the invariant j.

For a fractional ideal a and a set S of sign representatives,

    zeta^a(n) = sum over x in a with sgn(x) in S of x^-n.

The positive elements of degree D form cosets w + V where V is the span of
all basis vectors of smaller degree.  Each coset sum is a Goss polynomial

    sum_{v in V} (w + v)^-n = G_{n,V}(1 / e_V(w)),

with e_V(z) = z prod_{v in V, v != 0} (1 - z/v) built one basis vector at a
time from e_{V + F_q b} = e_V - e_V^q / e_V(b)^(q-1).  The omitted tail is
bounded by pairing each element with the lowest basis vector, see
``tail_exponent``.  Plain enumeration of the same sum is kept as an
independent check.
"""

from __future__ import annotations

import itertools
import math

from .errors import BasisTooShort, DenominatorVanishes, PrecisionLoss, PrecisionUnreachable, PrecisionTooLow
from .function_field import embed_at_infinity, sign_representatives
from .ideals import DegreeBasis, star_representative, unit_ideal, class_group
from .laurent import INF, LaurentSeries


# -- Goss polynomials ---------------------------------------------------------------

def goss_coefficients(n, alphas, fld):
    """Coefficient lists of G_1..G_n over a field, for e_V = sum alphas[i] z^(q^i) (codes)."""
    q = fld.q
    G = [[], [0, 1]]
    for k in range(2, n + 1):
        acc = list(G[k - 1])
        i, qi = 1, q
        while qi <= k and i < len(alphas):
            if alphas[i]:
                prev = G[k - qi]
                acc += [0] * max(0, len(prev) - len(acc))
                for j, c in enumerate(prev):
                    acc[j] = fld.add(acc[j], fld.mul(alphas[i], c))
            i += 1
            qi *= q
        G.append([0] + acc)
    return G


def goss_lowest_degree(q, n, fld):
    """Lowest X-degree of G_n for V = F_q (e_V = z - z^q)."""
    K = 1
    while q ** (K + 1) <= n:
        K += 1
    alphas = [1, fld.neg(1)] + [0] * (K - 1)
    G = goss_coefficients(n, alphas, fld)[n]
    for j, c in enumerate(G):
        if c:
            return j
    raise AssertionError("Goss polynomial vanished")


def _goss_eval(t, alphas, n, q):
    """G_n(t) for series t and series coefficients alphas (alphas[0] = 1)."""
    return _goss_eval_all(t, alphas, n, q)[n]


def _goss_eval_all(t, alphas, n, q):
    """[G_0(t), ..., G_n(t)]."""
    fld = t.field
    zero = LaurentSeries.zero(fld, INF)
    g = [zero, t]
    for k in range(2, n + 1):
        acc = g[k - 1]
        i, qi = 1, q
        while qi <= k and i < len(alphas):
            if k - qi >= 1 and alphas[i] is not None and not (alphas[i].is_zero() and alphas[i].is_exact()):
                acc = acc + alphas[i] * g[k - qi]
            i += 1
            qi *= q
        g.append(t * acc)
    return g


class ExpChain:
    """e_V for a growing F_q-subspace V of K_inf, kept as a tau-product.

    ``ds[k]`` is e_{V_k}(b_k) where V_k is spanned by the first k vectors.
    ``alphas`` holds the coefficients of z^(q^i) in e_V for q^i <= max_n.
    """

    def __init__(self, fld, q, rel, max_n=1):
        self.fld = fld
        self.q = q
        self.m = round(math.log(q, fld.p))
        self.rel = rel
        K = 0
        while q ** (K + 1) <= max_n:
            K += 1
        self.K = K
        self.dinv = []
        self.alphas = [LaurentSeries.const(fld, 1)] + [LaurentSeries.zero(fld, INF) for _ in range(K)]

    def _qpow(self, s):
        return s.frobenius(self.m)

    def eval(self, z):
        for di in self.dinv:
            z = (z - self._qpow(z) * di).truncate_rel(self.rel)
        return z

    def add(self, value):
        """Extend V by a vector whose current image e_V(b) is ``value``."""
        if value.is_zero():
            raise PrecisionLoss("basis vector is zero to working precision")
        di = value.inverse() ** (self.q - 1)
        di = di.truncate_rel(self.rel)
        new = [self.alphas[0]]
        for i in range(1, self.K + 1):
            prev = self.alphas[i - 1]
            corr = self._qpow(prev) * di if not prev.is_zero() else prev
            new.append((self.alphas[i] - corr).truncate_rel(self.rel))
        self.alphas = new
        self.dinv.append(di)


# -- blocks -----------------------------------------------------------------------

def _embedded_basis(basis, rel):
    out = []
    for v in basis.vectors:
        out.append(embed_at_infinity(v, v.valuation() + rel))
    return out


def _combo(series, coeffs, emb):
    acc = None
    for s, c in zip(series, coeffs):
        if c:
            term = s.scale(emb[c])
            acc = term if acc is None else acc + term
    return acc


def _top_combos(basis, D):
    """Coefficient vectors (over the degree-D vectors) of the positive tops."""
    M = basis.model
    Fi = M.Finf
    top, _ = basis.split(D)
    if len(top) == 1:
        return [(1,)]
    out = []
    for c1 in range(M.q):
        for c2 in range(M.q):
            if (c1, c2) == (0, 0):
                continue
            s = Fi.add(Fi.mul(M.emb[c1], top[0][1]), Fi.mul(M.emb[c2], top[1][1]))
            if basis.signs.is_positive_sign(s):
                out.append((c1, c2))
    return out


def omega_block(basis, i, n, prec, method="goss"):
    """Sum of (c . (a_0..a_{i-1}) + a_i)^-n over c in F_q^i, to absolute precision prec."""
    if i >= len(basis.vectors):
        raise BasisTooShort(f"basis has {len(basis.vectors)} vectors, block {i} requested")
    M = basis.model
    q = M.q
    rel = prec + 8
    for _ in range(8):
        S = _embedded_basis(basis, rel + n)
        low, top = S[:i], S[i]
        if method == "enumerate":
            val = None
            for cs in itertools.product(range(q), repeat=i):
                z = top
                for c, s in zip(cs, low):
                    if c:
                        z = z + s.scale(M.emb[c])
                term = z.inverse() ** n
                val = term if val is None else val + term
        else:
            ch = ExpChain(M.Finf, q, rel + n, n)
            for s in low:
                ch.add(ch.eval(s))
            t = ch.eval(top).inverse()
            val = _goss_eval(t, ch.alphas, n, q)
        if val.prec >= prec:
            return val.truncate(prec)
        rel += prec - val.prec + 8
    raise PrecisionUnreachable(f"omega block reached only precision {val.prec}")


# -- zeta values ------------------------------------------------------------------

def omega1_brute(alpha, consts, q, k):
    """sum_c (c + alpha)^(1 - q^k) over the constants c, by direct summation."""
    acc = None
    for c in consts:
        t = (c + alpha) ** (q ** k - 1)
        t = t.inverse() if hasattr(t, "inverse") else 1 / t
        acc = t if acc is None else acc + t
    return acc


def omega1_closed_form(alpha, consts, q, k):
    """(alpha^(q^k) - alpha) / prod_c (c + alpha^(q^k))."""
    ak = alpha ** (q ** k)
    den = None
    for c in consts:
        den = (c + ak) if den is None else den * (c + ak)
    inv = den.inverse() if hasattr(den, "inverse") else 1 / den
    return (ak - alpha) * inv


def omega_size_bound(alpha, q, k):
    """Valuation of alpha^(q^k (1 - q)), the predicted size of Omega_1(q^k - 1)."""
    return alpha.val * (q ** k) * (1 - q)


class ZetaValue:
    def __init__(self, ideal, n, value, truncation_degree, tail_bound_exponent, method, signs):
        self.ideal = ideal
        self.n = n
        self.value = value
        self.truncation_degree = truncation_degree
        self.tail_bound_exponent = tail_bound_exponent
        self.method = method
        self.signs = signs

    @property
    def prec(self):
        return self.value.prec

    def hat(self):
        """zeta - 1."""
        return self.value - 1

    def to_json(self):
        return {"n": self.n, "value": self.value.to_dict(), "truncation_degree": self.truncation_degree,
                "tail_bound_exponent": self.tail_bound_exponent, "method": self.method,
                "S": list(self.signs.reps)}

    def __repr__(self):
        return f"ZetaValue(n={self.n}, {self.value})"


# degrees (zeta) or lattice vectors (exponential products) summed beyond the
# stopping rule; raising it checks that results do not depend on truncation
EXTRA_TRUNCATION = 0


def tail_exponent(q, n, delta0, D, fld):
    """log_q bound: every positive element of degree >= D > delta0 contributes, per
    coset z + F_q b0, at most q^-(n delta0 + q m_n (D - delta0))."""
    mn = goss_lowest_degree(q, n, fld)
    return n * delta0 + q * mn * (D - delta0)


def truncation_degree(model, n, delta0, prec):
    """Smallest D > delta0 whose tail bound reaches absolute precision prec,
    plus EXTRA_TRUNCATION."""
    q, dinf = model.q, model.d_inf
    D = delta0 + 1
    while tail_exponent(q, n, delta0, D, model.F) < prec * dinf:
        D += 1
    return D + EXTRA_TRUNCATION


def zeta_values(ideal, ns, prec, method="goss", signs=None, budget=2_000_000):
    """{n: ZetaValue} for several exponents from one pass over the blocks."""
    ns = sorted(set(int(n) for n in ns))
    if not ns or ns[0] < 1:
        raise PrecisionTooLow("exponents must be >= 1")
    if prec < 1:
        raise PrecisionTooLow("prec must be >= 1")
    M = ideal.model
    signs = signs or sign_representatives(M)
    q = M.q
    probe = DegreeBasis(ideal, ideal.norm_degree() + 2 * M.genus + 4, signs)
    delta0 = probe.degrees[0]
    Ds = {n: truncation_degree(M, n, delta0, prec) for n in ns}
    D = max(Ds.values())
    basis = DegreeBasis(ideal, D - 1, signs)
    if method == "enumerate":
        count = sum(len(_top_combos(basis, d)) * q ** len(basis.split(d)[1]) for d in basis.realized_degrees())
        if count > budget:
            raise PrecisionUnreachable(f"enumeration needs {count} terms (budget {budget})")
    rel = prec + ns[-1] * max(0, -delta0) + 8
    for _ in range(8):
        vals = _sum_blocks(basis, ns, rel, method, Ds)
        worst = min(v.prec for v in vals.values())
        if worst >= prec:
            return {n: ZetaValue(ideal, n, vals[n].truncate(prec), Ds[n] - 1,
                                 tail_exponent(q, n, delta0, Ds[n], M.F), method, signs) for n in ns}
        rel += prec - worst + 8
    raise PrecisionUnreachable(f"zeta reached precision {worst} < {prec}")


def zeta_partial(ideal, n, prec, method="goss", signs=None, budget=2_000_000):
    """zeta^a(n) with absolute precision >= prec (in u)."""
    if n < 1:
        raise PrecisionTooLow("n must be >= 1")
    return zeta_values(ideal, [n], prec, method, signs, budget)[n]


def _sum_blocks(basis, ns, rel, method, Ds):
    """Sums over positive elements of degree < Ds[n] for each n."""
    M = basis.model
    q = M.q
    nmax = max(ns)
    S = _embedded_basis(basis, rel)
    totals = {n: None for n in ns}

    def add(n, term):
        totals[n] = term if totals[n] is None else totals[n] + term

    ch = ExpChain(M.Finf, q, rel + 4, nmax) if method == "goss" else None
    for D in basis.realized_degrees():
        live = [n for n in ns if D < Ds[n]]
        if not live:
            break
        top_idx = [k for k, d in enumerate(basis.degrees) if d == D]
        low_idx = [k for k, d in enumerate(basis.degrees) if d < D]
        combos = _top_combos(basis, D)
        tops = [S[k] for k in top_idx]
        if method == "enumerate":
            lows = [S[k] for k in low_idx]
            for cw in combos:
                w = _combo(tops, cw, M.emb)
                for cs in itertools.product(range(q), repeat=len(lows)):
                    z = w
                    for c, s in zip(cs, lows):
                        if c:
                            z = z + s.scale(M.emb[c])
                    zi = z.inverse()
                    for n in live:
                        add(n, zi ** n)
            continue
        images = [ch.eval(t) for t in tops]
        top_n = max(live)
        for cw in combos:
            ew = _combo(images, cw, M.emb)
            g = _goss_eval_all(ew.inverse(), ch.alphas, top_n, q)
            for n in live:
                add(n, g[n])
        for t in tops:
            ch.add(ch.eval(t))
    for n in ns:
        if totals[n] is None:
            totals[n] = LaurentSeries.zero(M.Finf)
    return totals


# -- the invariant j ----------------------------------------------------------------

class JValue:
    """J, 1/j and (when finite) j for one ideal.

    ``jinv`` is the denominator of the defining formula.  It is identically
    zero for A = F_q[T], where j((1)) is the point at infinity; ``j`` is then
    None and comparisons use ``jinv`` and ``J``.
    """

    def __init__(self, ideal, star, g, J, jinv, j, prec, zetas, class_index=None):
        self.ideal = ideal
        self.star = star
        self.g = g
        self.J = J
        self.jinv = jinv
        self.j = j
        self.prec = prec
        self.zetas = zetas
        self.class_index = class_index

    @property
    def infinite(self):
        return self.j is None

    def to_json(self):
        return {"class_index": self.class_index, "ideal": repr(self.ideal), "star": repr(self.star),
                "g": repr(self.g), "J": self.J.to_dict(), "j_inverse": self.jinv.to_dict(),
                "j": None if self.j is None else self.j.to_dict(),
                "j_valuation": None if self.j is None else int(self.j.val),
                "prec": self.prec, "T": "x"}

    def __repr__(self):
        return f"JValue(j={'infinity' if self.j is None else self.j})"


def j_denominator(model, J, rel):
    """1/(T^q - T) - (T^{q^2} - T)/(T^q - T)^{q+1} * J with T = x at infinity."""
    q = model.q
    T = embed_at_infinity(model.x(), model.x().valuation() + rel)
    A = T ** q - T
    B = T ** (q * q) - T
    Ai = A.inverse()
    return Ai - B * Ai ** (q + 1) * J


def rational_J(model, rel):
    """J((1)) for A = F_q[T]: 1 - (T^q - T)/(T^{q^2} - T), from the Carlitz relations."""
    q = model.q
    T = embed_at_infinity(model.x(), model.x().valuation() + rel)
    return 1 - (T ** q - T) * (T ** (q * q) - T).inverse()


def J_from_zetas(z1, z2, q):
    return z2 * z1.inverse() ** (q + 1)


def j_invariant(ideal, prec, method="goss", signs=None, class_index=None, max_rounds=10):
    """J and j of the class of ``ideal``.

    J carries ``prec`` absolute digits and j (or 1/j when j is infinite) at
    least ``prec`` certified digits.
    """
    if prec < 1:
        raise PrecisionTooLow("prec must be >= 1")
    M = ideal.model
    q = M.q
    signs = signs or sign_representatives(M)
    g, star, _ = star_representative(ideal, signs)
    margin = 4
    achieved = 0
    for _ in range(max_rounds):
        work = prec + margin
        zs = zeta_values(star, [q - 1, q * q - 1], work, method, signs)
        z1, z2 = zs[q - 1], zs[q * q - 1]
        J = J_from_zetas(z1.value, z2.value, q)
        den = j_denominator(M, J, work + 2 * q * q)
        if den.is_zero():
            if M.kind == "rational" and (J - rational_J(M, work + 2 * q * q)).truncate(J.prec).is_zero():
                # the denominator vanishes identically for F_q[T]
                return JValue(ideal, star, g, J.truncate(prec), den, None, prec, (z1, z2), class_index)
            margin *= 2
            continue
        achieved = den.rel_prec
        if achieved >= prec:
            return JValue(ideal, star, g, J.truncate(prec), den.truncate_rel(prec),
                          den.inverse().truncate_rel(prec), prec, (z1, z2), class_index)
        margin += prec - achieved + 4
    if achieved == 0:
        raise DenominatorVanishes("j denominator is zero to working precision; raise --prec")
    raise PrecisionUnreachable(f"j reached only {achieved} certified digits")


def j_difference_valuation(a, b):
    """Valuation where two JValues separate (None if equal to precision)."""
    if a.infinite or b.infinite:
        d = a.jinv - b.jinv
    else:
        d = a.j - b.j
    return None if d.is_zero() else int(d.val)


class JTable:
    def __init__(self, model, prec, method="goss", signs=None, table=None):
        self.model = model
        self.prec = prec
        self.classes = table or class_group(model)
        self.entries = [j_invariant(R, prec, method, signs, class_index=k)
                        for k, R in enumerate(self.classes.reps)]
        self.separation = {}
        self.J_separation = {}
        for a in range(len(self.entries)):
            for b in range(a + 1, len(self.entries)):
                ea, eb = self.entries[a], self.entries[b]
                self.separation[(a, b)] = j_difference_valuation(ea, eb)
                dJ = ea.J - eb.J
                self.J_separation[(a, b)] = None if dJ.is_zero() else int(dJ.val)

    def distinct(self):
        return all(v is not None for v in self.separation.values())

    def to_json(self):
        return {"h": self.classes.h, "prec": self.prec, "T": "x",
                "entries": [e.to_json() for e in self.entries],
                "separation": [{"pair": list(k), "j_valuation": v, "J_valuation": self.J_separation[k]}
                               for k, v in self.separation.items()],
                "pairwise_distinct": self.distinct()}


def j_table(model, prec, method="goss", signs=None, table=None):
    return JTable(model, prec, method, signs, table)
