"""Finite fields F_{p^m}, polynomials over them and rational functions.

Field elements are stored as integer codes: the element
c_0 + c_1 w + ... + c_{m-1} w^{m-1} (w a root of the field modulus)
has code c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  Codes below p are exactly
the prime field, so F_p sits inside every F_{p^m} with the same codes.

The modulus of F_{p^m} is the lexicographically smallest monic
irreducible polynomial, comparing coefficients from w^{m-1} down to w^0.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from .errors import FieldMismatch, UnsupportedCharacteristic


# ---------------------------------------------------------------------------
# polynomials over the prime field as plain int lists (lowest degree first)

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        s = len(a) - len(b)
        for i, bi in enumerate(b):
            a[s + i] = (a[s + i] - c * bi) % p
        a = _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return _trim(r)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _is_irreducible_prime(f, p):
    # Rabin-style check: no factor of degree <= m/2
    m = len(f) - 1
    if m == 1:
        return True
    xp = [0, 1]
    for i in range(1, m // 2 + 1):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def lowest_irreducible(p, m):
    """Monic irreducible of degree m over F_p, lexicographically smallest."""
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        # tail is (c_{m-1}, ..., c_0)
        coeffs = list(reversed(tail)) + [1]
        if coeffs[0] == 0:
            continue
        if _is_irreducible_prime(coeffs, p):
            return tuple(coeffs)
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")


class GF:
    """The finite field F_{p^m} with integer-coded elements."""

    def __init__(self, p, m=1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus) if modulus is not None else lowest_irreducible(p, m)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        q = self.q
        self.digits = np.array(
            [[(c // p ** i) % p for i in range(m)] for c in range(q)], dtype=np.int64
        ).reshape(q, m)
        self._pw = np.array([p ** i for i in range(m)], dtype=np.int64)
        # reduction rows: w^(m+k) expressed in the basis 1..w^(m-1)
        red = []
        cur_full = [0] * m + [1]
        for _ in range(m - 1):
            r = _pmod(cur_full, list(self.modulus), p)
            red.append(r + [0] * (m - len(r)))
            cur_full = [0] + cur_full
        self.red = np.array(red, dtype=np.int64).reshape(max(m - 1, 0), m)
        self._build_tables()

    # -- construction helpers -------------------------------------------------
    def _vec_mul(self, a, b):
        da, db = self.digits[a], self.digits[b]
        prod = np.convolve(da, db) % self.p
        return self.code(self._reduce_vec(prod))

    def _reduce_vec(self, v):
        m = self.m
        v = np.asarray(v, dtype=np.int64)
        if len(v) < m:
            v = np.concatenate([v, np.zeros(m - len(v), dtype=np.int64)])
        low = v[:m].copy()
        if len(v) > m:
            low = (low + v[m:] @ self.red[: len(v) - m]) % self.p
        return low % self.p

    def code(self, vec):
        return int(np.dot(np.asarray(vec, dtype=np.int64) % self.p, self._pw))

    def _build_tables(self):
        q, p = self.q, self.p
        if self.m == 1:
            g = next(g for g in range(1, p) if self._order_prime(g) == p - 1) if p > 2 else 1
            exp = [1]
            for _ in range(q - 2):
                exp.append(exp[-1] * g % p)
        else:
            exp = None
            for g in range(p, q):
                seq = [1]
                x = g
                while x != 1:
                    seq.append(x)
                    x = self._vec_mul(x, g)
                if len(seq) == q - 1:
                    exp = seq
                    break
        self.generator = exp[1] if q > 2 else 1
        self._exp = exp
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        self._log = log
        if self.m == 1:
            self._add = None
        else:
            d = self.digits
            codes = ((d[:, None, :] + d[None, :, :]) % p) @ self._pw
            self._add = codes.tolist()
            neg = ((-d) % p) @ self._pw
            self._neg = neg.tolist()
        self._frob = [self.pow(a, p) for a in range(q)]

    def _order_prime(self, g):
        x, k = g % self.p, 1
        while x != 1:
            x = x * g % self.p
            k += 1
        return k

    # -- scalar arithmetic on codes ---------------------------------------------
    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frob(self, a, k=1):
        """a^(p^k)."""
        for _ in range(k % self.m if self.m > 1 else 0):
            a = self._frob[a]
        return a

    def scalar(self, c):
        """Integer c read as an element of the prime field."""
        return c % self.p

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def is_square(self, a):
        return a == 0 or self._log[a] % 2 == 0

    def sqrt(self, a):
        """Square root with the smallest code, or None."""
        if a == 0:
            return 0
        if not self.is_square(a):
            return None
        roots = [r for r in range(1, self.q) if self.mul(r, r) == a]
        return min(roots)

    def __call__(self, c):
        return FqElem(self, c if isinstance(c, int) else int(c))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- vector form, used by LaurentSeries --------------------------------------
    def to_vec(self, codes):
        return self.digits[np.asarray(codes, dtype=np.int64)]

    def from_vec(self, arr):
        return np.asarray(arr, dtype=np.int64) @ self._pw

    def frob_codes(self, codes, k=1):
        codes = np.asarray(codes, dtype=np.int64)
        k = k % self.m if self.m > 1 else 0
        if k == 0:
            return codes
        table = np.array(self._frob, dtype=np.int64)
        for _ in range(k):
            codes = table[codes]
        return codes


@functools.lru_cache(maxsize=None)
def field(p, m=1):
    """The canonical F_{p^m} (deterministic modulus)."""
    if p < 3:
        raise UnsupportedCharacteristic("characteristic 2 is not supported (q >= 3 required)")
    return GF(p, m)


@functools.lru_cache(maxsize=None)
def embedding(small, big):
    """Code table of an embedding F_small -> F_big (big.m divisible by small.m)."""
    if small.p != big.p or big.m % small.m:
        raise FieldMismatch(f"{small} does not embed in {big}")
    if small.m == 1:
        return tuple(range(small.q))
    # root of the small modulus inside the big field, smallest code first
    mod = small.modulus
    root = None
    for r in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    table = []
    for c in range(small.q):
        acc = 0
        for i in reversed(range(small.m)):
            acc = big.add(big.mul(acc, root), int(small.digits[c, i]))
        table.append(acc)
    return tuple(table)


class FqElem:
    """An element of a finite field, with operator overloading."""

    __slots__ = ("field", "code")

    def __init__(self, fld, code):
        self.field = fld
        self.code = code % fld.q if fld.m == 1 else code
        if not 0 <= self.code < fld.q:
            raise ValueError(f"code {code} out of range for {fld}")

    def _other(self, b):
        if isinstance(b, FqElem):
            if b.field != self.field:
                raise FieldMismatch(f"{self.field} vs {b.field}")
            return b.code
        if isinstance(b, int):
            return self.field.scalar(b)
        return NotImplemented

    def __add__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.sub(self.code, c))

    def __rsub__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.sub(c, self.code))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def __mul__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.div(self.code, c))

    def __rtruediv__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FqElem(self.field, self.field.div(c, self.code))

    def __pow__(self, k):
        return FqElem(self.field, self.field.pow(self.code, k))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.code))

    def frobenius(self, k=1):
        """Returns self^(p^k)."""
        return FqElem(self.field, self.field.frob(self.code, k))

    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, b):
        if isinstance(b, FqElem):
            return self.field == b.field and self.code == b.code
        if isinstance(b, int):
            return self.code == self.field.scalar(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __repr__(self):
        if self.field.m == 1:
            return str(self.code)
        return "(" + ",".join(str(int(d)) for d in self.field.digits[self.code]) + ")"


# ---------------------------------------------------------------------------

class PolyFq:
    """Univariate polynomial over a GF, coefficient codes lowest degree first."""

    __slots__ = ("field", "c")

    def __init__(self, fld, coeffs=()):
        self.field = fld
        c = [x.code if isinstance(x, FqElem) else (fld.scalar(x) if fld.m == 1 else x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls, fld):
        return cls(fld, (0, 1))

    @classmethod
    def const(cls, fld, a):
        return cls(fld, (a.code if isinstance(a, FqElem) else fld.scalar(a),))

    def degree(self):
        return len(self.c) - 1 if self.c else -1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1] if self.c else 0

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def _lift(self, b):
        if isinstance(b, PolyFq):
            if b.field != self.field:
                raise FieldMismatch(f"{self.field} vs {b.field}")
            return b
        if isinstance(b, FqElem):
            return PolyFq(self.field, (b.code,))
        if isinstance(b, int):
            return PolyFq(self.field, (self.field.scalar(b),))
        return NotImplemented

    def __add__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        F = self.field
        n = max(len(self.c), len(b.c))
        return PolyFq(F, [F.add(self.coeff(i), b.coeff(i)) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyFq(self.field, [self.field.neg(a) for a in self.c])

    def __sub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self + (-b)

    def __rsub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else b + (-self)

    def __mul__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        if not self.c or not b.c:
            return PolyFq(self.field)
        F = self.field
        if F.m == 1:
            r = np.convolve(np.array(self.c, dtype=object), np.array(b.c, dtype=object))
            return PolyFq(F, [int(v) % F.p for v in r])
        r = [0] * (len(self.c) + len(b.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, bb in enumerate(b.c):
                    if bb:
                        r[i + j] = F.add(r[i + j], F.mul(a, bb))
        return PolyFq(F, r)

    __rmul__ = __mul__

    def scale(self, a):
        a = a.code if isinstance(a, FqElem) else a
        return PolyFq(self.field, [self.field.mul(a, x) for x in self.c])

    def shift(self, k):
        return PolyFq(self.field, (0,) * k + self.c) if self.c else self

    def __pow__(self, k):
        result = PolyFq(self.field, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, b):
        b = self._lift(b)
        if not b.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.c)
        inv = F.inv(b.c[-1])
        db = len(b.c) - 1
        qc = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            t = F.mul(r[-1], inv)
            qc[k] = t
            for i, bi in enumerate(b.c):
                r[k + i] = F.sub(r[k + i], F.mul(t, bi))
            while r and r[-1] == 0:
                r.pop()
        return PolyFq(F, qc), PolyFq(F, r)

    def __floordiv__(self, b):
        return divmod(self, b)[0]

    def __mod__(self, b):
        return divmod(self, b)[1]

    def __call__(self, a):
        """Horner evaluation at an FqElem (or any ring element supporting * and +)."""
        if isinstance(a, FqElem):
            F = self.field
            acc = 0
            for c in reversed(self.c):
                acc = F.add(F.mul(acc, a.code), c)
            return FqElem(F, acc)
        acc = None
        for c in reversed(self.c):
            term = FqElem(self.field, c)
            acc = term if acc is None else acc * a + term
        return acc if acc is not None else FqElem(self.field, 0)

    def monic(self):
        if not self.c:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def derivative(self):
        F = self.field
        return PolyFq(F, [F.mul(F.scalar(i), self.c[i]) for i in range(1, len(self.c))])

    def frobenius_coeffs(self, k=1):
        return PolyFq(self.field, [self.field.frob(a, k) for a in self.c])

    def __eq__(self, b):
        if isinstance(b, int):
            b = self._lift(b)
        return isinstance(b, PolyFq) and self.field == b.field and self.c == b.c

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.c))

    def __lt__(self, b):
        # degree first, then coefficients from the top
        return (len(self.c), self.c[::-1]) < (len(b.c), b.c[::-1])

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i in reversed(range(len(self.c))):
            a = self.c[i]
            if a == 0:
                continue
            cs = repr(FqElem(self.field, a))
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mon:
                terms.append(cs)
            elif cs == "1":
                terms.append(mon)
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms)


def poly_gcd(f, g):
    """Monic gcd of two polynomials (not both zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f, g):
    """(d, s, t) with d = s f + t g monic."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = PolyFq(F, (1,)), PolyFq(F)
    t0, t1 = PolyFq(F), PolyFq(F, (1,))
    while r1:
        qq, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qq * s1
        t0, t1 = t1, t0 - qq * t1
    inv = F.inv(r0.lc())
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def monic_polys(F, d):
    """All monic polynomials of exact degree d, in a fixed order."""
    for tail in itertools.product(range(F.q), repeat=d):
        yield PolyFq(F, tail + (1,))


def polys_below(F, d):
    """All polynomials of degree < d (including 0)."""
    for cs in itertools.product(range(F.q), repeat=d):
        yield PolyFq(F, cs)


def is_irreducible(f):
    F = f.field
    n = f.degree()
    if n <= 0:
        return False
    x = PolyFq.x(F)
    xp = x
    for _ in range(1, n // 2 + 1):
        xp = _powmod(xp, F.q, f)
        if poly_gcd(f, xp - x).degree() > 0:
            return False
    return True


def _powmod(b, e, m):
    r = PolyFq(b.field, (1,))
    b = b % m
    while e:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


def irreducibles(F, d):
    return [f for f in monic_polys(F, d) if is_irreducible(f)]


class RatFunc:
    """Element of F_q(T): reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        F = num.field
        if den is None:
            den = PolyFq(F, (1,))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num // g, den // g
        else:
            den = PolyFq(F, (1,))
        lc = den.lc()
        if lc != 1:
            inv = F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def T(cls, F):
        return cls(PolyFq.x(F))

    def _lift(self, b):
        if isinstance(b, RatFunc):
            return b
        if isinstance(b, (PolyFq, FqElem, int)):
            return RatFunc(self.num._lift(b))
        return NotImplemented

    def __add__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        return RatFunc(self.num * b.den + b.num * self.den, self.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self + (-b)

    def __rsub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else b + (-self)

    def __mul__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        return RatFunc(self.num * b.num, self.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        if not b.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * b.den, self.den * b.num)

    def __rtruediv__(self, b):
        return self._lift(b) / self

    def __pow__(self, k):
        if k < 0:
            return (RatFunc(PolyFq(self.field, (1,))) / self) ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def degree(self):
        """deg(num) - deg(den); the degree at infinity of F_q(T)."""
        return self.num.degree() - self.den.degree()

    def __eq__(self, b):
        b = self._lift(b)
        return b is not NotImplemented and self.num == b.num and self.den == b.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree() == 0:
            return repr(self.num)
        return f"({self.num})/({self.den})"


class ResidueField:
    """F_q[T]/(P) for an irreducible P, elements are reduced PolyFq."""

    def __init__(self, modulus):
        if not is_irreducible(modulus):
            raise ValueError(f"{modulus} is not irreducible")
        self.modulus = modulus.monic()
        self.base = modulus.field
        self.q = self.base.q ** modulus.degree()

    def __call__(self, poly):
        return Residue(self, poly % self.modulus)

    def __eq__(self, other):
        return isinstance(other, ResidueField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"F_q[T]/({self.modulus})"


class Residue:
    __slots__ = ("ring", "poly")

    def __init__(self, ring, poly):
        self.ring = ring
        self.poly = poly

    def _lift(self, b):
        if isinstance(b, Residue):
            return b.poly
        if isinstance(b, (PolyFq, int, FqElem)):
            return self.poly._lift(b)
        return NotImplemented

    def __add__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self.ring(self.poly + b)

    __radd__ = __add__

    def __neg__(self):
        return self.ring(-self.poly)

    def __sub__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self.ring(self.poly - b)

    def __rsub__(self, b):
        return -(self - b)

    def __mul__(self, b):
        b = self._lift(b)
        return NotImplemented if b is NotImplemented else self.ring(self.poly * b)

    __rmul__ = __mul__

    def __truediv__(self, b):
        b = self._lift(b)
        if b is NotImplemented:
            return b
        b = b % self.ring.modulus
        if not b:
            raise ZeroDivisionError("division by zero residue")
        _, s, _ = poly_xgcd(b, self.ring.modulus)
        return self.ring(self.poly * s)

    def __pow__(self, k):
        return self.ring(_powmod(self.poly, k, self.ring.modulus))

    def is_zero(self):
        return not self.poly

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, b):
        b = self._lift(b)
        return b is not NotImplemented and (self.poly - b) % self.ring.modulus == PolyFq(self.poly.field)

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"[{self.poly}]"
