"""Truncated Laurent series over a finite field, with absolute precision.

A series is  sum_{k >= val} a_k u^k + O(u^prec).  Coefficients are kept in
vector form (one row of F_p digits per exponent) so that products are plain
integer convolutions.  Every operation propagates precision the usual
non-archimedean way: sums keep the smaller absolute precision, products and
quotients keep the smaller relative precision.  Digits below ``prec`` are
therefore always correct, which is what the rest of the package relies on
when it calls a quantity "certified".

Exact series (constants, monomials, polynomials in u) carry ``prec = INF``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import PrecisionLoss
from .fields import FqElem

INF = math.inf


def _code(fld, a):
    """FqElem or int -> field code; ints in [0, q) are codes, others prime-field scalars."""
    if isinstance(a, FqElem):
        return a.code
    a = int(a)
    return a if 0 <= a < fld.q else fld.scalar(a)


def _cap(x):
    return INF if x >= INF else x


class LaurentSeries:
    __slots__ = ("field", "val", "c", "prec")

    def __init__(self, fld, val, rows, prec):
        # rows: int array (L, m) of digits for exponents val .. val+L-1
        self.field = fld
        prec = _cap(prec)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, fld.m) % fld.p
        n = min(len(rows), prec - val) if prec < INF else len(rows)
        rows = rows[: max(n, 0)]
        nz = np.flatnonzero(rows.any(axis=1))
        if len(nz) == 0:
            self.val, self.c, self.prec = prec, rows[:0], prec
            return
        first, last = nz[0], nz[-1]
        self.val = val + int(first)
        self.c = rows[first : last + 1]
        self.prec = prec

    # -- constructors -----------------------------------------------------------
    @classmethod
    def from_codes(cls, fld, val, codes, prec=INF):
        codes = np.asarray(codes, dtype=np.int64)
        return cls(fld, val, fld.to_vec(codes) if len(codes) else np.zeros((0, fld.m)), prec)

    @classmethod
    def const(cls, fld, a, prec=INF):
        code = _code(fld, a)
        return cls.from_codes(fld, 0, [code], prec)

    @classmethod
    def monomial(cls, fld, k, a=1, prec=INF):
        code = _code(fld, a)
        return cls.from_codes(fld, k, [code], prec)

    @classmethod
    def zero(cls, fld, prec=INF):
        return cls(fld, prec, np.zeros((0, fld.m)), prec)

    # -- basic queries ----------------------------------------------------------
    def is_zero(self):
        """True when every known coefficient vanishes."""
        return len(self.c) == 0

    def valuation(self):
        return self.val

    @property
    def rel_prec(self):
        return self.prec - self.val

    def is_exact(self):
        return self.prec >= INF

    def leading(self):
        """Leading coefficient as an FqElem (the sign of the series)."""
        if self.is_zero():
            raise ZeroDivisionError("leading coefficient of a series that is zero to precision")
        return FqElem(self.field, int(self.field.from_vec(self.c[0])))

    def codes(self):
        return self.field.from_vec(self.c) if len(self.c) else np.zeros(0, dtype=np.int64)

    def coefficient(self, k):
        if k >= self.prec:
            raise PrecisionLoss(f"coefficient u^{k} is beyond precision {self.prec}")
        i = k - self.val
        if i < 0 or i >= len(self.c):
            return 0
        return int(self.field.from_vec(self.c[i]))

    def absolute_value_exponent(self, q, d_inf=1):
        """log_q |s| = -d_inf * val."""
        return -d_inf * self.val

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, b):
        if isinstance(b, LaurentSeries):
            if b.field != self.field:
                raise ValueError("series over different fields")
            return b
        if isinstance(b, (int, FqElem)):
            return LaurentSeries.const(self.field, b)
        return NotImplemented

    def __add__(self, b):
        b = self._coerce(b)
        if b is NotImplemented:
            return b
        prec = min(self.prec, b.prec)
        if self.is_zero() and b.is_zero():
            return LaurentSeries.zero(self.field, prec)
        if self.is_zero():
            return LaurentSeries(self.field, b.val, b.c, prec)
        if b.is_zero():
            return LaurentSeries(self.field, self.val, self.c, prec)
        val = min(self.val, b.val)
        end = max(self.val + len(self.c), b.val + len(b.c))
        if prec < INF:
            end = min(end, prec)
        n = end - val
        if n <= 0:
            return LaurentSeries.zero(self.field, prec)
        rows = np.zeros((n, self.field.m), dtype=np.int64)
        for s in (self, b):
            lo = s.val - val
            k = max(0, min(len(s.c), n - lo))
            if k > 0:
                rows[lo : lo + k] += s.c[:k]
        return LaurentSeries(self.field, val, rows, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.field, self.val, -self.c, self.prec)

    def __sub__(self, b):
        b = self._coerce(b)
        return NotImplemented if b is NotImplemented else self + (-b)

    def __rsub__(self, b):
        b = self._coerce(b)
        return NotImplemented if b is NotImplemented else b + (-self)

    def _conv(self, a, b, n):
        """First n rows of the product of two digit-row arrays."""
        fld = self.field
        m, p = fld.m, fld.p
        a, b = a[:n], b[:n]
        if len(a) == 0 or len(b) == 0:
            return np.zeros((0, m), dtype=np.int64)
        if m == 1:
            r = np.convolve(a[:, 0], b[:, 0])[:n] % p
            return r.reshape(-1, 1)
        L = min(len(a) + len(b) - 1, n)
        full = np.zeros((L, 2 * m - 1), dtype=np.int64)
        for s in range(m):
            if not a[:, s].any():
                continue
            for t in range(m):
                if b[:, t].any():
                    full[:, s + t] += np.convolve(a[:, s], b[:, t])[:L]
        full %= p
        res = full[:, :m]
        if m > 1:
            res = res + full[:, m:] @ fld.red
        return res % p

    def __mul__(self, b):
        if isinstance(b, FqElem) or isinstance(b, int):
            return self.scale(b)
        b = self._coerce(b)
        if b is NotImplemented:
            return b
        val = self.val + b.val
        rel = min(self.rel_prec, b.rel_prec)
        if self.is_zero() or b.is_zero():
            # zero-to-precision factor: only a valuation bound survives
            prec = min(self.prec + (b.val if not b.is_zero() else b.prec),
                       b.prec + (self.val if not self.is_zero() else self.prec))
            return LaurentSeries.zero(self.field, prec)
        prec = _cap(val + rel) if rel < INF else INF
        n = len(self.c) + len(b.c) - 1
        if rel < INF:
            n = min(n, rel)
        return LaurentSeries(self.field, val, self._conv(self.c, b.c, n), prec)

    __rmul__ = __mul__

    def scale(self, a):
        fld = self.field
        code = _code(fld, a)
        if code == 0:
            return LaurentSeries.zero(fld, INF)
        if fld.m == 1:
            return LaurentSeries(fld, self.val, self.c * code, self.prec)
        codes = self.codes()
        mul = np.array([fld.mul(int(c), code) for c in range(fld.q)], dtype=np.int64)
        return LaurentSeries(fld, self.val, fld.to_vec(mul[codes]), self.prec)

    def shift(self, k):
        """Multiply by u^k."""
        return LaurentSeries(self.field, self.val + k, self.c, self.prec + k if self.prec < INF else INF)

    def inverse(self, rel_prec=None):
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        fld = self.field
        n = self.rel_prec
        if n >= INF:
            if len(self.c) == 1:
                lead = fld.inv(int(fld.from_vec(self.c[0])))
                return LaurentSeries.from_codes(fld, -self.val, [lead], INF)
            if rel_prec is None:
                raise PrecisionLoss("inverse of an exact non-monomial series needs rel_prec")
            n = rel_prec
        elif rel_prec is not None:
            n = min(n, rel_prec)
        a = self.c[:n]
        lead = fld.inv(int(fld.from_vec(a[0])))
        b = fld.to_vec(np.array([lead])).reshape(1, fld.m)
        known = 1
        one = np.zeros((1, fld.m), dtype=np.int64)
        one[0, 0] = 1
        while known < n:
            known = min(2 * known, n)
            ab = self._conv(a, b, known)
            e = -ab
            e[:1] += one
            corr = self._conv(b, e % fld.p, known)
            nb = np.zeros((known, fld.m), dtype=np.int64)
            nb[: len(b)] = b
            nb[: len(corr)] += corr
            b = nb % fld.p
        return LaurentSeries(fld, -self.val, b, -self.val + n)

    def __truediv__(self, b):
        if isinstance(b, (int, FqElem)):
            code = _code(self.field, b)
            return self.scale(self.field.inv(code))
        b = self._coerce(b)
        if b is NotImplemented:
            return b
        if b.is_exact() and not self.is_exact() and len(b.c) > 1:
            return self * b.inverse(rel_prec=self.rel_prec)
        if b.is_exact() and self.is_exact() and len(b.c) > 1:
            raise PrecisionLoss("exact quotient would be an infinite series; truncate first")
        return self * b.inverse()

    def __rtruediv__(self, b):
        b = self._coerce(b)
        return NotImplemented if b is NotImplemented else b / self

    def frobenius(self, k=1):
        """self^(p^k), computed exactly (char p)."""
        if k == 0:
            return self
        fld = self.field
        e = fld.p ** k
        prec = INF if self.prec >= INF else self.prec * e
        if self.is_zero():
            return LaurentSeries.zero(fld, prec)
        codes = fld.frob_codes(self.codes(), k)
        L = len(codes)
        rows = np.zeros(((L - 1) * e + 1, fld.m), dtype=np.int64)
        rows[::e] = fld.to_vec(codes)
        return LaurentSeries(fld, self.val * e, rows, prec)

    def __pow__(self, n):
        if n == 0:
            return LaurentSeries.const(self.field, 1)
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        p = self.field.p
        result = None
        k = 0
        while n:
            d = n % p
            if d:
                part = base
                for _ in range(d - 1):
                    part = part * base
                part = part.frobenius(k)
                result = part if result is None else result * part
            n //= p
            k += 1
        return result

    def truncate(self, prec):
        """Forget everything at and beyond u^prec."""
        if prec >= self.prec:
            return self
        return LaurentSeries(self.field, self.val, self.c, prec)

    def truncate_rel(self, n):
        return self.truncate(self.val + n) if not self.is_zero() else self

    def agrees(self, other, prec=None):
        """True when self and other agree at every exponent < prec both know."""
        d = self - other
        if prec is not None:
            d = d.truncate(prec)
        return d.is_zero()

    def diff_valuation(self, other):
        """Valuation of self - other (== common precision if they agree)."""
        return (self - other).val

    def to_dict(self):
        fld = self.field
        if self.is_zero():
            return {"start": int(self.prec) if self.prec < INF else None, "coeffs": [], "prec": None if self.prec >= INF else int(self.prec)}
        end = self.val + len(self.c) if self.prec >= INF else self.prec
        rows = np.zeros((end - self.val, fld.m), dtype=np.int64)
        rows[: len(self.c)] = self.c
        if fld.m == 1:
            coeffs = [int(x) for x in rows[:, 0]]
        else:
            coeffs = [[int(x) for x in r] for r in rows]
        return {"start": int(self.val), "coeffs": coeffs, "prec": None if self.prec >= INF else int(self.prec)}

    @classmethod
    def from_dict(cls, fld, d):
        prec = INF if d["prec"] is None else d["prec"]
        if not d["coeffs"]:
            return cls.zero(fld, prec)
        rows = np.array(d["coeffs"], dtype=np.int64).reshape(-1, fld.m)
        return cls(fld, d["start"], rows, prec)

    def __repr__(self):
        if self.is_zero():
            return f"O(u^{self.prec})"
        terms = []
        for i, row in enumerate(self.c[:8]):
            code = int(self.field.from_vec(row))
            if code:
                terms.append(f"{FqElem(self.field, code)!r}*u^{self.val + i}")
        more = " + ..." if len(self.c) > 8 else ""
        tail = "" if self.prec >= INF else f" + O(u^{self.prec})"
        return " + ".join(terms) + more + tail
