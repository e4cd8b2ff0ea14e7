"""Truncated Puiseux series in q with coefficients in Q(zeta_12).

A series lives on the grid ``q^(1/d)`` and knows every coefficient up to and
including the exponent ``order_cap``.  Internally it is dense: a common
positive denominator plus up to four integer arrays, one per power-basis
coordinate of the coefficient, starting at grid index ``lo``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernels
from .errors import BeyondCap, GridOverflow, NonUnitLeadingTerm
from .ring import ONE, ZERO, Scalar

MAX_GRID = 24

__all__ = ["QSeries", "series_arith", "series_invert", "rescale", "coeff", "integrality_report", "MAX_GRID"]


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def scalar_to_ints(c: Scalar):
    """Split a Scalar into integer coordinates and one positive denominator."""
    cs = c.coords
    den = 1
    for x in cs:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return tuple(int(x * den) for x in cs), den


def _scale(arr, k):
    if k == 1:
        return arr
    return [k * x for x in arr]


def _add_into(dst, src, offset):
    for j, v in enumerate(src):
        if v:
            dst[offset + j] += v


def _reduce7(p, n):
    """Fold coordinate arrays for z^0..z^6 back to the basis 1, z, z^2, z^3."""

    def get(i):
        return p[i]

    def comb(plus, minus):
        arrs_p = [get(i) for i in plus if get(i) is not None]
        arrs_m = [get(i) for i in minus if get(i) is not None]
        if not arrs_p and not arrs_m:
            return None
        if len(arrs_p) == 1 and not arrs_m:
            return arrs_p[0]
        out = [0] * n
        for a in arrs_p:
            for j in range(n):
                out[j] += a[j]
        for a in arrs_m:
            for j in range(n):
                out[j] -= a[j]
        return out

    # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    return [comb((0,), (4, 6)), comb((1,), (5,)), comb((2, 4), ()), comb((3, 5), ())]


class QSeries:
    """Immutable truncated series; see the module docstring for the layout."""

    __slots__ = ("_d", "_cap", "_lo", "_den", "_comp")

    def __init__(self, grid_den: int = 1, order_cap=0, coeffs=None):
        src = QSeries.from_terms(coeffs or {}, order_cap, grid_den)
        self._d, self._cap, self._lo, self._den, self._comp = src._d, src._cap, src._lo, src._den, src._comp

    # construction -------------------------------------------------------
    @classmethod
    def _make(cls, d, cap, lo, den, comps):
        """Normalize raw data: clip to the cap, trim zeros, reduce by gcd."""
        cap = Fraction(cap)
        hi = _floor(cap * d)
        n = hi - lo + 1
        comps = list(comps)
        for t in range(4):
            a = comps[t]
            if a is None:
                continue
            if len(a) > n:
                a = a[: max(n, 0)]
            elif len(a) < n:
                a = list(a) + [0] * (n - len(a))
            comps[t] = a if any(a) else None
        live = [a for a in comps if a is not None]
        self = object.__new__(cls)
        self._d = d
        self._cap = cap
        if not live or n <= 0:
            self._lo = hi + 1
            self._den = 1
            self._comp = (None, None, None, None)
            return self
        start = min(next(j for j, v in enumerate(a) if v) for a in live)
        if start:
            comps = [None if a is None else a[start:] for a in comps]
            lo += start
        g = den
        for a in comps:
            if a is not None and g != 1:
                g = math.gcd(g, *a)
        if den < 0:
            g = -g
        if g != 1:
            comps = [None if a is None else [v // g for v in a] for a in comps]
            den //= g
        self._lo = lo
        self._den = den
        self._comp = tuple(comps)
        return self

    @classmethod
    def zero(cls, cap, grid: int = 1) -> "QSeries":
        return cls._make(grid, cap, 0, 1, (None, None, None, None))

    @classmethod
    def one(cls, cap, grid: int = 1) -> "QSeries":
        return cls.monomial(ONE, 0, cap, grid)

    @classmethod
    def monomial(cls, c, e, cap, grid: int | None = None) -> "QSeries":
        e = Fraction(e)
        if grid is None:
            grid = e.denominator
        return cls.from_terms({e: c}, cap, grid)

    @classmethod
    def from_terms(cls, terms, cap, grid: int | None = None) -> "QSeries":
        """Build from ``{exponent: coefficient}``; terms past ``cap`` are dropped."""
        cap = Fraction(cap)
        items = [(Fraction(e), Scalar.coerce(c)) for e, c in dict(terms).items()]
        if grid is None:
            grid = 1
            for e, _ in items:
                grid = grid * e.denominator // math.gcd(grid, e.denominator)
        grid = int(grid)
        if grid <= 0:
            raise ValueError("grid denominator must be positive")
        items = [(e, c) for e, c in items if e <= cap and c]
        for e, _ in items:
            if (e * grid).denominator != 1:
                raise ValueError("exponent %s is not on the grid q^(1/%d)" % (e, grid))
        if not items:
            return cls.zero(cap, grid)
        lo = min(int(e * grid) for e, _ in items)
        hi = _floor(cap * grid)
        n = hi - lo + 1
        den = 1
        for _, c in items:
            for x in c.coords:
                den = den * x.denominator // math.gcd(den, x.denominator)
        comps = [[0] * n for _ in range(4)]
        for e, c in items:
            j = int(e * grid) - lo
            for t, x in enumerate(c.coords):
                if x:
                    comps[t][j] += int(x * den)
        return cls._make(grid, cap, lo, den, comps)

    @classmethod
    def from_ints(cls, ints, cap, grid: int = 1, lo: int = 0, scalar=ONE, den: int = 1) -> "QSeries":
        """``scalar/den * sum ints[j] q^((lo + j)/grid)``."""
        scalar = Scalar.coerce(scalar)
        sc, sden = scalar_to_ints(scalar)
        comps = [None if not s else _scale(list(ints), s) for s in sc]
        return cls._make(grid, cap, lo, den * sden, comps)

    # basic properties ---------------------------------------------------
    @property
    def grid_den(self) -> int:
        return self._d

    @property
    def order_cap(self) -> Fraction:
        return self._cap

    @property
    def _hi(self) -> int:
        return _floor(self._cap * self._d)

    def is_zero(self) -> bool:
        return self._comp == (None, None, None, None)

    def is_rational(self) -> bool:
        return self._comp[1] is None and self._comp[2] is None and self._comp[3] is None

    @property
    def valuation(self):
        """Least exponent with a nonzero coefficient, or None for zero."""
        if self.is_zero():
            return None
        return Fraction(self._lo, self._d)

    def _length(self):
        return self._hi - self._lo + 1

    def _coeff_at(self, j) -> Scalar:
        den = self._den
        return Scalar._raw(tuple(Fraction(0) if a is None else Fraction(a[j], den) for a in self._comp))

    def items(self):
        """Nonzero (exponent, coefficient) pairs in ascending order."""
        out = []
        if self.is_zero():
            return out
        d, lo = self._d, self._lo
        live = [(t, a) for t, a in enumerate(self._comp) if a is not None]
        for j in range(self._length()):
            if any(a[j] for _, a in live):
                out.append((Fraction(lo + j, d), self._coeff_at(j)))
        return out

    @property
    def coeffs(self) -> dict:
        return dict(self.items())

    def coeff(self, e) -> Scalar:
        e = Fraction(e)
        if e > self._cap:
            raise BeyondCap("exponent %s is past the cap %s" % (e, self._cap))
        x = e * self._d
        if x.denominator != 1:
            return ZERO
        j = int(x) - self._lo
        if j < 0 or j >= self._length() or self.is_zero():
            return ZERO
        return self._coeff_at(j)

    def int_coeffs(self):
        """Integer coefficient list on the grid when the series is integral.

        Returns ``(lo, list)`` or None when some coefficient is not a rational
        integer.
        """
        if not self.is_rational() or self._den != 1:
            return None
        a = self._comp[0]
        return self._lo, list(a) if a is not None else []

    # grid and cap handling ---------------------------------------------------
    def regrid(self, d: int) -> "QSeries":
        """Same series viewed on the finer grid ``q^(1/d)`` (d a multiple)."""
        if d == self._d:
            return self
        if d % self._d:
            raise ValueError("grid %d is not a multiple of %d" % (d, self._d))
        t = d // self._d
        hi = _floor(self._cap * d)
        lo = self._lo * t
        n = hi - lo + 1
        comps = []
        for a in self._comp:
            if a is None:
                comps.append(None)
                continue
            b = [0] * max(n, 0)
            b[0 : (len(a) - 1) * t + 1 : t] = a
            comps.append(b)
        out = object.__new__(QSeries)
        out._d, out._cap, out._lo, out._den = d, self._cap, lo, self._den
        if self.is_zero():
            out._lo = hi + 1
        out._comp = tuple(comps)
        return out

    def truncate(self, cap) -> "QSeries":
        cap = Fraction(cap)
        if cap > self._cap:
            raise BeyondCap("cannot raise the cap from %s to %s" % (self._cap, cap))
        if cap == self._cap:
            return self
        return QSeries._make(self._d, cap, self._lo, self._den, self._comp)

    def with_cap(self, cap) -> "QSeries":
        """Truncate to ``min(cap, order_cap)``."""
        cap = Fraction(cap)
        return self if cap >= self._cap else self.truncate(cap)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _align(a, b):
        d = a._d * b._d // math.gcd(a._d, b._d)
        return a.regrid(d), b.regrid(d), d

    def __add__(self, other):
        if not isinstance(other, QSeries):
            try:
                other = QSeries.monomial(Scalar.coerce(other), 0, self._cap, self._d)
            except TypeError:
                return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            try:
                other = QSeries.monomial(Scalar.coerce(other), 0, self._cap, self._d)
            except TypeError:
                return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def _addsub(self, other, sign):
        a, b, d = QSeries._align(self, other)
        cap = min(a._cap, b._cap)
        if b.is_zero():
            return a.with_cap(cap)
        if a.is_zero():
            b = b.with_cap(cap)
            return b if sign == 1 else -b
        hi = _floor(cap * d)
        lo = min(a._lo, b._lo)
        n = hi - lo + 1
        if n <= 0:
            return QSeries.zero(cap, d)
        den = a._den * b._den // math.gcd(a._den, b._den)
        ka, kb = den // a._den, (den // b._den) * sign
        comps = []
        for x, y in zip(a._comp, b._comp):
            if x is None and y is None:
                comps.append(None)
                continue
            out = [0] * n
            if x is not None:
                _add_into(out, _scale(x[: max(0, hi - a._lo + 1)], ka), a._lo - lo)
            if y is not None:
                _add_into(out, _scale(y[: max(0, hi - b._lo + 1)], kb), b._lo - lo)
            comps.append(out)
        return QSeries._make(d, cap, lo, den, comps)

    def __neg__(self):
        out = object.__new__(QSeries)
        out._d, out._cap, out._lo, out._den = self._d, self._cap, self._lo, self._den
        out._comp = tuple(None if a is None else [-v for v in a] for a in self._comp)
        return out

    def scale(self, c) -> "QSeries":
        """Multiply every coefficient by the Scalar ``c``."""
        c = Scalar.coerce(c)
        if c == 1:
            return self
        if c.is_zero():
            return QSeries.zero(self._cap, self._d)
        sc, sden = scalar_to_ints(c)
        n = self._length()
        p = [None] * 7
        for i, a in enumerate(self._comp):
            if a is None:
                continue
            for j, s in enumerate(sc):
                if not s:
                    continue
                term = _scale(a, s)
                if p[i + j] is None:
                    p[i + j] = term
                else:
                    p[i + j] = [u + v for u, v in zip(p[i + j], term)]
        comps = _reduce7(p, n)
        return QSeries._make(self._d, self._cap, self._lo, self._den * sden, comps)

    def shift(self, e, c=ONE) -> "QSeries":
        """Multiply by the monomial ``c*q^e``; the cap moves by ``e``."""
        e = Fraction(e)
        src = self
        x = e * src._d
        if x.denominator != 1:
            d = src._d * x.denominator
            src = src.regrid(d)
            x = e * d
        out = object.__new__(QSeries)
        out._d, out._cap, out._lo, out._den, out._comp = src._d, src._cap + e, src._lo + int(x), src._den, src._comp
        return out.scale(c) if c != 1 else out

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction, Scalar)):
                return self.scale(other)
            return NotImplemented
        a, b, d = QSeries._align(self, other)
        va = a._lo if not a.is_zero() else 0
        vb = b._lo if not b.is_zero() else 0
        cap = min(a._cap + min(0, Fraction(vb, d)), b._cap + min(0, Fraction(va, d)))
        if a.is_zero() or b.is_zero():
            return QSeries.zero(cap, d)
        lo = a._lo + b._lo
        hi = _floor(cap * d)
        n = hi - lo + 1
        if n <= 0:
            return QSeries.zero(cap, d)
        p = [None] * 7
        for i, x in enumerate(a._comp):
            if x is None:
                continue
            for j, y in enumerate(b._comp):
                if y is None:
                    continue
                conv = kernels.mul_trunc(x, y, n)
                if p[i + j] is None:
                    p[i + j] = conv
                else:
                    acc = p[i + j]
                    for t in range(n):
                        acc[t] += conv[t]
        comps = _reduce7(p, n)
        return QSeries._make(d, cap, lo, a._den * b._den, comps)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.one(self._cap, self._d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def constant_term(self) -> Scalar:
        if self.is_zero() or self._lo > 0:
            return ZERO
        if self._lo < 0:
            return self._coeff_at(-self._lo) if -self._lo < self._length() else ZERO
        return self._coeff_at(0)

    def invert(self) -> "QSeries":
        """Multiplicative inverse up to the cap; needs a nonzero q^0 term."""
        if self.is_zero() or self._lo != 0:
            raise NonUnitLeadingTerm("series has no invertible constant term")
        c0 = self._coeff_at(0)
        g = self if c0 == 1 else self.scale(c0.inverse())
        n = g._length()
        if g.is_rational() and g._den == 1:
            inv = kernels.inv_unit(g._comp[0], n)
            h = QSeries._make(g._d, g._cap, 0, 1, (inv, None, None, None))
        else:
            h = g._newton_inverse()
        return h if c0 == 1 else h.scale(c0.inverse())

    def _newton_inverse(self):
        cap = self._cap
        d = self._d
        h = QSeries.one(cap, d)
        prec = Fraction(0)
        if cap <= 0:
            return h
        while True:
            prec = min(2 * prec + Fraction(1, d), cap)
            g = self.with_cap(prec)
            # widen the current approximation; the correction fixes the new terms
            h = QSeries._make(d, prec, h._lo, h._den, h._comp)
            h = h + h * (QSeries.one(prec, d) - g * h)
            if prec >= cap:
                return h

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.invert()
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(Scalar.coerce(other).inverse())
        return NotImplemented

    def mul_binomial(self, c, e, inverse: bool = False) -> "QSeries":
        """Multiply by ``(1 - c*q^e)`` or, if ``inverse``, divide by it (e > 0)."""
        c = Scalar.coerce(c)
        e = Fraction(e)
        if c.is_zero():
            return self
        src = self
        if (e * src._d).denominator != 1:
            src = src.regrid(src._d * (e * src._d).denominator)
        s = int(e * src._d)
        if s <= 0:
            raise ValueError("binomial exponent must be positive")
        if src.is_zero():
            return src
        n = src._length()
        if c.is_rational() and c.rational().denominator == 1:
            ci = int(c.rational())
            fn = kernels.div_binomial if inverse else kernels.mul_binomial
            comps = [None if a is None else fn(a, ci, s, n) for a in src._comp]
            return QSeries._make(src._d, src._cap, src._lo, src._den, comps)
        if not inverse:
            return src - src.shift(e, c)
        # 1/(1 - c x) as a geometric series in exact arithmetic
        terms = {}
        power = ONE
        k = 0
        span = src._cap - Fraction(src._lo, src._d)
        while k * e <= span:
            terms[k * e] = power
            power = power * c
            k += 1
        return src * QSeries.from_terms(terms, span, src._d)

    # comparison --------------------------------------------------------
    def first_difference(self, other: "QSeries"):
        """Least exponent where two series differ up to the shared cap.

        Returns ``(exponent, self_coeff, other_coeff)`` or None.
        """
        cap = min(self._cap, other._cap)
        diff = self.with_cap(cap) - other.with_cap(cap)
        if diff.is_zero():
            return None
        e = diff.valuation
        return e, self.coeff(e), other.coeff(e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = QSeries.monomial(Scalar.coerce(other), 0, self._cap, self._d)
        if not isinstance(other, QSeries):
            return NotImplemented
        if self._cap != other._cap:
            return False
        a, b, _ = QSeries._align(self, other)
        if a.is_zero() or b.is_zero():
            return a.is_zero() and b.is_zero()
        return a._lo == b._lo and a._den == b._den and a._comp == b._comp

    def __hash__(self):
        return hash((self._cap, tuple(self.items())))

    # text ---------------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return "QSeries(%s, cap=%s, grid=%d)" % (render(self), self._cap, self._d)

    def dumps(self) -> str:
        """Canonical text plus an ``O(...)`` term recording cap and grid."""
        body = render(self)
        tail = "O(q^(%d/%d))" % (self._hi + 1, self._d) if self._d != 1 else "O(q^%d)" % (self._hi + 1)
        return tail if body == "0" else "%s + %s" % (body, tail)

    @classmethod
    def parse(cls, text: str, cap=None, grid: int | None = None) -> "QSeries":
        from .textparse import parse_series_terms

        terms, big_o = parse_series_terms(text)
        if big_o is not None:
            num, den = big_o
            grid = grid or den
            cap = Fraction(num - 1, den) if cap is None else cap
        if cap is None:
            cap = max(terms, default=Fraction(0))
        return cls.from_terms(terms, cap, grid)


def _fmt_q(e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "q"
    if e.denominator == 1:
        return "q^%d" % e.numerator
    return "q^(%s)" % e


def render(f: QSeries) -> str:
    """Ascending terms like ``1 - q + 2*q^2 + (1+z12)*q^(5/2)``."""
    parts = []
    for e, c in f.items():
        qp = _fmt_q(e)
        if c.is_rational():
            r = c.rational()
            neg = r < 0
            mag = -r if neg else r
            if not qp:
                body = str(mag)
            elif mag == 1:
                body = qp
            else:
                body = "%s*%s" % (mag, qp)
            if mag.denominator != 1 and qp:
                body = "(%s)*%s" % (mag, qp)
        else:
            neg = False
            body = "(%s)" % c if qp else "(%s)" % c
            if qp:
                body += "*" + qp
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


# spec-level functional API ---------------------------------------------------


def series_arith(a: QSeries, b: QSeries, op: str) -> QSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % op)


def series_invert(f: QSeries) -> QSeries:
    return f.invert()


def rescale(f: QSeries, m, max_grid: int = MAX_GRID) -> QSeries:
    """Substitute ``q -> q^m`` for a positive rational ``m``."""
    m = Fraction(m)
    if m <= 0:
        raise ValueError("rescale factor must be positive")
    r, s = m.numerator, m.denominator
    ds = f._d * s
    g = math.gcd(r, ds)
    step, d = r // g, ds // g
    if d > max_grid:
        raise GridOverflow("grid q^(1/%d) exceeds the maximum %d" % (d, max_grid))
    cap = f._cap * m
    if f.is_zero():
        return QSeries.zero(cap, d)
    hi = _floor(cap * d)
    lo = f._lo * step
    n = hi - lo + 1
    comps = []
    for a in f._comp:
        if a is None:
            comps.append(None)
            continue
        b = [0] * n
        for j, v in enumerate(a):
            k = j * step
            if k < n:
                b[k] = v
        comps.append(b)
    return QSeries._make(d, cap, lo, f._den, comps)


def coeff(f: QSeries, e) -> Scalar:
    return f.coeff(e)


def integrality_report(f: QSeries) -> dict:
    for e, _ in f.items():
        if e.denominator != 1:
            return {"is_integer_grid": False, "first_fractional": e}
    return {"is_integer_grid": True, "first_fractional": None}
