"""Exact arithmetic in the cyclotomic field Q(zeta_12).

An element is stored as four rationals ``(c0, c1, c2, c3)`` meaning
``c0 + c1*z + c2*z^2 + c3*z^3`` where ``z = exp(2*pi*i/12)`` satisfies the
minimal polynomial ``z^4 - z^2 + 1 = 0``.  Every root of unity the identities
need lives here: ``-1``, ``i = z^3``, ``zeta_3 = z^4 = z^2 - 1``,
``zeta_6 = z^2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DivisionByZero

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "Z12",
    "ZETA3",
    "ZETA4",
    "ZETA6",
    "unit_power",
    "zeta_power",
    "scalar_arith",
]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("cannot convert %r to an exact rational" % (x,))


class Scalar:
    """Immutable element of Q(zeta_12)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self._c = (_frac(c0), _frac(c1), _frac(c2), _frac(c3))
        self._hash = None

    @classmethod
    def _raw(cls, coords):
        obj = object.__new__(cls)
        obj._c = coords
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls(x)

    @property
    def coords(self):
        return self._c

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not (self._c[1] or self._c[2] or self._c[3])

    def rational(self) -> Fraction:
        """The value as a Fraction; ValueError if it is not rational."""
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self._c[0]

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        a, b = self._c, other._c
        return Scalar._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self._c
        return Scalar._raw((-a[0], -a[1], -a[2], -a[3]))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                o = Fraction(other)
                a = self._c
                return Scalar._raw((a[0] * o, a[1] * o, a[2] * o, a[3] * o))
            return NotImplemented
        return Scalar._raw(_mul_coords(self._c, other._c))

    __rmul__ = __mul__

    def conj(self) -> "Scalar":
        """Complex conjugate, i.e. the automorphism z -> z^-1."""
        return self.galois(11)

    def norm_q(self) -> Fraction:
        """Field norm down to Q (product of the four conjugates)."""
        # N(x) = prod over Galois group {z -> z^k, k in 1,5,7,11}
        prod = ONE
        for k in (1, 5, 7, 11):
            prod = prod * self.galois(k)
        return prod.rational()

    def galois(self, k: int) -> "Scalar":
        """Image under the automorphism z -> z^k (k coprime to 12)."""
        zk = zeta_power(k)
        acc = Scalar._raw((self._c[0], Fraction(0), Fraction(0), Fraction(0)))
        p = ONE
        for j in range(1, 4):
            p = p * zk
            if self._c[j]:
                acc = acc + p * self._c[j]
        return acc

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_12)")
        if self.is_rational():
            return Scalar._raw((1 / self._c[0], Fraction(0), Fraction(0), Fraction(0)))
        # x^-1 = (product of the other conjugates) / N(x)
        others = ONE
        for k in (5, 7, 11):
            others = others * self.galois(k)
        n = (self * others).rational()
        return others * (1 / n)

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._c[0])
            else:
                self._hash = hash(self._c)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # roots of unity ----------------------------------------------------
    def root_of_unity_exponent(self):
        """Return t with self == z^t (0 <= t < 12), or None."""
        return _ROU_LOOKUP.get(self._c)

    def sqrt(self):
        """An exact square root inside the field when one is easy to find.

        Handles values of the form r*z^t with r a rational square; returns
        None otherwise.
        """
        if self.is_zero():
            return self
        for t in range(12):
            r = self * zeta_power(-t)
            if r.is_rational():
                val = r.rational()
                if val < 0:
                    val = -val
                    t += 6
                root = _rational_sqrt(val)
                if root is None or t % 2:
                    continue
                return zeta_power(t // 2) * root
        return None

    # text -----------------------------------------------------------------
    def __str__(self):
        parts = []
        for j, c in enumerate(self._c):
            if not c:
                continue
            if j == 0:
                body = str(c)
            else:
                zt = "z12" if j == 1 else "z12^%d" % j
                if c == 1:
                    body = zt
                elif c == -1:
                    body = "-" + zt
                else:
                    body = "%s*%s" % (c, zt)
            if parts and not body.startswith("-"):
                parts.append("+")
            parts.append(body)
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return "Scalar(%r)" % str(self)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        from .textparse import parse_scalar

        return parse_scalar(text)


def _rational_sqrt(x: Fraction):
    from math import isqrt

    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _mul_coords(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    p0 = a0 * b0
    p1 = a0 * b1 + a1 * b0
    p2 = a0 * b2 + a1 * b1 + a2 * b0
    p3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    p4 = a1 * b3 + a2 * b2 + a3 * b1
    p5 = a2 * b3 + a3 * b2
    p6 = a3 * b3
    # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    return (p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


ZERO = Scalar(0)
ONE = Scalar(1)
Z12 = Scalar(0, 1)


@lru_cache(maxsize=None)
def _zeta_power_cached(t: int) -> Scalar:
    result = ONE
    for _ in range(t):
        result = result * Z12
    return result


def zeta_power(t: int) -> Scalar:
    """z^t for any integer t (period 12)."""
    return _zeta_power_cached(t % 12)


I = zeta_power(3)
ZETA3 = zeta_power(4)
ZETA4 = I
ZETA6 = zeta_power(2)

_ROU_LOOKUP = {zeta_power(t).coords: t for t in range(12)}


def unit_power(n: int) -> Scalar:
    """i^n, period 4."""
    return zeta_power(3 * (n % 4))
