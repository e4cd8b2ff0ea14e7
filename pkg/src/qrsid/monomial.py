"""Monomials ``c * q^e * prod(p^k)`` used for parameters and product bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivisionByZero
from .ring import ONE, ZERO, Scalar


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return "(%s)" % e


def _fmt_coeff(c: Scalar) -> str:
    s = str(c)
    if "+" in s or "-" in s[1:]:
        return "(%s)" % s
    return s


@dataclass(frozen=True)
class Monomial:
    """``coeff * q^qexp`` times named parameters raised to integer powers.

    A monomial with an empty ``params`` tuple is concrete; catalog product
    sides store parametric ones and substitute a ``ParamAssignment``.
    """

    coeff: Scalar = ONE
    qexp: Fraction = Fraction(0)
    params: tuple = field(default=())  # sorted tuple of (name, power)

    def __post_init__(self):
        object.__setattr__(self, "coeff", Scalar.coerce(self.coeff))
        object.__setattr__(self, "qexp", Fraction(self.qexp))
        ps = tuple(sorted((n, int(k)) for n, k in dict(self.params).items() if k))
        object.__setattr__(self, "params", ps)

    @classmethod
    def q(cls, e=1, coeff=ONE) -> "Monomial":
        return cls(Scalar.coerce(coeff), Fraction(e))

    @classmethod
    def param(cls, name: str, power: int = 1) -> "Monomial":
        return cls(ONE, Fraction(0), ((name, power),))

    @property
    def is_concrete(self) -> bool:
        return not self.params

    @property
    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return Monomial(self.coeff * Scalar.coerce(other), self.qexp, self.params)
        if not isinstance(other, Monomial):
            return NotImplemented
        ps = dict(self.params)
        for n, k in other.params:
            ps[n] = ps.get(n, 0) + k
        return Monomial(self.coeff * other.coeff, self.qexp + other.qexp, tuple(ps.items()))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.coeff.is_zero():
            raise DivisionByZero("zero monomial to a negative power")
        return Monomial(self.coeff ** n, self.qexp * n, tuple((p, k * n) for p, k in self.params))

    def inverse(self) -> "Monomial":
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return Monomial(self.coeff / Scalar.coerce(other), self.qexp, self.params)
        return self * other.inverse()

    def __neg__(self):
        return Monomial(-self.coeff, self.qexp, self.params)

    def substitute(self, assign) -> "Monomial":
        """Replace every parameter by its assigned concrete monomial."""
        if not self.params:
            return self
        out = Monomial(self.coeff, self.qexp)
        for name, k in self.params:
            try:
                value = assign[name]
            except KeyError:
                raise KeyError("parameter %r is not assigned" % name) from None
            if value.coeff.is_zero():
                if k < 0:
                    raise DivisionByZero("parameter %s = 0 raised to %d" % (name, k))
                return Monomial(ZERO, Fraction(0))
            out = out * value ** k
        return out

    def sqrt(self):
        """Exact square root, or None when the coefficient has no easy root."""
        r = self.coeff.sqrt()
        if r is None or self.params:
            return None
        return Monomial(r, self.qexp / 2)

    def __str__(self):
        pieces = []
        for name, k in self.params:
            pieces.append(name if k == 1 else "%s^%s" % (name, _fmt_exp(Fraction(k))))
        if self.qexp:
            pieces.insert(0, "q" if self.qexp == 1 else "q^" + _fmt_exp(self.qexp))
        c = self.coeff
        if not pieces:
            return _fmt_coeff(c)
        body = "*".join(pieces)
        if c == 1:
            return body
        if c == -1:
            return "-" + body
        return "%s*%s" % (_fmt_coeff(c), body)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        from .textparse import parse_monomial

        return parse_monomial(text)


ZERO_MONO = Monomial(ZERO, Fraction(0))
ONE_MONO = Monomial(ONE, Fraction(0))
