"""q-Pochhammer symbols, product-side expressions and product recovery."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivergentProduct, NonRationalExponent, NonUnitLeadingTerm
from .monomial import Monomial
from .qseries import QSeries
from .ring import ONE, ZERO, Scalar

__all__ = [
    "Factor",
    "ProductTerm",
    "ProductExpr",
    "poch_finite",
    "poch_inf",
    "product_expr_eval",
    "prodmake",
    "product_form",
    "eval_product_form",
]


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def _grid_of(*exps):
    return _lcm(*(Fraction(e).denominator for e in exps))


@dataclass(frozen=True)
class Factor:
    """``(base; q^modulus)_inf ^ power``."""

    base: Monomial
    modulus: Fraction
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "modulus", Fraction(self.modulus))
        object.__setattr__(self, "power", int(self.power))
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")

    def substitute(self, assign) -> "Factor":
        return Factor(self.base.substitute(assign), self.modulus, self.power)


@dataclass(frozen=True)
class ProductTerm:
    weight: Scalar = ONE
    factors: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "weight", Scalar.coerce(self.weight))
        object.__setattr__(self, "factors", tuple(self.factors))

    def substitute(self, assign) -> "ProductTerm":
        return ProductTerm(self.weight, tuple(f.substitute(assign) for f in self.factors))


@dataclass(frozen=True)
class ProductExpr:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a product expression needs at least one term")

    @property
    def parameters(self):
        names = set()
        for t in self.terms:
            for f in t.factors:
                names.update(n for n, _ in f.base.params)
        return sorted(names)

    def substitute(self, assign) -> "ProductExpr":
        return ProductExpr(tuple(t.substitute(assign) for t in self.terms))

    def has_rational_weights(self) -> bool:
        return all(t.weight.is_rational() for t in self.terms)

    def __str__(self):
        return render_product(self)

    @classmethod
    def parse(cls, text: str) -> "ProductExpr":
        from .textparse import parse_product

        return parse_product(text)


# finite and infinite Pochhammer symbols ------------------------------------------


def _binomials(pairs, cap, grid, inverse=False):
    """Product (or inverse) of ``(1 - c q^e)`` over ``pairs`` as an exact series.

    Factors with ``e <= 0`` are normalized into a monomial prefactor so that
    the remaining binomials all have positive exponents.
    """
    const = ONE
    shift = Fraction(0)
    pos = []
    for c, e in pairs:
        if c.is_zero():
            continue
        if e == 0:
            const = const * (1 - c)
        elif e > 0:
            pos.append((c, e))
        else:
            const = const * (-c)
            shift += e
            pos.append((c.inverse(), -e))
    if const.is_zero():
        if inverse:
            raise DivergentProduct("a factor (1 - q^0) appears in a denominator")
        return QSeries.zero(cap, grid)
    if inverse:
        const = const.inverse()
        shift = -shift
    inner = cap - shift
    out = QSeries.one(inner, grid)
    for c, e in pos:
        if e <= inner:
            out = out.mul_binomial(c, e, inverse=inverse)
    if shift or const != 1:
        out = out.shift(shift, const)
    return out


def poch_finite(a: Monomial, step, n: int, cap) -> QSeries:
    """``prod_{k<n} (1 - a q^(step k))`` truncated at ``cap``."""
    step = Fraction(step)
    cap = Fraction(cap)
    if not a.is_concrete:
        raise ValueError("poch_finite needs a concrete base")
    if step <= 0:
        raise ValueError("step must be positive")
    grid = _grid_of(a.qexp, step)
    pairs = [(a.coeff, a.qexp + step * k) for k in range(n)]
    return _binomials(pairs, cap, grid)


def poch_inf(a: Monomial, step, cap) -> QSeries:
    """``prod_{k>=0} (1 - a q^(step k))`` truncated at ``cap``."""
    step = Fraction(step)
    cap = Fraction(cap)
    if not a.is_concrete:
        raise ValueError("poch_inf needs a concrete base")
    if step <= 0:
        raise ValueError("step must be positive")
    grid = _grid_of(a.qexp, step)
    if a.coeff.is_zero():
        return QSeries.one(cap, grid)
    if a.qexp < 0 or (a.qexp == 0 and a.coeff == 1):
        raise DivergentProduct("(%s; q^%s)_inf has no formal expansion" % (a, step))
    out = QSeries.one(cap, grid)
    k = 0
    while a.qexp + step * k <= cap:
        e = a.qexp + step * k
        if e == 0:
            out = out.scale(1 - a.coeff)
        else:
            out = out.mul_binomial(a.coeff, e)
        k += 1
    return out


def _term_eval(term: ProductTerm, cap, grid) -> QSeries:
    # split each factor into a finite prefix (exponents <= 0) and a tail
    pre_mul, pre_div = [], []
    tails = []
    for f in term.factors:
        b = f.base
        if not b.is_concrete:
            raise ValueError("unassigned parameters in %s" % b)
        if b.coeff.is_zero() or f.power == 0:
            continue
        k0 = 0
        prefix = []
        while b.qexp + f.modulus * k0 <= 0:
            prefix.append((b.coeff, b.qexp + f.modulus * k0))
            k0 += 1
        target = pre_mul if f.power > 0 else pre_div
        for _ in range(abs(f.power)):
            target.extend(prefix)
        tails.append((Monomial(b.coeff, b.qexp + f.modulus * k0), f.modulus, f.power))
    # only the numerator prefix can lower the valuation
    v_mul = sum((e for c, e in pre_mul if e < 0 and not c.is_zero()), Fraction(0))
    inner = cap - v_mul
    out = QSeries.one(inner, grid)
    for base, modulus, power in tails:
        s = poch_inf(base, modulus, inner)
        if power < 0:
            s = s.invert()
        out = out * s ** abs(power)
    if pre_div:
        out = out * _binomials(pre_div, inner, grid, inverse=True)
    if pre_mul:
        out = _binomials(pre_mul, cap, grid) * out
    out = out.with_cap(cap)
    return out.scale(term.weight)


def expr_grid(p: ProductExpr) -> int:
    exps = []
    for t in p.terms:
        for f in t.factors:
            exps.extend((f.base.qexp, f.modulus))
    return _grid_of(*exps) if exps else 1


def product_expr_eval(p: ProductExpr, cap, assign=None) -> QSeries:
    """Sum over terms of ``weight * prod (base; q^n)_inf ^ r`` up to ``cap``."""
    cap = Fraction(cap)
    if assign:
        p = p.substitute(assign)
    grid = expr_grid(p)
    total = QSeries.zero(cap, grid)
    for t in p.terms:
        total = total + _term_eval(t, cap, grid)
    return total


# product recovery -----------------------------------------------------------------


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _divisors(n: int):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def prodmake(f: QSeries, cap=None):
    """Exponents ``e_a`` with ``f = prod_a (1 - q^a)^(-e_a)`` up to ``cap``.

    Returns the nonzero pairs ``(a, e_a)`` in ascending ``a``.  The series
    must start with the constant 1.
    """
    cap = f.order_cap if cap is None else min(Fraction(cap), f.order_cap)
    if f.is_zero() or f.valuation != 0 or f.coeff(0) != 1:
        raise NonUnitLeadingTerm("prodmake needs a series with constant term 1")
    d = f.grid_den
    n_max = math.floor(cap * d)
    rational = f.is_rational()
    zero = Fraction(0) if rational else ZERO
    fs = [zero] * (n_max + 1)
    for e, c in f.items():
        j = int(e * d)
        if j <= n_max:
            fs[j] = c.rational() if rational else c
    # c_n = n f_n - sum_{k<n} c_k f_{n-k};  c_n = sum_{m | n} m b_m
    cs = [zero] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = fs[n] * n
        for k in range(1, n):
            if cs[k] and fs[n - k]:
                acc = acc - cs[k] * fs[n - k]
        cs[n] = acc
    out = []
    for n in range(1, n_max + 1):
        acc = zero
        for m in _divisors(n):
            mu = _mobius(n // m)
            if mu and cs[m]:
                acc = acc + cs[m] * mu
        b = acc * Fraction(1, n)
        if not rational:
            if not b.is_rational():
                raise NonRationalExponent("exponent at q^%s is %s" % (Fraction(n, d), b))
            b = b.rational()
        if b:
            out.append((Fraction(n, d), b))
    return out


def product_form(f: QSeries, cap=None):
    """``(c, v, exps)`` with ``f = c q^v prod (1 - q^a)^(-e_a)`` up to the cap."""
    if f.is_zero():
        raise NonUnitLeadingTerm("the zero series has no product form")
    v = f.valuation
    c = f.coeff(v)
    g = f.shift(-v).scale(c.inverse())
    cap = g.order_cap if cap is None else min(Fraction(cap) - v, g.order_cap)
    return c, v, prodmake(g, cap)


def _binomial_power(e: Fraction, a: Fraction, cap, grid) -> QSeries:
    """``(1 - q^a)^(-e)`` for a rational ``e`` by the binomial series."""
    if e.denominator == 1:
        k = int(e)
        s = QSeries.one(cap, grid)
        for _ in range(abs(k)):
            s = s.mul_binomial(1, a, inverse=k > 0)
        return s
    terms = {}
    coef = Fraction(1)
    j = 0
    while a * j <= cap:
        terms[a * j] = coef
        coef = coef * (e + j) / (j + 1)
        j += 1
    return QSeries.from_terms(terms, cap, grid)


def eval_product_form(c, v, exps, cap, grid: int = 1) -> QSeries:
    """Re-expand the output of ``product_form``."""
    cap = Fraction(cap)
    grid = _lcm(grid, _grid_of(v, *(a for a, _ in exps)))
    inner = cap - v
    out = QSeries.one(inner, grid)
    for a, e in exps:
        if a <= inner:
            out = out * _binomial_power(Fraction(e), a, inner, grid)
    return out.shift(v, Scalar.coerce(c))


# text --------------------------------------------------------------------------------


def _fmt_weight(w: Scalar) -> str:
    s = str(w)
    if w.is_rational():
        return s
    return "(%s)" % s


def render_product(p: ProductExpr) -> str:
    chunks = []
    for t in p.terms:
        groups = []
        for f in t.factors:
            key = (f.modulus, f.power)
            if groups and groups[-1][0] == key:
                groups[-1][1].append(f.base)
            else:
                groups.append((key, [f.base]))
        parts = []
        for (mod, power), bases in groups:
            qm = "q" if mod == 1 else ("q^%d" % mod if mod.denominator == 1 else "q^(%s)" % mod)
            body = "(%s; %s)" % (", ".join(str(b) for b in bases), qm)
            if power != 1:
                body += "^%d" % power
            parts.append(body)
        w = t.weight
        neg = w.is_rational() and w.rational() < 0
        mag = -w if neg else w
        if not parts:
            text = _fmt_weight(mag)
        elif mag == 1:
            text = " * ".join(parts)
        else:
            text = _fmt_weight(mag) + " * " + " * ".join(parts)
        if not chunks:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append((" - " if neg else " + ") + text)
    return "".join(chunks)
