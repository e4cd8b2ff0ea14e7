"""Laurent series in z over q-series and the constant-term operator.

Every expansion carries a completeness certificate: a lower bound on the
q-order of each z^m slice, plus one bound for every slice outside the stored
window.  The outside bound always exceeds the cap, so a missing slice is a
proven zero up to the cap.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergentFactor, DivergentProduct, NonTerminating, PoleInLowerParameter, QRSIDError, WindowOverflow
from .hyper import phi, times
from .monomial import Monomial
from .products import Factor, ProductExpr, ProductTerm, product_expr_eval
from .qseries import QSeries
from .report import ERROR, SKIP, VerifyReport, compare, render_assignment
from .ring import I, ONE, Scalar

__all__ = [
    "FactorSpec",
    "ZLaurent",
    "factor_expand",
    "laurent_mul",
    "constant_term",
    "integrand_expand",
    "master_check",
    "sample_master",
    "MASTERS",
]


def window_bound(cap) -> int:
    return 4 * (math.ceil(Fraction(cap)) + 2)


@dataclass(frozen=True)
class FactorSpec:
    """``(base * z^z_power; q^step)_inf`` or its reciprocal."""

    base: Monomial
    z_power: int
    step: Fraction = Fraction(1)
    inverted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))
        object.__setattr__(self, "z_power", int(self.z_power))
        if self.z_power == 0:
            raise ValueError("z_power must be nonzero")
        if self.step <= 0:
            raise ValueError("step must be positive")
        if not self.base.is_concrete:
            raise ValueError("factor base must be concrete")
        if self.inverted and not self.base.coeff.is_zero() and self.base.qexp <= 0:
            raise DivergentFactor("1/(%s z^%d; q^%s) has no certified expansion" % (self.base, self.z_power, self.step))

    def reflect(self) -> "FactorSpec":
        return FactorSpec(self.base, -self.z_power, self.step, self.inverted)

    def order(self, n: int) -> Fraction:
        """q-order of the n-th term of the expansion."""
        e = self.base.qexp * n
        if not self.inverted:
            e += self.step * (n * (n - 1) // 2)
        return e

    def floor(self) -> Fraction:
        if self.base.coeff.is_zero():
            return Fraction(0)
        if self.inverted:
            return Fraction(0)
        # quadratic in n with positive leading coefficient
        v = Fraction(1, 2) - self.base.qexp / self.step
        cands = {0, max(0, math.floor(v)), max(0, math.ceil(v))}
        return min(self.order(n) for n in cands)


class ZLaurent:
    """Finite window of z-slices with a certified lower bound outside it."""

    __slots__ = ("slices", "bounds", "out", "cap", "grid")

    def __init__(self, slices, bounds, out, cap, grid=1):
        self.slices = dict(slices)
        self.bounds = dict(bounds)
        self.out = Fraction(out)
        self.cap = Fraction(cap)
        self.grid = grid
        if self.out <= self.cap:
            raise ValueError("outside bound must exceed the cap")

    @classmethod
    def constant(cls, f: QSeries, m: int = 0) -> "ZLaurent":
        v = f.valuation if not f.is_zero() else f.order_cap + 1
        return cls({m: f}, {m: Fraction(v)}, f.order_cap + 1, f.order_cap, f.grid_den)

    @property
    def window(self):
        if not self.slices:
            return (0, 0)
        return (min(self.slices), max(self.slices))

    @property
    def floor(self) -> Fraction:
        return min([self.out] + list(self.bounds.values()))

    def min_q_order(self, m: int) -> Fraction:
        return self.bounds.get(m, self.out)

    def slice(self, m: int) -> QSeries:
        s = self.slices.get(m)
        if s is None:
            return QSeries.zero(self.cap, self.grid)
        return s

    def reflect(self) -> "ZLaurent":
        """The substitution z -> 1/z."""
        return ZLaurent({-m: s for m, s in self.slices.items()},
                        {-m: b for m, b in self.bounds.items()}, self.out, self.cap, self.grid)

    def with_cap(self, cap) -> "ZLaurent":
        cap = Fraction(cap)
        if cap >= self.cap:
            return self
        keep = {m: s.with_cap(cap) for m, s in self.slices.items() if self.bounds[m] <= cap}
        out = min([self.out] + [b for m, b in self.bounds.items() if m not in keep])
        return ZLaurent(keep, {m: self.bounds[m] for m in keep}, out, cap, self.grid)


def factor_expand(f: FactorSpec, cap, extra: int = 0, max_window: int | None = None) -> ZLaurent:
    """Euler expansion of one z-factor with a certified window.

    ``extra`` keeps that many additional terms past the certificate, which
    must not change anything up to the cap.
    """
    cap = Fraction(cap)
    M = window_bound(cap) if max_window is None else max_window
    step = f.step
    grid = math.lcm(cap.denominator, step.denominator, f.base.qexp.denominator)
    if f.base.coeff.is_zero():
        one = QSeries.one(cap, grid)
        return ZLaurent({0: one}, {0: Fraction(0)}, cap + 1, cap, grid)
    c = f.base.coeff
    slices, bounds = {}, {}
    vertex = max(0, math.ceil(Fraction(1, 2) - f.base.qexp / step)) if not f.inverted else 0
    # 1/(q^step; q^step)_n, built incrementally at the full precision
    floor = f.floor()
    R = QSeries.one(cap - floor, grid)
    coef = ONE
    n = 0
    spare = extra
    while True:
        o = f.order(n)
        if o > cap and n >= vertex:
            if spare <= 0:
                break
            spare -= 1
        m = f.z_power * n
        if abs(m) > M:
            raise WindowOverflow("z-window would exceed %d" % M)
        if o <= cap:
            s = R.with_cap(cap - o).shift(o, coef)
        else:
            s = QSeries.zero(cap, grid)
        slices[m] = s
        bounds[m] = o
        n += 1
        coef = coef * c if f.inverted else coef * (-c)
        if step * n <= cap - floor:
            R = R.mul_binomial(1, step * n, inverse=True)
    # orders keep growing past the vertex, so the first skipped term bounds the rest
    return ZLaurent(slices, bounds, f.order(n), cap, grid)


def laurent_mul(a: ZLaurent, b: ZLaurent, max_window: int | None = None) -> ZLaurent:
    """Convolution over z-powers; the cap shrinks by the other factor's floor when negative."""
    fa, fb = a.floor, b.floor
    cap = min(a.cap + min(fb, 0), b.cap + min(fa, 0))
    grid = math.lcm(a.grid, b.grid)
    M = window_bound(cap) if max_window is None else max_window
    slices, bounds = {}, {}
    dropped = [a.out + fb, b.out + fa]
    for m1, s1 in a.slices.items():
        b1 = a.bounds[m1]
        for m2, s2 in b.slices.items():
            bd = b1 + b.bounds[m2]
            m = m1 + m2
            if bd > cap:
                dropped.append(bd)
                continue
            if abs(m) > M:
                raise WindowOverflow("z-window would exceed %d" % M)
            prod = (s1 * s2).with_cap(cap)
            if m in slices:
                slices[m] = slices[m] + prod
                bounds[m] = min(bounds[m], bd)
            else:
                slices[m] = prod
                bounds[m] = bd
    return ZLaurent(slices, bounds, min(dropped), cap, grid)


def constant_term(a: ZLaurent, m: int = 0) -> QSeries:
    """Coefficient of z^m."""
    return a.slice(m)


def integrand_expand(factors, cap, const: QSeries | None = None, extra: int = 0) -> ZLaurent:
    """Product of z-factors (and an optional z-free series) with certificates.

    Each factor is expanded to the cap raised by the negative floors of the
    others, so the final product is exact up to ``cap``.
    """
    cap = Fraction(cap)
    floors = [f.floor() for f in factors]
    total_neg = sum((x for x in floors if x < 0), Fraction(0))
    acc = None
    for f, fl in zip(factors, floors):
        own = cap - (total_neg - min(fl, 0))
        z = factor_expand(f, own, extra=extra)
        acc = z if acc is None else laurent_mul(acc, z)
    if acc is None:
        acc = ZLaurent({0: QSeries.one(cap)}, {0: Fraction(0)}, cap + 1, cap)
    if const is not None:
        acc = laurent_mul(acc, ZLaurent.constant(const.with_cap(cap - min(acc.floor, 0))))
    return acc.with_cap(cap)


# master formulas ---------------------------------------------------------------------

Q = Monomial.q


class _Skip(Exception):
    pass


def _z(base, power=1, inverted=False, step=1):
    return FactorSpec(base, power, step, inverted)


def _prod(num, den) -> ProductExpr:
    fs = [Factor(m, 1, 1) for m in num] + [Factor(m, 1, -1) for m in den]
    return ProductExpr((ProductTerm(ONE, tuple(fs)),))


def _need_positive(*ms):
    for m in ms:
        if not m.coeff.is_zero() and m.qexp <= 0:
            raise _Skip("%s needs positive q-order" % m)


def _gr_4_10_8(v, cap):
    a1, a2, a3, b1, c1, c2, c3, d1 = (v[k] for k in ("a1", "a2", "a3", "b1", "c1", "c2", "c3", "d1"))
    if (a1 * a2 * a3).qexp <= (c1 * c2 * c3).qexp:
        raise _Skip("needs qexp(a1 a2 a3) > qexp(c1 c2 c3)")
    _need_positive(c1, c2, c3, d1, b1 / d1)
    lhs = constant_term(integrand_expand(
        [_z(a1), _z(a2), _z(a3), _z(b1, -1), _z(c1, 1, True), _z(c2, 1, True), _z(c3, 1, True), _z(d1, -1, True)],
        cap))
    rhs = times(
        lambda k: product_expr_eval(_prod([a1 * d1, a2 * d1, a3 * d1, b1 / d1], [Q(1), c1 * d1, c2 * d1, c3 * d1]), k),
        lambda k: phi([c1 * d1, c2 * d1, c3 * d1, Q(1) * d1 / b1], [a1 * d1, a2 * d1, a3 * d1], b1 / d1, k),
        cap)
    return lhs, rhs


def _gr_4_11_2(v, cap):
    a, b, c, al, be = (v[k] for k in ("a", "b", "c", "alpha", "beta"))
    _need_positive(a, b, al, be)
    lhs = constant_term(integrand_expand(
        [_z(c / be), _z(Q(1) / (c * al)), _z(c * al, -1), _z(Q(1) * be / c, -1),
         _z(a, 1, True), _z(b, 1, True), _z(al, -1, True), _z(be, -1, True)],
        cap))
    rhs = product_expr_eval(_prod(
        [a * b * al * be, c, Q(1) / c, c * al / be, Q(1) * be / (c * al)],
        [a * al, a * be, b * al, b * be, Q(1)]), cap)
    return lhs, rhs


def _gr_4_11_3(v, cap):
    a, b, c, al, be, ga = (v[k] for k in ("a", "b", "c", "alpha", "beta", "gamma"))
    _need_positive(a, b, c, al, be)
    de = a * b * c * al * be
    lhs = constant_term(integrand_expand(
        [_z(de), _z(Q(1) / ga), _z(ga, -1), _z(ga / (al * be)), _z(Q(1) * al * be / ga, -1),
         _z(a, 1, True), _z(b, 1, True), _z(c, 1, True), _z(al, -1, True), _z(be, -1, True)],
        cap))
    rhs = product_expr_eval(_prod(
        [ga / al, Q(1) * al / ga, ga / be, Q(1) * be / ga, de / a, de / b, de / c],
        [a * al, a * be, b * al, b * be, c * al, c * be, Q(1)]), cap)
    return lhs, rhs


def _rosengren_3_2(v, cap):
    a1, a2, b1, b2, b3 = (v[k] for k in ("alpha1", "alpha2", "beta1", "beta2", "beta3"))
    if a1 * a2 != b1 * b2 * b3:
        raise _Skip("needs alpha1 alpha2 = beta1 beta2 beta3")
    _need_positive(b1, b2, b3, a1 / b1)
    lhs = constant_term(integrand_expand(
        [_z(a1), _z(a2), _z(Q(1)), _z(Monomial(ONE, 0), -1),
         _z(b1, 1, True), _z(b2, 1, True), _z(b3, 1, True)],
        cap))
    rhs = times(lambda k: product_expr_eval(_prod([b1, a1 / b1], [Q(1)]), k),
                lambda k: phi([a2 / b2, a2 / b3], [b1], a1 / b1, k), cap)
    return lhs, rhs


def _prop_3_2(v, cap):
    a, b, c, d, t = (v[k] for k in ("a", "b", "c", "d", "t"))
    _need_positive(a, b, d, t)
    if not c.coeff.is_zero():
        _need_positive(c / t)
    lhs = constant_term(integrand_expand(
        [_z(a * b), _z(c), _z(Q(1) / t), _z(t, -1),
         _z(a, 1, True), _z(b, 1, True), _z(c / t, 1, True), _z(d, -1, True)],
        cap))
    rhs = times(lambda k: product_expr_eval(_prod([a * b * d, d * Q(1) / t, t, c], [Q(1), a * d, b * d, c * d / t]), k),
                lambda k: phi([a, b, c * d / t], [c, a * b * d], t, k), cap)
    return lhs, rhs


def _eq_2_1(v, cap):
    b1, b3 = v["beta1"], v["beta3"]
    _need_positive(b1, b3)
    lhs = constant_term(integrand_expand(
        [_z(b1 * b3), _z(Q(1)), _z(Monomial(ONE, 0), -1), _z(b1, 1, True), _z(b3, 1, True)], cap))
    rhs = product_expr_eval(_prod([b1, b3], [Q(1)]), cap)
    return lhs, rhs


MASTERS = {
    "gr_4_10_8": (_gr_4_10_8, ("a1", "a2", "a3", "b1", "c1", "c2", "c3", "d1")),
    "gr_4_11_2": (_gr_4_11_2, ("a", "b", "c", "alpha", "beta")),
    "gr_4_11_3": (_gr_4_11_3, ("a", "b", "c", "alpha", "beta", "gamma")),
    "rosengren_3_2": (_rosengren_3_2, ("alpha1", "alpha2", "beta1", "beta2", "beta3")),
    "prop_3_2": (_prop_3_2, ("a", "b", "c", "d", "t")),
    "eq_2_1": (_eq_2_1, ("beta1", "beta3")),
}


def master_check(which: str, assign, cap=25) -> VerifyReport:
    """Constant term of the integrand against the closed form."""
    try:
        fn, names = MASTERS[which]
    except KeyError:
        raise KeyError("unknown master formula %r" % which) from None
    ident = "master:%s" % which
    text = render_assignment(assign)
    missing = [n for n in names if n not in assign]
    if missing:
        return VerifyReport(ident, SKIP, cap, text, note="unassigned: " + ", ".join(missing))
    t0 = time.perf_counter()
    try:
        lhs, rhs = fn(assign, Fraction(cap))
    except _Skip as exc:
        return VerifyReport(ident, SKIP, cap, text, note=str(exc))
    except (DivergentFactor, DivergentProduct, PoleInLowerParameter, NonTerminating, ZeroDivisionError) as exc:
        return VerifyReport(ident, SKIP, cap, text, note="inadmissible: %s" % exc)
    except QRSIDError as exc:
        return VerifyReport(ident, ERROR, cap, text, note="%s: %s" % (type(exc).__name__, exc))
    return compare(ident, lhs, rhs, cap, t0, assignment=text)


_COEFFS = [ONE, -ONE, I, -I, Scalar(2), Scalar(Fraction(1, 2))]
_POS = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
_ANY = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def _m(rng, exps, coeffs=_COEFFS):
    return Monomial(rng.choice(coeffs), rng.choice(exps))


def _draw(rng, which):
    if which == "gr_4_10_8":
        d1 = _m(rng, _POS)
        return {"a1": _m(rng, _POS + [Fraction(4)]), "a2": _m(rng, _POS + [Fraction(4)]), "a3": _m(rng, _POS),
                "b1": Monomial(rng.choice(_COEFFS), d1.qexp + rng.choice(_POS)),
                "c1": _m(rng, _POS), "c2": _m(rng, _POS), "c3": _m(rng, _POS), "d1": d1}
    if which == "gr_4_11_2":
        return {"a": _m(rng, _POS), "b": _m(rng, _POS), "c": _m(rng, _ANY),
                "alpha": _m(rng, _POS), "beta": _m(rng, _POS)}
    if which == "gr_4_11_3":
        return {"a": _m(rng, _POS), "b": _m(rng, _POS), "c": _m(rng, _POS),
                "alpha": _m(rng, _POS), "beta": _m(rng, _POS), "gamma": _m(rng, _ANY)}
    if which == "rosengren_3_2":
        b1, b2, b3 = _m(rng, _POS), _m(rng, _POS), _m(rng, _POS)
        a1 = Monomial(rng.choice(_COEFFS), b1.qexp + rng.choice(_POS))
        a2 = b1 * b2 * b3 / a1
        return {"alpha1": a1, "alpha2": a2, "beta1": b1, "beta2": b2, "beta3": b3}
    if which == "prop_3_2":
        t = _m(rng, _POS)
        c = rng.choice([Monomial(Scalar(0), 0), Monomial(rng.choice(_COEFFS), t.qexp + rng.choice(_POS))])
        return {"a": _m(rng, _POS), "b": _m(rng, _POS), "c": c, "d": _m(rng, _POS), "t": t}
    if which == "eq_2_1":
        return {"beta1": _m(rng, _POS), "beta3": _m(rng, _POS)}
    raise KeyError("unknown master formula %r" % which)


def sample_master(which: str, count: int = 10, seed: int = 0):
    """Admissible random assignments for ``master_check``."""
    rng = random.Random("%s/%d" % (which, seed))
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 200 * count:
            raise RuntimeError("could not draw admissible assignments for %s" % which)
        v = _draw(rng, which)
        if master_check(which, v, 3).status != SKIP:
            out.append(v)
    return out
