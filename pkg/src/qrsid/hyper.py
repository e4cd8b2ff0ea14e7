"""Basic hypergeometric series and the classical summation formulas."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergentProduct, NonTerminating, PoleInLowerParameter, QRSIDError
from .monomial import Monomial
from .products import Factor, ProductExpr, ProductTerm, product_expr_eval
from .qseries import QSeries
from .report import ERROR, SKIP, VerifyReport, compare, render_assignment
from .ring import I, ONE, Scalar

__all__ = ["PhiSpec", "phi_eval", "phi", "summation_check", "sample_summation", "SUMMATIONS"]


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


@dataclass(frozen=True)
class PhiSpec:
    """``r phi s (upper; lower; q^base_step, argument)``."""

    upper: tuple
    lower: tuple
    argument: Monomial
    base_step: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "base_step", Fraction(self.base_step))
        if self.base_step <= 0:
            raise ValueError("base step must be positive")
        for m in self.upper + self.lower + (self.argument,):
            if not m.is_concrete:
                raise ValueError("phi parameters must be concrete monomials")


def _split(c: Scalar, e: Fraction):
    """``1 - c q^e`` as (scalar, shift, binomial or None) with a positive binomial exponent."""
    if e > 0:
        return ONE, Fraction(0), (c, e)
    if e == 0:
        return ONE - c, Fraction(0), None
    return -c, e, (c.inverse(), -e)


def _terminates(spec: PhiSpec) -> bool:
    s = spec.base_step
    for a in spec.upper:
        if a.coeff == 1 and a.qexp <= 0 and (a.qexp / s).denominator == 1:
            return True
    return False


def phi_eval(spec: PhiSpec, cap) -> QSeries:
    """Truncated value of the series; exact up to ``cap``."""
    cap = Fraction(cap)
    s = spec.base_step
    z = spec.argument
    expo = 1 + len(spec.lower) - len(spec.upper)
    grid = _lcm(s.denominator, cap.denominator, z.qexp.denominator,
                *(m.qexp.denominator for m in spec.upper + spec.lower))
    if z.coeff.is_zero():
        return QSeries.one(cap, grid)
    nums = [a for a in spec.upper if not a.coeff.is_zero()]
    dens = [Monomial.q(s)] + [b for b in spec.lower if not b.coeff.is_zero()]
    if (expo < 0 or (expo == 0 and z.qexp <= 0)) and not _terminates(spec):
        raise NonTerminating("term exponents do not grow and the series does not terminate")
    # index past which every factor exponent is positive
    neg = [-m.qexp / s for m in nums + dens if m.qexp <= 0]
    n0 = math.floor(max(neg)) + 1 if neg else 0
    limit = n0 + 16 * (math.ceil(cap * grid) + 8) + 16
    coeffs = [ONE]
    vals = [Fraction(0)]
    steps = []
    n = 0
    while True:
        c = coeffs[-1] * z.coeff * (-1) ** (expo % 2)
        v = vals[-1] + z.qexp + expo * s * n
        up, down = [], []
        dead = False
        for a in nums:
            k, sh, b = _split(a.coeff, a.qexp + s * n)
            if k.is_zero():
                dead = True
                break
            c, v = c * k, v + sh
            if b:
                up.append(b)
        if dead:
            break
        for b0 in dens:
            k, sh, b = _split(b0.coeff, b0.qexp + s * n)
            if k.is_zero():
                raise PoleInLowerParameter("lower parameter %s hits q^-%s" % (b0, s * n))
            c, v = c / k, v - sh
            if b:
                down.append(b)
        n += 1
        if n >= n0 and v > cap:
            delta = expo * s * n + z.qexp
            if delta > 0:
                break
        if n > limit:
            raise NonTerminating("phi series did not leave the cap after %d terms" % limit)
        coeffs.append(c)
        vals.append(v)
        steps.append((up, down))
    # precision needed for the running unit factor: cap minus later valuations
    N = len(vals)
    suffix = [Fraction(0)] * N
    m = vals[-1]
    for j in range(N - 1, -1, -1):
        m = min(m, vals[j])
        suffix[j] = m
    total = QSeries.zero(cap, grid)
    U = QSeries.one(cap - suffix[0], grid)
    for j in range(N):
        if vals[j] <= cap:
            total = total + U.with_cap(cap - vals[j]).shift(vals[j], coeffs[j])
        if j + 1 < N:
            P = cap - suffix[j + 1]
            U = U.with_cap(P) if P <= U.order_cap else U
            up, down = steps[j]
            for c, e in up:
                if e <= P:
                    U = U.mul_binomial(c, e)
            for c, e in down:
                if e <= P:
                    U = U.mul_binomial(c, e, inverse=True)
    return total


def phi(upper, lower, z, cap, step=1) -> QSeries:
    return phi_eval(PhiSpec(tuple(upper), tuple(lower), z, step), cap)


def times(make_a, make_b, cap) -> QSeries:
    """``make_a(cap) * make_b(cap)`` exact to ``cap`` even when a factor has negative valuation."""
    cap = Fraction(cap)
    a, b = make_a(cap), make_b(cap)
    va = a.valuation if not a.is_zero() else 0
    vb = b.valuation if not b.is_zero() else 0
    if vb < 0:
        a = make_a(cap - vb)
    if va < 0:
        b = make_b(cap - va)
    return (a * b).with_cap(cap)


# summation formulas -------------------------------------------------------------


def _prod(num, den, weight=ONE) -> ProductExpr:
    fs = [Factor(m, 1, 1) for m in num] + [Factor(m, 1, -1) for m in den]
    return ProductExpr((ProductTerm(weight, tuple(fs)),))


def _prod_mod(pairs) -> ProductExpr:
    return ProductExpr((ProductTerm(ONE, tuple(Factor(m, mod, p) for m, mod, p in pairs)),))


Q = Monomial.q


def _gauss(v, cap):
    a, b, c = v["a"], v["b"], v["c"]
    z = c / (a * b)
    if z.qexp <= 0:
        raise _Skip("argument c/ab needs positive q-order")
    lhs = phi([a, b], [c], z, cap)
    rhs = product_expr_eval(_prod([c / a, c / b], [c, z]), cap)
    return lhs, rhs


def _bailey_daum(v, cap):
    a, b = v["a"], v["b"]
    z = -Q(1) / b
    if z.qexp <= 0:
        raise _Skip("argument -q/b needs positive q-order")
    lhs = phi([a, b], [a * Q(1) / b], z, cap)
    rhs = product_expr_eval(
        _prod_mod([(-Q(1), 1, 1), (a * Q(1), 2, 1), (a * Q(2) / b ** 2, 2, 1),
                   (a * Q(1) / b, 1, -1), (z, 1, -1)]),
        cap,
    )
    return lhs, rhs


def _dixon(v, cap):
    a, b, c = v["a"], v["b"], v["c"]
    r = a.sqrt()
    if r is None:
        raise _Skip("a has no exact square root")
    z = Q(1) * r / (b * c)
    if z.qexp <= 0:
        raise _Skip("argument q a^(1/2)/bc needs positive q-order")
    lhs = phi([a, -Q(1) * r, b, c], [-r, a * Q(1) / b, a * Q(1) / c], z, cap)
    rhs = product_expr_eval(
        _prod([a * Q(1), Q(1) * r / b, Q(1) * r / c, a * Q(1) / (b * c)],
              [a * Q(1) / b, a * Q(1) / c, Q(1) * r, z]),
        cap,
    )
    return lhs, rhs


def _heine(v, cap):
    a, b, c, z = v["a"], v["b"], v["c"], v["z"]
    w = a * b * z / c
    if z.qexp <= 0 or w.qexp <= 0:
        raise _Skip("arguments z and abz/c need positive q-order")
    lhs = phi([a, b], [c], z, cap)
    rhs = times(lambda k: product_expr_eval(_prod([w], [z]), k),
                lambda k: phi([c / a, c / b], [c], w, k), cap)
    return lhs, rhs


SUMMATIONS = {
    "q_gauss": (_gauss, ("a", "b", "c")),
    "bailey_daum": (_bailey_daum, ("a", "b")),
    "q_dixon": (_dixon, ("a", "b", "c")),
    "heine": (_heine, ("a", "b", "c", "z")),
}


class _Skip(Exception):
    pass


def run_check(name, table, which, assign, cap) -> VerifyReport:
    """Shared driver for formula checks: inadmissible inputs become SKIP."""
    try:
        fn, names = table[which]
    except KeyError:
        raise KeyError("unknown formula %r" % which) from None
    missing = [n for n in names if n not in assign]
    text = render_assignment(assign)
    ident = "%s:%s" % (name, which)
    if missing:
        return VerifyReport(ident, SKIP, cap, text, note="unassigned: " + ", ".join(missing))
    t0 = time.perf_counter()
    try:
        lhs, rhs = fn(assign, Fraction(cap))
    except _Skip as exc:
        return VerifyReport(ident, SKIP, cap, text, note=str(exc))
    except (PoleInLowerParameter, DivergentProduct, NonTerminating, ZeroDivisionError) as exc:
        return VerifyReport(ident, SKIP, cap, text, note="inadmissible: %s" % exc)
    except QRSIDError as exc:
        return VerifyReport(ident, ERROR, cap, text, note="%s: %s" % (type(exc).__name__, exc))
    return compare(ident, lhs, rhs, cap, t0, assignment=text)


def summation_check(which: str, assign, cap=20) -> VerifyReport:
    """Compare both sides of a classical summation or transformation formula."""
    return run_check("summation", SUMMATIONS, which, assign, cap)


_COEFFS = [ONE, -ONE, I, -I, Scalar(2), Scalar(Fraction(1, 2)), Scalar(-3)]


def _mono(rng, exps, coeffs=_COEFFS):
    return Monomial(rng.choice(coeffs), Fraction(rng.choice(exps)))


def sample_summation(which: str, count: int = 20, seed: int = 0):
    """Admissible random assignments for ``summation_check``."""
    rng = random.Random("%s/%d" % (which, seed))
    out = []
    small = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
    while len(out) < count:
        if which == "q_gauss":
            a, b = _mono(rng, small), _mono(rng, small)
            c = Monomial(rng.choice(_COEFFS), a.qexp + b.qexp + rng.choice([Fraction(1, 2), 1, 2, 3]))
            v = {"a": a, "b": b, "c": c}
        elif which == "bailey_daum":
            a = _mono(rng, small)
            b = _mono(rng, [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)])
            v = {"a": a, "b": b}
        elif which == "q_dixon":
            r = _mono(rng, [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)],
                      [ONE, -ONE, I, Scalar(2)])
            a = r ** 2
            b = _mono(rng, [Fraction(0), Fraction(1, 2), Fraction(1)])
            c = Monomial(rng.choice(_COEFFS), r.qexp + 1 - b.qexp - rng.choice([Fraction(1, 2), Fraction(1)]))
            v = {"a": a, "b": b, "c": c}
        elif which == "heine":
            a, b = _mono(rng, small), _mono(rng, small)
            z = _mono(rng, [Fraction(1), Fraction(3, 2), Fraction(2)])
            c = Monomial(rng.choice(_COEFFS), a.qexp + b.qexp + z.qexp - rng.choice([Fraction(1, 2), Fraction(1)]))
            v = {"a": a, "b": b, "c": c, "z": z}
        else:
            raise KeyError("unknown formula %r" % which)
        if summation_check(which, v, 4).status != SKIP:
            out.append(v)
    return out
