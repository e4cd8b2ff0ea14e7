"""Naive box enumerator, kept independent of the layered evaluator in ``sums``.

It iterates the whole box [0, B]^k with numpy, doubling B until every region
point of the shell [0, 2B]^k minus [0, B]^k has exponent above the cap, then
adds up the surviving terms one Pochhammer at a time.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DivisionByZero, NonTerminating
from .monomial import Monomial
from .products import poch_finite
from .qseries import QSeries
from .ring import unit_power

MAX_POINTS = 4_000_000


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def _grids(k, B):
    axes = np.meshgrid(*([np.arange(B + 1, dtype=np.int64)] * k), indexing="ij")
    return [a.ravel() for a in axes]


def _quad_np(quad, idx, D):
    k = quad.k
    total = np.full(idx[0].shape, int(quad.constant * D), dtype=np.int64)
    for a in range(k):
        total += int(quad.linear[a] * D) * idx[a]
        for b in range(k):
            c = quad.matrix[a][b] * D
            if c:
                total += int(c) * idx[a] * idx[b]
    return total


def _linear_np(coeffs, const, idx):
    total = np.full(idx[0].shape, const, dtype=np.int64)
    for c, x in zip(coeffs, idx):
        if c:
            total += c * x
    return total


class _Box:
    def __init__(self, spec, assign, cap):
        self.spec = spec
        self.cap = Fraction(cap)
        self.values = {p.name: assign[p.name] for p in spec.params}
        dens = [spec.quad.denominator()] + [v.qexp.denominator for v in self.values.values()]
        self.D = _lcm(*dens)

    def arrays(self, B):
        spec = self.spec
        idx = _grids(spec.k, B)
        D = self.D
        E = _quad_np(spec.quad, idx, D)
        ok = np.ones(E.shape, dtype=bool)
        for s in spec.subscripts:
            ok &= _linear_np(s.coeffs, s.const, idx) >= 0
        for p in spec.params:
            v = self.values[p.name]
            M = _linear_np(p.coeffs, p.const, idx)
            if v.coeff.is_zero():
                ok &= M <= 0
            elif v.qexp:
                E = E + int(v.qexp * D) * M
        return idx, E, ok

    def choose_box(self):
        k = self.spec.k
        capD = math.floor(self.cap * self.D)
        B = 4
        while True:
            if (2 * B + 1) ** k > MAX_POINTS:
                raise NonTerminating("box oracle could not certify a box")
            idx, E, ok = self.arrays(2 * B)
            outside = np.zeros(E.shape, dtype=bool)
            for x in idx:
                outside |= x > B
            if not np.any(ok & outside & (E <= capD)):
                return B
            B *= 2

    def total(self) -> QSeries:
        spec = self.spec
        B = self.choose_box()
        idx, E, ok = self.arrays(B)
        capD = math.floor(self.cap * self.D)
        sel = np.nonzero(ok & (E <= capD))[0]
        total = QSeries.zero(self.cap)
        inv_cache = {}
        for n in sel:
            pt = tuple(int(x[n]) for x in idx)
            e = Fraction(int(E[n]), self.D)
            rest = self.cap - e
            t = spec.unit_form(pt)
            if t.denominator != 1:
                raise ValueError("unit exponent is not an integer at %s" % (pt,))
            c = unit_power(int(t))
            for p in spec.params:
                v = self.values[p.name]
                m = p(pt)
                if v.coeff.is_zero():
                    if m < 0:
                        raise DivisionByZero("zero parameter to a negative power")
                    continue
                c = c * v.coeff ** m
            term = QSeries.one(rest)
            for s in spec.subscripts:
                L = s(pt)
                key = (s.modulus, L)
                inv = inv_cache.get(key)
                if inv is None or inv.order_cap < rest:
                    inv = poch_finite(Monomial.q(s.modulus), s.modulus, L, self.cap + 1).invert()
                    inv_cache[key] = inv
                term = term * inv.with_cap(rest)
            total = total + term.shift(e, c)
        return total


def box_sum(spec, assign=None, cap=10) -> QSeries:
    """Brute-force value of one sum side."""
    return _Box(spec, assign or {}, cap).total()


def box_sums(specs, assign=None, cap=10) -> QSeries:
    from .sums import SumSideSpec

    if isinstance(specs, SumSideSpec):
        specs = [specs]
    total = None
    for s in specs:
        v = box_sum(s, assign, cap)
        total = v if total is None else total + v
    return total
