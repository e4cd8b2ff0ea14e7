"""Multi-sum evaluation.

A sum side is

    sum over i in Z^k, i >= 0, L_j(i) >= 0 of
        i^T(i) * q^Q(i) * prod_p p^M_p(i) / prod_j (q^n_j; q^n_j)_{L_j(i)}

with Q and T quadratic, L_j and M_p integer linear forms.  Parameters are
folded in first (each assigned monomial c*q^e adds e*M_p to Q and c^M_p to the
coefficient), then lattice points are enumerated layer by layer over all but
one index, the range of the last index being solved from a quadratic
inequality.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import kernels
from .errors import DivisionByZero, GridOverflow, NonTerminating
from .qseries import MAX_GRID, QSeries
from .ring import Scalar, zeta_power

__all__ = [
    "QuadForm",
    "Subscript",
    "ParamForm",
    "SumSideSpec",
    "fold_params",
    "sum_side_eval",
    "sum_sides_eval",
]

PATIENCE = 6
SAFETY_FACTOR = 64


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def _fr(x) -> str:
    x = Fraction(x)
    return str(x)


@dataclass(frozen=True)
class QuadForm:
    """``Q(i) = i^T M i + linear . i + constant`` with M symmetric."""

    matrix: tuple
    linear: tuple
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        m = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        k = len(m)
        if any(len(row) != k for row in m):
            raise ValueError("matrix must be square")
        for a in range(k):
            for b in range(k):
                if m[a][b] != m[b][a]:
                    raise ValueError("matrix must be symmetric")
        lin = tuple(Fraction(x) for x in self.linear)
        if len(lin) != k:
            raise ValueError("linear part has the wrong length")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "constant", Fraction(self.constant))

    @property
    def k(self) -> int:
        return len(self.linear)

    @classmethod
    def zero(cls, k: int) -> "QuadForm":
        return cls(tuple((0,) * k for _ in range(k)), (0,) * k, 0)

    @classmethod
    def from_function(cls, k: int, f, checks: int = 25, seed: int = 0) -> "QuadForm":
        """Recover the coefficients of a quadratic ``f`` by finite differences."""
        e = [tuple(1 if b == a else 0 for b in range(k)) for a in range(k)]
        zero = (0,) * k
        c = Fraction(f(*zero))
        diag, lin = [], []
        for a in range(k):
            f1 = Fraction(f(*e[a]))
            f2 = Fraction(f(*(2 * x for x in e[a])))
            maa = (f2 - 2 * f1 + c) / 2
            diag.append(maa)
            lin.append(f1 - c - maa)
        m = [[Fraction(0)] * k for _ in range(k)]
        for a in range(k):
            m[a][a] = diag[a]
            for b in range(a + 1, k):
                pt = tuple(1 if t in (a, b) else 0 for t in range(k))
                fab = Fraction(f(*pt))
                mab = (fab - diag[a] - diag[b] - lin[a] - lin[b] - c) / 2
                m[a][b] = m[b][a] = mab
        out = cls(tuple(map(tuple, m)), tuple(lin), c)
        rng = random.Random(seed)
        for _ in range(checks):
            pt = tuple(rng.randint(-7, 7) for _ in range(k))
            if out(pt) != Fraction(f(*pt)):
                raise ValueError("function is not a quadratic polynomial")
        return out

    def __call__(self, pt) -> Fraction:
        m, lin = self.matrix, self.linear
        total = self.constant
        for a, x in enumerate(pt):
            if not x:
                continue
            total += lin[a] * x
            row = m[a]
            for b, y in enumerate(pt):
                if y:
                    total += row[b] * x * y
        return total

    def add_linear(self, coeffs, const, scale) -> "QuadForm":
        scale = Fraction(scale)
        lin = tuple(l + scale * c for l, c in zip(self.linear, coeffs))
        return QuadForm(self.matrix, lin, self.constant + scale * const)

    def denominator(self) -> int:
        xs = [x for row in self.matrix for x in row] + list(self.linear) + [self.constant]
        return _lcm(*(x.denominator for x in xs))

    def to_json(self) -> dict:
        return {
            "matrix": [[_fr(x) for x in row] for row in self.matrix],
            "linear": [_fr(x) for x in self.linear],
            "constant": _fr(self.constant),
        }

    @classmethod
    def from_json(cls, d) -> "QuadForm":
        return cls(
            tuple(tuple(Fraction(x) for x in row) for row in d["matrix"]),
            tuple(Fraction(x) for x in d["linear"]),
            Fraction(d.get("constant", 0)),
        )


def _lin(coeffs, const, pt) -> int:
    return const + sum(c * x for c, x in zip(coeffs, pt))


@dataclass(frozen=True)
class Subscript:
    """Denominator factor ``(q^modulus; q^modulus)_{coeffs . i + const}``."""

    modulus: Fraction
    coeffs: tuple
    const: int = 0

    def __post_init__(self):
        object.__setattr__(self, "modulus", Fraction(self.modulus))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "const", int(self.const))
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")

    def __call__(self, pt) -> int:
        return _lin(self.coeffs, self.const, pt)

    def to_json(self):
        return {"modulus": _fr(self.modulus), "coeffs": list(self.coeffs), "const": self.const}

    @classmethod
    def from_json(cls, d):
        return cls(Fraction(d["modulus"]), tuple(d["coeffs"]), d.get("const", 0))


@dataclass(frozen=True)
class ParamForm:
    """Parameter ``name`` raised to ``coeffs . i + const``."""

    name: str
    coeffs: tuple
    const: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "const", int(self.const))

    def __call__(self, pt) -> int:
        return _lin(self.coeffs, self.const, pt)

    def to_json(self):
        return {"name": self.name, "coeffs": list(self.coeffs), "const": self.const}

    @classmethod
    def from_json(cls, d):
        return cls(d["name"], tuple(d["coeffs"]), d.get("const", 0))


@dataclass(frozen=True)
class SumSideSpec:
    """One k-fold sum; see the module docstring.

    ``coeff_forms`` and ``zero_forms`` only appear after folding: each
    ``(c, form)`` multiplies a term by ``c^form(i)``, and every zero form must
    vanish for a term to be nonzero.
    """

    k: int
    quad: QuadForm
    unit_form: QuadForm
    subscripts: tuple = ()
    params: tuple = ()
    grid: int = 1
    coeff_forms: tuple = field(default=())
    zero_forms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "subscripts", tuple(self.subscripts))
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "coeff_forms", tuple(self.coeff_forms))
        object.__setattr__(self, "zero_forms", tuple(self.zero_forms))
        if self.quad.k != self.k or self.unit_form.k != self.k:
            raise ValueError("form dimensions do not match k")
        for s in self.subscripts:
            if len(s.coeffs) != self.k:
                raise ValueError("subscript dimension does not match k")
        for p in self.params:
            if len(p.coeffs) != self.k:
                raise ValueError("parameter form dimension does not match k")

    @property
    def param_names(self):
        return sorted({p.name for p in self.params})

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "quad": self.quad.to_json(),
            "unit_form": self.unit_form.to_json(),
            "subscripts": [s.to_json() for s in self.subscripts],
            "params": [p.to_json() for p in self.params],
            "grid": self.grid,
        }
        return out

    @classmethod
    def from_json(cls, d) -> "SumSideSpec":
        return cls(
            k=d["k"],
            quad=QuadForm.from_json(d["quad"]),
            unit_form=QuadForm.from_json(d["unit_form"]),
            subscripts=tuple(Subscript.from_json(s) for s in d.get("subscripts", [])),
            params=tuple(ParamForm.from_json(p) for p in d.get("params", [])),
            grid=d.get("grid", 1),
        )

    def check_unit_integrality(self, samples: int = 50, seed: int = 0) -> bool:
        rng = random.Random(seed)
        for _ in range(samples):
            pt = tuple(rng.randint(0, 12) for _ in range(self.k))
            if self.unit_form(pt).denominator != 1:
                return False
        return True


# folding --------------------------------------------------------------------------


def fold_params(spec: SumSideSpec, assign) -> SumSideSpec:
    """Absorb an assignment ``{name: Monomial}`` into Q, T and coefficient forms."""
    quad = spec.quad
    unit = spec.unit_form
    coeff_forms = list(spec.coeff_forms)
    zero_forms = list(spec.zero_forms)
    for p in spec.params:
        try:
            m = assign[p.name]
        except KeyError:
            raise KeyError("parameter %r is not assigned" % p.name) from None
        if not m.is_concrete:
            raise ValueError("assigned value for %s is not concrete" % p.name)
        if m.coeff.is_zero():
            zero_forms.append((p.coeffs, p.const))
            continue
        if m.qexp:
            quad = quad.add_linear(p.coeffs, p.const, m.qexp)
        t = m.coeff.root_of_unity_exponent()
        if t is not None and t % 3 == 0:
            unit = unit.add_linear(p.coeffs, p.const, t // 3)
        elif m.coeff != 1:
            coeff_forms.append((m.coeff, p.coeffs, p.const))
    grid = _lcm(spec.grid, quad.denominator())
    if grid > MAX_GRID * 4:
        raise GridOverflow("folded exponents need grid q^(1/%d)" % grid)
    return replace(
        spec,
        quad=quad,
        unit_form=unit,
        params=(),
        grid=grid,
        coeff_forms=tuple(coeff_forms),
        zero_forms=tuple(zero_forms),
    )


# enumeration ------------------------------------------------------------------------


class _Scaled:
    """Integer version ``D*Q`` of a quadratic form for fast evaluation."""

    def __init__(self, quad: QuadForm):
        self.den = quad.denominator()
        D = self.den
        k = quad.k
        self.m = [[int(quad.matrix[a][b] * D) for b in range(k)] for a in range(k)]
        self.lin = [int(x * D) for x in quad.linear]
        self.const = int(quad.constant * D)

    def __call__(self, pt) -> int:
        m = self.m
        total = self.const
        for a, x in enumerate(pt):
            if x:
                row = m[a]
                total += x * (self.lin[a] + sum(row[b] * y for b, y in enumerate(pt) if y))
        return total


def _effective_grid(scaled: _Scaled, k: int, moduli) -> int:
    """Smallest d with every exponent Q(i) on q^(1/d), i >= 0 integer."""
    D = scaled.den
    g = D
    if D > 1:
        base = scaled((0,) * k)
        for pt in itertools.product(range(D), repeat=k):
            g = math.gcd(g, scaled(pt) - base)
            if g == 1:
                break
        g = math.gcd(g, base) if base else g
    d = D // g if D > 1 else 1
    return _lcm(d, *(Fraction(n).denominator for n in moduli))


class _RCache:
    """Integer coefficient lists of ``1 / (x^s; x^s)_L`` on a fixed length."""

    def __init__(self, length: int):
        self.length = max(length, 1)
        self.store = {}

    def get(self, s: int, L: int):
        lst = self.store.get(s)
        if lst is None:
            base = [0] * self.length
            base[0] = 1
            lst = self.store[s] = [base]
        while len(lst) <= L:
            m = len(lst)
            lst.append(kernels.div_binomial(lst[-1], 1, s * m, self.length) if s * m < self.length else lst[-1])
        return lst[L]


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class _Evaluator:
    def __init__(self, spec: SumSideSpec, cap):
        self.spec = spec
        self.cap = Fraction(cap)
        k = spec.k
        self.k = k
        qs = _Scaled(spec.quad)
        # pick the inner index: the one with the largest diagonal coefficient
        inner = max(range(k), key=lambda a: (qs.m[a][a], -a))
        self.perm = [a for a in range(k) if a != inner] + [inner]
        self.qs = qs
        self.D = qs.den
        self.K = math.floor(self.cap * self.D)
        self.grid = _effective_grid(qs, k, [s.modulus for s in spec.subscripts])
        if self.grid > MAX_GRID * 4:
            raise GridOverflow("sum side needs grid q^(1/%d)" % self.grid)
        ts = _Scaled(spec.unit_form)
        if ts.den != 1:
            # unit exponents must be integers on the region; keep exact values
            self.unit_scaled = None
        else:
            self.unit_scaled = ts
        # constraints a . i + b >= 0
        cons = [(s.coeffs, s.const) for s in spec.subscripts]
        cons += [(tuple(-c for c in co), -cst) for co, cst in spec.zero_forms]
        self.constraints = cons
        self.steps = []
        for s in spec.subscripts:
            st = s.modulus * self.grid
            if st.denominator != 1:
                raise GridOverflow("modulus %s is off the grid" % s.modulus)
            self.steps.append(int(st))
        self._coeff_cache = {}

    # inner index -----------------------------------------------------------------
    def _point(self, outer, x):
        pt = [0] * self.k
        for a, v in zip(self.perm[:-1], outer):
            pt[a] = v
        pt[self.perm[-1]] = x
        return tuple(pt)

    def _inner_poly(self, outer):
        """Coefficients (A, B, C) of the scaled exponent as a function of x."""
        c0 = self.qs(self._point(outer, 0))
        c1 = self.qs(self._point(outer, 1))
        c2 = self.qs(self._point(outer, 2))
        A2 = c2 - 2 * c1 + c0  # = 2A
        A = A2 // 2
        B = c1 - c0 - A
        return A, B, c0

    def _inner_bounds(self, outer):
        """Feasible x interval [lo, hi] (hi None for unbounded) or None."""
        lo, hi = 0, None
        inner = self.perm[-1]
        for coeffs, const in self.constraints:
            a = coeffs[inner]
            b = const + sum(coeffs[p] * v for p, v in zip(self.perm[:-1], outer))
            if a == 0:
                if b < 0:
                    return None
            elif a > 0:
                lo = max(lo, _ceil_div(-b, a))
            else:
                ub = b // (-a)
                hi = ub if hi is None else min(hi, ub)
        if hi is not None and hi < lo:
            return None
        return lo, hi

    @staticmethod
    def _f(A, B, C, x):
        return (A * x + B) * x + C

    def _inner_min(self, A, B, C, lo, hi):
        f = self._f
        if A > 0:
            v = Fraction(-B, 2 * A)
            cands = {lo}
            if hi is not None:
                cands.add(hi)
            for x in (math.floor(v), math.ceil(v)):
                if x >= lo and (hi is None or x <= hi):
                    cands.add(x)
            return min(f(A, B, C, x) for x in cands)
        if hi is None:
            if A < 0 or B < 0:
                return None  # unbounded below
            return f(A, B, C, lo)
        return min(f(A, B, C, lo), f(A, B, C, hi))

    def _inner_range(self, A, B, C, lo, hi):
        """x in [lo, hi] with f(x) <= K, as a range; raises if infinite."""
        K = self.K
        f = self._f
        if A > 0:
            disc = B * B - 4 * A * (C - K)
            if disc < 0:
                return range(0)
            r = math.isqrt(disc)
            x1 = (-B - r) // (2 * A) - 1
            x2 = (-B + r) // (2 * A) + 1
            while f(A, B, C, x1) > K and x1 <= x2:
                x1 += 1
            while f(A, B, C, x2) > K and x2 >= x1:
                x2 -= 1
            a, b = max(x1, lo), x2 if hi is None else min(x2, hi)
            return range(a, b + 1) if a <= b else range(0)
        if A == 0 and B > 0:
            top = (K - C) // B
            b = top if hi is None else min(top, hi)
            return range(lo, b + 1) if lo <= b else range(0)
        if hi is None:
            # f is non-increasing or concave: infinitely many x unless f > K forever
            if A == 0 and B == 0 and C > K:
                return range(0)
            raise NonTerminating("the exponent does not grow along an unbounded direction")
        return range(lo, hi + 1)

    # coefficients -----------------------------------------------------------------
    def _coefficient(self, pt) -> Scalar:
        spec = self.spec
        if self.unit_scaled is not None:
            t = self.unit_scaled(pt)
        else:
            tv = spec.unit_form(pt)
            if tv.denominator != 1:
                raise ValueError("unit exponent %s is not an integer at %s" % (tv, pt))
            t = int(tv)
        c = zeta_power(3 * (t % 4))
        for idx, (s, coeffs, const) in enumerate(spec.coeff_forms):
            e = _lin(coeffs, const, pt)
            if e:
                key = (idx, e)
                v = self._coeff_cache.get(key)
                if v is None:
                    v = self._coeff_cache[key] = s ** e
                c = c * v
        return c

    # main loop ------------------------------------------------------------------------
    def points(self):
        """Yield lattice points with exponent <= cap in deterministic order."""
        k = self.k
        limit = SAFETY_FACTOR * (max(self.cap, 0) + 1)
        quiet = 0
        s = 0
        while True:
            layer_min = None
            for outer in _compositions(s, k - 1):
                bounds = self._inner_bounds(outer)
                if bounds is None:
                    continue
                lo, hi = bounds
                A, B, C = self._inner_poly(outer)
                m = self._inner_min(A, B, C, lo, hi)
                if m is None:
                    raise NonTerminating("the exponent is unbounded below on the region")
                if layer_min is None or m < layer_min:
                    layer_min = m
                if m > self.K:
                    continue
                for x in self._inner_range(A, B, C, lo, hi):
                    yield self._point(outer, x), self._f(A, B, C, x)
            if k == 1:
                return
            if layer_min is None or layer_min > self.K:
                quiet += 1
                if quiet >= PATIENCE:
                    return
            else:
                quiet = 0
            s += 1
            if s > limit:
                raise NonTerminating("enumeration passed the safety bound %s" % limit)

    def run(self) -> QSeries:
        d = self.grid
        D = self.D
        cap_idx = math.floor(self.cap * d)
        pts = []
        min_e = None
        for pt, es in self.points():
            for coeffs, const in self.spec.zero_forms:
                if _lin(coeffs, const, pt) < 0:
                    raise DivisionByZero("a zero parameter is raised to a negative power")
            e_idx = Fraction(es * d, D)
            if e_idx.denominator != 1:
                raise GridOverflow("exponent off the grid q^(1/%d)" % d)
            e_idx = int(e_idx)
            pts.append((pt, e_idx))
            if min_e is None or e_idx < min_e:
                min_e = e_idx
        if not pts:
            return QSeries.zero(self.cap, d)
        span = cap_idx - min_e + 1
        cache = _RCache(span)
        acc = {}
        subs = self.spec.subscripts
        steps = self.steps
        for pt, e_idx in pts:
            n = cap_idx - e_idx + 1
            term = None
            for sub, st in zip(subs, steps):
                L = sub(pt)
                if L == 0:
                    continue
                r = cache.get(st, L)
                term = r[:n] if term is None else kernels.mul_trunc(term, r, n)
            if term is None:
                term = [1]
            c = self._coefficient(pt)
            slot = acc.get(c)
            if slot is None:
                slot = acc[c] = [0] * span
            off = e_idx - min_e
            for j, v in enumerate(term):
                if v:
                    slot[off + j] += v
        total = QSeries.zero(self.cap, d)
        for c in sorted(acc, key=lambda s: tuple(s.coords)):
            total = total + QSeries.from_ints(acc[c], self.cap, d, min_e, c)
        return total


def evaluate_folded(spec: SumSideSpec, cap) -> QSeries:
    """Evaluate a parameter-free spec."""
    if spec.params:
        raise ValueError("spec still has parameters; fold them first")
    return _Evaluator(spec, cap).run()


def sum_side_eval(spec: SumSideSpec, assign=None, cap=10) -> QSeries:
    """Exact truncated value of one sum side under an assignment."""
    folded = fold_params(spec, assign or {})
    return evaluate_folded(folded, cap)


def sum_sides_eval(specs, assign=None, cap=10) -> QSeries:
    """A finite sum of sum sides."""
    if isinstance(specs, SumSideSpec):
        specs = [specs]
    total = None
    for s in specs:
        v = sum_side_eval(s, assign, cap)
        total = v if total is None else total + v
    return total
