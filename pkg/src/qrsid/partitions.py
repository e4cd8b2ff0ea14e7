"""Brute-force partition counts used as independent oracles.

Three-coloured partitions use colours ``ab < a < b``; the integers are
ordered ``1_ab < 1_a < 1_b < 2_ab < ...``.  Consecutive parts
``lambda_i > lambda_{i+1}`` with colours ``x, y`` must differ by at least
``GAP[x][y]``, and ``1_ab`` is never a part.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .products import ProductExpr
from .qseries import QSeries

__all__ = [
    "COLORS",
    "GAP",
    "NMAX",
    "distinct_partitions",
    "colored_partitions",
    "count_T",
    "count_S",
    "table_T",
    "table_S",
    "graded_product",
    "product_partition_expand",
    "partition_classes",
]

NMAX = 16

COLORS = ("ab", "a", "b")
_RANK = {c: r for r, c in enumerate(COLORS)}

GAP = {
    "a": {"a": 1, "b": 2, "ab": 1},
    "b": {"a": 1, "b": 1, "ab": 1},
    "ab": {"a": 2, "b": 2, "ab": 2},
}

_U = {"a": 1, "b": 0, "ab": 1}
_V = {"a": 0, "b": 1, "ab": 1}


def distinct_partitions(n: int, below: int | None = None):
    """All partitions of ``n`` into distinct parts, largest first."""
    if below is None:
        below = n + 1
    if n == 0:
        yield ()
        return
    for p in range(min(n, below - 1), 0, -1):
        if p * (p + 1) // 2 < n:
            break
        for rest in distinct_partitions(n - p, p):
            yield (p,) + rest


def colored_partitions(n: int):
    """All three-coloured partitions of ``n``, each a tuple of (value, colour)."""

    def grow(rest, prev):
        if rest == 0:
            yield ()
            return
        for value in range(rest, 0, -1):
            for color in COLORS:
                if value == 1 and color == "ab":
                    continue
                if prev is not None:
                    pv, pc = prev
                    if pv - value < GAP[pc][color]:
                        continue
                for tail in grow(rest - value, (value, color)):
                    yield ((value, color),) + tail

    # parts are generated from the largest down, so the gap test runs on each
    # consecutive pair exactly once
    yield from grow(n, None)


def _check(u, v, n):
    if min(u, v, n) < 0:
        raise ValueError("u, v and n must be nonnegative")


@lru_cache(maxsize=None)
def _distinct_by_length(n: int) -> Counter:
    return Counter(len(p) for p in distinct_partitions(n))


def count_T(u: int, v: int, n: int) -> int:
    """Bipartitions of ``n`` into ``u`` and ``v`` distinct parts."""
    _check(u, v, n)
    return sum(_distinct_by_length(m)[u] * _distinct_by_length(n - m)[v] for m in range(n + 1))


@lru_cache(maxsize=None)
def _colored_by_weight(n: int) -> Counter:
    out = Counter()
    for p in colored_partitions(n):
        out[sum(_U[c] for _, c in p), sum(_V[c] for _, c in p)] += 1
    return out


def count_S(u: int, v: int, n: int) -> int:
    """Three-coloured partitions of ``n`` with ``u`` parts a/ab and ``v`` parts b/ab."""
    _check(u, v, n)
    return _colored_by_weight(n)[u, v]


def table_T(nmax: int = NMAX) -> dict:
    """``{(u, v, n): T}`` for every nonzero count with ``n <= nmax``."""
    out = {}
    for n in range(nmax + 1):
        for u in range(n + 1):
            for v in range(n + 1):
                t = count_T(u, v, n)
                if t:
                    out[u, v, n] = t
    return out


def table_S(nmax: int = NMAX) -> dict:
    out = {}
    for n in range(nmax + 1):
        for (u, v), s in _colored_by_weight(n).items():
            out[u, v, n] = s
    return out


def graded_product(nmax: int = NMAX) -> dict:
    """Coefficients of ``(-aq, -bq; q)_inf`` as ``{(u, v, n): c}`` up to ``q^nmax``."""
    poly = {(0, 0, 0): 1}
    for m in range(1, nmax + 1):
        for du, dv in ((1, 0), (0, 1)):
            nxt = dict(poly)
            for (u, v, n), c in poly.items():
                if n + m <= nmax:
                    key = (u + du, v + dv, n + m)
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
    return {k: c for k, c in poly.items() if c}


def product_partition_expand(classes, cap) -> QSeries:
    """Partitions into parts from the classes ``(residue, modulus)``.

    A class listed twice contributes two independent copies of its parts,
    matching ``1/(q^a; q^n)_inf^2``.
    """
    cap = Fraction(cap)
    top = math.floor(cap)
    counts = [0] * (top + 1)
    counts[0] = 1
    for a, n in classes:
        a, n = int(a), int(n)
        if a <= 0 or n <= 0:
            raise ValueError("residues and moduli must be positive")
        for part in range(a, top + 1, n):
            for s in range(part, top + 1):
                counts[s] += counts[s - part]
    return QSeries.from_ints(counts, cap)


def partition_classes(p: ProductExpr):
    """Classes for ``product_partition_expand`` if ``p`` is a pure partition product, else None."""
    if len(p.terms) != 1:
        return None
    term = p.terms[0]
    if term.weight != 1:
        return None
    out = []
    for f in term.factors:
        b = f.base
        if not b.is_concrete or b.coeff != 1 or f.power >= 0:
            return None
        if b.qexp <= 0 or b.qexp.denominator != 1 or f.modulus.denominator != 1:
            return None
        out.extend([(int(b.qexp), int(f.modulus))] * -f.power)
    return out
