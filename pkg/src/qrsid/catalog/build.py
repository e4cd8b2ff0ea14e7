"""Definitions of every catalog record; ``python -m qrsid.catalog.build`` rewrites catalog.json."""

from __future__ import annotations

import sys
from fractions import Fraction as Fr

from ..monomial import Monomial
from ..products import ProductExpr
from ..sums import ParamForm, QuadForm, Subscript, SumSideSpec, fold_params
from . import CATALOG_FILE, IdentityRecord, dumps_catalog

PROVED = "proved-in-paper"
CITED = "cited"
CONJECTURE = "conjecture"


def C2(n):
    """Binomial ``n choose 2`` as a polynomial, valid for negative ``n`` too."""
    return Fr(n * (n - 1), 2)


def side(k, Q, T=None, moduli=None, params=None, subs=None):
    """A sum side from Python callables.

    ``T`` is the exponent of ``i`` (so ``(-1)^x`` is ``T = 2x``); ``moduli``
    gives one ``(q^n; q^n)_{i_t}`` per index unless ``subs`` lists explicit
    ``(modulus, coeffs, const)`` subscripts; ``params`` maps a name to the
    coefficients of its linear exponent.
    """
    quad = QuadForm.from_function(k, Q)
    unit = QuadForm.from_function(k, T) if T else QuadForm.zero(k)
    if subs is None:
        moduli = moduli or (1,) * k
        subs = [(n, tuple(int(a == t) for a in range(k)), 0) for t, n in enumerate(moduli)]
    subscripts = tuple(Subscript(n, c, d) for n, c, d in subs)
    forms = []
    for name, coeffs in (params or {}).items():
        const = 0
        if isinstance(coeffs, dict):
            coeffs, const = coeffs["coeffs"], coeffs["const"]
        forms.append(ParamForm(name, tuple(coeffs), const))
    return SumSideSpec(k, quad, unit, subscripts, tuple(forms), quad.denominator())


def fixed(spec, **values):
    """Fold concrete values (coefficients powers of ``i``) into a parametric side."""
    folded = fold_params(spec, {k: Monomial.parse(v) for k, v in values.items()})
    if folded.coeff_forms or folded.zero_forms:
        raise ValueError("only unit coefficients can be folded into a stored side")
    return folded


def sign(*xs):
    """``T`` for ``(-1)^(sum of xs)``."""
    return 2 * sum(xs)


def neg(T=None):
    """Wrap ``T`` so the whole term gains a factor ``-1``."""
    return lambda *v: (T(*v) if T else 0) + 2


# generating functions shared by several records -------------------------------------


def kr_F():
    """``F(u,v,w)`` of index (1,4,6)."""
    return side(
        3,
        lambda i, j, k: 3 * k * (k - 1) + (i + 2 * j + 3 * k) * (i + 2 * j + 3 * k - 1),
        lambda i, j, k: sign(k),
        (1, 4, 6),
        params={"u": (1, 0, 0), "v": (0, 1, 0), "w": (0, 0, 1)},
    )


def kr_G():
    """``G(u,v,w)`` of index (1,2,3)."""
    return side(
        3,
        lambda i, j, k: Fr((i + 2 * j + 3 * k) * (i + 2 * j + 3 * k - 1), 2) + j * j,
        None,
        (1, 2, 3),
        params={"u": (1, 0, 0), "v": (0, 1, 0), "w": (0, 0, 1)},
    )


def family_H():
    """``H(u,v,w)`` of index (1,2,4)."""
    return side(
        3,
        lambda i, j, k: (i + j + 2 * k) * (i + j + 2 * k - 1) + 2 * k * (k - 1),
        lambda i, j, k: sign(k),
        (1, 2, 4),
        params={"u": (1, 0, 0), "v": (0, 1, 0), "w": (0, 0, 1)},
    )


def andrews_gordon(k, i):
    """Andrews-Gordon for modulus ``2k+1`` and residue ``i``.

    Summation indices are the gaps ``m_t = n_t - n_{t-1}`` with
    ``n_1 <= ... <= n_{k-1}``; the linear term runs over the ``k - i``
    smallest ``n_t``.
    """
    r = k - 1

    def Q(*m):
        n = [sum(m[: t + 1]) for t in range(r)]
        return sum(x * x for x in n) + sum(n[: k - i])

    s = side(r, Q)
    mod = 2 * k + 1
    prod = "(q^%d, q^%d, q^%d; q^%d) / (q; q)" % (i, mod - i, mod, mod)
    return s, prod


# record table --------------------------------------------------------------------


def R(id, status, anchor, quote, sums, product, sampling=()):
    if isinstance(sums, SumSideSpec):
        sums = (sums,)
    return IdentityRecord(
        id=id,
        status=status,
        anchor=anchor,
        quote=quote,
        sum_sides=tuple(sums),
        product=ProductExpr.parse(product),
        sampling=tuple({k: Monomial.parse(v) for k, v in s.items()} for s in sampling),
    )


def intro_records():
    out = []
    a = "classical single sums"
    out.append(R("I-rr-1", CITED, a, r"\frac{1}{(q,q^4;q^5)_\infty}",
                 side(1, lambda n: n * n), "(q, q^4; q^5)^-1"))
    out.append(R("I-rr-2", CITED, a, r"\frac{1}{(q^2,q^3;q^5)_\infty}",
                 side(1, lambda n: n * n + n), "(q^2, q^3; q^5)^-1"))
    out.append(R("I-slater-1", CITED, a,
                 r"\frac{1}{(q^2,q^3,q^4,q^5,q^{11},q^{12},q^{13},q^{14};q^{16})_\infty}",
                 side(1, lambda n: 2 * n * n, subs=[(1, (2,), 0)]),
                 "(q^2, q^3, q^4, q^5, q^11, q^12, q^13, q^14; q^16)^-1"))
    out.append(R("I-slater-2", CITED, a,
                 r"\frac{1}{(q,q^4,q^6,q^7,q^9,q^{10},q^{12},q^{15};q^{16})_\infty}",
                 side(1, lambda n: 2 * n * (n + 1), subs=[(1, (2,), 1)]),
                 "(q, q^4, q^6, q^7, q^9, q^10, q^12, q^15; q^16)^-1"))
    for k in (2, 3):
        for i in range(1, k + 1):
            s, prod = andrews_gordon(k, i)
            out.append(R("I-ag-k%d-i%d" % (k, i), CITED, "Andrews-Gordon, modulus 2k+1",
                         r"\frac{(q^i,q^{2k+1-i},q^{2k+1};q^{2k+1})_\infty}{(q;q)_\infty}", s, prod))
    a = "known double sums"
    out.append(R("I-capparelli", CITED, a, r"\frac{1}{(q^2,q^3,q^9,q^{10};q^{12})_\infty}",
                 side(2, lambda i, j: 2 * i * i + 6 * i * j + 6 * j * j, moduli=(1, 3)),
                 "(q^2, q^3, q^9, q^10; q^12)^-1"))
    out.append(R("I-kursungoz-conj", CONJECTURE, a, r"\frac{1}{(q,q^3,q^6,q^8;q^9)_\infty}",
                 side(2, lambda i, j: i * i + 3 * j * j + 3 * i * j, moduli=(1, 3)),
                 "(q, q^3, q^6, q^8; q^9)^-1"))
    out.append(R("I-au", CITED, a, r"\frac{1}{(q^2,q^3;q^6)_\infty}",
                 side(2, lambda i, j: Fr(3 * j * (3 * j + 1), 2) + i * i + 3 * i * j + i + j,
                      lambda i, j: sign(j), (1, 3)),
                 "(q^2, q^3; q^6)^-1"))
    a = "Kanade-Russell generating functions"
    out.append(R("I-kr-F1", CITED, a, r"F(q,1,q^3)=\frac{(q^3;q^{12})_\infty}{(q,q^2;q^4)_\infty}",
                 fixed(kr_F(), u="q", v="1", w="q^3"), "(q^3; q^12) / (q, q^2; q^4)"))
    out.append(R("I-kr-F2", CITED, a, r"F(q,q,q^6)=\frac{1}{(q^3;q^4)_\infty (q,q^8;q^{12})_\infty}",
                 fixed(kr_F(), u="q", v="q", w="q^6"), "(q^3; q^4)^-1 * (q, q^8; q^12)^-1"))
    out.append(R("I-kr-G1", CITED, a, r"G(q,q^2,q^4)=\frac{1}{(q;q^3)_\infty (q^3,q^6,q^{11};q^{12})_\infty}",
                 fixed(kr_G(), u="q", v="q^2", w="q^4"), "(q; q^3)^-1 * (q^3, q^6, q^11; q^12)^-1"))
    out.append(R("I-kr-G2", CITED, a, r"G(q^2,q^4,q^5)=\frac{1}{(q^2;q^3)_\infty (q^3,q^6,q^7;q^{12})_\infty}",
                 fixed(kr_G(), u="q^2", v="q^4", w="q^5"), "(q^2; q^3)^-1 * (q^3, q^6, q^7; q^12)^-1"))
    out.append(R("I-takigiku-122", CITED, "known triple sums, index (1,2,2)",
                 r"\frac{1}{(q,q^3,q^4,q^5,q^7,q^9,q^{11},q^{13},q^{15},q^{16},q^{17},q^{19};q^{20})_\infty}",
                 side(3, lambda i, j, k: C2(i) + 8 * C2(j) + 10 * C2(k) + 2 * i * j + 2 * i * k + 8 * j * k
                      + i + 4 * j + 5 * k, moduli=(1, 2, 2)),
                 "(q, q^3, q^4, q^5, q^7, q^9, q^11, q^13, q^15, q^16, q^17, q^19; q^20)^-1"))
    out.append(R("I-laughlin-123", CITED, "known triple sums, index (1,2,3)",
                 r"\frac{(-1;q)_\infty (q^{18};q^{18})_\infty}{(q^3;q^3)_\infty (q^9;q^{18})_\infty}",
                 side(3, lambda i, j, k: Fr((3 * k + 2 * j - i) * (3 * k + 2 * j - i - 1), 2) + j * (j - 1)
                      - i + 6 * j + 6 * k, lambda i, j, k: sign(j), (1, 2, 3)),
                 "(-1; q) * (q^18; q^18) / (q^3; q^3) / (q^9; q^18)"))
    out.append(R("I-dl-1112", PROVED, "index (1,1,1,2), integral-method proof",
                 r"(-q;q)_\infty (-aq^2,-bq^2;q^2)_\infty",
                 side(4, lambda i, j, k, l: C2(i + j + k + 2 * l + 1) + C2(i + 1) + C2(j + 1) + l,
                      moduli=(1, 1, 1, 2), params={"a": (1, 0, 0, 1), "b": (0, 1, 0, 1)}),
                 "(-q; q) * (-a*q^2, -b*q^2; q^2)",
                 [{"a": "1", "b": "1"}, {"a": "q", "b": "-1"}, {"a": "-q^(1/2)", "b": "q^(1/2)"},
                  {"a": "0", "b": "2"}, {"a": "i", "b": "-i*q"}]))
    return out


def double_records():
    out = []
    a = "index (1,1), two-parameter theorem"
    sym = side(2, lambda i, j: Fr((i - j) ** 2 - i - j, 2), lambda i, j: sign(i, j),
               params={"u": (1, 0), "v": (0, 1)})
    out.append(R("I-11-sym", PROVED, a, r"\frac{(u,v;q)_{\infty}}{(uv/q;q)_{\infty}}", sym,
                 "(u, v; q) / (u*v*q^-1; q)",
                 [{"u": "-q", "v": "-q^(1/2)"}, {"u": "-q", "v": "-q"}, {"u": "q^(1/2)", "v": "q"},
                  {"u": "2*q", "v": "-q^(2/3)"}, {"u": "i*q", "v": "q^(1/2)"}, {"u": "0", "v": "0"}]))
    out.append(R("I-11-sym-cor-1", PROVED, a, r"\frac{1}{(q^{1/2};q)_{\infty}^{2}}",
                 side(2, lambda i, j: Fr((i - j) ** 2 + i, 2)), "(q^(1/2); q)^-2"))
    out.append(R("I-11-sym-cor-2", PROVED, a, r"\frac{(q^{2};q^{2})_{\infty}^{2}}{(q;q)_{\infty}^{3}}",
                 side(2, lambda i, j: Fr((i - j) ** 2 + i + j, 2)), "(q^2; q^2)^2 / (q; q)^3"))

    a = "index (1,1), moduli (2,2)"
    out.append(R("I-11-sq", PROVED, a, r"\frac{(u;q)_{\infty}(q;q^{2})_{\infty}}{(u;q^{2})_{\infty}^{2}}",
                 side(2, lambda i, j: (i - j) ** 2, lambda i, j: sign(i, j), (2, 2), {"u": (1, 0)}),
                 "(u; q) * (q; q^2) / (u; q^2)^2",
                 [{"u": "-q"}, {"u": "-q^(3/2)"}, {"u": "-q^2"}, {"u": "q^(1/2)"}, {"u": "i*q"}, {"u": "3*q"}]))
    out.append(R("I-11-sq-ex1", PROVED, a, r"\frac{(q;q^{2})_{\infty}^{2}}{(q^{2};q^{4})_{\infty}^{2}}",
                 side(2, lambda i, j: (i - j) ** 2 + i, lambda i, j: sign(j), (2, 2)),
                 "(q; q^2)^2 / (q^2; q^4)^2"))
    out.append(R("I-11-sq-ex2", PROVED, a,
                 r"\frac{(q^2,q^{10};q^{8})_{\infty}(q^{3};q^{4})_{\infty}}{(q^{5};q^{4})_{\infty}}",
                 side(2, lambda i, j: 2 * (i - j) ** 2 + 3 * i, lambda i, j: sign(j), (4, 4)),
                 "(q^2, q^10; q^8) * (q^3; q^4) / (q^5; q^4)"))
    out.append(R("I-11-sq-ex3", PROVED, a, r"\frac{(q,q^{2},q^{6};q^{4})_{\infty}}{(q^{5};q^{4})_{\infty}}",
                 side(2, lambda i, j: (i - j) ** 2 + 2 * i, lambda i, j: sign(j), (2, 2)),
                 "(q, q^2, q^6; q^4) / (q^5; q^4)"))

    a = "index (1,1), theta-type pair"
    out.append(R("I-11-theta-a", PROVED, a, r"\frac{(q^{1/2};q)_{\infty}^{2}}{(q;q)_{\infty}}",
                 [side(2, lambda i, j: Fr((i - j) ** 2, 2) + j, lambda i, j: sign(i, j)),
                  side(2, lambda i, j: Fr((i - j) ** 2, 2) + i + Fr(1, 2), neg(lambda i, j: sign(i, j)))],
                 "(q^(1/2); q)^2 / (q; q)"))
    out.append(R("I-11-theta-b", PROVED, a,
                 r"\frac{(q;q^{2})_{\infty}}{(q^{2};q^{2})_{\infty}(q^{1/2};q)_{\infty}^{2}}",
                 [side(2, lambda i, j: Fr((i - j) ** 2, 2) + j),
                  side(2, lambda i, j: Fr((i - j) ** 2, 2) + i + Fr(1, 2))],
                 "(q; q^2) / (q^2; q^2) / (q^(1/2); q)^2"))

    a = "index (1,1), triple-product family"
    for n in (1, 2, 3):
        out.append(R("I-11-jtp-a%d" % n, PROVED, a + ", a=%d" % n,
                     r"\frac{(-uq^a,-q/u,q^{a+1};q^{a+1})_\infty}{(q;q)_\infty}",
                     side(2, lambda i, j, n=n: C2(i) + C2(j + 1) + n * C2(j - i), params={"u": (1, -1)}),
                     "(-u*q^%d, -q*u^-1, q^%d; q^%d) / (q; q)" % (n, n + 1, n + 1),
                     [{"u": "q"}, {"u": "-q^(1/2)"}, {"u": "i"}, {"u": "2*q^(1/3)"}, {"u": "-1"}]))

    def jtp_cor(m1, m2, n, signed):
        n = Fr(n)
        Q = lambda i, j: ((m1 + m2) * (i * i + j * j) - 2 * m2 * i * j + (2 * n - m1 + m2) * (i - j)) / 2
        s = side(2, Q, (lambda i, j: sign(i, j)) if signed else None, (m1, m1))
        c = "" if signed else "-"
        prod = "(%sq^(%s), %sq^(%s), q^%d; q^%d) / (q^%d; q^%d)" % (
            c, m1 - n, c, m2 + n, m1 + m2, m1 + m2, m1, m1)
        return s, prod

    quote = r"(-q^{m_{1}-n},-q^{m_{2}+n},q^{m_{1}+m_{2}};q^{m_{1}+m_{2}})_{\infty}"
    for rid, args in [("I-11-J1-ex", (1, 3, -1, False)), ("I-11-J1-gen", (2, 1, Fr(1, 2), False)),
                      ("I-11-J2-ex1", (3, 4, 0, True)), ("I-11-J2-ex2", (3, 4, 1, True)),
                      ("I-11-J2-ex3", (3, 4, 2, True)), ("I-11-J2-gen", (1, 2, Fr(-1, 3), True))]:
        s, prod = jtp_cor(*args)
        out.append(R(rid, PROVED, a + ", specializations", quote, s, prod))

    a = "index (1,1), two-term theorem"
    for n in (1, 2):
        Q = lambda i, j, n=n: Fr(i * i - i + j * j - j + 4 * n * (i - j) ** 2, 2)
        m = 4 * n + 1
        out.append(R("I-11-twoterm-a%d" % n, PROVED, a + ", a=%d" % n,
                     r"(u^{-1}q^{2a},uq^{2a+1},q^{4a+1};q^{4a+1})_{\infty}",
                     side(2, Q, lambda i, j: sign(i, j), params={"u": (1, -1)}),
                     "(u^-1*q^%d, u*q^%d, q^%d; q^%d) / (q; q) + (u*q^%d, u^-1*q^%d, q^%d; q^%d) / (q; q)"
                     % (2 * n, 2 * n + 1, m, m, 2 * n, 2 * n + 1, m, m),
                     [{"u": "1"}, {"u": "-1"}, {"u": "q^(1/2)"}, {"u": "i*q"}, {"u": "q^%d" % (2 * n)},
                      {"u": "-2*q^(1/3)"}]))
    for n in (1, 2, 3):
        Q = lambda i, j, n=n: Fr(i * i - i + j * j - j + 4 * n * (i - j) ** 2, 2)
        m = 4 * n + 1
        out.append(R("I-11-twoterm-cor1-a%d" % n, PROVED, a + ", corollaries",
                     r"2(q^{2a},q^{2a+1},q^{4a+1};q^{4a+1})_{\infty}",
                     side(2, Q, lambda i, j: sign(i, j)),
                     "2 * (q^%d, q^%d, q^%d; q^%d) / (q; q)" % (2 * n, 2 * n + 1, m, m)))
        out.append(R("I-11-twoterm-cor2-a%d" % n, PROVED, a + ", corollaries",
                     r"2(-q^{2a},-q^{2a+1},q^{4a+1};q^{4a+1})_{\infty}",
                     side(2, Q),
                     "2 * (-q^%d, -q^%d, q^%d; q^%d) / (q; q)" % (2 * n, 2 * n + 1, m, m)))
    for n in (1, 2):
        m = 4 * n + 1
        Q3 = lambda i, j, n=n: Fr(i * i - i + j * j - j + 4 * n * (i - j) ** 2, 2) + 2 * n * (i - j)
        Q4 = lambda i, j, n=n: Fr(i * i - i + j * j - j + 4 * n * (i - j) ** 2, 2) + (2 * n + 1) * (i - j)
        out.append(R("I-11-twoterm-cor3-a%d" % n, PROVED, a + ", corollaries",
                     r"(q,q^{4a},q^{4a+1};q^{4a+1})_\infty",
                     side(2, Q3, lambda i, j: sign(i, j)),
                     "(q, q^%d, q^%d; q^%d) / (q; q)" % (4 * n, m, m)))
        out.append(R("I-11-twoterm-cor4-a%d" % n, PROVED, a + ", corollaries",
                     r"(q^{-1},q^{4a+2},q^{4a+1};q^{4a+1})_\infty",
                     side(2, Q4, lambda i, j: sign(i, j)),
                     "(q^-1, q^%d, q^%d; q^%d) / (q; q)" % (4 * n + 2, m, m)))

    a = "index (1,2)"
    Q12 = lambda i, j: i * i + 2 * i * j + 2 * j * j - i - j
    samples = [{"u": "q"}, {"u": "q^2"}, {"u": "-q"}, {"u": "q^(1/2)"}, {"u": "3*q"}, {"u": "i*q^(3/2)"}]
    out.append(R("I-12-a", PROVED, a, r"(u;q^{2})_{\infty}",
                 side(2, Q12, lambda i, j: sign(i), (1, 2), {"u": (1, 1)}), "(u; q^2)", samples))
    out.append(R("I-12-b", PROVED, a, r"(u;q)_{\infty}",
                 side(2, Q12, lambda i, j: sign(i), (1, 2), {"u": (1, 2)}), "(u; q)", samples))
    base = lambda i, j: i * i + 2 * i * j + 2 * j * j
    out.append(R("I-12-ex1", PROVED, a, r"(q;q^{2})_{\infty}",
                 side(2, base, lambda i, j: sign(i), (1, 2)), "(q; q^2)"))
    out.append(R("I-12-ex2", PROVED, a, r"(q^{2};q^{2})_{\infty}",
                 side(2, lambda i, j: base(i, j) + i + j, lambda i, j: sign(i), (1, 2)), "(q^2; q^2)"))
    out.append(R("I-12-ex3", PROVED, a, r"(q;q)_{\infty}",
                 side(2, lambda i, j: base(i, j) + j, lambda i, j: sign(i), (1, 2)), "(q; q)"))
    out.append(R("I-12-ex4", PROVED, a, r"\frac{1}{(q;q^{2})_{\infty}}",
                 side(2, lambda i, j: base(i, j) + j, None, (1, 2)), "(q; q^2)^-1"))
    return out


def triple_records():
    out = []
    a = "index (1,1,1)"
    out.append(R("I-111", PROVED, a, r"(\beta_{1},\beta_{3};q)_{\infty}",
                 side(3, lambda i, j, k: Fr(i * i + (i + j + k) ** 2 - 2 * i - j - k, 2),
                      lambda i, j, k: sign(j, k), params={"b1": (1, 1, 0), "b3": (1, 0, 1)}),
                 "(b1, b3; q)",
                 [{"b1": "-q^(1/4)", "b3": "-q^(1/2)"}, {"b1": "q", "b3": "q^2"}, {"b1": "-1", "b3": "q"},
                  {"b1": "i*q^(1/2)", "b3": "2*q"}, {"b1": "0", "b3": "q^(1/3)"}]))
    out.append(R("I-111-ex", PROVED, a, r"\frac{(q^4;q^{8})_{\infty}}{(q;q^4)_{\infty}(q^{6};q^{8})_{\infty}}",
                 side(3, lambda i, j, k: 2 * i * i + 2 * (i + j + k) ** 2 - i - j, None, (4, 4, 4)),
                 "(q^4; q^8) / (q; q^4) / (q^6; q^8)"))

    a = "index (1,1,2), first theorem"
    out.append(R("I-112-a", PROVED, a,
                 r"\frac{(-q,bq^{2}/c;q)_{\infty}(bq,c/b;q^{2})_{\infty}}{(b^{2}q^{2}/c;q^{2})_{\infty}}",
                 side(3, lambda i, j, k: Fr(i * i + (i - j + 2 * k) ** 2 - 2 * i + 3 * j - 2 * k, 2),
                      lambda i, j, k: sign(i, j), (1, 1, 2),
                      {"b": (-1, 1, 0), "c": (1, -1, 1)}),
                 "(-q, b*c^-1*q^2; q) * (b*q, c*b^-1; q^2) / (b^2*c^-1*q^2; q^2)",
                 [{"b": "q^(1/2)", "c": "q^2"}, {"b": "-q^(1/2)", "c": "q^2"}, {"b": "q^(1/2)", "c": "q"},
                  {"b": "-1", "c": "q"}, {"b": "i*q", "c": "2*q^(3/2)"}]))
    out.append(R("I-112-a-ex1", PROVED, a,
                 r"\frac{(q;q^2)_{\infty}(q^{3};q^{4})_{\infty}^{2}}{(q^2;q^{4})_{\infty}^{2}}",
                 side(3, lambda i, j, k: i * i + (i - j + 2 * k) ** 2 + i + 2 * k,
                      lambda i, j, k: sign(i, j), (2, 2, 4)),
                 "(q; q^2) * (q^3; q^4)^2 / (q^2; q^4)^2"))
    out.append(R("I-112-a-ex2", PROVED, a,
                 r"\frac{(q^{6};q^{8})_{\infty}^{2}}{(q;q^2)_{\infty}(q^2;q^{4})_{\infty}(q^{3};q^{4})_{\infty}^{2}}",
                 side(3, lambda i, j, k: i * i + (i - j + 2 * k) ** 2 + i + 2 * k, None, (2, 2, 4)),
                 "(q^6; q^8)^2 / (q; q^2) / (q^2; q^4) / (q^3; q^4)^2"))
    out.append(R("I-112-a-ex3", PROVED, a, r"\frac{(q,q^3;q^2)_{\infty}}{(q^2;q^2)_{\infty}}",
                 side(3, lambda i, j, k: i * i + (i - j + 2 * k) ** 2 - i + 2 * j,
                      lambda i, j, k: sign(i, j), (2, 2, 4)),
                 "(q, q^3; q^2) / (q^2; q^2)"))

    a = "index (1,1,2), second theorem"
    out.append(R("I-112-b", PROVED, a, r"\frac{(-d q/c;q)_{\infty}(c^{2};q^{2})_{\infty}}{(d^{2};q^{2})_{\infty}}",
                 side(3, lambda i, j, k: Fr(i * i + (i - j + 2 * k) ** 2 - 2 * i + j - 2 * k, 2),
                      lambda i, j, k: sign(i), (1, 1, 2), {"c": (2, -1, 2), "d": (0, 1, 0)}),
                 "(-d*c^-1*q; q) * (c^2; q^2) / (d^2; q^2)",
                 [{"c": "q^(1/2)", "d": "q^(1/4)"}, {"c": "q^(1/2)", "d": "q^(3/4)"}, {"c": "-q", "d": "q"},
                  {"c": "q", "d": "-q^(1/2)"}, {"c": "i*q", "d": "3*q"}]))
    out.append(R("I-112-b-ex1", PROVED, a, r"\frac{(q^{4},q^{6};q^{8})_{\infty}}{(q^{2},q^{3},q^{7};q^{8})_{\infty}}",
                 side(3, lambda i, j, k: 2 * i * i + 2 * (i - j + 2 * k) ** 2 + j, lambda i, j, k: sign(i),
                      (4, 4, 8)),
                 "(q^4, q^6; q^8) / (q^2, q^3, q^7; q^8)"))
    out.append(R("I-112-b-ex2", PROVED, a, r"\frac{(q^{4},q^{10};q^{8})_{\infty}}{(q^{5},q^{6},q^{9};q^{8})_{\infty}}",
                 side(3, lambda i, j, k: 2 * i * i + 2 * (i - j + 2 * k) ** 2 + 3 * j, lambda i, j, k: sign(i),
                      (4, 4, 8)),
                 "(q^4, q^10; q^8) / (q^5, q^6, q^9; q^8)"))

    a = "index (1,1,3)"
    s3 = lambda i, j, k: i * i + j * j + (i + j + 3 * k) ** 2
    out.append(R("I-113", PROVED, a, r"\frac{(u^{3};q^{3})_{\infty}}{(u;q)_{\infty}}",
                 side(3, lambda i, j, k: Fr(s3(i, j, k) - 2 * i - 2 * j - 3 * k, 2), lambda i, j, k: sign(k),
                      (1, 1, 3), {"u": (2, 1, 3)}),
                 "(u^3; q^3) / (u; q)",
                 [{"u": "q"}, {"u": "q^(1/3)"}, {"u": "q^(2/3)"}, {"u": "q^(1/2)"}, {"u": "-q"}, {"u": "i*q"}]))
    out.append(R("I-113-ex1", PROVED, a, r"\frac{1}{(q,q^{2};q^{3})_{\infty}}",
                 side(3, lambda i, j, k: Fr(s3(i, j, k) + 2 * i + 3 * k, 2), lambda i, j, k: sign(k), (1, 1, 3)),
                 "(q, q^2; q^3)^-1"))
    out.append(R("I-113-ex2", PROVED, a, r"\frac{(q^3;q^{9})_{\infty}}{(q;q^3)_{\infty}}",
                 side(3, lambda i, j, k: Fr(3 * s3(i, j, k) - (2 * i + 4 * j + 3 * k), 2), lambda i, j, k: sign(k),
                      (3, 3, 9)),
                 "(q^3; q^9) / (q; q^3)"))
    out.append(R("I-113-ex3", PROVED, a, r"\frac{(q^{6};q^{9})_{\infty}}{(q^{2};q^3)_{\infty}}",
                 side(3, lambda i, j, k: Fr(3 * s3(i, j, k) + (2 * i - 2 * j + 3 * k), 2), lambda i, j, k: sign(k),
                      (3, 3, 9)),
                 "(q^6; q^9) / (q^2; q^3)"))
    out.append(R("I-113-ex4", PROVED, a, r"\frac{1}{(q,q^5;q^{6})_{\infty}}",
                 side(3, lambda i, j, k: s3(i, j, k) - j, lambda i, j, k: sign(k), (2, 2, 6)),
                 "(q, q^5; q^6)^-1"))

    a = "index (1,2,2)"
    out.append(R("I-122-a", PROVED, a, r"\frac{(q^{2};q^{2})_{\infty}(q^4;q^4)_\infty^2}{(q;q)_{\infty}^{2}}",
                 side(3, lambda i, j, k: i + j * j + 2 * j + (i + j - k) ** 2, lambda i, j, k: sign(j), (1, 2, 2)),
                 "(q^2; q^2) * (q^4; q^4)^2 / (q; q)^2"))
    out.append(R("I-122-b", PROVED, a,
                 r"\frac{(q^{2};q^{2})_{\infty}^7}{(q;q)_{\infty}^{4} (q^4;q^4)_\infty^2}",
                 [side(3, lambda i, j, k: j * j + j + k + (i + j - k) ** 2, lambda i, j, k: sign(j), (1, 2, 2)),
                  side(3, lambda i, j, k: j * j + j + k + (i + j - k + 1) ** 2, lambda i, j, k: sign(j), (1, 2, 2))],
                 "(q^2; q^2)^7 / (q; q)^4 / (q^4; q^4)^2"))

    a = "index (1,2,3), quarter-integer exponents"
    Q4 = lambda i, j, k: Fr(i * i - i, 2) + Fr((i - 2 * j + 3 * k) ** 2, 4)
    out.append(R("I-123-frac", PROVED, a,
                 r"\frac{(u^{2};q)_{\infty}(q,-u^{2};q^{2})_{\infty}}{(-u^{6};q^{6})_{\infty}}",
                 side(3, Q4, lambda i, j, k: sign(i, j), (1, 2, 3), {"u": (1, 0, 3)}),
                 "(u^2; q) * (q, -u^2; q^2) / (-u^6; q^6)",
                 [{"u": "q^(1/2)"}, {"u": "q"}, {"u": "-q^(1/2)"}, {"u": "i*q"}, {"u": "2*q^(3/2)"},
                  {"u": "q^(1/4)"}]))
    out.append(R("I-123-frac-ex1", PROVED, a, r"(q;q)_{\infty}(q^{3};q^{6})_{\infty}(q^{2},q^{10};q^{12})_{\infty}",
                 side(3, lambda i, j, k: Fr(i * i + 3 * k, 2) + Fr((i - 2 * j + 3 * k) ** 2, 4),
                      lambda i, j, k: sign(i, j), (1, 2, 3)),
                 "(q; q) * (q^3; q^6) * (q^2, q^10; q^12)"))
    out.append(R("I-123-frac-ex2", PROVED, a, r"\frac{(q^{2};q)_{\infty}(q;q^{2})_{\infty}}{(q^{2},q^{10};q^{12})_{\infty}}",
                 side(3, lambda i, j, k: Fr(i * i + i + 6 * k, 2) + Fr((i - 2 * j + 3 * k) ** 2, 4),
                      lambda i, j, k: sign(i, j), (1, 2, 3)),
                 "(q^2; q) * (q; q^2) / (q^2, q^10; q^12)"))
    a = "index (1,2,3), half-integer sign"
    out.append(R("I-123-gauss", PROVED, a,
                 r"\frac{(q;q^{2})_{\infty}(-u^{2};q^{3})_{\infty}}{(u^{2};q^{6})_{\infty}}",
                 side(3, Q4, lambda i, j, k: i - 2 * j + 3 * k, (1, 2, 3), {"u": (1, 0, 1)}),
                 "(q; q^2) * (-u^2; q^3) / (u^2; q^6)",
                 [{"u": "q^(3/2)"}, {"u": "q"}, {"u": "q^(1/2)"}, {"u": "-i*q^(3/2)"}, {"u": "-2*q"}, {"u": "-q"},
                  {"u": "q^(3/4)"}]))
    out.append(R("I-123-gauss-ex1", PROVED, a, r"(q;q^{2})_{\infty}(q^{3};q^{6})_{\infty}^{2}(q^{12};q^{12})_{\infty}",
                 side(3, lambda i, j, k: Fr(i * i + 2 * i + 3 * k, 2) + Fr((i - 2 * j + 3 * k) ** 2, 4),
                      lambda i, j, k: sign(i, j), (1, 2, 3)),
                 "(q; q^2) * (q^3; q^6)^2 * (q^12; q^12)"))
    out.append(R("I-123-gauss-ex2", PROVED, a, r"\frac{(q,q^{5};q^{6})_{\infty}}{(q^{3};q^{6})_{\infty}}",
                 side(3, lambda i, j, k: Fr(i * i + 2 * i + 3 * k, 2) + Fr((i - 2 * j + 3 * k) ** 2, 4),
                      lambda i, j, k: i - 2 * j + 3 * k, (1, 2, 3)),
                 "(q, q^5; q^6) / (q^3; q^6)"))

    a = "index (1,2,4)"
    out.append(R("I-124-a", PROVED, a, r"(-u;q)_\infty",
                 side(3, lambda i, j, k: (i + j + 2 * k) * (i + j + 2 * k - 1) + j + 2 * k * k,
                      lambda i, j, k: sign(k), (1, 2, 4), {"u": (1, 2, 4)}),
                 "(-u; q)",
                 [{"u": "q"}, {"u": "-q^(1/2)"}, {"u": "1"}, {"u": "i*q"}, {"u": "2*q^(1/3)"}]))
    out.append(R("I-124-b", PROVED, a, r"\frac{(q^4,q^{12},q^{16};q^{16})_\infty}{(q^2;q^2)_\infty}",
                 fixed(family_H(), u="q^2", v="-q^3", w="-q^8"), "(q^4, q^12, q^16; q^16) / (q^2; q^2)"))
    out.append(R("I-124-c", PROVED, a, r"\frac{(q^8;q^8)_\infty^2}{(q^2;q^2)_\infty (q^{16};q^{16})_\infty}",
                 fixed(family_H(), u="q", v="-q", w="-q^4"), "(q^8; q^8)^2 / (q^2; q^2) / (q^16; q^16)"))
    return out


def build_records():
    recs = intro_records() + double_records() + triple_records()
    ids = [r.id for r in recs]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate record ids")
    return sorted(recs, key=lambda r: r.id)


def main(argv=None):
    args = sys.argv[1:] if argv is None else argv
    path = args[0] if args else CATALOG_FILE
    with open(path, "w") as fh:
        fh.write(dumps_catalog(build_records()))
    print("wrote %s" % path)


if __name__ == "__main__":
    main()
