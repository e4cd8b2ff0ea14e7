import random
from fractions import Fraction

import pytest

from qrsid.errors import DivergentProduct, NonRationalExponent, NonUnitLeadingTerm
from qrsid.monomial import Monomial
from qrsid.products import (
    Factor,
    ProductExpr,
    ProductTerm,
    eval_product_form,
    poch_finite,
    poch_inf,
    prodmake,
    product_expr_eval,
    product_form,
    render_product,
)
from qrsid.qseries import QSeries, render
from qrsid.ring import I, ONE, Scalar

from conftest import rand_monomial

F = Fraction
q = Monomial.q


def mono_series(m: Monomial, n: int, cap, grid=2):
    return QSeries.monomial(m.coeff ** n, m.qexp * n, cap, grid)


def pentagonal(cap):
    terms = {}
    k = 0
    while True:
        hit = False
        for j in {k, -k}:
            e = j * (3 * j - 1) // 2
            if e <= cap:
                terms[e] = (-1) ** (j % 2)
                hit = True
        if not hit:
            break
        k += 1
    return QSeries.from_terms(terms, cap)


def count_partitions(n, parts):
    ways = [1] + [0] * n
    for p in parts:
        for s in range(p, n + 1):
            ways[s] += ways[s - p]
    return ways


def test_poch_finite_examples():
    assert render(poch_finite(q(1), 1, 2, 10)) == "1 - q - q^2 + q^3"
    assert poch_finite(q(F(1, 2), 3), F(1, 2), 0, 5) == QSeries.one(5)
    assert poch_finite(Monomial(-1, 0), 1, 1, 5) == QSeries.monomial(2, 0, 5)


def test_poch_inf_examples():
    assert render(poch_inf(q(1), 1, 7)) == "1 - q - q^2 + q^5 + q^7"
    assert render(poch_inf(Monomial(-1, 0), 1, 3)) == "2 + 2*q + 2*q^2 + 4*q^3"
    with pytest.raises(DivergentProduct):
        poch_inf(q(-1), 1, 5)
    with pytest.raises(DivergentProduct):
        poch_inf(Monomial(1, 0), 1, 5)


def test_poch_inf_matches_pentagonal_theorem():
    assert poch_inf(q(1), 1, 60) == pentagonal(60)


def test_product_expr_examples():
    rr = product_expr_eval(ProductExpr.parse("(q, q^4; q^5)^-1"), 6)
    assert render(rr) == "1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6"
    counts = count_partitions(30, [p for p in range(1, 31) if p % 5 in (1, 4)])
    assert product_expr_eval(ProductExpr.parse("(q, q^4; q^5)^-1"), 30).int_coeffs()[1] == counts
    assert product_expr_eval(ProductExpr.parse("(q; q) / (q; q)"), 20) == QSeries.one(20)
    two = ProductExpr.parse("(u^-1*q^2, u*q^3, q^5; q^5) / (q; q) + (u*q^2, u^-1*q^3, q^5; q^5) / (q; q)")
    once = ProductExpr.parse("2*(q^2, q^3, q^5; q^5) / (q; q)")
    assert product_expr_eval(two, 25, {"u": Monomial(1, 0)}) == product_expr_eval(once, 25)


def test_negative_exponent_factor_prefix():
    # (q^(-1/2); q)_inf = (1 - q^(-1/2)) (q^(1/2); q)_inf
    lhs = product_expr_eval(ProductExpr.parse("(q^(-1/2); q)"), 12)
    tail = product_expr_eval(ProductExpr.parse("(q^(1/2); q)"), F(25, 2))
    assert lhs == (tail - tail.shift(F(-1, 2))).with_cap(12)
    assert product_expr_eval(ProductExpr.parse("(q^-1; q)"), 12).is_zero()


def random_monomials(seed, count=20):
    rng = random.Random(seed)
    return [rand_monomial(rng) for _ in range(count)]


@pytest.mark.parametrize("z", random_monomials(1))
def test_euler_identities(z):
    cap = F(8)
    s1 = QSeries.zero(cap, 2)
    s2 = QSeries.zero(cap, 2)
    n = 0
    while n * z.qexp <= cap:
        den = poch_finite(q(1), 1, n, cap).invert()
        s1 = s1 + mono_series(z, n, cap) * den
        s2 = s2 + mono_series(z, n, cap).shift(n * (n - 1) // 2) * den
        n += 1
    assert s1 == poch_inf(z, 1, cap).invert()
    assert s2 == poch_inf(-z, 1, cap)


@pytest.mark.parametrize("seed", range(10))
def test_q_binomial_theorem(seed):
    rng = random.Random(seed)
    a = rand_monomial(rng, positive=False)
    z = rand_monomial(rng)
    cap = F(8)
    total = QSeries.zero(cap, 2)
    n = 0
    while n * z.qexp <= cap:
        total = total + poch_finite(a, 1, n, cap) * poch_finite(q(1), 1, n, cap).invert() * mono_series(z, n, cap)
        n += 1
    expected = product_expr_eval(ProductExpr((ProductTerm(ONE, (Factor(a * z, F(1), 1), Factor(z, F(1), -1))),)),
                                 cap)
    assert total == expected


def test_prodmake_examples():
    p = product_expr_eval(ProductExpr.parse("(q; q)^-1"), 10)
    assert prodmake(p, 10) == [(F(a), 1) for a in range(1, 11)]
    g = product_expr_eval(ProductExpr.parse("(q^2, q^3; q^6)^-1"), 12)
    assert prodmake(g) == [(F(a), 1) for a in (2, 3, 8, 9)]
    one_plus_q = QSeries.from_terms({0: 1, 1: 1}, 10)
    # 1 + q = (1 - q)^-1 (1 - q^2)
    assert prodmake(one_plus_q) == [(F(1), 1), (F(2), -1)]


def test_prodmake_errors():
    with pytest.raises(NonUnitLeadingTerm):
        prodmake(QSeries.from_terms({0: 2, 1: 1}, 4))
    with pytest.raises(NonRationalExponent):
        prodmake(QSeries.from_terms({0: 1, 1: I}, 4))


def random_product(rng):
    terms = []
    for _ in range(rng.choice([1, 1, 2])):
        factors = []
        for _ in range(rng.randint(1, 4)):
            n = rng.randint(1, 6)
            factors.append(Factor(q(rng.randint(1, n)), F(n), rng.choice([1, -1])))
        terms.append(ProductTerm(Scalar(rng.choice([1, 2, F(1, 2)])), tuple(factors)))
    return ProductExpr(tuple(terms))


@pytest.mark.parametrize("seed", range(15))
def test_prodmake_roundtrip(seed):
    rng = random.Random(seed)
    p = random_product(rng)
    f = product_expr_eval(p, 25)
    c, v, exps = product_form(f)
    assert eval_product_form(c, v, exps, 25, f.grid_den) == f


def test_prodmake_fractional_grid():
    f = product_expr_eval(ProductExpr.parse("(q^(1/2); q)^-2"), 10)
    exps = prodmake(f)
    assert exps[0] == (F(1, 2), 2)
    assert all(a.denominator == 2 for a, _ in exps)


def test_product_text_roundtrip():
    rng = random.Random(3)
    for _ in range(30):
        p = random_product(rng)
        assert ProductExpr.parse(render_product(p)) == p
    p = ProductExpr.parse("(u; q) * (q; q^2) / (u; q^2)^2")
    assert p.parameters == ["u"]
    assert ProductExpr.parse(render_product(p)) == p
