import random
from fractions import Fraction

import pytest

from qrsid.ctengine import (
    MASTERS,
    FactorSpec,
    ZLaurent,
    constant_term,
    factor_expand,
    integrand_expand,
    laurent_mul,
    master_check,
    sample_master,
)
from qrsid.errors import DivergentFactor, WindowOverflow
from qrsid.monomial import Monomial
from qrsid.products import poch_inf, product_expr_eval
from qrsid.products import ProductExpr
from qrsid.qseries import QSeries
from qrsid.report import PASS, SKIP
from qrsid.ring import Scalar

F = Fraction
q = Monomial.q
ONE_M = Monomial(1, 0)


def jtp_triple(cap, extra=0):
    return integrand_expand([FactorSpec(ONE_M, 1), FactorSpec(q(1), -1)], cap,
                            const=poch_inf(q(1), 1, cap), extra=extra)


def theta_direct(cap):
    """Slices of sum_n (-1)^n q^C(n,2) z^n written out term by term."""
    out = {}
    n = 0
    while True:
        hit = False
        for m in {n, 1 - n}:
            e = m * (m - 1) // 2
            if e <= cap:
                out[m] = QSeries.monomial((-1) ** (m % 2), e, cap)
                hit = True
        if not hit:
            return out
        n += 1


def test_factor_expand_examples():
    z = factor_expand(FactorSpec(q(1), 1), 10)
    assert z.slice(1).valuation == 1 and z.slice(1).coeff(1) == Scalar(-1)
    inv = factor_expand(FactorSpec(q(1), 1, inverted=True), 10)
    assert inv.slice(0) == QSeries.one(10)
    with pytest.raises(DivergentFactor):
        FactorSpec(ONE_M, 1, inverted=True)
    with pytest.raises(WindowOverflow):
        factor_expand(FactorSpec(q(F(1, 8)), 1, inverted=True), 10, max_window=20)


def test_jtp_slices_single_terms():
    t = jtp_triple(20)
    direct = theta_direct(20)
    lo, hi = t.window
    for m in range(lo, hi + 1):
        expect = direct.get(m, QSeries.zero(20))
        assert t.slice(m) == expect
    assert constant_term(t) == QSeries.one(20)
    assert constant_term(t, 1) == QSeries.monomial(-1, 0, 20)


def test_laurent_mul_examples():
    t = jtp_triple(12)
    one = ZLaurent.constant(QSeries.one(12))
    prod = laurent_mul(t, one)
    assert all(prod.slice(m) == t.slice(m) for m in range(-8, 9))
    zpos = ZLaurent({1: QSeries.one(12)}, {1: F(0)}, 13, 12)
    zneg = ZLaurent({-1: QSeries.one(12)}, {-1: F(0)}, 13, 12)
    both = laurent_mul(zpos, zneg)
    assert set(both.slices) == {0}
    assert both.slice(0) == QSeries.one(12)


def test_two_jtp_products_constant_term():
    # [z^0] (uz, q/(uz); q)(z, q^a/z; q^a)(q; q)(q^a; q^a) = (-u q^a, -q/u, q^(a+1); q^(a+1))
    for u, a in ((q(1), 2), (q(F(1, 2)), 2), (q(1, -1), 3)):
        cap = 20
        factors = [FactorSpec(u, 1), FactorSpec(q(1) / u, -1), FactorSpec(ONE_M, 1, a), FactorSpec(q(a), -1, a)]
        const = poch_inf(q(1), 1, cap + 2) * poch_inf(q(a), a, cap + 2)
        got = constant_term(integrand_expand(factors, cap, const=const))
        w = str(u.coeff)
        rhs = ProductExpr.parse("(-(%s)*q^(%s), -(%s)^-1*q^(%s), q^%d; q^%d)" % (
            w, u.qexp + a, w, 1 - u.qexp, a + 1, a + 1))
        assert got == product_expr_eval(rhs, cap)


def random_integrand(rng):
    fs = []
    for _ in range(rng.randint(2, 4)):
        base = Monomial(rng.choice([1, -1, 2]), F(rng.randint(1, 4), 2))
        fs.append(FactorSpec(base, rng.choice([1, -1, 2, -2]), rng.choice([1, 2]), rng.random() < 0.4))
    return fs


@pytest.mark.parametrize("seed", range(6))
def test_window_certificate(seed):
    fs = random_integrand(random.Random(seed))
    a = integrand_expand(fs, 12)
    b = integrand_expand(fs, 12, extra=4)
    for m in range(-6, 7):
        assert constant_term(a, m) == constant_term(b, m)


@pytest.mark.parametrize("seed", range(6))
def test_reflection(seed):
    fs = random_integrand(random.Random(100 + seed))
    a = integrand_expand(fs, 10)
    b = integrand_expand([f.reflect() for f in fs], 10)
    for m in range(-6, 7):
        assert constant_term(a, m) == constant_term(b, -m)
    r = a.reflect()
    assert all(r.slice(m) == a.slice(-m) for m in range(-6, 7))


def test_index_123_odd_part_vanishes():
    # [z^-1] of (-z^2 q^2/alpha^2; q^2)(dz; q)/(d^3 z^3; q^3): no factor lowers the z-degree
    for alpha, d in ((q(F(1, 2)), q(F(1, 2))), (q(1), q(1, -1)), (q(F(1, 2)), q(F(3, 2), 2))):
        fs = [FactorSpec(-(q(2) / alpha ** 2), 2, 2), FactorSpec(d, 1), FactorSpec(d ** 3, 3, 3, inverted=True)]
        f = integrand_expand(fs, 15)
        assert constant_term(f, -1).is_zero()
        assert not constant_term(f, 0).is_zero()


def test_master_examples():
    assert master_check("rosengren_3_2", {"alpha1": q(3), "alpha2": q(3), "beta1": q(2), "beta2": q(2),
                                          "beta3": q(2)}, 20).status == PASS
    assert master_check("eq_2_1", {"beta1": q(1), "beta3": q(2)}, 20).status == PASS
    zero = Monomial(0, 0)
    assert master_check("prop_3_2", {"a": zero, "c": zero, "b": q(1), "d": q(1), "t": q(2)}, 20).status == PASS


def test_master_skips_unbalanced():
    rep = master_check("rosengren_3_2", {"alpha1": q(3), "alpha2": q(4), "beta1": q(2), "beta2": q(2),
                                         "beta3": q(2)}, 10)
    assert rep.status == SKIP


@pytest.mark.parametrize("which", sorted(MASTERS))
def test_random_masters(which):
    for assign in sample_master(which, 3, seed=5):
        rep = master_check(which, assign, 12)
        assert rep.status == PASS, rep.line()
