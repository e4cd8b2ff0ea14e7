import random
from fractions import Fraction

import pytest

from qrsid.errors import NonTerminating, PoleInLowerParameter
from qrsid.hyper import SUMMATIONS, PhiSpec, phi, sample_summation, summation_check
from qrsid.monomial import Monomial
from qrsid.products import poch_finite, poch_inf, product_expr_eval
from qrsid.products import ProductExpr
from qrsid.qseries import QSeries
from qrsid.report import PASS, SKIP

F = Fraction
q = Monomial.q
ZERO_M = Monomial(0, 0)


def naive_phi(upper, lower, z, cap, terms):
    """Direct partial sum of the defining series, no truncation tricks."""
    r, s = len(upper), len(lower)
    total = QSeries.zero(cap, 2)
    for n in range(terms):
        num = QSeries.one(cap, 2)
        for a in upper:
            num = num * poch_finite(a, 1, n, cap)
        den = poch_finite(q(1), 1, n, cap)
        for b in lower:
            den = den * poch_finite(b, 1, n, cap)
        sign = (-1) ** (n * (1 + s - r))
        extra = QSeries.monomial(sign * z.coeff ** n, z.qexp * n + (1 + s - r) * F(n * (n - 1), 2), cap, 2)
        total = total + num * den.invert() * extra
    return total


def test_phi_euler_case():
    for z in (q(1), q(F(1, 2), -1), q(2, 3)):
        assert phi([ZERO_M], [], z, 12) == poch_inf(z, 1, 12).invert()


def test_phi_q_gauss_example():
    a, b, c = q(1), q(2), q(5)
    lhs = phi([a, b], [c], c / (a * b), 20)
    rhs = product_expr_eval(ProductExpr.parse("(q^4, q^3; q) / (q^5, q^2; q)"), 20)
    assert lhs == rhs


def test_phi_terminates_on_negative_power():
    f = phi([q(-2), q(1)], [q(3)], q(1), 30)
    # (q^-2; q)_n vanishes from n = 3 on, so three terms of the sum are exact
    naive = naive_phi([q(-2), q(1)], [q(3)], q(1), 30, 3)
    assert f.with_cap(naive.order_cap) == naive
    assert naive_phi([q(-2), q(1)], [q(3)], q(1), 30, 8) == naive


def test_phi_matches_naive_sum():
    rng = random.Random(4)
    for _ in range(10):
        ups = [Monomial(rng.choice([1, -1, 2]), F(rng.randint(0, 4), 2)) for _ in range(2)]
        low = [Monomial(rng.choice([1, -1]), F(rng.randint(1, 4), 2))]
        z = Monomial(rng.choice([1, -2]), F(rng.randint(1, 3), 2))
        assert phi(ups, low, z, 8) == naive_phi(ups, low, z, 8, 20)


def test_phi_argument_beyond_cap():
    assert phi([q(1), q(2)], [q(3)], q(11), 10) == QSeries.one(10)


def test_phi_errors():
    with pytest.raises(NonTerminating):
        phi([q(1), q(2)], [q(3)], Monomial(1, 0), 10)
    with pytest.raises(PoleInLowerParameter):
        phi([q(1)], [q(-1)], q(1), 10)
    with pytest.raises(ValueError):
        PhiSpec((Monomial.param("a"),), (), q(1))


def test_summation_examples():
    assert summation_check("q_gauss", {"a": q(1), "b": q(2), "c": q(5)}, 25).status == PASS
    # the printed assignments give arguments of q-order <= 0, so they are skipped, never passed
    assert summation_check("bailey_daum", {"a": q(2), "b": q(3)}, 25).status == SKIP
    assert summation_check("q_dixon", {"a": q(4), "b": q(1), "c": q(2)}, 20).status == SKIP
    assert summation_check("bailey_daum", {"a": q(2), "b": q(F(1, 2))}, 25).status == PASS
    assert summation_check("q_dixon", {"a": q(4), "b": q(F(1, 2)), "c": q(F(1, 2))}, 20).status == PASS


def test_missing_assignment_skips():
    assert summation_check("heine", {"a": q(1)}, 10).status == SKIP


@pytest.mark.parametrize("which", sorted(SUMMATIONS))
def test_random_summations(which):
    for assign in sample_summation(which, 6, seed=3):
        assert summation_check(which, assign, 15).status == PASS


def test_heine_transformation_direct():
    rng = random.Random(9)
    done = 0
    for assign in sample_summation("heine", 10, seed=rng.randint(0, 99)):
        rep = summation_check("heine", assign, 20)
        assert rep.status == PASS, rep.line()
        done += 1
    assert done == 10


def test_wrong_formula_fails():
    a, b, c = q(1), q(2), q(5)
    lhs = phi([a, b], [c], c / (a * b), 20)
    wrong = product_expr_eval(ProductExpr.parse("(q^4, q^3; q) / (q^5, q^3; q)"), 20)
    assert lhs.first_difference(wrong) is not None
