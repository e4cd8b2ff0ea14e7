import random
from fractions import Fraction

import pytest

from qrsid.errors import BeyondCap, GridOverflow, NonUnitLeadingTerm
from qrsid.qseries import QSeries, coeff, integrality_report, render, rescale, series_arith, series_invert
from qrsid.ring import I, ONE, Scalar

from conftest import rand_series

F = Fraction


def poly(*cs, cap=None, grid=1):
    terms = {F(j, grid): Scalar(c) for j, c in enumerate(cs) if c}
    return QSeries.from_terms(terms, cap if cap is not None else F(len(cs) - 1, grid), grid)


def naive_mul(a, b, cap):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            if e1 + e2 <= cap:
                out[e1 + e2] = out.get(e1 + e2, Scalar(0)) + c1 * c2
    return out


def test_spec_arith_examples():
    geo = poly(1, 1, 1, 1, 1, 1)
    assert series_arith(poly(1, -1, cap=5), geo, "mul") == QSeries.one(5)
    prod = series_arith(poly(1, -1, cap=3), poly(1, 0, -1, cap=3), "mul")
    assert render(prod) == "1 - q - q^2 + q^3"
    rng = random.Random(1)
    for _ in range(10):
        f = rand_series(rng)
        assert series_arith(f, -f, "add").is_zero()


def test_spec_invert_examples():
    assert render(series_invert(poly(1, -1, cap=3))) == "1 + q + q^2 + q^3"
    assert series_invert(QSeries.monomial(2, 0, 4)) == QSeries.monomial(F(1, 2), 0, 4)
    rng = random.Random(2)
    for _ in range(20):
        f = rand_series(rng, unit=True, grid=rng.choice([1, 2]))
        assert f * series_invert(f) == QSeries.one(f.order_cap, f.grid_den)
    with pytest.raises(NonUnitLeadingTerm):
        series_invert(poly(0, 1, cap=3))


def test_spec_rescale_examples():
    assert rescale(poly(1, -1, cap=4), 2) == QSeries.from_terms({0: 1, 2: -1}, 8)
    half = QSeries.from_terms({0: 1, F(1, 2): -1}, 3, 2)
    assert rescale(half, 2) == poly(1, -1, cap=6)
    rng = random.Random(3)
    for _ in range(10):
        f = rand_series(rng, grid=rng.choice([1, 2, 3]))
        assert rescale(rescale(f, 2), F(1, 2)) == f
    with pytest.raises(GridOverflow):
        rescale(poly(1, 1, cap=2), F(1, 25))


def test_spec_coeff_examples():
    f = poly(1, -1, -1, 1)
    assert coeff(f, 2) == Scalar(-1)
    assert coeff(f, F(1, 2)) == Scalar(0)
    with pytest.raises(BeyondCap):
        coeff(f, 4)


def test_spec_integrality_examples():
    assert integrality_report(poly(1, 0, 1)) == {"is_integer_grid": True, "first_fractional": None}
    f = QSeries.from_terms({0: 1, F(1, 2): 1}, 2, 2)
    assert integrality_report(f) == {"is_integer_grid": False, "first_fractional": F(1, 2)}


def test_ring_axioms_random():
    rng = random.Random(4)
    for _ in range(25):
        g = rng.choice([1, 2, 4])
        a, b, c = (rand_series(rng, cap=6, grid=rng.choice([1, g])) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_mul_matches_naive_convolution():
    rng = random.Random(5)
    for _ in range(25):
        a = rand_series(rng, cap=7, grid=2)
        b = rand_series(rng, cap=5, grid=3)
        prod = a * b
        assert prod.grid_den == 6 and prod.order_cap == 5
        expect = naive_mul(a, b, F(5))
        for e, c in expect.items():
            assert prod.coeff(e) == c
        assert all(expect.get(e, Scalar(0)) == c for e, c in prod.items())


def test_truncation_consistency():
    rng = random.Random(6)
    for _ in range(20):
        a = rand_series(rng, cap=10, unit=True)
        b = rand_series(rng, cap=10)
        for op in (lambda x, y: x * y, lambda x, y: x + y, lambda x, y: x - y):
            assert op(a, b).with_cap(6) == op(a.with_cap(6), b.with_cap(6))
        assert a.invert().with_cap(6) == a.with_cap(6).invert()


def test_cap_and_grid_alignment():
    a = QSeries.from_terms({0: 1, F(1, 2): 1}, 3, 2)
    b = QSeries.from_terms({0: 1, F(1, 3): I}, 2, 3)
    s = a + b
    assert s.grid_den == 6 and s.order_cap == 2
    assert s.coeff(F(1, 3)) == I


def test_canonical_text_roundtrip():
    rng = random.Random(8)
    for _ in range(40):
        f = rand_series(rng, grid=rng.choice([1, 2, 4]))
        assert QSeries.parse(render(f), f.order_cap, f.grid_den) == f
        assert QSeries.parse(f.dumps()) == f
    assert render(QSeries.from_terms({0: 1, 1: -1, F(5, 2): Scalar(1, 1)}, 3, 2)) == "1 - q + (1+z12)*q^(5/2)"


def test_terms_above_cap_are_dropped():
    f = QSeries.from_terms({0: 1, 3: 5, 9: 1}, 4)
    assert f.coeffs == {F(0): ONE, F(3): Scalar(5)}
    assert f.valuation == 0
