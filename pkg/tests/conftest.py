import random
from fractions import Fraction

import pytest

from qrsid.catalog import load_catalog
from qrsid.monomial import Monomial
from qrsid.qseries import QSeries
from qrsid.ring import Scalar


def rand_scalar(rng, lo=-5, hi=5, rational=False):
    coords = [Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(4)]
    if rational:
        coords[1:] = [0, 0, 0]
    return Scalar(*coords)


def rand_series(rng, cap=8, grid=1, unit=False, rational=False):
    top = int(cap * grid)
    terms = {}
    for j in range(top + 1):
        if rng.random() < 0.6:
            terms[Fraction(j, grid)] = rand_scalar(rng, rational=rational)
    if unit:
        terms[Fraction(0)] = Scalar(rng.choice([1, -1, 2, Fraction(1, 3)]))
    return QSeries.from_terms(terms, cap, grid)


def rand_monomial(rng, positive=True, grid=2):
    e = Fraction(rng.randint(1 if positive else 0, 3 * grid), grid)
    return Monomial(rng.choice([Scalar(1), Scalar(-1), Scalar(2), Scalar(0, 0, 0, 1), Scalar(Fraction(1, 2))]), e)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def records():
    return load_catalog()


# criterion number -> verdict line, filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
