from fractions import Fraction

import pytest

from qrsid.qseries import QSeries
from qrsid.report import ERROR, FAIL, PASS, VerifyReport, compare, dumps_reports, loads_reports, render_assignment
from qrsid.monomial import Monomial


def test_compare_pass_and_fail():
    a = QSeries.from_terms({0: 1, 2: 3}, 5)
    assert compare("x", a, a, 5).status == PASS
    b = QSeries.from_terms({0: 1, 2: 3, Fraction(7, 2): 1}, 5, 2)
    rep = compare("x", a, b, 5)
    assert rep.status == FAIL
    assert rep.first_diff == {"exponent": "7/2", "lhs": "0", "rhs": "1"}


def test_compare_needs_enough_precision():
    a = QSeries.one(3)
    with pytest.raises(ValueError):
        compare("x", a, QSeries.one(5), 5)


def test_report_invariants():
    with pytest.raises(ValueError):
        VerifyReport("x", FAIL, 3)
    with pytest.raises(ValueError):
        VerifyReport("x", "MAYBE", 3)


def test_json_roundtrip_and_line():
    reps = [VerifyReport("a", PASS, 10, "u=q", wall_time=0.0123),
            VerifyReport("b", FAIL, 10, first_diff={"exponent": "2", "lhs": "1", "rhs": "0"}),
            VerifyReport("c", ERROR, 5, note="NonTerminating: boom")]
    assert loads_reports(dumps_reports(reps)) == reps
    assert reps[0].line() == "a PASS cap=10 [u=q] (12 ms)"
    assert reps[1].line(timing=False) == "b FAIL cap=10: first difference at q^2, lhs 1, rhs 0"
    assert reps[2].line(timing=False) == "c ERROR cap=5: NonTerminating: boom"


def test_render_assignment_sorted():
    assert render_assignment({"v": Monomial.parse("-q^(1/2)"), "u": Monomial.parse("i*q")}) == "u=z12^3*q, v=-q^(1/2)"
    assert render_assignment({}) == ""
