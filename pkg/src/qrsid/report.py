"""Verification reports shared by catalog, hyper, ctengine and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .qseries import QSeries, render

PASS, FAIL, SKIP, ERROR = "PASS", "FAIL", "SKIP", "ERROR"
STATUSES = (PASS, FAIL, SKIP, ERROR)


@dataclass
class VerifyReport:
    id: str
    status: str
    cap: str
    assignment: str = ""
    first_diff: dict | None = None
    wall_time: float = 0.0
    record_status: str = ""
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError("bad report status %r" % self.status)
        if self.status == FAIL and not self.first_diff:
            raise ValueError("a FAIL report needs first_diff")
        self.cap = str(Fraction(self.cap))

    @property
    def ok(self) -> bool:
        return self.status in (PASS, SKIP)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, d) -> "VerifyReport":
        return cls(**d)

    def line(self, timing: bool = True) -> str:
        head = "%s %s cap=%s" % (self.id, self.status, self.cap)
        if self.assignment:
            head += " [%s]" % self.assignment
        if timing:
            head += " (%d ms)" % round(self.wall_time * 1000)
        if self.status == FAIL:
            fd = self.first_diff
            head += ": first difference at q^%s, lhs %s, rhs %s" % (fd["exponent"], fd["lhs"], fd["rhs"])
        elif self.note:
            head += ": " + self.note
        return head


def dumps_reports(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def loads_reports(text: str):
    return [VerifyReport.from_json(d) for d in json.loads(text)]


def compare(ident: str, lhs: QSeries, rhs: QSeries, cap, started: float | None = None, **extra) -> VerifyReport:
    """PASS iff the two series agree exactly up to ``cap``."""
    cap = Fraction(cap)
    if lhs.order_cap < cap or rhs.order_cap < cap:
        raise ValueError("a side is only known up to q^%s" % min(lhs.order_cap, rhs.order_cap))
    a, b = lhs.with_cap(cap), rhs.with_cap(cap)
    diff = a.first_difference(b)
    wall = time.perf_counter() - started if started is not None else 0.0
    if diff is None and render(a) == render(b):
        return VerifyReport(ident, PASS, cap, wall_time=wall, **extra)
    if diff is None:
        raise AssertionError("equal series with different canonical text")
    e, x, y = diff
    fd = {"exponent": str(e), "lhs": str(x), "rhs": str(y)}
    return VerifyReport(ident, FAIL, cap, first_diff=fd, wall_time=wall, **extra)


def render_assignment(assign) -> str:
    if not assign:
        return ""
    return ", ".join("%s=%s" % (k, assign[k]) for k in sorted(assign))
