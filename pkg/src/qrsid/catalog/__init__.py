"""Identity records, the catalog file and the verification driver."""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..errors import QRSIDError, UnknownIdentity
from ..monomial import Monomial
from ..products import Factor, ProductExpr, ProductTerm, product_expr_eval
from ..report import ERROR, SKIP, STATUSES, VerifyReport, compare, render_assignment
from ..ring import Scalar
from ..sums import SumSideSpec, sum_sides_eval

__all__ = [
    "CATALOG_FILE",
    "RECORD_STATUSES",
    "DEFAULT_CAP",
    "IdentityRecord",
    "load_catalog",
    "dumps_catalog",
    "get_record",
    "verify_identity",
    "verify_record",
    "verify_all",
    "summarize",
    "product_mutations",
]

CATALOG_FILE = os.path.join(os.path.dirname(__file__), "catalog.json")
RECORD_STATUSES = ("proved-in-paper", "cited", "conjecture")
DEFAULT_CAP = 40


def _fr(x) -> str:
    return str(Fraction(x))


def _factor_json(f: Factor) -> dict:
    d = {
        "coeff": str(f.base.coeff),
        "qexp": _fr(f.base.qexp),
        "modulus": _fr(f.modulus),
        "power": f.power,
    }
    if f.base.params:
        d["params"] = {n: k for n, k in f.base.params}
    return d


def _factor_from_json(d) -> Factor:
    base = Monomial(Scalar.parse(d["coeff"]), Fraction(d["qexp"]), tuple(d.get("params", {}).items()))
    return Factor(base, Fraction(d["modulus"]), d["power"])


def product_to_json(p: ProductExpr) -> dict:
    return {"terms": [{"weight": str(t.weight), "factors": [_factor_json(f) for f in t.factors]} for t in p.terms]}


def product_from_json(d) -> ProductExpr:
    return ProductExpr(tuple(
        ProductTerm(Scalar.parse(t["weight"]), tuple(_factor_from_json(f) for f in t["factors"]))
        for t in d["terms"]
    ))


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    status: str
    anchor: str
    quote: str
    sum_sides: tuple
    product: ProductExpr
    sampling: tuple = field(default=())

    def __post_init__(self):
        if self.status not in RECORD_STATUSES:
            raise ValueError("bad record status %r" % self.status)
        object.__setattr__(self, "sum_sides", tuple(self.sum_sides))
        object.__setattr__(self, "sampling", tuple(self.sampling))
        if not self.sum_sides:
            raise ValueError("a record needs a sum side")

    @property
    def parameters(self):
        names = set(self.product.parameters)
        for s in self.sum_sides:
            names.update(s.param_names)
        return sorted(names)

    @property
    def grid(self) -> int:
        g = 1
        for s in self.sum_sides:
            g = g * s.grid // math.gcd(g, s.grid)
        return g

    def assignments(self):
        """Sampling assignments, or a single empty one for parameter-free records."""
        return list(self.sampling) if self.parameters else [{}]

    def to_json(self) -> dict:
        sides = [s.to_json() for s in self.sum_sides]
        return {
            "id": self.id,
            "status": self.status,
            "source": {"anchor": self.anchor, "quote": self.quote},
            "sum_side": sides[0] if len(sides) == 1 else sides,
            "product_side": product_to_json(self.product),
            "sampling": [{k: str(v) for k, v in sorted(a.items())} for a in self.sampling],
        }

    @classmethod
    def from_json(cls, d) -> "IdentityRecord":
        sides = d["sum_side"]
        if isinstance(sides, dict):
            sides = [sides]
        return cls(
            id=d["id"],
            status=d["status"],
            anchor=d["source"]["anchor"],
            quote=d["source"]["quote"],
            sum_sides=tuple(SumSideSpec.from_json(s) for s in sides),
            product=product_from_json(d["product_side"]),
            sampling=tuple({k: Monomial.parse(v) for k, v in a.items()} for a in d.get("sampling", [])),
        )

    def sides(self, assign, cap):
        """``(sum side, product side)`` series under ``assign`` up to ``cap``."""
        lhs = sum_sides_eval(self.sum_sides, assign, cap)
        rhs = product_expr_eval(self.product, cap, assign)
        return lhs, rhs


def dumps_catalog(records) -> str:
    return json.dumps([r.to_json() for r in records], indent=1) + "\n"


def loads_catalog(text: str):
    return [IdentityRecord.from_json(d) for d in json.loads(text)]


def catalog_path() -> str:
    return os.environ.get("QRSID_CATALOG") or CATALOG_FILE


@lru_cache(maxsize=8)
def _load(path: str, mtime: float):
    with open(path) as fh:
        return tuple(loads_catalog(fh.read()))


def load_catalog(path: str | None = None):
    """Records in file order (sorted by id); ``QRSID_CATALOG`` overrides the default file."""
    path = path or catalog_path()
    return list(_load(path, os.path.getmtime(path)))


def get_record(ident: str, records=None) -> IdentityRecord:
    for r in records if records is not None else load_catalog():
        if r.id == ident:
            return r
    raise UnknownIdentity(ident)


def _verify(rec: IdentityRecord, assign, cap) -> VerifyReport:
    text = render_assignment(assign)
    note = "" if rec.status == "proved-in-paper" else "evidence only, not a proof"
    missing = [n for n in rec.parameters if n not in assign]
    if missing:
        return VerifyReport(rec.id, SKIP, cap, text, record_status=rec.status,
                            note="unassigned: " + ", ".join(missing))
    t0 = time.perf_counter()
    try:
        lhs, rhs = rec.sides(assign, Fraction(cap))
    except (QRSIDError, ZeroDivisionError) as exc:
        return VerifyReport(rec.id, ERROR, cap, text, wall_time=time.perf_counter() - t0,
                            record_status=rec.status, note="%s: %s" % (type(exc).__name__, exc))
    return compare(rec.id, lhs, rhs, cap, t0, assignment=text, record_status=rec.status, note=note)


def verify_identity(ident: str, assign=None, cap=DEFAULT_CAP, records=None) -> VerifyReport:
    """Compare both sides of one record under ``assign`` (default: its first sample)."""
    rec = get_record(ident, records)
    if assign is None:
        assign = rec.assignments()[0] if rec.assignments() else {}
    return _verify(rec, dict(assign), cap)


def verify_record(rec: IdentityRecord, cap=DEFAULT_CAP):
    """One report per sampling assignment."""
    return [_verify(rec, a, cap) for a in rec.assignments()]


def _select(records, status=None, prefix=None, ids=None):
    out = []
    for r in records:
        if status and r.status != status:
            continue
        if prefix and not r.id.startswith(prefix):
            continue
        if ids is not None and r.id not in ids:
            continue
        out.append(r)
    return out


def _verify_job(args):
    rec_json, cap = args
    return [r.to_json() for r in verify_record(IdentityRecord.from_json(rec_json), cap)]


def verify_all(cap=DEFAULT_CAP, status=None, prefix=None, jobs=1, records=None):
    """Reports for every selected record and sample, ordered by id then sample."""
    if status is not None and status not in RECORD_STATUSES:
        raise ValueError("unknown record status %r" % status)
    records = load_catalog() if records is None else records
    chosen = sorted(_select(records, status, prefix), key=lambda r: r.id)
    if jobs <= 1 or len(chosen) <= 1:
        batches = [verify_record(r, cap) for r in chosen]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_verify_job, [(r.to_json(), cap) for r in chosen]))
        batches = [[VerifyReport.from_json(d) for d in b] for b in raw]
    return [rep for b in batches for rep in b]


def summarize(reports) -> dict:
    counts = {s: 0 for s in STATUSES}
    for r in reports:
        counts[r.status] += 1
    return counts


def product_mutations(p: ProductExpr, delta=1):
    """Every copy of ``p`` with one factor's base exponent moved by ``delta``.

    Yields ``((term index, factor index), mutated expression)``.
    """
    delta = Fraction(delta)
    for ti, t in enumerate(p.terms):
        for fi, f in enumerate(t.factors):
            b = f.base
            nb = Monomial(b.coeff, b.qexp + delta, b.params)
            fs = list(t.factors)
            fs[fi] = Factor(nb, f.modulus, f.power)
            terms = list(p.terms)
            terms[ti] = ProductTerm(t.weight, tuple(fs))
            yield (ti, fi), ProductExpr(tuple(terms))
