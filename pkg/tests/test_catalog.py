import json
from fractions import Fraction

import pytest

from qrsid import catalog
from qrsid.catalog import (
    CATALOG_FILE,
    IdentityRecord,
    dumps_catalog,
    get_record,
    load_catalog,
    loads_catalog,
    product_mutations,
    summarize,
    verify_all,
    verify_identity,
)
from qrsid.catalog.build import build_records
from qrsid.errors import UnknownIdentity
from qrsid.monomial import Monomial
from qrsid.products import product_expr_eval
from qrsid.report import FAIL, PASS, SKIP
from qrsid.sums import sum_sides_eval

F = Fraction

REQUIRED = [
    "I-rr-1", "I-rr-2", "I-slater-1", "I-slater-2", "I-capparelli", "I-kursungoz-conj", "I-au",
    "I-kr-F1", "I-kr-F2", "I-kr-G1", "I-kr-G2", "I-takigiku-122", "I-laughlin-123", "I-dl-1112",
    "I-11-sym", "I-11-sq", "I-11-theta-a", "I-11-theta-b", "I-12-a", "I-12-b", "I-111", "I-112-a",
    "I-112-b", "I-113", "I-122-a", "I-122-b", "I-123-frac", "I-123-gauss", "I-124-a", "I-124-b", "I-124-c",
]


def test_file_matches_build():
    with open(CATALOG_FILE) as fh:
        assert fh.read() == dumps_catalog(build_records())


def test_required_records_present(records):
    ids = {r.id for r in records}
    assert set(REQUIRED) <= ids
    assert any(i.startswith("I-ag-k2") for i in ids) and any(i.startswith("I-ag-k3") for i in ids)
    assert sum(r.status == "proved-in-paper" for r in records) >= 30
    assert get_record("I-kursungoz-conj").status == "conjecture"
    assert [r.id for r in records] == sorted(r.id for r in records)


def test_roundtrip(records):
    for rec in records:
        d = rec.to_json()
        assert IdentityRecord.from_json(json.loads(json.dumps(d))) == rec
    assert loads_catalog(dumps_catalog(records)) == records


def test_file_fields(records):
    raw = json.load(open(CATALOG_FILE))
    for d in raw:
        assert set(d) == {"id", "status", "source", "sum_side", "product_side", "sampling"}
        assert set(d["source"]) == {"anchor", "quote"}
        sides = d["sum_side"] if isinstance(d["sum_side"], list) else [d["sum_side"]]
        for s in sides:
            assert {"k", "quad", "unit_form", "subscripts", "params", "grid"} <= set(s)
            assert set(s["quad"]) == {"matrix", "linear", "constant"}
        for t in d["product_side"]["terms"]:
            for f in t["factors"]:
                assert {"coeff", "qexp", "modulus", "power"} <= set(f)
                F(f["qexp"])


def test_sampling_rules(records):
    for rec in records:
        if not rec.parameters:
            continue
        samples = rec.sampling
        assert len(samples) >= 3, rec.id
        assert any(any(m.coeff == -1 for m in a.values()) for a in samples), rec.id
        assert any(any(m.qexp.denominator > 1 for m in a.values()) for a in samples), rec.id


def test_spec_examples():
    q = Monomial.q
    rep = verify_identity("I-11-sym", {"u": -q(1), "v": -q(F(1, 2))}, 30)
    assert rep.status == PASS
    assert verify_identity("I-rr-1", cap=30).status == PASS
    zero = {"u": Monomial(0, 0), "v": Monomial(0, 0)}
    assert verify_identity("I-11-sym", zero, 10).status == PASS
    lhs, rhs = get_record("I-11-sym").sides(zero, 10)
    assert lhs.is_zero() is False and lhs == rhs and rhs.coeffs == {F(0): rhs.coeff(0)}


def test_sym_corollary_against_printed_product():
    rec = get_record("I-11-sym-cor-1")
    assert str(rec.product.terms[0].factors[0].base) == "q^(1/2)"
    assert rec.product.terms[0].factors[0].power == -2


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity("no-such")


def test_missing_parameter_skips():
    rep = verify_identity("I-11-sym", {"u": Monomial.q(1)}, 10)
    assert rep.status == SKIP and "v" in rep.note


def test_prefix_filter_and_order():
    reps = verify_all(10, prefix="I-11")
    assert reps and all(r.id.startswith("I-11") for r in reps)
    assert [r.id for r in reps] == sorted(r.id for r in reps)
    assert summarize(reps)[PASS] == len(reps)


def test_conjecture_is_evidence_only():
    reps = verify_all(40, status="conjecture")
    assert reps and all(r.status == PASS for r in reps)
    assert all("not a proof" in r.note for r in reps)


def test_parallel_matches_serial():
    a = verify_all(12, prefix="I-12", jobs=1)
    b = verify_all(12, prefix="I-12", jobs=3)
    strip = lambda rs: [dict(r.to_json(), wall_time=0) for r in rs]  # noqa: E731
    assert strip(a) == strip(b)


def test_bad_status_filter():
    with pytest.raises(ValueError):
        verify_all(10, status="maybe")


def test_mutations_fail(records):
    for rid in ("I-rr-1", "I-11-sym", "I-123-frac", "I-dl-1112"):
        rec = get_record(rid, records)
        assign = rec.assignments()[0]
        lhs = sum_sides_eval(rec.sum_sides, assign, 20)
        for key, mut in product_mutations(rec.product):
            rhs = product_expr_eval(mut, 20, assign)
            assert lhs.first_difference(rhs) is not None, (rid, key)


def test_catalog_env_override(tmp_path, monkeypatch):
    recs = [get_record("I-rr-1")]
    path = tmp_path / "mini.json"
    path.write_text(dumps_catalog(recs))
    monkeypatch.setenv("QRSID_CATALOG", str(path))
    assert [r.id for r in load_catalog()] == ["I-rr-1"]
    with pytest.raises(UnknownIdentity):
        get_record("I-rr-2")


def test_broken_record_reports_fail(tmp_path):
    rec = get_record("I-rr-1")
    bad = IdentityRecord.from_json(dict(rec.to_json(), id="I-bad", product_side=get_record("I-rr-2").to_json()[
        "product_side"]))
    rep = catalog.verify_record(bad, 10)[0]
    assert rep.status == FAIL
    assert rep.first_diff["exponent"] == "1"
