"""Command line front end: ``qrsid verify|expand|prodmake|oracle``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .errors import ParseError, QRSIDError, UnknownIdentity
from .monomial import Monomial
from .partitions import NMAX, graded_product, table_S, table_T
from .products import ProductExpr, product_expr_eval, product_form
from .qseries import QSeries, render
from .report import ERROR, FAIL, PASS, SKIP, dumps_reports
from .sums import SumSideSpec, sum_sides_eval

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _assignments(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError("--assign expects name=monomial, got %r" % item)
        out[name.strip()] = Monomial.parse(value.strip())
    return out


def _emit_reports(reports, args):
    if args.json:
        print(dumps_reports(reports))
    else:
        for r in reports:
            print(r.line(timing=not args.no_timing))


def _bad(reports):
    return any(r.status in (FAIL, ERROR) for r in reports)


def cmd_verify(args) -> int:
    if bool(args.id) == bool(args.all):
        raise UsageError("give exactly one of --id or --all")
    assign = _assignments(args.assign)
    if args.id:
        rec = catalog.get_record(args.id)
        if assign or not rec.parameters:
            reports = [catalog.verify_identity(rec.id, assign, args.cap, records=[rec])]
        else:
            reports = catalog.verify_record(rec, args.cap)
    else:
        if assign:
            raise UsageError("--assign only applies with --id")
        reports = catalog.verify_all(args.cap, args.status, args.prefix, args.jobs)
    _emit_reports(reports, args)
    if not args.json:
        counts = catalog.summarize(reports)
        print("summary: " + ", ".join("%s=%d" % (k, counts[k]) for k in (PASS, FAIL, SKIP, ERROR)))
    return EXIT_FAIL if _bad(reports) else EXIT_OK


def _load_expression(args):
    """``("sum", specs)``, ``("product", expr)`` or ``("series", QSeries)``."""
    if bool(args.expr) == bool(args.file):
        raise UsageError("give exactly one of --expr or --file")
    text = args.expr
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{") or stripped.startswith("["):
            data = json.loads(text)
            if isinstance(data, dict) and "terms" in data:
                return "product", catalog.product_from_json(data)
            if isinstance(data, dict):
                data = [data]
            return "sum", [SumSideSpec.from_json(d) for d in data]
    kind, sep, body = text.partition(":")
    kind = kind.strip().upper()
    if not sep or kind not in ("P", "S", "F"):
        raise UsageError("expressions start with 'P:', 'S:' or 'F:'")
    body = body.strip()
    if kind == "P":
        return "product", ProductExpr.parse(body)
    if kind == "F":
        return "series", QSeries.parse(body)
    rec = catalog.get_record(body)
    return "sum", list(rec.sum_sides)


def _evaluate(args) -> QSeries:
    kind, obj = _load_expression(args)
    assign = _assignments(args.assign)
    cap = Fraction(args.cap)
    if kind == "product":
        return product_expr_eval(obj, cap, assign)
    if kind == "sum":
        return sum_sides_eval(obj, assign, cap)
    return obj.with_cap(min(cap, obj.order_cap))


def cmd_expand(args) -> int:
    print(render(_evaluate(args)))
    return EXIT_OK


def cmd_prodmake(args) -> int:
    f = _evaluate(args)
    c, v, exps = product_form(f)
    if c != 1 or v != 0:
        print("leading: %s" % Monomial(c, v))
    for a, e in exps:
        print("%s: %s" % (a, e))
    return EXIT_OK


def _oracle_partitions(args) -> int:
    n = args.nmax
    S, T, G = table_S(n), table_T(n), graded_product(n)
    keys = sorted(set(S) | set(T) | set(G), key=lambda k: (k[2], k[0], k[1]))
    bad = 0
    if args.json:
        rows = [{"u": u, "v": v, "n": m, "S": S.get((u, v, m), 0), "T": T.get((u, v, m), 0),
                 "product": G.get((u, v, m), 0)} for u, v, m in keys]
        print(json.dumps(rows, indent=1))
        bad = sum(1 for r in rows if not r["S"] == r["T"] == r["product"])
    else:
        print("%3s %3s %3s %6s %6s %8s" % ("n", "u", "v", "S", "T", "product"))
        for key in keys:
            s, t, g = S.get(key, 0), T.get(key, 0), G.get(key, 0)
            mark = "" if s == t == g else "   <-- mismatch"
            bad += bool(mark)
            print("%3d %3d %3d %6d %6d %8d%s" % (key[2], key[0], key[1], s, t, g, mark))
    if bad:
        print("S=T failed at %d triples with n<=%d" % (bad, n))
        return EXIT_FAIL
    print("S=T verified for all (u,v,n), n<=%d" % n)
    return EXIT_OK


def _oracle_formulas(args) -> int:
    from . import ctengine, hyper

    if args.suite == "summation":
        names, sample, check = list(hyper.SUMMATIONS), hyper.sample_summation, hyper.summation_check
    else:
        names, sample, check = list(ctengine.MASTERS), ctengine.sample_master, ctengine.master_check
    cap = args.cap if args.cap is not None else (20 if args.suite == "summation" else 25)
    reports = []
    for name in names:
        if args.name and name != args.name:
            continue
        for assign in sample(name, args.count, args.seed):
            reports.append(check(name, assign, cap))
    _emit_reports(reports, args)
    return EXIT_FAIL if _bad(reports) else EXIT_OK


def cmd_oracle(args) -> int:
    if args.suite == "partitions":
        return _oracle_partitions(args)
    return _oracle_formulas(args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qrsid", description="Verify multi-sum Rogers-Ramanujan type identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="compare both sides of catalog identities")
    v.add_argument("--id")
    v.add_argument("--all", action="store_true")
    v.add_argument("--cap", type=int, default=catalog.DEFAULT_CAP)
    v.add_argument("--assign", action="append", metavar="NAME=MONOMIAL")
    v.add_argument("--status", choices=catalog.RECORD_STATUSES)
    v.add_argument("--prefix", help="only ids starting with this")
    v.add_argument("--json", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true")
    v.set_defaults(func=cmd_verify)

    for name, func, helptext in (("expand", cmd_expand, "print a truncated expansion"),
                                 ("prodmake", cmd_prodmake, "recover product exponents")):
        e = sub.add_parser(name, help=helptext)
        e.add_argument("--expr", help="'P: <product>', 'S: <record id>' or 'F: <series>'")
        e.add_argument("--file", help="JSON sum-side or product-side serialization, or expression text")
        e.add_argument("--cap", type=int, default=20)
        e.add_argument("--assign", action="append", metavar="NAME=MONOMIAL")
        e.set_defaults(func=func)

    o = sub.add_parser("oracle", help="run the brute-force oracle suites")
    o.add_argument("--suite", choices=("partitions", "summation", "master"), default="partitions")
    o.add_argument("--nmax", type=int, default=NMAX)
    o.add_argument("--name", help="one formula of the summation or master suite")
    o.add_argument("--count", type=int, default=20)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--cap", type=int)
    o.add_argument("--json", action="store_true")
    o.add_argument("--no-timing", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParseError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except QRSIDError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
