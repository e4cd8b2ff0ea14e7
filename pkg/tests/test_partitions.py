import itertools

import pytest

from qrsid.partitions import (
    GAP,
    NMAX,
    colored_partitions,
    count_S,
    count_T,
    distinct_partitions,
    graded_product,
    partition_classes,
    product_partition_expand,
    table_S,
    table_T,
)
from qrsid.products import ProductExpr, product_expr_eval
from qrsid.qseries import QSeries, render

ORDER = {"ab": 0, "a": 1, "b": 2}


def test_count_T_examples():
    assert count_T(1, 0, 3) == 1
    assert count_T(0, 0, 0) == 1
    assert count_T(1, 1, 3) == 2


def test_count_S_examples():
    assert count_S(0, 0, 0) == 1
    assert count_S(1, 0, 2) == 1


def test_negative_arguments():
    with pytest.raises(ValueError):
        count_T(-1, 0, 2)
    with pytest.raises(ValueError):
        count_S(0, 0, -1)


def all_colored_by_brute_force(n):
    """Multisets of coloured parts checked pairwise after sorting; independent of the generator."""
    parts = [(v, c) for v in range(1, n + 1) for c in ORDER if (v, c) != (1, "ab")]
    out = set()

    def grow(rest, start, chosen):
        if rest == 0:
            out.add(tuple(chosen))
            return
        for idx in range(start, len(parts)):
            v, c = parts[idx]
            if v <= rest:
                grow(rest - v, idx, chosen + [(v, c)])

    grow(n, 0, [])
    good = set()
    for p in out:
        ordered = sorted(p, key=lambda x: (x[0], ORDER[x[1]]), reverse=True)
        if all(a[0] - b[0] >= GAP[a[1]][b[1]] for a, b in zip(ordered, ordered[1:])):
            good.add(tuple(ordered))
    return good


@pytest.mark.parametrize("n", range(0, 11))
def test_colored_generator_matches_filter(n):
    assert set(colored_partitions(n)) == all_colored_by_brute_force(n)


def test_distinct_partitions():
    assert sorted(distinct_partitions(6)) == sorted([(6,), (5, 1), (4, 2), (3, 2, 1)])
    for n in range(12):
        for p in distinct_partitions(n):
            assert sum(p) == n and len(set(p)) == len(p)


def test_S_equals_T_up_to_nmax():
    S, T = table_S(NMAX), table_T(NMAX)
    assert S == T
    assert len(S) == 218


def test_T_matches_graded_product():
    assert table_T(NMAX) == graded_product(NMAX)


def test_product_partition_expand_examples():
    rr1 = product_partition_expand([(1, 5), (4, 5)], 6)
    assert render(rr1) == "1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6"
    assert product_partition_expand([], 5) == QSeries.one(5)
    rr2 = product_partition_expand([(2, 5), (3, 5)], 5)
    # partitions of 5 into parts 2, 3: only 2+3
    assert render(rr2) == "1 + q^2 + q^3 + q^4 + q^5"


def test_partition_expand_matches_products():
    for text in ("(q, q^4; q^5)^-1", "(q^2, q^3; q^5)^-1", "(q; q^2)^-2", "(q^3; q^4)^-1 * (q; q)^-1"):
        p = ProductExpr.parse(text)
        assert product_partition_expand(partition_classes(p), 30) == product_expr_eval(p, 30)


def test_partition_classes_rejects_non_pure():
    assert partition_classes(ProductExpr.parse("(q; q)")) is None
    assert partition_classes(ProductExpr.parse("2*(q; q)^-1")) is None
    assert partition_classes(ProductExpr.parse("(-q; q)^-1")) is None
    assert partition_classes(ProductExpr.parse("(q^(1/2); q)^-1")) is None
    assert partition_classes(ProductExpr.parse("(q; q^2)^-2")) == [(1, 2), (1, 2)]


def test_rr_partition_counts_by_listing():
    # 4 = 1+1+1+1 = 4 with parts 1 or 4 mod 5
    lists = [p for r in range(1, 5) for p in itertools.combinations_with_replacement((1, 4), r) if sum(p) == 4]
    assert len(lists) == 2
    assert product_partition_expand([(1, 5), (4, 5)], 4).coeff(4) == 2
