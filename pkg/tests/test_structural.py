"""Census formulas and the balance criterion against brute force."""

from __future__ import annotations

import random
from itertools import product as iproduct

import pytest

from sgcorona.core import SignedGraph, is_balanced
from sgcorona.orientation import ROrientation, random_orientation
from sgcorona.products import ProductKind, build_product
from sgcorona.structural import (
    balance_of_product,
    census_report,
    count_edges_by_sign,
    count_triads,
    orientation_census,
    predict_census,
    predict_census_as_published,
)

from util import (
    complete,
    cycle,
    random_balanced,
    random_signed,
    star,
)


def _product_cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        product = rng.choice(list(ProductKind))
        min_edges = 0 if product is ProductKind.SUBDIVISION_VERTEX else 1
        g1 = random_signed(rng, rng.randint(2, 4), min_edges=min_edges)
        g2 = random_signed(rng, rng.randint(1, 4))
        mu2 = tuple(rng.choice((1, -1)) for _ in range(g2.n))
        th = random_orientation(g1, rng.randint(0, 999))
        yield product, g1, th, g2, mu2


def test_count_triads_fixtures():
    assert count_triads(complete(4)).as_tuple() == (4, 0, 0, 0)
    assert count_triads(complete(3, -1)).as_tuple() == (0, 0, 0, 1)
    assert count_triads(cycle(3, [1, 1, -1])).as_tuple() == (0, 1, 0, 0)
    assert count_triads(cycle(4)).total() == 0
    assert count_triads(SignedGraph(2, [(0, 1, 1)])).total() == 0


def test_count_edges_fixture():
    e = count_edges_by_sign(cycle(4, [1, -1, -1, -1]))
    assert (e.total, e.plus, e.minus) == (4, 1, 3)


def test_orientation_census_fixture():
    g1 = SignedGraph(2, [(0, 1, -1)])
    g2 = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    oc = orientation_census(g1, None, g2, (1, -1, -1))
    assert (oc.n_plus, oc.n_minus) == (1, 1)
    assert (oc.f_plus_in, oc.f_plus_out, oc.f_minus) == (0, 0, 1)
    assert (oc.mark_plus, oc.mark_minus) == (1, 2)
    assert oc.e2_plus_pm == 1
    assert oc.e2_minus_mm == 1
    assert (
        oc.e2_plus_pp + oc.e2_plus_mm + oc.e2_minus_pp + oc.e2_minus_pm
    ) == 0


def test_orientation_census_invariants():
    rng = random.Random(61)
    for _ in range(30):
        g1 = random_signed(rng, rng.randint(1, 5))
        g2 = random_signed(rng, rng.randint(1, 5))
        th = random_orientation(g1, rng.randint(0, 999))
        oc = orientation_census(g1, th, g2)
        assert oc.n_plus + oc.n_minus == 2 * g1.m
        assert oc.f_plus_in + oc.f_plus_out + oc.f_minus == g1.m
        assert oc.mark_plus + oc.mark_minus == g2.n
        e2_total = (
            oc.e2_plus_pp + oc.e2_plus_pm + oc.e2_plus_mm
            + oc.e2_minus_pp + oc.e2_minus_pm + oc.e2_minus_mm
        )
        assert e2_total == g2.m


def test_derived_census_matches_brute_force():
    for product, g1, th, g2, mu2 in _product_cases(62, 60):
        built = build_product(product, g1, th, g2, mu2).graph
        de, dt = predict_census(product, g1, th, g2, mu2)
        oe = count_edges_by_sign(built)
        assert (de.total, de.plus, de.minus) == (oe.total, oe.plus, oe.minus)
        assert dt.as_tuple() == count_triads(built).as_tuple()


def test_published_rows_disagree_only_in_two_known_cells():
    hit = set()
    for product, g1, th, g2, mu2 in _product_cases(63, 80):
        report = census_report(product, g1, th, g2, mu2)
        assert report["derived_ok"]
        for row in report["published_mismatches"]:
            hit.add((product, row))
    assert hit <= {
        (ProductKind.SUBDIVISION_EDGE, "edges+"),
        (ProductKind.EDGE_CORONA, "T0"),
    }


def test_published_edge_count_mismatch_fixture():
    # both arrows out on a positive edge, copy vertex marked -
    g1 = SignedGraph(2, [(0, 1, 1)])
    th = ROrientation(((-1, -1),))
    g2 = SignedGraph(1, [], marking=(-1,))
    de, _ = predict_census(ProductKind.SUBDIVISION_EDGE, g1, th, g2)
    pe, _ = predict_census_as_published(ProductKind.SUBDIVISION_EDGE, g1, th, g2)
    oe = count_edges_by_sign(
        build_product(ProductKind.SUBDIVISION_EDGE, g1, th, g2).graph
    )
    assert de.plus == oe.plus == 2
    assert pe.plus == 0


def test_published_triad_mismatch_fixture():
    # negative incidences meet a positive copy edge marked --
    g1 = SignedGraph(2, [(0, 1, 1)])
    th = ROrientation(((-1, -1),))
    g2 = SignedGraph(2, [(0, 1, 1)], marking=(-1, -1))
    _, dt = predict_census(ProductKind.EDGE_CORONA, g1, th, g2)
    _, pt = predict_census_as_published(ProductKind.EDGE_CORONA, g1, th, g2)
    observed = count_triads(build_product(ProductKind.EDGE_CORONA, g1, th, g2).graph)
    assert dt.t0 == observed.t0
    assert pt.t0 != observed.t0


def test_census_rejects_edgeless_first_factor_where_undefined():
    lonely = SignedGraph(2, [])
    for product in (ProductKind.EDGE_CORONA, ProductKind.SUBDIVISION_EDGE):
        with pytest.raises(ValueError, match="at least one edge"):
            predict_census(product, lonely, None, complete(2))
    predict_census(ProductKind.SUBDIVISION_VERTEX, lonely, None, complete(2))


def test_census_report_shape():
    report = census_report(
        ProductKind.EDGE_CORONA, cycle(3, [1, 1, -1]), None, star(2), (1, -1, 1)
    )
    assert report["product"] == "edge-corona"
    assert [r["row"] for r in report["rows"]] == [
        "edges", "edges+", "edges-", "T0", "T1", "T2", "T3",
    ]
    assert report["derived_ok"]
    for row in report["rows"]:
        assert row["derived_ok"] == (row["observed"] == row["derived"])


def test_balance_criterion_matches_direct_check():
    rng = random.Random(64)
    checked = 0
    for _ in range(40):
        g1 = random_balanced(rng, rng.randint(2, 4))
        g2 = random_balanced(rng, rng.randint(1, 3))
        for product in ProductKind:
            if g1.m == 0 and product is not ProductKind.SUBDIVISION_VERTEX:
                continue
            for marking in iproduct((1, -1), repeat=g2.n):
                verdict = balance_of_product(product, g1, g2, marking)
                built = build_product(product, g1, None, g2, marking).graph
                assert verdict.balanced == is_balanced(built), (
                    product, g1, g2, marking,
                )
                checked += 1
    assert checked >= 300


def test_balance_is_orientation_independent():
    g1 = cycle(4, [1, -1, -1, 1])
    g2 = SignedGraph(2, [(0, 1, -1)])
    for marking in iproduct((1, -1), repeat=2):
        want = balance_of_product(ProductKind.EDGE_CORONA, g1, g2, marking).balanced
        for seed in range(4):
            th = random_orientation(g1, seed)
            built = build_product(ProductKind.EDGE_CORONA, g1, th, g2, marking).graph
            assert is_balanced(built) == want


def test_balance_witness_categories():
    g1 = complete(2)
    a = balance_of_product(ProductKind.EDGE_CORONA, g1, complete(2), (1, -1))
    assert not a.balanced and a.witness[3] == "a"
    b = balance_of_product(
        ProductKind.EDGE_CORONA, g1, SignedGraph(2, [(0, 1, -1)]), (1, 1)
    )
    assert not b.balanced and b.witness[3] == "b"
    c = balance_of_product(
        ProductKind.EDGE_CORONA, g1, SignedGraph(2, [(0, 1, -1)]), (-1, -1)
    )
    assert not c.balanced and c.witness[3] == "c"
    ok = balance_of_product(
        ProductKind.EDGE_CORONA, g1, SignedGraph(2, [(0, 1, -1)]), (1, -1)
    )
    assert ok.balanced and ok.witness is None


def test_balance_preconditions():
    unbalanced = cycle(3, [1, 1, -1])
    with pytest.raises(ValueError, match="first factor must be balanced"):
        balance_of_product(ProductKind.EDGE_CORONA, unbalanced, complete(2))
    with pytest.raises(ValueError, match="second factor must be balanced"):
        balance_of_product(ProductKind.EDGE_CORONA, complete(2), unbalanced)
    lonely = SignedGraph(3, [])
    assert balance_of_product(
        ProductKind.SUBDIVISION_VERTEX, lonely, complete(2, -1).with_marking((1, -1))
    ).balanced
    with pytest.raises(ValueError, match="at least one edge"):
        balance_of_product(ProductKind.EDGE_CORONA, lonely, complete(2))
