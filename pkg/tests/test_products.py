"""Product constructions against block-matrix and counting oracles."""

from __future__ import annotations

import random

import pytest

from sgcorona.core import SignedGraph, is_balanced, resolve_marking
from sgcorona.exactalg import ExactMatrix
from sgcorona.matrices import MatrixKind, build_matrix
from sgcorona.orientation import (
    ROrientation,
    default_orientation,
    incidence_matrix,
    oriented,
    random_orientation,
)
from sgcorona.products import (
    ProductKind,
    build_product,
    edge_corona,
    subdivision_edge_nc,
    subdivision_vertex_nc,
)

from util import blocks, column, cycle, complete, kron, random_signed, star


def _adj(g):
    return build_matrix(g, MatrixKind.ADJACENCY)


def _cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        g1 = random_signed(rng, rng.randint(2, 4), min_edges=1)
        g2 = random_signed(rng, rng.randint(1, 3))
        mu2 = tuple(rng.choice((1, -1)) for _ in range(g2.n))
        th = random_orientation(g1, rng.randint(0, 99))
        yield g1, th, g2, mu2


def test_parse_product():
    assert ProductKind.parse("edge-corona") is ProductKind.EDGE_CORONA
    assert ProductKind.parse("svnc") is ProductKind.SUBDIVISION_VERTEX
    assert ProductKind.parse("SENC") is ProductKind.SUBDIVISION_EDGE
    assert ProductKind.parse("subdivision-vertex") is ProductKind.SUBDIVISION_VERTEX
    with pytest.raises(ValueError):
        ProductKind.parse("corona")


def test_order_and_size_formulas():
    for g1, th, g2, mu2 in _cases(31, 40):
        n1, m1, n2, m2 = g1.n, g1.m, g2.n, g2.m
        ec = edge_corona(g1, th, g2, mu2).graph
        assert (ec.n, ec.m) == (n1 + m1 * n2, m1 + m1 * m2 + 2 * m1 * n2)
        sv = subdivision_vertex_nc(g1, th, g2, mu2).graph
        assert (sv.n, sv.m) == (n1 + m1 + n1 * n2, 2 * m1 + n1 * m2 + 2 * m1 * n2)
        se = subdivision_edge_nc(g1, th, g2, mu2).graph
        assert (se.n, se.m) == (n1 + m1 + m1 * n2, 2 * m1 + m1 * m2 + 2 * m1 * n2)


def test_edge_corona_block_structure():
    for g1, th, g2, mu2 in _cases(32, 30):
        n1, m1, n2 = g1.n, g1.m, g2.n
        r = incidence_matrix(oriented(g1, th))
        mu_row = column(mu2).transpose()
        expect = blocks(
            [
                [_adj(g1), kron(r, mu_row)],
                [kron(r, mu_row).transpose(), kron(ExactMatrix.identity(m1), _adj(g2))],
            ]
        )
        assert _adj(edge_corona(g1, th, g2, mu2).graph) == expect


def test_subdivision_vertex_block_structure():
    for g1, th, g2, mu2 in _cases(33, 30):
        n1, m1, n2 = g1.n, g1.m, g2.n
        r = incidence_matrix(oriented(g1, th))
        mu_row = column(mu2).transpose()
        join = kron(r.transpose(), mu_row)
        expect = blocks(
            [
                [ExactMatrix.zeros(n1, n1), r, ExactMatrix.zeros(n1, n1 * n2)],
                [r.transpose(), ExactMatrix.zeros(m1, m1), join],
                [
                    ExactMatrix.zeros(n1 * n2, n1),
                    join.transpose(),
                    kron(ExactMatrix.identity(n1), _adj(g2)),
                ],
            ]
        )
        assert _adj(subdivision_vertex_nc(g1, th, g2, mu2).graph) == expect


def test_subdivision_edge_block_structure():
    for g1, th, g2, mu2 in _cases(34, 30):
        n1, m1, n2 = g1.n, g1.m, g2.n
        r = incidence_matrix(oriented(g1, th))
        mu_row = column(mu2).transpose()
        join = kron(r, mu_row)
        expect = blocks(
            [
                [ExactMatrix.zeros(n1, n1), r, join],
                [r.transpose(), ExactMatrix.zeros(m1, m1), ExactMatrix.zeros(m1, m1 * n2)],
                [
                    join.transpose(),
                    ExactMatrix.zeros(m1 * n2, m1),
                    kron(ExactMatrix.identity(m1), _adj(g2)),
                ],
            ]
        )
        assert _adj(subdivision_edge_nc(g1, th, g2, mu2).graph) == expect


def test_all_positive_inputs_give_balanced_products():
    g1 = cycle(4)
    g2 = star(2)
    for kind in ProductKind:
        out = build_product(kind, g1, None, g2).graph
        assert all(s == 1 for _, _, s in out.edges)
        assert is_balanced(out)


def test_underlying_graph_matches_unsigned_recipe():
    # forget signs: one copy of g2 per edge, endpoints joined to every copy vertex
    g1 = cycle(3, [1, -1, 1])
    g2 = SignedGraph(2, [(0, 1, -1)])
    out = edge_corona(g1, None, g2).graph
    plain = set()
    for u, v, _ in g1.edges:
        plain.add((u, v))
    for t, (u, v, _) in enumerate(g1.edges):
        off = g1.n + 2 * t
        plain.add((off, off + 1))
        for w in (off, off + 1):
            plain.add(tuple(sorted((u, w))))
            plain.add(tuple(sorted((v, w))))
    assert {(u, v) for u, v, _ in out.edges} == plain


def test_join_signs_follow_orientation_and_marking():
    g1 = SignedGraph(2, [(0, 1, -1)])
    th = ROrientation(((-1, 1),))
    g2 = SignedGraph(1, [])
    out = edge_corona(g1, th, g2, (-1,)).graph
    # copy vertex is 2; joins carry theta_x * mu = (-1)(-1)=1 and (1)(-1)=-1
    assert set(out.edges) == {(0, 1, -1), (0, 2, 1), (1, 2, -1)}


def test_marking_resolution_precedence():
    g1 = SignedGraph(2, [(0, 1, 1)])
    g2 = SignedGraph(1, [], marking=(-1,))
    stored = edge_corona(g1, None, g2).graph
    assert (0, 2, -1) in stored.edges
    overridden = edge_corona(g1, None, g2, (1,)).graph
    assert (0, 2, 1) in overridden.edges
    # no marking anywhere falls back to the sign-product rule
    bare = SignedGraph(1, [])
    assert resolve_marking(bare, None) == (1,)
    assert (0, 2, 1) in edge_corona(g1, None, bare).graph.edges


def test_edge_products_need_edges():
    lonely = SignedGraph(3, [])
    with pytest.raises(ValueError, match="at least one edge"):
        edge_corona(lonely, None, star(1))
    with pytest.raises(ValueError, match="at least one edge"):
        subdivision_edge_nc(lonely, None, star(1))
    out = subdivision_vertex_nc(lonely, None, star(1)).graph
    assert out.n == 3 + 0 + 3 * 2
    assert out.m == 3  # only the in-copy star edges survive


def test_layout_partitions_vertices():
    for kind in ProductKind:
        res = build_product(kind, cycle(3, [1, 1, -1]), None, star(2), (1, -1, -1))
        spans = [res.layout.base]
        if res.layout.subdivision is not None:
            spans.append(res.layout.subdivision)
        spans.extend(res.layout.copies)
        covered = []
        for a, b in spans:
            covered.extend(range(a, b))
        assert sorted(covered) == list(range(res.graph.n))
        js = res.layout_json()
        assert js["base"] == [0, 3]
        assert all(len(c) == 2 for c in js["copies"])


def test_invalid_orientation_rejected_by_products():
    g1 = SignedGraph(2, [(0, 1, -1)])
    g2 = star(1)
    with pytest.raises(ValueError):
        edge_corona(g1, ROrientation(((1, 1),)), g2)
    with pytest.raises(ValueError):
        subdivision_vertex_nc(g1, ROrientation(()), g2)


def test_build_product_dispatch():
    g1, g2 = complete(3), star(1)
    th = default_orientation(g1)
    assert (
        build_product(ProductKind.EDGE_CORONA, g1, th, g2).graph
        == edge_corona(g1, th, g2).graph
    )
    assert (
        build_product(ProductKind.SUBDIVISION_EDGE, g1, th, g2).graph
        == subdivision_edge_nc(g1, th, g2).graph
    )
