"""Exact matrix builders for the five spectra."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from sgcorona.core import SignedGraph
from sgcorona.exactalg import ExactMatrix, charpoly_exact
from sgcorona.matrices import MatrixKind, build_matrix

from util import cycle, complete, random_signed, star


def test_parse_kind():
    assert MatrixKind.parse("a") is MatrixKind.ADJACENCY
    assert MatrixKind.parse(" L ") is MatrixKind.LAPLACIAN
    assert MatrixKind.parse("q") is MatrixKind.SIGNLESS_LAPLACIAN
    assert MatrixKind.parse("N") is MatrixKind.NORMALIZED_LAPLACIAN
    assert MatrixKind.parse("p") is MatrixKind.RANDOM_WALK
    with pytest.raises(ValueError):
        MatrixKind.parse("B")


def test_adjacency_fixture():
    g = cycle(3, [1, 1, -1])
    assert build_matrix(g, MatrixKind.ADJACENCY) == ExactMatrix(
        [[0, 1, -1], [1, 0, 1], [-1, 1, 0]]
    )


def test_laplacian_fixtures():
    g = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    assert build_matrix(g, MatrixKind.LAPLACIAN) == ExactMatrix(
        [[1, -1, 0], [-1, 2, 1], [0, 1, 1]]
    )
    assert build_matrix(g, MatrixKind.SIGNLESS_LAPLACIAN) == ExactMatrix(
        [[1, 1, 0], [1, 2, -1], [0, -1, 1]]
    )


def test_random_walk_rows_sum_to_signed_degree_ratio():
    g = star(3, [1, -1, 1])
    p = build_matrix(g, MatrixKind.RANDOM_WALK)
    assert p[0, 1] == Fraction(1, 3)
    assert p[0, 2] == Fraction(-1, 3)
    assert p[1, 0] == 1
    # row sums are net degree over degree
    for i in range(g.n):
        assert sum(p[i, j] for j in range(g.n)) == Fraction(
            sum(s for u, v, s in g.edges if i in (u, v)), 3 if i == 0 else 1
        )


def test_normalized_is_identity_minus_random_walk():
    rng = random.Random(5)
    for _ in range(25):
        g = random_signed(rng, rng.randint(2, 6), min_edges=1)
        if any(d == 0 for d in (sum(1 for e in g.edges if i in e[:2]) for i in range(g.n))):
            continue
        n_mat = build_matrix(g, MatrixKind.NORMALIZED_LAPLACIAN)
        p_mat = build_matrix(g, MatrixKind.RANDOM_WALK)
        assert n_mat == ExactMatrix.identity(g.n) - p_mat


def test_isolated_vertex_rejected_for_degree_scaled_kinds():
    g = SignedGraph(3, [(0, 1, 1)])
    for kind in (MatrixKind.RANDOM_WALK, MatrixKind.NORMALIZED_LAPLACIAN):
        with pytest.raises(ValueError, match="isolated vertex"):
            build_matrix(g, kind)
    # integer kinds still work
    build_matrix(g, MatrixKind.LAPLACIAN)


def test_l_q_charpolys_agree_on_bipartite_all_positive():
    # even cycles are bipartite, so D - A and D + A are similar
    for n in (4, 6):
        g = cycle(n)
        assert charpoly_exact(build_matrix(g, MatrixKind.LAPLACIAN)) == charpoly_exact(
            build_matrix(g, MatrixKind.SIGNLESS_LAPLACIAN)
        )


def test_all_negative_flips_adjacency():
    g_pos = complete(4, 1)
    g_neg = complete(4, -1)
    a_pos = build_matrix(g_pos, MatrixKind.ADJACENCY)
    assert build_matrix(g_neg, MatrixKind.ADJACENCY) == a_pos.scaled(-1)
    assert build_matrix(g_neg, MatrixKind.LAPLACIAN) == build_matrix(
        g_pos, MatrixKind.SIGNLESS_LAPLACIAN
    )
