"""Shared builders and oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product as iproduct
from typing import Iterator, List, Optional, Sequence, Tuple

from sgcorona.core import CoRegularity, SignedGraph, co_regularity, switch
from sgcorona.exactalg import ExactMatrix


def cycle(n: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
    if signs is None:
        signs = [1] * n
    edges = [(i, (i + 1) % n, signs[i]) for i in range(n)]
    edges = [(min(u, v), max(u, v), s) for u, v, s in edges]
    return SignedGraph(n, edges)


def path(n: int) -> SignedGraph:
    return SignedGraph(n, [(i, i + 1, 1) for i in range(n - 1)])


def complete(n: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(n, [(u, v, sign) for u, v in combinations(range(n), 2)])


def star(m: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
    """K_{1,m} with the center at vertex 0."""
    if signs is None:
        signs = [1] * m
    return SignedGraph(m + 1, [(0, i + 1, signs[i]) for i in range(m)])


def complete_bipartite(a: int, b: int) -> SignedGraph:
    return SignedGraph(a + b, [(u, a + v, 1) for u in range(a) for v in range(b)])


def regular_pool(n_max: int = 6) -> List[SignedGraph]:
    pool = [complete(2)]
    for n in range(3, n_max + 1):
        pool.append(cycle(n))
    if n_max >= 4:
        pool.append(SignedGraph(4, [(0, 1, 1), (2, 3, 1)]))
        pool.append(complete(4))
    if n_max >= 6:
        two_triangles = [(0, 1, 1), (1, 2, 1), (0, 2, 1),
                         (3, 4, 1), (4, 5, 1), (3, 5, 1)]
        pool.append(SignedGraph(6, two_triangles))
        pool.append(complete_bipartite(3, 3))
    return pool


def random_signs(g: SignedGraph, rng: random.Random) -> SignedGraph:
    out = SignedGraph(g.n, [(u, v, rng.choice((1, -1))) for u, v, _ in g.edges])
    return out


def random_signed(
    rng: random.Random, n: int, p: float = 0.5, min_edges: int = 0
) -> SignedGraph:
    if min_edges > n * (n - 1) // 2:
        raise ValueError("min_edges exceeds the complete graph")
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v, rng.choice((1, -1))))
        if len(edges) >= min_edges:
            return SignedGraph(n, edges)


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> SignedGraph:
    """Random spanning tree plus random extra edges, random signs."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return SignedGraph(
        n, [(u, v, rng.choice((1, -1))) for u, v in sorted(edges)]
    )


def random_balanced(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    base = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                base.append((u, v, 1))
    theta = tuple(rng.choice((1, -1)) for _ in range(n))
    return switch(SignedGraph(n, base), theta)


def all_signed_graphs(n: int) -> Iterator[SignedGraph]:
    """Every labeled signed graph on n vertices (no isomorphism rejection)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        for signs in iproduct((1, -1), repeat=len(chosen)):
            yield SignedGraph(n, [(u, v, s) for (u, v), s in zip(chosen, signs)])


def enumerate_coregular(n_max: int) -> Iterator[Tuple[SignedGraph, CoRegularity]]:
    """Every labeled signed graph on up to n_max vertices whose underlying
    graph is regular and whose net degree is constant."""
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            deg = [0] * n
            chosen = []
            for i, (u, v) in enumerate(pairs):
                if mask >> i & 1:
                    deg[u] += 1
                    deg[v] += 1
                    chosen.append((u, v))
            if n > 1 and len(set(deg)) != 1:
                continue
            for signs in iproduct((1, -1), repeat=len(chosen)):
                sdeg = [0] * n
                for (u, v), s in zip(chosen, signs):
                    sdeg[u] += s
                    sdeg[v] += s
                if len(set(sdeg)) > 1:
                    continue
                g = SignedGraph(
                    n, [(u, v, s) for (u, v), s in zip(chosen, signs)]
                )
                reg = co_regularity(g)
                assert reg is not None
                yield g, reg


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                for l in range(b.cols):
                    row.append(a[i, j] * b[k, l])
            rows.append(row)
    return ExactMatrix(rows)


def blocks(grid: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    rows = []
    for block_row in grid:
        height = block_row[0].rows
        for i in range(height):
            row = []
            for block in block_row:
                row.extend(block[i, j] for j in range(block.cols))
            rows.append(row)
    return ExactMatrix(rows)


def ones_column(n: int) -> ExactMatrix:
    return ExactMatrix([[1] for _ in range(n)])


def column(values: Sequence[int]) -> ExactMatrix:
    return ExactMatrix([[v] for v in values])
