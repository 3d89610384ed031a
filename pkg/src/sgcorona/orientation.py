"""Edge orientations with signed incidences, line graphs, subdivisions.

An orientation assigns each edge (u,v,s) a pair (theta_u, theta_v) of unit
incidence signs with theta_u * theta_v = s.  Positive edges point "both in"
or "both out"; negative edges split.  The incidence matrix, the line graph
and the subdivision graph all read their signs off these pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Tuple

from .core import SignedGraph
from .exactalg import ExactMatrix


@dataclass(frozen=True)
class ROrientation:
    """Per-edge incidence sign pairs, aligned with the sorted edge list."""

    per_edge: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class OrientedGraph:
    graph: SignedGraph
    orientation: ROrientation

    def __post_init__(self):
        per_edge = self.orientation.per_edge
        if len(per_edge) != self.graph.m:
            raise ValueError("orientation length does not match edge count")
        for (u, v, s), (tu, tv) in zip(self.graph.edges, per_edge):
            if tu not in (1, -1) or tv not in (1, -1) or tu * tv != s:
                raise ValueError(
                    f"orientation pair ({tu},{tv}) inconsistent with edge "
                    f"({u},{v},{s})"
                )


def default_orientation(g: SignedGraph) -> ROrientation:
    """Deterministic orientation: (+1,+1) on + edges, (+1,-1) on - edges."""
    return ROrientation(tuple((1, s) for _, _, s in g.edges))


def random_orientation(g: SignedGraph, seed: int) -> ROrientation:
    rng = random.Random(seed)
    pairs = []
    for _, _, s in g.edges:
        flip = rng.choice((1, -1))
        pairs.append((flip, flip * s))
    return ROrientation(tuple(pairs))


def oriented(g: SignedGraph, orientation: ROrientation = None) -> OrientedGraph:
    if orientation is None:
        orientation = default_orientation(g)
    return OrientedGraph(g, orientation)


def incidence_matrix(og: OrientedGraph) -> ExactMatrix:
    """n x m matrix with entry (i,j) = incidence sign of vertex i on edge j."""
    g = og.graph
    rows = [[0] * g.m for _ in range(g.n)]
    for j, ((u, v, _), (tu, tv)) in enumerate(
        zip(g.edges, og.orientation.per_edge)
    ):
        rows[u][j] = tu
        rows[v][j] = tv
    return ExactMatrix(rows)


def line_graph(og: OrientedGraph) -> SignedGraph:
    """Edges become vertices; adjacency = shared endpoint x, with sign
    theta(x, a) * theta(x, b)."""
    g = og.graph
    incident: list = [[] for _ in range(g.n)]
    for j, ((u, v, _), (tu, tv)) in enumerate(
        zip(g.edges, og.orientation.per_edge)
    ):
        incident[u].append((j, tu))
        incident[v].append((j, tv))
    new_edges = []
    for around in incident:
        for i in range(len(around)):
            a, ta = around[i]
            for k in range(i + 1, len(around)):
                b, tb = around[k]
                new_edges.append((a, b, ta * tb) if a < b else (b, a, ta * tb))
    return SignedGraph(g.m, new_edges)


def subdivision(og: OrientedGraph) -> SignedGraph:
    """Insert a vertex on every edge; each half-edge keeps its incidence
    sign.  Vertex order: originals 0..n-1, then edge vertices n..n+m-1."""
    g = og.graph
    new_edges = []
    for j, ((u, v, _), (tu, tv)) in enumerate(
        zip(g.edges, og.orientation.per_edge)
    ):
        w = g.n + j
        new_edges.append((u, w, tu))
        new_edges.append((v, w, tv))
    return SignedGraph(g.n + g.m, new_edges)
