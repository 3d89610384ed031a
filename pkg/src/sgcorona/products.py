"""The three corona-type products of signed graphs.

All three take an oriented first factor and a marked second factor.  New
edges into a copy of the second factor are signed theta(x, e) * mu2(w):
the incidence sign of the attachment point times the marking of the copy
vertex.  Vertex layout is fixed once and for all: first-factor vertices,
then (for the subdivision products) the inserted edge vertices, then the
copies in order, so matrix builders never permute anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .core import SignedGraph, resolve_marking
from .orientation import OrientedGraph, ROrientation, default_orientation


class ProductKind(Enum):
    EDGE_CORONA = "edge-corona"
    SUBDIVISION_VERTEX = "subdivision-vertex"
    SUBDIVISION_EDGE = "subdivision-edge"

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        key = text.strip().lower()
        aliases = {
            "svnc": cls.SUBDIVISION_VERTEX,
            "senc": cls.SUBDIVISION_EDGE,
        }
        if key in aliases:
            return aliases[key]
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(
            f"unknown product {text!r} (expected edge-corona, "
            "subdivision-vertex or subdivision-edge)"
        )


@dataclass(frozen=True)
class Layout:
    """Index ranges (start, stop) partitioning the product's vertices."""

    base: Tuple[int, int]
    subdivision: Optional[Tuple[int, int]]
    copies: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class ProductResult:
    graph: SignedGraph
    layout: Layout

    def layout_json(self) -> dict:
        return {
            "base": list(self.layout.base),
            "subdivision": (
                list(self.layout.subdivision) if self.layout.subdivision else None
            ),
            "copies": [list(c) for c in self.layout.copies],
        }


def _prepare(
    g1: SignedGraph,
    th: Optional[ROrientation],
    g2: SignedGraph,
    marking2: Optional[Sequence[int]],
    need_edges: bool,
):
    if need_edges and g1.m == 0:
        raise ValueError("first factor needs at least one edge for this product")
    if th is None:
        th = default_orientation(g1)
    OrientedGraph(g1, th)  # validates consistency
    mu2 = resolve_marking(g2, marking2)
    return th, mu2


def edge_corona(
    g1: SignedGraph,
    th: Optional[ROrientation],
    g2: SignedGraph,
    marking2: Optional[Sequence[int]] = None,
) -> ProductResult:
    """One copy of g2 per edge of g1, both endpoints joined to the copy."""
    th, mu2 = _prepare(g1, th, g2, marking2, need_edges=True)
    n1, m1, n2 = g1.n, g1.m, g2.n
    edges = list(g1.edges)
    copies = []
    for t, ((u, v, _), (tu, tv)) in enumerate(zip(g1.edges, th.per_edge)):
        off = n1 + t * n2
        copies.append((off, off + n2))
        for a, b, s in g2.edges:
            edges.append((off + a, off + b, s))
        for w in range(n2):
            edges.append((u, off + w, tu * mu2[w]))
            edges.append((v, off + w, tv * mu2[w]))
    graph = SignedGraph(n1 + m1 * n2, edges)
    return ProductResult(graph, Layout((0, n1), None, tuple(copies)))


def subdivision_vertex_nc(
    g1: SignedGraph,
    th: Optional[ROrientation],
    g2: SignedGraph,
    marking2: Optional[Sequence[int]] = None,
) -> ProductResult:
    """Subdivide g1, then give each original vertex a copy of g2 joined to
    the subdivision vertices of its incident edges."""
    th, mu2 = _prepare(g1, th, g2, marking2, need_edges=False)
    n1, m1, n2 = g1.n, g1.m, g2.n
    edges = []
    incident: list = [[] for _ in range(n1)]
    for j, ((u, v, _), (tu, tv)) in enumerate(zip(g1.edges, th.per_edge)):
        edges.append((u, n1 + j, tu))
        edges.append((v, n1 + j, tv))
        incident[u].append((j, tu))
        incident[v].append((j, tv))
    copies = []
    for t in range(n1):
        off = n1 + m1 + t * n2
        copies.append((off, off + n2))
        for a, b, s in g2.edges:
            edges.append((off + a, off + b, s))
        for j, theta in incident[t]:
            for w in range(n2):
                edges.append((n1 + j, off + w, theta * mu2[w]))
    graph = SignedGraph(n1 + m1 + n1 * n2, edges)
    sub = (n1, n1 + m1)
    return ProductResult(graph, Layout((0, n1), sub, tuple(copies)))


def subdivision_edge_nc(
    g1: SignedGraph,
    th: Optional[ROrientation],
    g2: SignedGraph,
    marking2: Optional[Sequence[int]] = None,
) -> ProductResult:
    """Subdivide g1, then give each original edge a copy of g2 joined to
    that edge's two endpoints."""
    th, mu2 = _prepare(g1, th, g2, marking2, need_edges=True)
    n1, m1, n2 = g1.n, g1.m, g2.n
    edges = []
    copies = []
    for j, ((u, v, _), (tu, tv)) in enumerate(zip(g1.edges, th.per_edge)):
        edges.append((u, n1 + j, tu))
        edges.append((v, n1 + j, tv))
        off = n1 + m1 + j * n2
        copies.append((off, off + n2))
        for a, b, s in g2.edges:
            edges.append((off + a, off + b, s))
        for w in range(n2):
            edges.append((u, off + w, tu * mu2[w]))
            edges.append((v, off + w, tv * mu2[w]))
    graph = SignedGraph(n1 + m1 + m1 * n2, edges)
    sub = (n1, n1 + m1)
    return ProductResult(graph, Layout((0, n1), sub, tuple(copies)))


_BUILDERS = {
    ProductKind.EDGE_CORONA: edge_corona,
    ProductKind.SUBDIVISION_VERTEX: subdivision_vertex_nc,
    ProductKind.SUBDIVISION_EDGE: subdivision_edge_nc,
}


def build_product(
    kind: ProductKind,
    g1: SignedGraph,
    th: Optional[ROrientation],
    g2: SignedGraph,
    marking2: Optional[Sequence[int]] = None,
) -> ProductResult:
    return _BUILDERS[kind](g1, th, g2, marking2)
