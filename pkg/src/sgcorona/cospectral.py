"""Search small signed graphs for coronal/charpoly coincidences and certify
that the resulting products are cospectral but not isomorphic.

networkx is used here for underlying-graph isomorphism only; every spectral
quantity is recomputed exactly by this package.  Non-isomorphism of products
is decided soundly in layers: cheap switching invariants, underlying
isomorphism, switching double covers, and finally an exact quotient-balance
test over all underlying isomorphisms.  Only a hard cap on that last
enumeration can leave a pair undecided, and undecided pairs are never
certified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .core import SignedGraph, canonical_marking, is_balanced
from .coronal import coronal
from .exactalg import IntPolynomial, charpoly_exact
from .graphio import serialize_signed_graph
from .matrices import MatrixKind, build_matrix
from .orientation import ROrientation, default_orientation, random_orientation
from .products import ProductKind, build_product
from .structural import count_triads

_CANONICAL_MAX_N = 7
_ISO_ENUM_CAP = 50000


@dataclass(frozen=True)
class SpectralKey:
    """Exact invariants used to bucket candidate second factors."""

    kind: MatrixKind
    charpoly: IntPolynomial
    coronal_num: IntPolynomial
    coronal_den: IntPolynomial


def spectral_key(g: SignedGraph, kind: MatrixKind) -> SpectralKey:
    f = charpoly_exact(build_matrix(g, kind))
    num, den = coronal(g, None, kind).reduced_pair()
    return SpectralKey(kind, f, num, den)


def _forest_signature(
    n: int, edges: Sequence[Tuple[int, int, int]]
) -> Tuple[int, ...]:
    """Unique switching representative for a fixed labelling: switch so a
    BFS spanning forest (smallest-root, sorted neighbours) is all-positive,
    then read off the edge signs in sorted edge order."""
    sign = {}
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v, s in edges:
        sign[(u, v)] = s
        adj[u].append(v)
        adj[v].append(u)
    pot = [0] * n
    for root in range(n):
        if pot[root]:
            continue
        pot[root] = 1
        queue = [root]
        while queue:
            u = queue.pop()
            for v in sorted(adj[u]):
                if not pot[v]:
                    pot[v] = pot[u] * sign[(min(u, v), max(u, v))]
                    queue.append(v)
    return tuple(s * pot[u] * pot[v] for u, v, s in edges)


def _relabelled_edges(
    g: SignedGraph, perm: Sequence[int]
) -> Tuple[Tuple[int, int, int], ...]:
    out = []
    for u, v, s in g.edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        out.append((a, b, s))
    out.sort()
    return tuple(out)


def canonical_form(g: SignedGraph) -> Tuple:
    """Canonical key of the switching-isomorphism class of g.

    Minimizes the underlying edge encoding over all vertex permutations,
    then the forest-normalized signature over the permutations attaining
    that minimum.  Two graphs get the same key exactly when one can be
    mapped to the other by relabelling plus switching.
    """
    if g.n > _CANONICAL_MAX_N:
        raise ValueError(f"canonical form is limited to n <= {_CANONICAL_MAX_N}")
    best_under: Optional[Tuple[Tuple[int, int], ...]] = None
    arg: List[Tuple[Tuple[int, int, int], ...]] = []
    for perm in permutations(range(g.n)):
        edges = _relabelled_edges(g, perm)
        under = tuple((u, v) for u, v, _ in edges)
        if best_under is None or under < best_under:
            best_under = under
            arg = [edges]
        elif under == best_under:
            arg.append(edges)
    best_sig = min(_forest_signature(g.n, edges) for edges in arg)
    return (g.n, best_under, best_sig)


def _underlying_nx(g: SignedGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from((u, v) for u, v, _ in g.edges)
    return out


def _connected_mask(n: int, pairs: Sequence[Tuple[int, int]], mask: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
    return comps == 1


def _graph_invariant(graph: nx.Graph) -> Tuple:
    degs = sorted(d for _, d in graph.degree())
    tri = sum(nx.triangles(graph).values())
    neigh = sorted(
        tuple(sorted(graph.degree(w) for w in graph[v])) for v in graph.nodes
    )
    return (tuple(degs), tri, tuple(neigh))


def enumerate_signed_graphs(
    n: int, connected_only: bool = True
) -> Iterator[SignedGraph]:
    """All underlying graphs of order n up to isomorphism, each carrying
    every one of its 2^m sign patterns, with the canonical marking attached.

    Switching-equivalent signings are deliberately kept: the pair search
    excludes them afterwards by canonical form, which keeps this generator
    cheap and makes the exclusion property testable.
    """
    if not 1 <= n <= _CANONICAL_MAX_N:
        raise ValueError(f"order must be between 1 and {_CANONICAL_MAX_N}")
    pairs = list(combinations(range(n), 2))
    buckets: Dict[Tuple, List[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        if connected_only and not _connected_mask(n, pairs, mask):
            continue
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(chosen)
        inv = _graph_invariant(graph)
        bucket = buckets.setdefault(inv, [])
        if any(nx.is_isomorphic(graph, seen) for seen in bucket):
            continue
        bucket.append(graph)
        for smask in range(1 << len(chosen)):
            edges = [
                (u, v, -1 if smask >> i & 1 else 1)
                for i, (u, v) in enumerate(chosen)
            ]
            sg = SignedGraph(n, edges)
            yield sg.with_marking(canonical_marking(sg))


def find_coronal_pairs(
    graphs: Sequence[SignedGraph], kind: MatrixKind
) -> List[Tuple[SignedGraph, SignedGraph]]:
    """Pairs with equal charpoly and equal reduced coronal but distinct
    switching-isomorphism classes."""
    buckets: Dict[Tuple, List[Tuple[SignedGraph, Tuple]]] = {}
    for g in graphs:
        key = spectral_key(g, kind)
        hashable = (
            key.charpoly.coeffs,
            key.coronal_num.coeffs,
            key.coronal_den.coeffs,
        )
        buckets.setdefault(hashable, []).append((g, canonical_form(g)))
    pairs: List[Tuple[SignedGraph, SignedGraph]] = []
    for _, members in sorted(buckets.items()):
        reps: List[Tuple[SignedGraph, Tuple]] = []
        for g, form in members:
            if all(form != f for _, f in reps):
                reps.append((g, form))
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                pairs.append((reps[i][0], reps[j][0]))
    return pairs


def _switching_invariants(g: SignedGraph) -> Tuple:
    degs = sorted(len([1 for u, v, _ in g.edges if x in (u, v)]) for x in range(g.n))
    tc = count_triads(g)
    return (g.n, g.m, tuple(degs), tc.total(), tc.t1 + tc.t3)


def _double_cover(g: SignedGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from((v, layer) for v in range(g.n) for layer in (0, 1))
    for u, v, s in g.edges:
        if s == 1:
            out.add_edge((u, 0), (v, 0))
            out.add_edge((u, 1), (v, 1))
        else:
            out.add_edge((u, 0), (v, 1))
            out.add_edge((u, 1), (v, 0))
    return out


def products_distinct(
    ga: SignedGraph, gb: SignedGraph
) -> Tuple[Optional[bool], str]:
    """Decide whether two signed graphs lie in different
    switching-isomorphism classes, without any order bound.

    Returns (True, how) when provably distinct, (False, how) when
    switching-isomorphic, (None, "undecided") only if the exact stage hits
    its enumeration cap.
    """
    if _switching_invariants(ga) != _switching_invariants(gb):
        return True, "switching-invariants"
    ua, ub = _underlying_nx(ga), _underlying_nx(gb)
    if not nx.is_isomorphic(ua, ub):
        return True, "underlying-graph"
    if not nx.is_isomorphic(_double_cover(ga), _double_cover(gb)):
        return True, "double-cover"
    signs_b = {(u, v): s for u, v, s in gb.edges}
    matcher = nx.isomorphism.GraphMatcher(ua, ub)
    count = 0
    for phi in matcher.isomorphisms_iter():
        count += 1
        if count > _ISO_ENUM_CAP:
            return None, "undecided"
        quotient = []
        for u, v, s in ga.edges:
            a, b = phi[u], phi[v]
            if a > b:
                a, b = b, a
            quotient.append((u, v, s * signs_b[(a, b)]))
        if is_balanced(SignedGraph(ga.n, quotient)):
            return False, "switching-isomorphic"
    return True, "isomorphism-exhaustion"


@dataclass(frozen=True)
class PairCertificate:
    product: ProductKind
    kind: MatrixKind
    left: SignedGraph
    right: SignedGraph
    charpoly_left: IntPolynomial
    charpoly_right: IntPolynomial
    cospectral: bool
    distinct: Optional[bool]
    method: str

    @property
    def certified(self) -> bool:
        return self.cospectral and self.distinct is True

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "product": self.product.value,
            "kind": self.kind.value,
            "left": serialize_signed_graph(self.left),
            "right": serialize_signed_graph(self.right),
            "charpoly": [str(c) for c in self.charpoly_left.coeffs],
            "cospectral": self.cospectral,
            "distinct": self.distinct,
            "method": self.method,
            "certified": self.certified,
        }


OrientationArg = Union[None, ROrientation, Tuple[ROrientation, ROrientation]]


def certify_pair(
    g1: SignedGraph,
    th: OrientationArg,
    pair: Tuple[SignedGraph, SignedGraph],
    product: ProductKind,
    kind: MatrixKind,
) -> PairCertificate:
    """Build both products and certify cospectrality plus non-isomorphism.

    The pair must agree on charpoly and reduced coronal for the requested
    kind (this is rechecked, so feeding an A-pair to an L run fails fast)
    and must lie in different switching classes.  Both directions are then
    recomputed from scratch on the constructed products.
    """
    left, right = pair
    degs = {len([1 for u, v, _ in g1.edges if x in (u, v)]) for x in range(g1.n)}
    if len(degs) > 1:
        raise ValueError("first factor must be regular")
    ka, kb = spectral_key(left, kind), spectral_key(right, kind)
    if ka != kb:
        raise ValueError("pair does not share charpoly and coronal for this kind")
    if canonical_form(left) == canonical_form(right):
        raise ValueError("pair members are switching-isomorphic")
    if isinstance(th, tuple):
        th1, th2 = th
    elif th is None:
        th1 = default_orientation(g1)
        th2 = random_orientation(g1, seed=1)
    else:
        th1 = th2 = th
    pa = build_product(product, g1, th1, left)
    pb = build_product(product, g1, th2, right)
    fa = charpoly_exact(build_matrix(pa.graph, kind))
    fb = charpoly_exact(build_matrix(pb.graph, kind))
    distinct, method = products_distinct(pa.graph, pb.graph)
    return PairCertificate(
        product=product,
        kind=kind,
        left=left,
        right=right,
        charpoly_left=fa,
        charpoly_right=fb,
        cospectral=fa == fb,
        distinct=distinct,
        method=method,
    )


def catalog_lines(certificates: Sequence[PairCertificate]) -> Iterator[str]:
    """One JSON document per certified pair, stable key order."""
    for cert in certificates:
        yield json.dumps(cert.to_json(), sort_keys=True)
