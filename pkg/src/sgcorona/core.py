"""Signed-graph data model: markings, switching, balance, co-regularity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph on vertices 0..n-1 with edge signs in {+1, -1}.

    Edges are stored with u < v and sorted lexicographically, which pins the
    incidence-matrix column order used by every construction downstream.
    The marking is optional; operations that need one either take it
    explicitly or fall back to the incident-sign-product marking.
    """

    n: int
    edges: Tuple[Edge, ...]
    marking: Optional[Tuple[int, ...]] = None

    def __init__(
        self,
        n: int,
        edges: Sequence[Sequence[int]] = (),
        marking: Optional[Sequence[int]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for e in edges:
            u, v, s = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
            canon.append((u, v, s))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a[:2] == b[:2]:
                raise ValueError(f"duplicate edge ({a[0]},{a[1]})")
        mk: Optional[Tuple[int, ...]] = None
        if marking is not None:
            mk = tuple(marking)
            if len(mk) != n:
                raise ValueError("marking length must equal vertex count")
            if any(x not in (1, -1) for x in mk):
                raise ValueError("marking entries must be +1 or -1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "marking", mk)

    @property
    def m(self) -> int:
        return len(self.edges)

    def with_marking(self, marking: Optional[Sequence[int]]) -> "SignedGraph":
        return SignedGraph(self.n, self.edges, marking)


@dataclass(frozen=True)
class DegreeProfile:
    d: Tuple[int, ...]
    d_plus: Tuple[int, ...]
    d_minus: Tuple[int, ...]
    sdeg: Tuple[int, ...]


@dataclass(frozen=True)
class CoRegularity:
    gamma: int
    k: int


def degree_profile(g: SignedGraph) -> DegreeProfile:
    dp = [0] * g.n
    dm = [0] * g.n
    for u, v, s in g.edges:
        if s == 1:
            dp[u] += 1
            dp[v] += 1
        else:
            dm[u] += 1
            dm[v] += 1
    d = tuple(p + m for p, m in zip(dp, dm))
    sdeg = tuple(p - m for p, m in zip(dp, dm))
    return DegreeProfile(d, tuple(dp), tuple(dm), sdeg)


def canonical_marking(g: SignedGraph) -> Tuple[int, ...]:
    """Product of incident edge signs; +1 on isolated vertices."""
    mu = [1] * g.n
    for u, v, s in g.edges:
        mu[u] *= s
        mu[v] *= s
    return tuple(mu)


def plurality_marking(g: SignedGraph) -> Tuple[int, ...]:
    """-1 exactly where the negative degree outnumbers the positive one."""
    prof = degree_profile(g)
    return tuple(
        -1 if p < m else 1 for p, m in zip(prof.d_plus, prof.d_minus)
    )


def resolve_marking(
    g: SignedGraph, marking: Optional[Sequence[int]] = None
) -> Tuple[int, ...]:
    """Explicit argument, else the marking attached to g, else canonical."""
    if marking is not None:
        mk = tuple(marking)
        if len(mk) != g.n or any(x not in (1, -1) for x in mk):
            raise ValueError("invalid marking")
        return mk
    if g.marking is not None:
        return g.marking
    return canonical_marking(g)


def is_balanced(g: SignedGraph) -> bool:
    """Every cycle carries an even number of negative edges.

    Checked by assigning vertex potentials pi with pi_u*pi_v = sign(uv) per
    component; a contradictory edge is exactly an odd negative cycle.
    """
    adj: list = [[] for _ in range(g.n)]
    for u, v, s in g.edges:
        adj[u].append((v, s))
        adj[v].append((u, s))
    pot = [0] * g.n
    for start in range(g.n):
        if pot[start]:
            continue
        pot[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v, s in adj[u]:
                want = pot[u] * s
                if pot[v] == 0:
                    pot[v] = want
                    stack.append(v)
                elif pot[v] != want:
                    return False
    return True


def switch(g: SignedGraph, theta_v: Sequence[int]) -> SignedGraph:
    if len(theta_v) != g.n:
        raise ValueError("switching vector length must equal vertex count")
    if any(t not in (1, -1) for t in theta_v):
        raise ValueError("switching entries must be +1 or -1")
    edges = [(u, v, s * theta_v[u] * theta_v[v]) for u, v, s in g.edges]
    return SignedGraph(g.n, edges, g.marking)


def co_regularity(g: SignedGraph) -> Optional[CoRegularity]:
    if g.n == 0:
        return None
    prof = degree_profile(g)
    gamma = prof.d[0]
    k = prof.sdeg[0]
    if all(x == gamma for x in prof.d) and all(x == k for x in prof.sdeg):
        return CoRegularity(gamma, k)
    return None
