"""Builders for the standard matrices attached to a signed graph."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .core import SignedGraph, degree_profile
from .exactalg import ExactMatrix


class MatrixKind(Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"
    NORMALIZED_LAPLACIAN = "N"
    RANDOM_WALK = "P"

    @classmethod
    def parse(cls, text: str) -> "MatrixKind":
        key = text.strip().upper()
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown matrix kind {text!r} (expected A, L, Q, N or P)")


def _adjacency_rows(g: SignedGraph):
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v, s in g.edges:
        rows[u][v] = s
        rows[v][u] = s
    return rows


def build_matrix(g: SignedGraph, kind: MatrixKind) -> ExactMatrix:
    """Exact matrix of the requested kind.

    A, L = D - A and Q = D + A are integer matrices.  P is the degree-scaled
    adjacency D^(-1) A, and the normalized Laplacian is returned as I - P:
    conjugating by the square-root degree matrix turns it into the usual
    symmetric form, so the characteristic polynomial is the same while the
    entries stay rational.  P and I - P require minimum degree 1.
    """
    rows = _adjacency_rows(g)
    if kind is MatrixKind.ADJACENCY:
        return ExactMatrix(rows)
    deg = degree_profile(g).d
    if kind is MatrixKind.LAPLACIAN:
        return ExactMatrix(
            [
                [deg[i] if i == j else -rows[i][j] for j in range(g.n)]
                for i in range(g.n)
            ]
        )
    if kind is MatrixKind.SIGNLESS_LAPLACIAN:
        return ExactMatrix(
            [
                [deg[i] if i == j else rows[i][j] for j in range(g.n)]
                for i in range(g.n)
            ]
        )
    if any(d == 0 for d in deg):
        raise ValueError(f"{kind.value}-matrix undefined: isolated vertex present")
    if kind is MatrixKind.RANDOM_WALK:
        return ExactMatrix(
            [[Fraction(rows[i][j], deg[i]) for j in range(g.n)] for i in range(g.n)]
        )
    if kind is MatrixKind.NORMALIZED_LAPLACIAN:
        return ExactMatrix(
            [
                [
                    (1 if i == j else 0) - Fraction(rows[i][j], deg[i])
                    for j in range(g.n)
                ]
                for i in range(g.n)
            ]
        )
    raise ValueError(f"unhandled matrix kind {kind!r}")
