"""Signed coronals: the marking quadratic form of the resolvent.

The coronal of a matrix N with marking mu is mu^T (xI - N)^(-1) mu, kept as
an unreduced rational function whose denominator is the characteristic
polynomial of N.  The star and co-regular closed forms below are the two
families with known compact coronals; both are verified against the general
computation in the tests rather than trusted.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from .core import SignedGraph, resolve_marking
from .exactalg import (
    ExactMatrix,
    IntPolynomial,
    RationalFn,
    resolvent_quadratic_form,
)
from .matrices import MatrixKind, build_matrix


def _resolvent_rational(m: ExactMatrix, mu: Sequence[int]) -> RationalFn:
    """Resolvent quadratic form for a matrix with Fraction entries.

    Scale by the common denominator c, solve in integers, then map back:
    mu^T (xI - m)^(-1) mu = c * num_B(cx) / den_B(cx) with B = c*m, and both
    parts are rescaled by c^(-n) so the denominator is exactly charpoly(m).
    """
    c = 1
    for row in m.entries:
        for x in row:
            if isinstance(x, Fraction):
                c = math.lcm(c, x.denominator)
    if c == 1:
        return resolvent_quadratic_form(m, mu)
    inner = resolvent_quadratic_form(m.scaled(c), mu)
    cx = IntPolynomial([0, c])
    n = m.rows
    num = inner.num.compose(cx).scaled(Fraction(c) ** (1 - n))
    den = inner.den.compose(cx).scaled(Fraction(c) ** (-n))
    return RationalFn(num, den)


def coronal(
    g: SignedGraph,
    marking: Optional[Sequence[int]],
    kind: MatrixKind,
) -> RationalFn:
    """Unreduced coronal of the kind-matrix of g under the given marking
    (explicit, attached to g, or the incident-sign-product default)."""
    mu = resolve_marking(g, marking)
    m = build_matrix(g, kind)
    if m.is_integer():
        return resolvent_quadratic_form(m, mu)
    return _resolvent_rational(m, mu)


def coronal_star(m: int, mu_center: int, kind: MatrixKind) -> RationalFn:
    """Closed-form coronal of a signed star with m leaves.

    Valid for markings arising as the incident-sign-product or plurality
    marking of some signed star whose center carries mu_center; only the
    center value survives in the closed form.
    """
    if m < 1:
        raise ValueError("star needs at least one leaf")
    if mu_center not in (1, -1):
        raise ValueError("center marking must be +1 or -1")
    if kind is MatrixKind.ADJACENCY:
        return RationalFn(
            IntPolynomial([2 * m * mu_center, m + 1]),
            IntPolynomial([-m, 0, 1]),
        )
    den = IntPolynomial([0, -(m + 1), 1])  # x(x - m - 1)
    if kind is MatrixKind.LAPLACIAN:
        num = IntPolynomial([-(m * m + 1) - 2 * m * mu_center, m + 1])
    elif kind is MatrixKind.SIGNLESS_LAPLACIAN:
        num = IntPolynomial([-(m * m + 1) + 2 * m * mu_center, m + 1])
    else:
        raise ValueError("star coronal is available for kinds A, L, Q")
    return RationalFn(num, den)


def coronal_coregular(n: int, gamma: int, k: int, kind: MatrixKind) -> RationalFn:
    """Closed-form coronal of a co-regular graph of order n with common
    total degree gamma and common net degree k."""
    if n < 1:
        raise ValueError("order must be positive")
    if (gamma - k) % 2 != 0:
        raise ValueError("gamma and k must have equal parity")
    num = IntPolynomial([n])
    if kind is MatrixKind.ADJACENCY:
        pole = k
    elif kind is MatrixKind.LAPLACIAN:
        pole = gamma - k
    elif kind is MatrixKind.SIGNLESS_LAPLACIAN:
        pole = gamma + k
    else:
        raise ValueError("co-regular coronal is available for kinds A, L, Q")
    return RationalFn(num, IntPolynomial([-pole, 1]))
