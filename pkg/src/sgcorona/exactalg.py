"""Exact polynomial, rational-function and matrix arithmetic.

Everything in the verification path runs over arbitrary-precision integers
or ``fractions.Fraction``; floating point appears only in the numeric
cross-check eigensolver at the bottom of the file.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class IntPolynomial:
    """Dense univariate polynomial, coefficients indexed by degree.

    Coefficients are ints, or Fractions when a computation genuinely leaves
    the integers (charpolys of rational matrices).  Trailing zeros are
    trimmed; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def scaled(self, c: Scalar) -> "IntPolynomial":
        if c == 0:
            return IntPolynomial()
        return IntPolynomial([a * c for a in self.coeffs])

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial.constant(c)
        return acc

    def monic(self) -> "IntPolynomial":
        lead = self.leading()
        if lead == 0 or lead == 1:
            return self
        inv = Fraction(1, 1) / Fraction(lead)
        return IntPolynomial([c * inv for c in self.coeffs])

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient; raises if the division leaves a remainder."""
        q, r = poly_divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact polynomial division: remainder {r}")
        return q

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if (c < 0) else "+"
            mag = -c if c < 0 else c
            if k == 0:
                term = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if sign == "+" else "-" + term)
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def poly_divmod(a: IntPolynomial, b: IntPolynomial):
    """Division with remainder over the rationals."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(a.degree - b.degree + 1, 0)
    rem = list(a.coeffs)
    blead = Fraction(b.leading())
    db = b.degree
    while len(rem) - 1 >= db and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        factor = _norm(Fraction(rem[-1]) / blead)
        q[k] = factor
        for i, c in enumerate(b.coeffs):
            rem[k + i] -= factor * c
        rem.pop()
    return IntPolynomial(q), IntPolynomial(rem)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic-normalized gcd, returned with integer primitive coefficients."""
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return _primitive(a)


def _clear_denominators(p: IntPolynomial):
    """Return (integer polynomial, multiplier m) with m*p integral."""
    m = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            m = math.lcm(m, c.denominator)
    if m == 1:
        return p, 1
    return IntPolynomial([c * m for c in p.coeffs]), m


def _primitive(p: IntPolynomial) -> IntPolynomial:
    """Integer coefficients, content 1, positive leading coefficient."""
    q, _ = _clear_denominators(p)
    g = 0
    for c in q.coeffs:
        g = math.gcd(g, c)
    if g == 0:
        return q
    if q.leading() < 0:
        g = -g
    return IntPolynomial([c // g for c in q.coeffs])


def poly_compose_projective(
    f: IntPolynomial, u: IntPolynomial, v: IntPolynomial
) -> IntPolynomial:
    """Homogenized composition: sum_k f[k] * u^k * v^(deg f - k).

    If f factors as prod (x - r_j) the result is prod (u - r_j * v), which is
    exactly the shape of the eigenvalue products in the closed-form
    characteristic polynomials.
    """
    n = f.degree
    if n < 0:
        return IntPolynomial()
    acc = IntPolynomial.constant(f.coeffs[n])
    vpow = IntPolynomial.one()
    for k in range(n - 1, -1, -1):
        vpow = vpow * v
        acc = acc * u + vpow.scaled(f.coeffs[k])
    return acc


class RationalFn:
    """Quotient of two polynomials, kept unreduced.

    The closed forms are stated with specific uncancelled denominators, and
    pole-multiplicity bookkeeping depends on keeping them; cancellation is
    explicit via reduced().  Equality is cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: IntPolynomial):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash(self.reduced_pair())

    def substitute(self, inner: IntPolynomial) -> "RationalFn":
        return RationalFn(self.num.compose(inner), self.den.compose(inner))

    def evaluate(self, x) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num.evaluate(x)) / Fraction(d)

    def reduced_pair(self):
        """Canonical reduced (num, den): coprime integer polynomials,
        den with positive leading coefficient and content 1 jointly."""
        num, _ = _clear_denominators(self.num)
        den, _ = _clear_denominators(self.den)
        if num.is_zero():
            return IntPolynomial(), IntPolynomial.one()
        g = poly_gcd(num, den)
        num = num.divexact(g)
        den = den.divexact(g)
        num, _ = _clear_denominators(num)
        den, _ = _clear_denominators(den)
        c = 0
        for coeff in num.coeffs + den.coeffs:
            c = math.gcd(c, coeff)
        if den.leading() < 0:
            c = -c
        num = IntPolynomial([a // c for a in num.coeffs])
        den = IntPolynomial([a // c for a in den.coeffs])
        return num, den

    def reduced(self) -> "RationalFn":
        num, den = self.reduced_pair()
        return RationalFn(num, den)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"


class ExactMatrix:
    """Immutable rectangular matrix over the integers/rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]], cols: int = None):
        rows = tuple(tuple(_norm(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix rows")
        else:
            # a 0 x n matrix has no rows to infer the width from
            width = 0 if cols is None else cols
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.entries, self.cols))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")

    def scaled(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix([[x * c for x in row] for row in self.entries])

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix shape mismatch in product")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.rows, other.cols)
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            nz = [(j, a) for j, a in enumerate(row) if a != 0]
            out_row = []
            for col in bt:
                s = 0
                for j, a in nz:
                    s += a * col[j]
                out_row.append(s)
            out.append(out_row)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.cols, self.rows)
        return ExactMatrix(list(zip(*self.entries)))

    def trace(self) -> Scalar:
        self._require_square()
        return _norm(sum(self.entries[i][i] for i in range(self.rows)))

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for row in self.entries for x in row)

    def _require_square(self) -> None:
        if self.rows != self.cols:
            raise ValueError(f"square matrix required, got {self.rows}x{self.cols}")

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.entries]!r})"


def _exact_div(t: Scalar, k: int) -> Scalar:
    if isinstance(t, int):
        q, r = divmod(t, k)
        if r != 0:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        return q
    return _norm(t / k)


def _sparse_rows(m: ExactMatrix):
    return [[(j, a) for j, a in enumerate(row) if a != 0] for row in m.entries]


def _faddeev_leverrier(m: ExactMatrix, keep_steps: bool):
    """Shared recursion behind charpoly_exact and the resolvent.

    Returns (coeffs, steps): coeffs[k] is the coefficient of x^k in
    det(xI - m), and steps (when requested) is [M_1, ..., M_n] with
    adj(xI - m) = sum_k M_k x^(n-k).  The per-step division by k is exact;
    an inexact division means a bug, not a rounding concern, so it raises.
    """
    m._require_square()
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return coeffs, []
    a_rows = _sparse_rows(m)
    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1
    steps = []
    for k in range(1, n + 1):
        if keep_steps:
            steps.append(ExactMatrix(cur))
        am = []
        for nz in a_rows:
            out_row = [0] * n
            for j, a in nz:
                crow = cur[j]
                if a == 1:
                    for l in range(n):
                        out_row[l] += crow[l]
                elif a == -1:
                    for l in range(n):
                        out_row[l] -= crow[l]
                else:
                    for l in range(n):
                        out_row[l] += a * crow[l]
            am.append(out_row)
        tr = sum(am[i][i] for i in range(n))
        c = -_exact_div(tr, k)
        coeffs[n - k] = _norm(c)
        if k < n:
            for i in range(n):
                am[i][i] += c
            cur = am
        else:
            # Cayley-Hamilton check for free: A*M_n + c0*I must vanish.
            for i in range(n):
                am[i][i] += c
                if any(x != 0 for x in am[i]):
                    raise ArithmeticError("Faddeev-LeVerrier closure failed")
    return coeffs, steps


def charpoly_exact(m: ExactMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - m), exact.

    Integer matrices run the recursion in pure integer arithmetic.  Rational
    matrices are scaled by the lcm c of all entry denominators, solved in
    integers, and mapped back through f(x) = c^(-n) f_{cm}(cx).
    """
    m._require_square()
    if m.is_integer():
        coeffs, _ = _faddeev_leverrier(m, keep_steps=False)
        return IntPolynomial(coeffs)
    c = 1
    for row in m.entries:
        for x in row:
            if isinstance(x, Fraction):
                c = math.lcm(c, x.denominator)
    scaled = m.scaled(c)
    if not scaled.is_integer():
        raise ValueError("matrix entries must be int or Fraction")
    coeffs, _ = _faddeev_leverrier(scaled, keep_steps=False)
    n = m.rows
    back = [
        _norm(Fraction(coeffs[k]) * Fraction(c) ** (k - n)) for k in range(n + 1)
    ]
    return IntPolynomial(back)


def resolvent_quadratic_form(m: ExactMatrix, mu: Sequence[int]) -> RationalFn:
    """mu^T (xI - m)^(-1) mu as an unreduced RationalFn.

    The denominator is charpoly_exact(m); the numerator collects the
    quadratic forms mu^T M_k mu of the adjugate pieces, so both come out of
    one recursion pass.
    """
    m._require_square()
    if len(mu) != m.rows:
        raise ValueError("vector length does not match matrix dimension")
    if not m.is_integer():
        raise ValueError("integer matrix required")
    coeffs, steps = _faddeev_leverrier(m, keep_steps=True)
    n = m.rows
    num = [0] * n
    for k, step in enumerate(steps, start=1):
        q = 0
        for i in range(n):
            row = step.entries[i]
            mi = mu[i]
            for j in range(n):
                a = row[j]
                if a:
                    q += mi * a * mu[j]
        num[n - k] = q
    return RationalFn(IntPolynomial(num), IntPolynomial(coeffs))


def adjugate_steps(m: ExactMatrix):
    """[M_1..M_n] with adj(xI - m) = sum M_k x^(n-k), plus the charpoly."""
    coeffs, steps = _faddeev_leverrier(m, keep_steps=True)
    return IntPolynomial(coeffs), steps


def det_exact(m: ExactMatrix) -> Scalar:
    """Determinant by fraction-free (Bareiss) elimination.

    Independent of the Faddeev-LeVerrier path on purpose: it is the oracle
    the charpoly is checked against at integer sample points.
    """
    m._require_square()
    n = m.rows
    if n == 0:
        return 1
    if not m.is_integer():
        c = 1
        for row in m.entries:
            for x in row:
                if isinstance(x, Fraction):
                    c = math.lcm(c, x.denominator)
        d = det_exact(m.scaled(c))
        return _norm(Fraction(d) / Fraction(c) ** n)
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod(t, prev)
                if r != 0:
                    raise ArithmeticError("Bareiss division not exact")
                a[i][j] = q
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def eigenvalues_sym(m: ExactMatrix) -> list:
    """Eigenvalues of an exactly-symmetric matrix, ascending, via cyclic
    Jacobi sweeps driven to off-diagonal norm below 1e-12 * ||m||."""
    m._require_square()
    if not m.is_symmetric():
        raise ValueError("symmetric matrix required")
    n = m.rows
    if n == 0:
        return []
    a = [[float(x) for x in row] for row in m.entries]
    norm = math.sqrt(sum(x * x for row in a for x in row))
    if norm == 0.0:
        return [0.0] * n
    tol = 1e-12 * norm

    def offdiag() -> float:
        return math.sqrt(
            sum(
                a[i][j] * a[i][j] * 2.0
                for i in range(n)
                for j in range(i + 1, n)
            )
        )

    for _ in range(60):
        if offdiag() <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = a[p][k] = c * akp - s * akq
                    a[k][q] = a[q][k] = s * akp + c * akq
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = a[q][p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return sorted(a[i][i] for i in range(n))
