"""Exact rational linear algebra on small dense matrices.

Scalars are ``fractions.Fraction`` throughout; vectors are tuples of
Fractions and matrices are tuples of row tuples.  Elimination is
fraction-free (Bareiss): rows are scaled to integers once and every
intermediate quantity stays an integer, so there is no denominator
blow-up inside the elimination loops.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction
QVector = tuple[Fraction, ...]
QMatrix = tuple[QVector, ...]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the serialized form "p/q" (or "p"), optional leading sign."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(q))


def decimal_string(q: Fraction, places: int = 5) -> str:
    """Fixed-point decimal of ``q``, rounding halves away from zero."""
    q = Fraction(q)
    scale = 10**places
    p, r = abs(q.numerator) * scale, q.denominator
    units, rem = divmod(p, r)
    if 2 * rem >= r:
        units += 1
    sign = "-" if q < 0 and units else ""
    whole, frac = divmod(units, scale)
    return f"{sign}{whole}.{frac:0{places}d}"


def as_vector(values) -> QVector:
    return tuple(Fraction(v) for v in values)


def as_matrix(rows) -> QMatrix:
    mat = tuple(as_vector(r) for r in rows)
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise DimensionError("matrix rows must all have equal length")
    return mat


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("dot product of vectors with different lengths")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _integer_rows(rows) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers.  Returns the rows and the product of
    the scale factors (det of the scaled matrix = scale * det original)."""
    out = []
    scale = Fraction(1)
    for row in rows:
        row = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in row)) if row else 1
        scale *= m
        out.append([int(x * m) for x in row])
    return out, scale


def determinant(a) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination."""
    mat = as_matrix(a)
    n = len(mat)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in mat):
        raise DimensionError("determinant requires a square matrix")
    m, scale = _integer_rows(mat)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - f * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def solve(a, b) -> QVector | None:
    """Solve the square system a x = b exactly.

    Returns None when the matrix is singular (callers such as vertex
    enumeration treat that as "skip", not as an error).
    """
    mat = as_matrix(a)
    rhs = as_vector(b)
    n = len(mat)
    if any(len(r) != n for r in mat) or len(rhs) != n:
        raise DimensionError("solve requires an n x n matrix and length-n rhs")
    if n == 0:
        return ()
    aug, _ = _integer_rows([row + (v,) for row, v in zip(mat, rhs)])
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for r in range(k + 1, n):
                if aug[r][k] != 0:
                    aug[k], aug[r] = aug[r], aug[k]
                    break
            else:
                return None
        pivot = aug[k][k]
        for i in range(k + 1, n):
            ai, ak = aug[i], aug[k]
            f = ai[k]
            for j in range(k + 1, n + 1):
                ai[j] = (ai[j] * pivot - f * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(aug[i][n])
        for j in range(i + 1, n):
            s -= aug[i][j] * x[j]
        x[i] = s / aug[i][i]
    return tuple(x)


def rank(a) -> int:
    """Exact rank over the rationals (fraction-free echelon)."""
    mat = as_matrix(a)
    if not mat or not mat[0]:
        return 0
    m, _ = _integer_rows(mat)
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            for j in range(c, cols):
                m[i][j] = (m[i][j] * pivot - f * m[r][j]) // prev
        prev = pivot
        r += 1
        if r == rows:
            break
    return r
