"""Exact integer matrix helpers.

Everything here is arbitrary-precision (Python ints, Fractions for the rank
computation); no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def diagonal(entries: Sequence[int]) -> Matrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimensions do not match")
    cols = range(len(b[0])) if b else range(0)
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(len(b))) for j in cols) for ra in a
    )


def is_identity(m: Matrix) -> bool:
    return all(
        v == (1 if i == j else 0) for i, row in enumerate(m) for j, v in enumerate(row)
    )


def mat_det(m: Matrix) -> int:
    """Determinant by the Bareiss fraction-free elimination; exact."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals (equals the rank over Z for independence tests)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / inv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def commutes_with_diagonal(entries: Sequence[int], m: Matrix) -> bool:
    """Exact test E*M == M*E for E = diagonal(entries).

    (E*M)[i][j] = e_i * m[i][j] and (M*E)[i][j] = m[i][j] * e_j, so the two
    products agree exactly when m[i][j] * (e_i - e_j) vanishes for all i, j.
    """
    for i, row in enumerate(m):
        ei = entries[i]
        for j, v in enumerate(row):
            if v != 0 and ei != entries[j]:
                return False
    return True
