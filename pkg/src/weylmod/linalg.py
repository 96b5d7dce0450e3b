"""Exact integer and rational matrix helpers.

Nothing here touches floating point.  Matrices are plain lists of rows.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def bareiss_det(matrix: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: the division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a rational matrix: clear denominators, then Bareiss."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    denom = 1
    for row in matrix:
        for x in row:
            denom = lcm(denom, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * denom) for x in row] for row in matrix]
    return Fraction(bareiss_det(scaled), denom**n)


def rational_inverse(matrix: Matrix) -> list[list[Fraction]]:
    """Inverse by Gauss-Jordan over the rationals."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_vec(matrix: Sequence[Sequence], vec: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in matrix)


def bilinear(gram: Sequence[Sequence], x: Sequence, y: Sequence):
    return sum(x[i] * sum(g * yj for g, yj in zip(gram[i], y))
               for i in range(len(x)) if x[i])
