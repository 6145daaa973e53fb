from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any, Sequence

import numpy as np

from csk_calculus.series.rational import parse_rational


def rational_matrix(rows: Sequence[Sequence[Any]]) -> np.ndarray:
    """Square object-dtype matrix of Fractions."""
    mat = np.array([[parse_rational(v) for v in row] for row in rows], dtype=object)
    if mat.size and (mat.ndim != 2 or mat.shape[0] != mat.shape[1]):
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    return mat


def bareiss_determinant(mat: np.ndarray) -> Fraction:
    """
    Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled to integers by the lcm of its denominators; the
    integer determinant is divided back by the product of those scales.
    """
    n = mat.shape[0] if mat.size else 0
    if n == 0:
        return Fraction(1)

    scale = 1
    work = np.empty((n, n), dtype=object)
    for i in range(n):
        row = [Fraction(v) for v in mat[i]]
        den = lcm(*(v.denominator for v in row))
        scale *= den
        for j, v in enumerate(row):
            work[i, j] = v.numerator * (den // v.denominator)

    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k, k] == 0:
            pivot_rows = [r for r in range(k + 1, n) if work[r, k] != 0]
            if not pivot_rows:
                return Fraction(0)
            r = pivot_rows[0]
            work[[k, r]] = work[[r, k]]
            sign = -sign
        pivot = work[k, k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: Sylvester's identity guarantees divisibility.
                work[i, j] = (pivot * work[i, j] - work[i, k] * work[k, j]) // prev
            work[i, k] = 0
        prev = pivot

    return Fraction(sign * work[n - 1, n - 1], scale)
