"""Fraction-free linear algebra over exact rings.

Entries are duck-typed ring elements supporting ``*``, ``-``, ``is_zero()``
and ``exact_div(other)``; Bareiss pivoting keeps every intermediate value in
the ring, so no fraction-field blowup occurs during elimination.
"""

from __future__ import annotations


def bareiss_det(matrix: list) -> object:
    """Determinant of a square matrix by Bareiss elimination.

    The matrix is consumed.  Returns a ring element (the last pivot).
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    m = [row[:] for row in matrix]
    sign = 1
    prev = None
    for p in range(n - 1):
        piv = next((i for i in range(p, n) if not m[i][p].is_zero()), None)
        if piv is None:
            return m[p][p] - m[p][p]  # a ring zero
        if piv != p:
            m[p], m[piv] = m[piv], m[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                val = m[p][p] * m[i][j] - m[i][p] * m[p][j]
                if prev is not None:
                    val = val.exact_div(prev)
                m[i][j] = val
            m[i][p] = m[p][p] - m[p][p]
        prev = m[p][p]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def bareiss_echelon(rows: list):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns); the input rows are consumed.
    Rows are lists of ring elements, all of the same length.
    """
    m = [row[:] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = None
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m))
                    if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            for j in range(col + 1, ncols):
                val = m[rank][col] * m[i][j] - m[i][col] * m[rank][j]
                if prev is not None:
                    val = val.exact_div(prev)
                m[i][j] = val
            m[i][col] = m[rank][col] - m[rank][col]
        prev = m[rank][col]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots
