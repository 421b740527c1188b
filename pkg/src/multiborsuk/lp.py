"""Exact rational simplex for small covering/packing programs.

Maximizes c.x subject to A.x <= b, x >= 0 with b >= 0, so the all-slack
basis is feasible and no phase-one is needed.  Bland's rule guarantees
termination; every number is a Fraction, so optima are exact.
"""

from __future__ import annotations

from fractions import Fraction


def simplex_max(A, b, c):
    """Solve max c.x s.t. A.x <= b, x >= 0 (entries Fractions, b >= 0).

    Returns (value, x, y) where y holds the dual values, one per row,
    read off the slack columns of the final tableau.
    """
    m = len(A)
    n = len(c)
    b = [Fraction(v) for v in b]
    if any(v < 0 for v in b):
        raise ValueError("simplex_max needs b >= 0")
    # tableau rows: [A | I | b]; objective row holds reduced costs
    rows = [
        [Fraction(A[i][j]) for j in range(n)]
        + [Fraction(int(i == t)) for t in range(m)]
        + [b[i]]
        for i in range(m)
    ]
    cost = [Fraction(v) for v in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]

    while True:
        # Bland: entering = lowest-index column with positive reduced cost
        enter = next((j for j in range(n + m) if cost[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[pivot_row])
                ):
                    best = ratio
                    pivot_row = i
        if pivot_row is None:
            raise ValueError("unbounded linear program")
        piv = rows[pivot_row][enter]
        rows[pivot_row] = [v / piv for v in rows[pivot_row]]
        for i in range(m):
            if i != pivot_row and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[pivot_row])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * w for v, w in zip(cost, rows[pivot_row])]
        basis[pivot_row] = enter

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    y = [-cost[n + i] for i in range(m)]
    return value, x, y
