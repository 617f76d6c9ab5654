"""Exact phase-one simplex over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[Fraction]]:
    """Find x >= 0 with A x = b, or return None if there is none.

    Requires b >= 0.  Uses one artificial variable per row and Bland's
    rule, so it terminates and never touches floating point.
    """
    return phase_one(A, b)[0]


def phase_one(A: Sequence[Sequence[int]], b: Sequence[int]):
    """``(x, None)`` for a feasible x >= 0 with A x = b, else ``(None, y)``
    with y^T A <= 0 and y^T b > 0 (a Farkas certificate).

    Integer-preserving pivoting: every tableau entry is an integer and
    stands for itself divided by ``D``, the last pivot.  The division in
    each update is exact (all entries are minors of the initial tableau).
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")
    width = cols + rows
    T = [[int(v) for v in row] + [1 if k == i else 0 for k in range(rows)] + [int(b[i])]
         for i, row in enumerate(A)]
    basis = list(range(cols, width))
    # reduced costs of "minimise the sum of artificials"
    cost = [-sum(T[i][j] for i in range(rows)) for j in range(cols)]
    cost += [0] * rows
    cost.append(-sum(T[i][width] for i in range(rows)))
    D = 1

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(rows):
            coef = T[i][enter]
            if coef > 0:
                if leave is None:
                    leave = i
                    continue
                # compare T[i][rhs] / coef with the incumbent ratio
                lhs = T[i][width] * T[leave][enter]
                rhs = T[leave][width] * coef
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave is None:  # unbounded direction; cannot happen in phase one
            break
        pivot_row = T[leave]
        p = pivot_row[enter]
        for i in range(rows):
            if i != leave:
                f = T[i][enter]
                T[i] = [(p * v - f * w) // D for v, w in zip(T[i], pivot_row)]
        f = cost[enter]
        cost = [(p * v - f * w) // D for v, w in zip(cost, pivot_row)]
        D = p
        basis[leave] = enter

    if cost[width] != 0:
        # reduced cost of artificial k is 1 - y_k for the final duals y
        return None, [1 - Fraction(cost[cols + k], D) for k in range(rows)]
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = Fraction(T[i][width], D)
    return x, None
