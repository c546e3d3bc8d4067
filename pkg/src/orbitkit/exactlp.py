"""Exact rational feasibility for equality-constrained nonnegative systems.

A tiny phase-1 simplex over Fractions with Bland's rule; enough to decide
whether a target vector is a convex combination of finitely many points.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence


def nonneg_solution(columns: Sequence[Sequence[Q]], target: Sequence[Q]) -> list[Q] | None:
    """Solve sum_j x_j * columns[j] = target with x >= 0, exactly.

    Returns one solution or None if infeasible.  Bland's rule guarantees
    termination.
    """
    m = len(target)
    n = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("dimension mismatch")
    # tableau rows: [a_1 ... a_n | artificial identity | b]
    rows = []
    for i in range(m):
        r = [Q(col[i]) for col in columns]
        b = Q(target[i])
        if b < 0:
            r = [-a for a in r]
            b = -b
        rows.append(r + [Q(0)] * m + [b])
    for i in range(m):
        rows[i][n + i] = Q(1)
    basis = list(range(n, n + m))

    def reduced_costs() -> list[Q]:
        # phase-1 objective: sum of artificial variables (cost 1 each);
        # with the tableau in reduced form, c_j - c_B . A_j
        basic = set(basis)
        cost = [Q(0)] * (n + m)
        for j in range(n + m):
            if j in basic:
                continue
            acc = Q(1) if j >= n else Q(0)
            for i, bi in enumerate(basis):
                if bi >= n:
                    acc -= rows[i][j]
            cost[j] = acc
        return cost

    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise RuntimeError("simplex failed to terminate")
        costs = reduced_costs()
        enter = next((j for j in range(n + m) if costs[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded")
        _pivot(rows, basis, leave, enter)

    objective = sum((rows[i][-1] for i in range(m) if basis[i] >= n), Q(0))
    if objective != 0:
        return None
    x = [Q(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    return x


def _pivot(rows, basis, leave: int, enter: int) -> None:
    piv = rows[leave][enter]
    rows[leave] = [a / piv for a in rows[leave]]
    for i in range(len(rows)):
        if i != leave and rows[i][enter] != 0:
            f = rows[i][enter]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[leave])]
    basis[leave] = enter


def convex_combination(points: Sequence[Sequence[Q]], target: Sequence[Q]) -> list[Q] | None:
    """Coefficients of a convex combination of the points equal to target,
    or None when target is outside the hull."""
    if not points:
        return None
    cols = [list(p) + [Q(1)] for p in points]
    tgt = list(target) + [Q(1)]
    return nonneg_solution(cols, tgt)
