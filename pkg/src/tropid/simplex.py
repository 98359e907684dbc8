"""Exact two-phase simplex over ``fractions.Fraction``.

Solves ``minimize c.x  s.t.  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0``.
Pivoting follows Bland's rule, so the method terminates on degenerate
problems.  The problems arising in this package have at most a few dozen
rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[list] = None
    objective: Optional[Fraction] = None
    pivots: int = field(default=0)

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _frac_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r, col):
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            row = [v * inv for v in row]
            self.rows[r] = row
            self.rhs[r] *= inv
        rhs_r = self.rhs[r]
        nz = [(j, v) for j, v in enumerate(row) if v]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                for j, v in nz:
                    other[j] -= f * v
                self.rhs[i] -= f * rhs_r
        self.basis[r] = col
        self.pivots += 1

    def reduced_costs(self, cost):
        # cost_j - c_B . column_j
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                for j, v in enumerate(self.rows[i]):
                    if v:
                        red[j] -= cb * v
        return red

    def run(self, cost, allowed):
        """Bland-rule primal simplex; returns False on unboundedness."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in allowed if red[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    phase_one_only: bool = False,
) -> LPResult:
    """Minimize ``c.x`` exactly.  With ``phase_one_only`` stop at feasibility."""
    n = len(c)
    A_ub, A_eq = _frac_rows(A_ub), _frac_rows(A_eq)
    b_ub, b_eq = [Fraction(v) for v in b_ub], [Fraction(v) for v in b_eq]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    if any(len(r) != n for r in A_ub + A_eq):
        raise ValueError("constraint row length does not match objective")
    m_ub = len(A_ub)
    m = m_ub + len(A_eq)

    # columns: originals | slacks (one per ub row) | artificials (as needed)
    rows, rhs, basis = [], [], []
    n_slack = m_ub
    art_rows = []
    for i in range(m):
        if i < m_ub:
            coeffs = A_ub[i] + [Fraction(0)] * n_slack
            coeffs[n + i] = Fraction(1)
            b = b_ub[i]
        else:
            coeffs = A_eq[i - m_ub] + [Fraction(0)] * n_slack
            b = b_eq[i - m_ub]
        if b < 0:
            coeffs = [-v for v in coeffs]
            b = -b
        rows.append(coeffs)
        rhs.append(b)
        if i < m_ub and coeffs[n + i] == 1:
            basis.append(n + i)
        else:
            basis.append(None)
            art_rows.append(i)
    n_art = len(art_rows)
    total = n + n_slack + n_art
    for row in rows:
        row.extend([Fraction(0)] * n_art)
    for k, i in enumerate(art_rows):
        col = n + n_slack + k
        rows[i][col] = Fraction(1)
        basis[i] = col

    tab = _Tableau(rows, rhs, basis)
    art_cols = set(range(n + n_slack, total))
    if n_art:
        cost1 = [Fraction(0)] * (n + n_slack) + [Fraction(1)] * n_art
        tab.run(cost1, list(range(total)))
        infeas = sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b in art_cols)
        if infeas > 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] in art_cols:
                col = next(
                    (j for j in range(n + n_slack) if tab.rows[i][j] != 0), None
                )
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1

    def solution():
        x = [Fraction(0)] * total
        for i, b in enumerate(tab.basis):
            x[b] = tab.rhs[i]
        return x[:n]

    if phase_one_only:
        return LPResult(OPTIMAL, x=solution(), pivots=tab.pivots)

    cost = [Fraction(v) for v in c] + [Fraction(0)] * (n_slack + n_art)
    allowed = list(range(n + n_slack))
    if not tab.run(cost, allowed):
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = solution()
    obj = sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0))
    return LPResult(OPTIMAL, x=x, objective=obj, pivots=tab.pivots)
