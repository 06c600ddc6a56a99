"""Dense two-phase simplex method over exact rationals.

Solves::

    maximize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x >= 0

Every pivot is carried out with :class:`fractions.Fraction`, so optimal
values, ties and infeasibility are decided exactly.  Bland's rule is used for
both the entering and leaving variable, which rules out cycling.  Intended for
the small problems in this package (tens of rows, at most a few hundred
columns); there is no sparsity or numerical refinement of any kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None

    @property
    def success(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        # Each row is [a_1 .. a_N, rhs].
        self.rows = rows
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            row[:] = [v * inv for v in row]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            factor = other[col]
            if factor:
                other[:] = [a - factor * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        """Reduced costs ``c_j - c_B B^-1 A_j`` for a maximisation objective."""
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(len(red)):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def optimise(self, cost: Sequence[Fraction], allowed: int) -> bool:
        """Run primal simplex on columns ``< allowed``; False if unbounded."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if red[j] > 0), None)
            if entering is None:
                return True
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best, leave = ratio, i
            if leave is None:
                return False
            self.pivot(leave, entering)


def linprog_exact(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximise ``c . x`` exactly; see the module docstring for the form."""
    nvar = len(c)
    cost = [Fraction(v) for v in c]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    for row in list(A_ub) + list(A_eq):
        if len(row) != nvar:
            raise ValueError(f"constraint row has {len(row)} entries, expected {nvar}")

    n_ub = len(A_ub)
    m = n_ub + len(A_eq)
    n_struct = nvar + n_ub  # decision variables then slacks
    ncol = n_struct + m  # then one artificial per row

    rows: list[list[Fraction]] = []
    for i in range(m):
        if i < n_ub:
            coeffs = [Fraction(v) for v in A_ub[i]]
            rhs = Fraction(b_ub[i])
        else:
            coeffs = [Fraction(v) for v in A_eq[i - n_ub]]
            rhs = Fraction(b_eq[i - n_ub])
        slack = [Fraction(0)] * n_ub
        if i < n_ub:
            slack[i] = Fraction(1)
        row = coeffs + slack
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])

    tab = _Tableau(rows, [n_struct + i for i in range(m)])

    # Phase 1: maximise minus the sum of artificials.
    phase1 = [Fraction(0)] * n_struct + [Fraction(-1)] * m
    tab.optimise(phase1, ncol)
    if any(tab.rows[i][-1] != 0 for i, b in enumerate(tab.basis) if b >= n_struct):
        return LPResult(INFEASIBLE)

    # Drive zero-level artificials out of the basis; drop redundant rows.
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n_struct:
            col = next((j for j in range(n_struct) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    phase2 = cost + [Fraction(0)] * (ncol - nvar)
    if not tab.optimise(phase2, n_struct):
        return LPResult(UNBOUNDED)

    x = [Fraction(0)] * ncol
    for i, b in enumerate(tab.basis):
        x[b] = tab.rows[i][-1]
    sol = tuple(x[:nvar])
    return LPResult(OPTIMAL, sol, sum((a * b for a, b in zip(cost, sol)), Fraction(0)))
