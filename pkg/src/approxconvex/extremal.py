"""The extremal approximately convex function E on the n-simplex.

For ``x`` with support ``A``::

    E(x) = min { sum_{j in A} m(j) x(j) :  sum_{j in A} B**-m(j) <= 1,  m(j) >= 0 integer }

:func:`eval_E` evaluates this through the finite extreme-tuple sets and the
rearrangement inequality; :func:`eval_E_oracle` minimises over a box of
tuples by brute force and shares no code with it.
"""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .kraft import enumerate_extreme, kraft_weight
from .numerics import (
    RationalLike,
    SimplexPoint,
    format_decimal,
    format_rational,
    to_rational,
)


@dataclass(frozen=True)
class LinearPiece:
    """The functional ``x -> sum_{j in support} m(j) x(j)`` with a feasible m."""

    support: tuple[int, ...]
    exponents: tuple[int, ...]
    base: int = 2

    def __post_init__(self):
        if len(self.support) != len(self.exponents):
            raise ValueError("support and exponents differ in length")
        if not self.support:
            raise ValueError("a linear piece needs a nonempty support")
        if len(set(self.support)) != len(self.support):
            raise ValueError(f"repeated index in support {self.support}")
        if kraft_weight(self.exponents, self.base) > 1:
            raise ValueError(f"exponents {self.exponents} exceed the Kraft budget")

    def coefficient(self, j: int) -> int:
        return self.exponents[self.support.index(j)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.support, self.exponents))

    def __call__(self, x: SimplexPoint) -> Fraction:
        return sum((m * x[j] for j, m in zip(self.support, self.exponents)), Fraction(0))


@dataclass(frozen=True)
class EvalResult:
    point: SimplexPoint
    base: int
    value: Fraction
    witness: LinearPiece

    def to_dict(self) -> dict:
        return {
            "point": [format_rational(c) for c in self.point],
            "B": self.base,
            "value": format_rational(self.value),
            "value_decimal": float(self.value),
            "support": list(self.witness.support),
            "witness": list(self.witness.exponents),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_base(B: int) -> None:
    if B < 2:
        raise ValueError(f"base must be at least 2, got {B}")


def _as_point(x: SimplexPoint | Iterable[RationalLike]) -> SimplexPoint:
    return x if isinstance(x, SimplexPoint) else SimplexPoint(x)


def eval_E(x: SimplexPoint | Iterable[RationalLike], B: int = 2) -> EvalResult:
    """Exact value of E at x, with a minimising linear piece.

    On a support of size s the minimum runs over the orbits of the extreme
    (s-1, B) tuples.  Within an orbit, the nonincreasing representative paired
    with the coordinates sorted ascending is the cheapest arrangement.
    """
    _check_base(B)
    x = _as_point(x)
    support = x.support
    if len(support) == 1:
        return EvalResult(x, B, Fraction(0), LinearPiece(support, (0,), B))
    den, nums = x.common_denominator()
    order = sorted(support, key=lambda j: (nums[j], j))
    ascending = [nums[j] for j in order]
    best = None
    best_t = None
    for t in enumerate_extreme(len(support) - 1, B):
        v = sum(m * a for m, a in zip(t, ascending))
        if best is None or v < best:
            best, best_t = v, t
    by_index = dict(zip(order, best_t))
    witness = LinearPiece(support, tuple(by_index[j] for j in support), B)
    return EvalResult(x, B, Fraction(best, den), witness)


def E(x: SimplexPoint | Iterable[RationalLike], B: int = 2) -> Fraction:
    """Shorthand for ``eval_E(x, B).value``."""
    return eval_E(x, B).value


@functools.lru_cache(maxsize=64)
def _box_table(size: int, B: int, bound: int) -> np.ndarray:
    """All tuples in ``[0, bound]**size`` with Kraft weight at most 1."""
    grid = np.array(list(product(range(bound + 1), repeat=size)), dtype=np.int64)
    scale = [B ** (bound - m) for m in range(bound + 1)]
    if B**bound * size < 2**62:
        weights = np.array(scale, dtype=np.int64)[grid].sum(axis=1)
        keep = weights <= B**bound
    else:
        keep = np.array([sum(scale[m] for m in row) <= B**bound for row in grid.tolist()])
    table = grid[keep]
    table.setflags(write=False)
    return table


def eval_E_oracle(x: SimplexPoint | Iterable[RationalLike], B: int = 2, M: int = 4) -> Fraction:
    """Brute-force E(x): exhaustive minimum over feasible tuples in ``[0, M]**s``.

    If the minimiser touches the box edge the box grows by 2 and the search
    repeats.  The box also never starts below ``s - 1``: an optimal tuple can
    be taken minimal, and a minimal tuple on s indices has no entry above
    ``s - 1``.
    """
    _check_base(B)
    if M < 1:
        raise ValueError(f"box bound must be at least 1, got {M}")
    x = _as_point(x)
    support = x.support
    den, nums = x.common_denominator()
    coords = [nums[j] for j in support]
    bound = max(M, len(support) - 1)
    while True:
        table = _box_table(len(support), B, bound)
        if bound * den * len(support) < 2**62:
            values = table @ np.array(coords, dtype=np.int64)
        else:
            values = table.astype(object) @ np.array(coords, dtype=object)
        i = int(np.argmin(values))
        if table[i].max() < bound:
            return Fraction(int(values[i]), den)
        bound += 2


def explicit_E_n2(x: RationalLike, y: RationalLike) -> Fraction:
    """Closed form of E on the open 2-simplex for base 2: ``min(1+x+y, 2-x, 2-y)``."""
    x, y = to_rational(x), to_rational(y)
    if not (x > 0 and y > 0 and x + y < 1):
        raise ValueError(f"({x}, {y}) is not in the interior of the 2-simplex")
    return min(1 + x + y, 2 - x, 2 - y)


def entropy_F(x: SimplexPoint | Iterable[RationalLike], B: int = 2) -> float:
    """Base-B Shannon entropy ``-sum x(j) log_B x(j)``, with ``0 log 0 = 0``."""
    _check_base(B)
    x = _as_point(x)
    terms = [float(c) * math.log(float(c)) for c in x if c != 0]
    return -math.fsum(terms) / math.log(B) + 0.0


def _floor_log(n: int, B: int) -> int:
    ell, power = 0, B
    while power <= n:
        ell += 1
        power *= B
    return ell


def kappa(n: int, B: int = 2) -> Fraction:
    """Maximum of E over the n-simplex (the sharp Hyers-Ulam constant)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    _check_base(B)
    ell = _floor_log(n, B)
    top = B * (n + 1 - B**ell)
    s = -(-top // (B - 1))
    return ell + Fraction(s, n + 1)


def combine_witnesses(
    witnesses: Sequence[LinearPiece], weights: Sequence[RationalLike]
) -> LinearPiece:
    """Build a feasible piece for ``x = sum_k t_k x_k`` from pieces for each ``x_k``.

    On ``A = supp x`` the exponent is ``1 + min{m_k(j) : j in supp x_k}``.
    Its value at x is at most ``1 + sum_k t_k * witnesses[k](x_k)``.
    """
    if len(witnesses) != len(weights):
        raise ValueError(f"{len(witnesses)} witnesses but {len(weights)} weights")
    ts = [to_rational(t) for t in weights]
    if any(t < 0 for t in ts) or sum(ts, Fraction(0)) != 1:
        raise ValueError("weights must form a point of the simplex")
    bases = {w.base for w in witnesses}
    if len(bases) != 1:
        raise ValueError(f"witnesses mix bases {sorted(bases)}")
    B = bases.pop()
    if len(witnesses) > B:
        raise ValueError(f"at most B={B} witnesses can be combined, got {len(witnesses)}")
    support = sorted({j for w, t in zip(witnesses, ts) if t != 0 for j in w.support})
    exps = []
    for j in support:
        exps.append(1 + min(w.coefficient(j) for w in witnesses if j in w.support))
    return LinearPiece(tuple(support), tuple(exps), B)


def surface_grid(B: int = 2, r: int = 12) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Rows ``(x, y, E(x, y, 1-x-y))`` on the grid ``(i/r, j/r)``, ``i + j <= r``."""
    _check_base(B)
    if r < 1:
        raise ValueError(f"resolution must be at least 1, got {r}")
    rows = []
    for i in range(r + 1):
        for j in range(r + 1 - i):
            x, y = Fraction(i, r), Fraction(j, r)
            rows.append((x, y, eval_E((x, y, 1 - x - y), B).value))
    return rows


def surface_csv(rows: Sequence[tuple[Fraction, Fraction, Fraction]]) -> str:
    lines = ["x,y,E,E_decimal"]
    for x, y, e in rows:
        lines.append(
            f"{format_rational(x)},{format_rational(y)},{format_rational(e)},{format_decimal(e, 6)}"
        )
    return "\n".join(lines) + "\n"
