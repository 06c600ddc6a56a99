"""Exponent tuples under the Kraft-type budget ``sum_j B**-m(j) <= 1``.

The extremal function on the n-simplex is a minimum of the linear functionals
``x -> sum_j m(j) x(j)`` over feasible tuples.  Only finitely many of them
matter on the open simplex; :func:`enumerate_extreme` finds the nonincreasing
representatives of that finite set.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linprog import linprog_exact
from .numerics import RationalLike, to_rational


@dataclass(frozen=True)
class ExponentTuple:
    entries: tuple[int, ...]
    base: int = 2

    def __init__(self, entries: Iterable[int], base: int = 2):
        values = tuple(int(m) for m in entries)
        if not values:
            raise ValueError("an exponent tuple needs at least one entry")
        if any(m < 0 for m in values):
            raise ValueError(f"exponents must be nonnegative: {values}")
        if base < 2:
            raise ValueError(f"base must be at least 2, got {base}")
        object.__setattr__(self, "entries", values)
        object.__setattr__(self, "base", int(base))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    @property
    def weight(self) -> Fraction:
        return kraft_weight(self)

    def sorted_desc(self) -> "ExponentTuple":
        return ExponentTuple(sorted(self.entries, reverse=True), self.base)


def _coerce(t: ExponentTuple | Sequence[int], base: int | None) -> ExponentTuple:
    if isinstance(t, ExponentTuple):
        if base is not None and base != t.base:
            raise ValueError(f"tuple has base {t.base}, caller asked for {base}")
        return t
    return ExponentTuple(t, 2 if base is None else base)


def kraft_weight(t: ExponentTuple | Sequence[int], base: int | None = None) -> Fraction:
    """Exact ``sum_j B**-m(j)``."""
    t = _coerce(t, base)
    top = max(t.entries)
    # Sum over the common denominator B**top to stay in integers.
    num = sum(t.base ** (top - m) for m in t.entries)
    return Fraction(num, t.base**top)


def is_feasible(
    t: ExponentTuple | Sequence[int], budget: RationalLike = 1, base: int | None = None
) -> bool:
    budget = to_rational(budget)
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    return kraft_weight(t, base) <= budget


def is_minimal(
    t: ExponentTuple | Sequence[int], budget: RationalLike = 1, base: int | None = None
) -> bool:
    """True iff no componentwise-smaller tuple fits the budget.

    The weight strictly decreases in every entry, so any smaller tuple weighs
    at least as much as some single-entry decrement; checking those suffices.
    """
    t = _coerce(t, base)
    budget = to_rational(budget)
    weight = kraft_weight(t)
    if weight > budget:
        raise ValueError(f"tuple {t.entries} is not feasible for budget {budget}")
    for m in t.entries:
        if m >= 1:
            # Decrementing m adds (B - 1) * B**-m to the weight.
            if weight + Fraction(t.base - 1, t.base**m) <= budget:
                return False
    return True


def eta(n: int, C: RationalLike, B: int) -> int:
    """Smallest ``j >= 2`` with ``C * B**j >= n + B``.

    Every entry of a nonincreasing tuple that is minimal for budget ``C``
    stays strictly below this value at its last position.
    """
    C = to_rational(C)
    if C <= 0:
        raise ValueError(f"budget must be positive, got {C}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if B < 2:
        raise ValueError(f"base must be at least 2, got {B}")
    j = 2
    power = B * B
    while C * power < n + B:
        j += 1
        power *= B
    return j


def candidate_tuples(n: int, B: int) -> list[tuple[int, ...]]:
    """Nonincreasing minimal feasible (n+1)-tuples with positive entries.

    Built right to left: with the tail ``m(k+1..n)`` fixed and residual budget
    ``C``, the entry ``m(k)`` ranges over ``[m(k+1), eta(k, C) - 1]``.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if B < 2:
        raise ValueError(f"base must be at least 2, got {B}")
    found: list[tuple[int, ...]] = []
    tail = [0] * (n + 1)

    def extend(k: int, lower: int, budget: Fraction) -> None:
        upper = eta(k, budget, B) - 1
        for m in range(lower, upper + 1):
            rest = budget - Fraction(1, B**m)
            tail[k] = m
            if k == 0:
                if rest >= 0 and is_minimal(tail, 1, B):
                    found.append(tuple(tail))
            elif rest > 0:
                extend(k - 1, m, rest)

    extend(n, 1, Fraction(1))
    return found


def _pairing_value(coeffs: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    return sum((m * v for m, v in zip(coeffs, x)), Fraction(0))


def _kraft_point(t: Sequence[int], B: int) -> tuple[Fraction, ...]:
    """Interior point with x(j) proportional to B**-m(j).

    When the weight of t is 1 this is the distribution for which t is the
    unique optimal profile, so it is a good first guess for a certificate.
    """
    top = max(t)
    weights = [B ** (top - m) for m in t]
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def _interior_certificate(
    t: tuple[int, ...], others: Sequence[tuple[int, ...]], B: int
) -> tuple[Fraction, ...] | None:
    """Find an interior point where ``t`` attains the minimum over all orbits.

    ``t`` attains the minimum at some interior x iff it does so at the
    ascending rearrangement of x, and there every orbit's minimum is its
    nonincreasing representative.  So the search runs over ascending x only:

        maximise z  s.t.  z <= x(0) <= x(1) <= ... <= x(n),  sum x = 1,
                          (t - t') . x <= 0  for the active competitors t'.

    Competitors are added lazily (cutting planes): a relaxed optimum with
    z <= 0 rejects ``t``; a relaxed optimum with z > 0 that beats every
    competitor accepts it.
    """
    size = len(t)
    guess = _kraft_point(t, B)
    own = _pairing_value(t, guess)
    if all(own <= _pairing_value(o, guess) for o in others):
        return guess

    nvar = size + 1  # x(0..n), z
    base_ub: list[list[int]] = []
    row = [0] * nvar
    row[size] = 1
    row[0] = -1
    base_ub.append(row)  # z - x(0) <= 0
    for j in range(size - 1):
        row = [0] * nvar
        row[j], row[j + 1] = 1, -1
        base_ub.append(row)  # x(j) - x(j+1) <= 0
    eq = [[1] * size + [0]]
    objective = [0] * size + [1]

    active: list[tuple[int, ...]] = []
    while True:
        A_ub = base_ub + [[a - b for a, b in zip(t, o)] + [0] for o in active]
        res = linprog_exact(objective, A_ub, [0] * len(A_ub), eq, [1])
        if not res.success or res.objective <= 0:
            return None
        x = res.x[:size]
        own = _pairing_value(t, x)
        worst = None
        worst_gap = Fraction(0)
        for o in others:
            gap = own - _pairing_value(o, x)
            if gap > worst_gap:
                worst, worst_gap = o, gap
        if worst is None:
            return x
        active.append(worst)


@dataclass(frozen=True)
class ExtremeTupleSet:
    """Nonincreasing extreme tuples for (n, B), sorted lexicographically descending.

    ``certificates[i]`` is an interior point (ascending coordinates) at which
    ``tuples[i]`` attains the extremal function.
    """

    n: int
    B: int
    tuples: tuple[tuple[int, ...], ...]
    certificates: tuple[tuple[Fraction, ...], ...] = field(compare=False, repr=False)

    def __iter__(self):
        return iter(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.tuples

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self.tuples)

    def to_dict(self) -> dict:
        return {"n": self.n, "B": self.B, "tuples": [list(t) for t in self.tuples]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ExtremeTupleSet":
        data = json.loads(text)
        tuples = tuple(sorted((tuple(t) for t in data["tuples"]), reverse=True))
        return cls(int(data["n"]), int(data["B"]), tuples, ())


@functools.lru_cache(maxsize=None)
def enumerate_extreme(n: int, B: int) -> ExtremeTupleSet:
    """The set of nonincreasing extreme (n+1)-tuples for base B.

    Candidates come from :func:`candidate_tuples`; a candidate is kept iff its
    functional attains the pointwise minimum over the permutation orbits of
    all candidates at some point of the open simplex, decided by an exact LP.
    """
    cands = candidate_tuples(n, B)
    kept = []
    for t in cands:
        others = [o for o in cands if o != t]
        cert = _interior_certificate(t, others, B)
        if cert is not None:
            kept.append((t, cert))
    kept.sort(reverse=True)
    return ExtremeTupleSet(
        n, B, tuple(t for t, _ in kept), tuple(c for _, c in kept)
    )


def partition_tuple(t: ExponentTuple | Sequence[int], base: int | None = None) -> list[list[int]]:
    """Split the indices into B bins, each of Kraft weight at most 1/B.

    Indices go in nondecreasing order of m(j) into the first bin that still
    has room.  Item sizes are powers of 1/B, each dividing the larger ones, so
    this first-fit order never gets stuck when the total weight is at most 1.
    """
    t = _coerce(t, base)
    B = t.base
    if any(m < 1 for m in t.entries):
        raise ValueError(f"every exponent must be at least 1: {t.entries}")
    if kraft_weight(t) > 1:
        raise ValueError(f"tuple {t.entries} has Kraft weight above 1")
    cap = Fraction(1, B)
    bins: list[list[int]] = [[] for _ in range(B)]
    loads = [Fraction(0)] * B
    for j in sorted(range(len(t)), key=lambda i: (t[i], i)):
        item = Fraction(1, B ** t[j])
        k = next((k for k in range(B) if loads[k] <= cap - item), None)
        if k is None:
            raise AssertionError(f"no admissible bin for index {j} of {t.entries}")
        bins[k].append(j)
        loads[k] += item
    placed = sorted(j for b in bins for j in b)
    assert placed == list(range(len(t))), "partition must cover every index once"
    for b in bins:
        assert sum((Fraction(1, B ** t[j]) for j in b), Fraction(0)) <= cap
    return bins
