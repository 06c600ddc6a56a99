"""Convex minorants of sampled epsilon-convex functions.

Given finitely many samples ``(x_i, y_i)`` of a function on a convex set in
R^n, the greatest convex function below the samples is, at any x in their
convex hull,

    g(x) = min { sum_i t_i y_i :  sum_i t_i x_i = x,  sum_i t_i = 1,  t >= 0 },

a linear program solved here exactly.  If the data is epsilon-convex with
respect to the (B-1)-simplex then ``g <= f <= g + kappa(n, B) * eps`` on the
samples, and ``g0 = g + kappa(n, B) * eps / 2`` is uniformly within half that
of f.  Sampling f = E on a simplex grid shows the constant cannot be improved.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .extremal import E, kappa
from .linprog import linprog_exact
from .numerics import RationalLike, format_decimal, format_rational, to_rational, SimplexPoint


class OutsideHullError(ValueError):
    """The query point is not in the convex hull of the sample points."""


@dataclass(frozen=True)
class SampleSet:
    n: int
    points: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    epsilon: Fraction = Fraction(1)
    B: int = 2

    def __init__(
        self,
        n: int,
        points: Iterable[tuple[Sequence[RationalLike], RationalLike]],
        epsilon: RationalLike = 1,
        B: int = 2,
    ):
        pts = tuple(
            (tuple(to_rational(c) for c in x), to_rational(y)) for x, y in points
        )
        if not pts:
            raise ValueError("a sample set needs at least one point")
        if any(len(x) != n for x, _ in pts):
            raise ValueError(f"every sample point must have {n} coordinates")
        if len({x for x, _ in pts}) != len(pts):
            raise ValueError("sample points must be pairwise distinct")
        eps = to_rational(epsilon)
        if eps <= 0:
            raise ValueError(f"epsilon must be positive, got {eps}")
        if B < 2:
            raise ValueError(f"base must be at least 2, got {B}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "B", B)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def bound(self) -> Fraction:
        """``kappa(n, B) * epsilon``; n = 0 (a single point) needs no slack."""
        return kappa(self.n, self.B) * self.epsilon if self.n >= 1 else Fraction(0)

    def value_at(self, x: Sequence[Fraction]) -> Optional[Fraction]:
        x = tuple(x)
        for xi, yi in self.points:
            if xi == x:
                return yi
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "B": self.B,
            "epsilon": format_rational(self.epsilon),
            "points": [
                {"x": [format_rational(c) for c in x], "y": format_rational(y)}
                for x, y in self.points
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SampleSet":
        return cls(
            int(data["n"]),
            [(p["x"], p["y"]) for p in data["points"]],
            data.get("epsilon", "1"),
            int(data.get("B", 2)),
        )

    @classmethod
    def from_json(cls, text: str) -> "SampleSet":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class EnvelopeCertificate:
    query: tuple[Fraction, ...]
    g_value: Fraction
    weights: dict[int, Fraction]
    bound: Fraction
    f_value: Optional[Fraction] = None

    @property
    def gap(self) -> Optional[Fraction]:
        return None if self.f_value is None else self.f_value - self.g_value

    def to_dict(self) -> dict:
        gap = self.gap
        return {
            "query": [format_rational(c) for c in self.query],
            "g_value": format_rational(self.g_value),
            "f_value": None if self.f_value is None else format_rational(self.f_value),
            "gap": None if gap is None else format_rational(gap),
            "gap_decimal": None if gap is None else float(gap),
            "bound": format_rational(self.bound),
            "bound_decimal": float(self.bound),
            "weights": {str(i): format_rational(w) for i, w in sorted(self.weights.items())},
        }


def envelope_at(s: SampleSet, x: Sequence[RationalLike]) -> tuple[Fraction, dict[int, Fraction]]:
    """Value of the lower convex envelope at x and an optimal set of weights.

    The weights form a basic optimal solution, so at most ``n + 1`` of them
    are nonzero.  Raises :class:`OutsideHullError` when x is not a convex
    combination of the sample points.
    """
    q = tuple(to_rational(c) for c in x)
    if len(q) != s.n:
        raise ValueError(f"query has {len(q)} coordinates, samples have {s.n}")
    ys = [y for _, y in s.points]
    A_eq = [[xi[d] for xi, _ in s.points] for d in range(s.n)]
    A_eq.append([1] * len(s.points))
    res = linprog_exact([-y for y in ys], A_eq=A_eq, b_eq=list(q) + [1])
    if not res.success:
        raise OutsideHullError(f"query {[format_rational(c) for c in q]} is outside the sample hull")
    weights = {i: t for i, t in enumerate(res.x) if t != 0}
    return -res.objective, weights


def certify(s: SampleSet, x: Sequence[RationalLike]) -> EnvelopeCertificate:
    q = tuple(to_rational(c) for c in x)
    g, weights = envelope_at(s, q)
    return EnvelopeCertificate(q, g, weights, s.bound, s.value_at(q))


@dataclass
class DecompositionReport:
    n: int
    B: int
    epsilon: Fraction
    bound: Fraction
    max_gap: Fraction
    argmax: tuple[Fraction, ...]
    certificates: list[EnvelopeCertificate] = field(repr=False)
    failures: list[str] = field(default_factory=list)
    sharp: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.sharp is not False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "B": self.B,
            "epsilon": format_rational(self.epsilon),
            "bound": format_rational(self.bound),
            "bound_decimal": format_decimal(self.bound, 6),
            "max_gap": format_rational(self.max_gap),
            "max_gap_decimal": format_decimal(self.max_gap, 6),
            "argmax": [format_rational(c) for c in self.argmax],
            "samples": len(self.certificates),
            "failures": self.failures,
            "sharp": self.sharp,
            "passed": self.passed,
        }


def verify_decomposition(s: SampleSet) -> DecompositionReport:
    """Check ``g <= f <= g + kappa*eps`` and ``|f - g0| <= kappa*eps/2`` at every sample."""
    # Work with f / eps against kappa, as the bound scales linearly in eps.
    unit = SampleSet(s.n, [(x, y / s.epsilon) for x, y in s.points], 1, s.B)
    bound = unit.bound
    half = bound / 2
    certs = []
    failures = []
    max_gap = None
    argmax = None
    for x, y in unit.points:
        g, weights = envelope_at(unit, x)
        gap = y - g
        label = "(" + ", ".join(format_rational(c) for c in x) + ")"
        if gap < 0:
            failures.append(f"g > f at {label}")
        if gap > bound:
            failures.append(f"f - g = {format_rational(gap * s.epsilon)} exceeds the bound at {label}")
        if abs(y - (g + half)) > half:
            failures.append(f"|f - g0| exceeds half the bound at {label}")
        if max_gap is None or gap > max_gap:
            max_gap, argmax = gap, x
        certs.append(
            EnvelopeCertificate(
                x,
                g * s.epsilon,
                weights,
                bound * s.epsilon,
                y * s.epsilon,
            )
        )
    return DecompositionReport(
        s.n, s.B, s.epsilon, bound * s.epsilon, max_gap * s.epsilon, argmax, certs, failures
    )


def simplex_grid(n: int, d: int) -> list[SimplexPoint]:
    """All points of the n-simplex whose coordinates are multiples of 1/d."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    out = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == n:
            out.append(SimplexPoint([Fraction(p, d) for p in prefix + [left]]))
            return
        for p in range(left, -1, -1):
            rec(prefix + [p], left - p)

    rec([], d)
    return out


def extremal_samples(n: int, B: int, d: int, epsilon: RationalLike = 1) -> SampleSet:
    """Samples of ``eps * E`` on the denominator-d grid, embedded by dropping x(n)."""
    eps = to_rational(epsilon)
    pts = [(p.embed(), eps * E(p, B)) for p in simplex_grid(n, d)]
    return SampleSet(n, pts, eps, B)


def best_constant_witness(n: int, B: int = 2, d: Optional[int] = None) -> DecompositionReport:
    """Run the decomposition on samples of E and test that the gap reaches kappa(n, B)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if d is None:
        d = n + 1
    if d < n + 1 or d % (n + 1):
        raise ValueError(f"grid denominator {d} must be a positive multiple of n + 1 = {n + 1}")
    report = verify_decomposition(extremal_samples(n, B, d))
    report.sharp = report.max_gap == kappa(n, B)
    return report
