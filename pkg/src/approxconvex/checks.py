"""Randomised verification of the inequalities satisfied by E.

Every checker draws rational points from bounded-denominator grids on the
simplex, evaluates both sides of an inequality and reports the tightest
margin it saw.  For exact evaluators the comparison is exact, so a report
with no violations proves the inequality on every sampled instance.  Float
evaluators are compared with the tolerance ``FLOAT_TOL``.

Each trial draws from its own random stream derived from ``(seed, suite,
trial)``, so reports are reproducible byte for byte.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from .extremal import E, entropy_F
from .numerics import (
    SimplexPoint,
    convex_combination,
    format_rational,
    vertex,
)

FLOAT_TOL = 1e-9
MAX_DENOMINATOR = 64
MAX_COUNTEREXAMPLES = 10

Scalar = Union[Fraction, float]


class EvaluatorError(RuntimeError):
    """An evaluator raised; ``point`` is the input it failed on."""

    def __init__(self, name: str, point: SimplexPoint, cause: BaseException):
        super().__init__(f"evaluator {name!r} failed at {point}: {cause}")
        self.point = point


@dataclass(frozen=True)
class Evaluator:
    """A function on the simplex, declared exact (Fraction) or floating."""

    fn: Callable[[SimplexPoint], Any]
    exact: bool = True
    name: str = "f"

    def __call__(self, x: SimplexPoint) -> Scalar:
        try:
            value = self.fn(x)
        except Exception as exc:
            raise EvaluatorError(self.name, x, exc) from exc
        return Fraction(value) if self.exact else float(value)


def extremal_evaluator(B: int = 2, scale: Fraction | int = 1) -> Evaluator:
    scale = Fraction(scale)
    name = "E" if scale == 1 else f"{format_rational(scale)}*E"
    return Evaluator(lambda x: scale * E(x, B), True, name)


def entropy_evaluator(B: int = 2) -> Evaluator:
    return Evaluator(lambda x: entropy_F(x, B), False, "F")


def constant_evaluator(c: Fraction | int) -> Evaluator:
    c = Fraction(c)
    return Evaluator(lambda x: c, True, f"const({format_rational(c)})")


def linear_evaluator(coeffs) -> Evaluator:
    cs = [Fraction(c) for c in coeffs]
    return Evaluator(
        lambda x: sum((a * b for a, b in zip(cs, x)), Fraction(0)), True, "linear"
    )


@dataclass
class TrialReport:
    suite: str
    trials: int
    seed: int
    violations: int = 0
    worst_slack: Optional[Scalar] = None
    counterexamples: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, slack: Scalar, violated: bool, inputs: dict) -> None:
        if self.worst_slack is None or slack < self.worst_slack:
            self.worst_slack = slack
        if violated:
            self.violations += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append({**inputs, "slack": _render(slack)})

    def to_dict(self) -> dict:
        worst = self.worst_slack
        return {
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "violations": self.violations,
            "worst_slack": _render(worst) if worst is not None else None,
            "worst_slack_decimal": float(worst) if worst is not None else None,
            "counterexamples": self.counterexamples,
            "assumptions": self.assumptions,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _render(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, SimplexPoint):
        return [format_rational(c) for c in v]
    if isinstance(v, (list, tuple)):
        return [_render(u) for u in v]
    return v


def _violated(slack: Scalar, exact: bool) -> bool:
    return slack < 0 if exact else slack < -FLOAT_TOL


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{trial}")


def random_simplex_point(
    rng: random.Random, n: int, support_size: int, max_den: int = MAX_DENOMINATOR
) -> SimplexPoint:
    """A grid point of the n-simplex with exactly ``support_size`` nonzero coordinates."""
    if not 1 <= support_size <= n + 1:
        raise ValueError(f"support size {support_size} impossible on the {n}-simplex")
    support = rng.sample(range(n + 1), support_size)
    den = rng.randint(max(support_size, 1), max(max_den, support_size))
    cuts = sorted(rng.sample(range(1, den), support_size - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
    coords = [Fraction(0)] * (n + 1)
    for j, p in zip(support, parts):
        coords[j] = Fraction(p, den)
    return SimplexPoint(coords)


def random_rational_unit(rng: random.Random, max_den: int = MAX_DENOMINATOR) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)


def _stratum(trial: int, n: int) -> int:
    return 1 + trial % (n + 1)


def check_approx_convex(
    f: Evaluator, B: int = 2, n: int = 2, trials: int = 10_000, seed: int = 0
) -> TrialReport:
    """Check ``f(sum t_k x_k) <= sum t_k f(x_k) + 1`` over B-point combinations."""
    _require_trials(trials)
    suite = f"approx-convex[{f.name},B={B},n={n}]"
    report = TrialReport(suite, trials, seed)
    for i in range(trials):
        rng = trial_rng(seed, suite, i)
        xs = [random_simplex_point(rng, n, _stratum(i + k, n)) for k in range(B)]
        t = random_simplex_point(rng, B - 1, _stratum(i, B - 1))
        x = convex_combination(xs, t.coords)
        lhs = f(x)
        rhs = sum((tk * f(xk) for tk, xk in zip(t, xs)), Fraction(0) if f.exact else 0.0) + 1
        slack = rhs - lhs
        report.record(slack, _violated(slack, f.exact), {"points": _render(xs), "t": _render(t)})
    return report


def check_concave(
    f: Evaluator, n: int = 2, trials: int = 10_000, seed: int = 0
) -> TrialReport:
    """Check ``f(lam x + (1-lam) y) >= lam f(x) + (1-lam) f(y)``."""
    _require_trials(trials)
    suite = f"concave[{f.name},n={n}]"
    report = TrialReport(suite, trials, seed)
    for i in range(trials):
        rng = trial_rng(seed, suite, i)
        x = random_simplex_point(rng, n, _stratum(i, n))
        y = random_simplex_point(rng, n, _stratum(i // (n + 1), n))
        lam = random_rational_unit(rng)
        z = convex_combination([x, y], [lam, 1 - lam])
        if f.exact:
            slack = f(z) - (lam * f(x) + (1 - lam) * f(y))
        else:
            slack = f(z) - (float(lam) * f(x) + float(1 - lam) * f(y))
        report.record(slack, _violated(slack, f.exact), {"x": _render(x), "y": _render(y), "lambda": _render(lam)})
    return report


def check_dominance(
    h: Evaluator, B: int = 2, n: int = 2, trials: int = 10_000, seed: int = 0
) -> TrialReport:
    """Check ``h(x) <= E(x)`` for h nonpositive at the vertices.

    Approximate convexity of h is the caller's claim, not something this
    checker can verify; the report lists it under ``assumptions``.
    """
    _require_trials(trials)
    for j in range(n + 1):
        hv = h(vertex(n, j))
        bad = hv > 0 if h.exact else hv > FLOAT_TOL
        if bad:
            raise ValueError(f"{h.name}(e({j})) = {hv} is positive; dominance needs h <= 0 at vertices")
    suite = f"dominance[{h.name},B={B},n={n}]"
    report = TrialReport(
        suite, trials, seed,
        assumptions=[f"{h.name} is approximately convex with respect to the {B - 1}-simplex"],
    )
    for i in range(trials):
        rng = trial_rng(seed, suite, i)
        x = random_simplex_point(rng, n, _stratum(i, n))
        e = E(x, B)
        slack = e - h(x) if h.exact else float(e) - h(x)
        report.record(slack, _violated(slack, h.exact), {"x": _render(x)})
    return report


def sandwich_slack(x: SimplexPoint, B: int = 2) -> float:
    """``min(E - F, F + 1 - E)`` at x; nonnegative when ``F <= E <= F + 1``."""
    e = float(E(x, B))
    f = entropy_F(x, B)
    return min(e - f, f + 1 - e)


def check_sandwich(B: int = 2, n: int = 2, trials: int = 10_000, seed: int = 0) -> TrialReport:
    """Check ``F(x) <= E(x) <= F(x) + 1`` with entropy F."""
    _require_trials(trials)
    suite = f"sandwich[B={B},n={n}]"
    report = TrialReport(suite, trials, seed)
    for i in range(trials):
        rng = trial_rng(seed, suite, i)
        x = random_simplex_point(rng, n, _stratum(i, n))
        slack = sandwich_slack(x, B)
        report.record(slack, _violated(slack, False), {"x": _render(x)})
    return report


def _require_trials(trials: int) -> None:
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
