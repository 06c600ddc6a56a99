import random
from fractions import Fraction

import pytest

from approxconvex import checks
from approxconvex.checks import (
    Evaluator,
    EvaluatorError,
    check_approx_convex,
    check_concave,
    check_dominance,
    check_sandwich,
    constant_evaluator,
    entropy_evaluator,
    extremal_evaluator,
    linear_evaluator,
    random_simplex_point,
    sandwich_slack,
)
from approxconvex.extremal import E
from approxconvex.numerics import barycenter, convex_combination, vertex

TRIALS = 1500


def test_extremal_is_approximately_convex():
    r = check_approx_convex(extremal_evaluator(2), B=2, n=2, trials=TRIALS, seed=0)
    assert r.passed and r.violations == 0 and r.worst_slack >= 0


def test_zero_function_has_slack_one():
    r = check_approx_convex(constant_evaluator(0), B=3, n=2, trials=200, seed=3)
    assert r.violations == 0 and r.worst_slack == 1


def test_doubled_extremal_fails():
    # 2E(1/2,1/2,0) = 2 but the vertex decomposition only allows 0 + 1.
    x = convex_combination([vertex(2, 0), vertex(2, 1)], [Fraction(1, 2)] * 2)
    assert 2 * E(x, 2) > 1
    r = check_approx_convex(extremal_evaluator(2, scale=2), B=2, n=2, trials=TRIALS, seed=0)
    assert r.violations > 0
    assert len(r.counterexamples) == checks.MAX_COUNTEREXAMPLES
    assert r.worst_slack < 0


def test_concavity_suites():
    assert check_concave(extremal_evaluator(2), n=3, trials=TRIALS, seed=0).passed
    r = check_concave(linear_evaluator([1, 2, 5]), n=2, trials=300, seed=1)
    assert r.violations == 0 and r.worst_slack == 0
    assert check_concave(entropy_evaluator(2), n=2, trials=TRIALS, seed=0).passed


def test_convex_function_fails_concavity():
    sq = Evaluator(lambda x: sum(c * c for c in x), True, "sumsq")
    assert check_concave(sq, n=2, trials=500, seed=0).violations > 0


def test_dominance():
    assert check_dominance(entropy_evaluator(2), B=2, n=2, trials=TRIALS, seed=0).passed
    r = check_dominance(constant_evaluator(-1), B=3, n=3, trials=300, seed=0)
    assert r.passed and r.worst_slack >= 1
    r = check_dominance(extremal_evaluator(2), B=2, n=2, trials=300, seed=0)
    assert r.passed and r.worst_slack == 0
    assert r.assumptions


def test_dominance_rejects_positive_vertices():
    with pytest.raises(ValueError):
        check_dominance(constant_evaluator(1), B=2, n=2, trials=10, seed=0)


def test_sandwich():
    assert check_sandwich(B=2, n=3, trials=TRIALS, seed=0).passed
    assert 0 <= sandwich_slack(barycenter(2), 2)
    assert sandwich_slack(vertex(2, 0), 2) == 0.0


def test_reports_are_reproducible():
    a = check_approx_convex(extremal_evaluator(3), B=3, n=2, trials=300, seed=11)
    b = check_approx_convex(extremal_evaluator(3), B=3, n=2, trials=300, seed=11)
    assert a.to_json() == b.to_json()
    c = check_approx_convex(extremal_evaluator(3), B=3, n=2, trials=300, seed=12)
    assert c.to_json() != a.to_json()


def test_sampler_covers_every_support_size():
    n = 4
    sizes = set()
    for i in range(50):
        rng = checks.trial_rng(0, "cover", i)
        p = random_simplex_point(rng, n, checks._stratum(i, n))
        sizes.add(len(p.support))
        assert all(c.denominator <= checks.MAX_DENOMINATOR for c in p)
    assert sizes == set(range(1, n + 2))


def test_evaluator_failure_carries_input():
    def boom(x):
        raise ZeroDivisionError("nope")

    with pytest.raises(EvaluatorError) as info:
        check_concave(Evaluator(boom, True, "boom"), n=2, trials=5, seed=0)
    assert info.value.point is not None


def test_float_mode_tolerance():
    # A float evaluator off by 1e-12 still counts as linear.
    rnd = random.Random(0)
    noisy = Evaluator(lambda x: float(x[0]) + rnd.uniform(-1e-12, 1e-12), False, "noisy")
    assert check_concave(noisy, n=2, trials=300, seed=0).passed


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        check_sandwich(trials=0)
