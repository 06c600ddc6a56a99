"""Exact extremal approximately convex functions on the simplex.

A function f on the n-simplex is approximately convex with respect to the
(B-1)-simplex when ``f(sum t_i x_i) <= sum t_i f(x_i) + 1`` for every
B-point convex combination.  This package evaluates the largest such function
vanishing at the vertices, its maximum kappa(n, B), and the convex-minorant
decomposition whose slack kappa(n, B) cannot be improved.
"""
from .checks import (
    Evaluator,
    TrialReport,
    check_approx_convex,
    check_concave,
    check_dominance,
    check_sandwich,
)
from .extremal import (
    E,
    EvalResult,
    LinearPiece,
    combine_witnesses,
    entropy_F,
    eval_E,
    eval_E_oracle,
    explicit_E_n2,
    kappa,
    surface_grid,
)
from .kraft import (
    ExponentTuple,
    ExtremeTupleSet,
    enumerate_extreme,
    eta,
    is_feasible,
    is_minimal,
    kraft_weight,
    partition_tuple,
)
from .numerics import SimplexPoint, barycenter, convex_combination, vertex
from .stability import (
    OutsideHullError,
    SampleSet,
    best_constant_witness,
    envelope_at,
    verify_decomposition,
)

__version__ = "0.1.0"
