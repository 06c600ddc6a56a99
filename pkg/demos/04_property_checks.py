"""Randomised checks of the inequalities satisfied by E."""
from approxconvex import checks

for B in (2, 3):
    ev = checks.extremal_evaluator(B)
    for rep in (
        checks.check_approx_convex(ev, B, 2, 2000, 0),
        checks.check_concave(ev, 2, 2000, 0),
        checks.check_dominance(checks.entropy_evaluator(B), B, 2, 2000, 0),
        checks.check_sandwich(B, 2, 2000, 0),
    ):
        print(f"B={B} {rep.suite:<16} violations={rep.violations} worst slack={float(rep.worst_slack):.4f}")

# Doubling E breaks approximate convexity; the report keeps counterexamples.
bad = checks.check_approx_convex(checks.extremal_evaluator(2, scale=2), 2, 2, 2000, 0)
print("2E violations:", bad.violations)
print("first counterexample:", bad.counterexamples[0])
