"""Convex minorant of grid samples of E and the sharp stability gap."""
from fractions import Fraction as F

from approxconvex.stability import best_constant_witness, certify, extremal_samples

s = extremal_samples(2, 2, 6, epsilon=F(1, 2))
c = certify(s, (F(1, 3), F(1, 3)))
print("f at barycenter ", c.f_value)
print("convex minorant ", c.g_value)
print("gap / bound     ", c.gap, "/", c.bound)

# On the d=12 grid the largest gap equals kappa(2, 2) = 5/3.
rep = best_constant_witness(2, 2, 12)
print("max gap", rep.max_gap, "at", [str(v) for v in rep.argmax], "sharp:", rep.sharp)
