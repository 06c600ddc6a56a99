"""Walk through the extremal function E on the 2-simplex."""
from fractions import Fraction as F

from approxconvex.extremal import E, eval_E, eval_E_oracle, explicit_E_n2, entropy_F
from approxconvex.numerics import SimplexPoint, barycenter, vertex

# E vanishes at the vertices and equals 1 on the open edges.
print("vertex       ", E(vertex(2, 0), 2))
print("edge midpoint", E([F(1, 2), F(1, 2), 0], 2))

# At the barycenter the minimising tuple is (2, 2, 1).
r = eval_E(barycenter(2), 2)
print("barycenter   ", r.value, "witness", r.witness.exponents)

# Interior points agree with min{1+x+y, 2-x, 2-y}.
for x, y in [(F(1, 5), F(1, 7)), (F(1, 2), F(1, 4)), (F(3, 10), F(3, 5))]:
    p = SimplexPoint([x, y, 1 - x - y])
    print(f"({x}, {y}):", E(p, 2), explicit_E_n2(x, y), eval_E_oracle(p, 2))

# E sits between the entropy F and F + 1.
p = SimplexPoint([F(1, 10), F(3, 10), F(6, 10)])
print("F <= E <= F+1:", round(entropy_F(p, 2), 6), E(p, 2), round(entropy_F(p, 2) + 1, 6))

# Base 3 on the same point.
print("B=3 barycenter", E(barycenter(2), 3))
