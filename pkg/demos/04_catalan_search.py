"""
Catalan's equation X^m - Y^n = I
================================

An exhaustive search over small matrices, checked against the known
classification.
"""

# %%
from collections import Counter

from m2zeq.catalan import brute_force_search, catalan_lift, enumerate_integer_eigen
from m2zeq.commutant import make_basis
from m2zeq.quadratic import QuadInt

result = brute_force_search(entry_bound=3, max_exp=6)
print(len(result.solutions), "solutions,", len(result.violations), "violations")
print(Counter((s.m, s.n, s.tag.value) for s in result.solutions))

# %%
# The integer-eigenvalue class is exactly (X, 2I, 4, 3) with tr X = 0, det X = ±3.

print(enumerate_integer_eigen(3) <= result.solutions)

# %%
# Sixth roots of unity give solutions for infinitely many exponent pairs.

basis = make_basis(1, 1, -1)
x, y = QuadInt(1, -1, -3), QuadInt(-1, 1, -3)
for m, n in [(7, 5), (13, 11), (25, 23)]:
    sol = catalan_lift(basis, x, y, m, n)
    print(m, n, sol.X, sol.Y)
