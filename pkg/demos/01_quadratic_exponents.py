"""
Quadratic integers and their exponents
======================================

Elements of a quadratic ring are stored in half-coordinates ``(s + t√D)/2``.
The exponent of ``x`` is the least power that lands in ℤ.
"""

# %%
# Building elements
# -----------------

from m2zeq.quadratic import QuadInt, exponent, omega, parse_quadint, squarefree_decompose

phi = QuadInt(1, 1, 5)  # the golden ratio
print(phi, "norm", phi.norm(), "trace", phi.trace())

x = parse_quadint("8+3√5")
print(x, "==", QuadInt.from_xy(8, 3, 5), x == QuadInt.from_xy(8, 3, 5))

print("72 =", "%d^2 * %d" % squarefree_decompose(72))

# %%
# Exponents
# ---------
# Only 1, 2, 3, 4, 6 and infinity can occur.

for elem in (QuadInt(0, 6, 2), 2 * omega(), QuadInt(2, 2, -1), QuadInt(3, -1, -3), QuadInt(2, 2, 2)):
    print(f"E({elem}) = {exponent(elem)}")

# %%
# A quick sanity check against repeated multiplication.

w = 1 - omega()
print([str(w**n) for n in range(1, 7)])
