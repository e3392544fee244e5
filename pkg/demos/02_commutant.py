"""
Commutants of 2x2 integer matrices
==================================

Matrices commuting with ``A`` form the ring ``{xI + tB}`` where ``B`` is the
primitive traceless-shifted part of ``A``.
"""

# %%
from m2zeq.commutant import Mat2, normalize, membership, zero_divisor_witness, eigenvalues_of_member

A = Mat2(7, 3, 3, 4)
basis = normalize(A)
print("basis", basis, "delta", basis.delta, "= %d^2 * %d" % (basis.m, basis.D))
print("integral domain:", basis.is_integral_domain)

# %%
# Membership and eigenvalues
# --------------------------

Z = Mat2(12, 6, 6, 6)
member = membership(basis, Z)
print(Z, "->", member, "eigenvalues", *map(str, eigenvalues_of_member(member)))
print(Mat2(1, 2, 1, 0), "in C(A)?", membership(basis, Mat2(1, 2, 1, 0)) is not None)

# %%
# Square discriminant
# -------------------
# With ``delta`` a perfect square the ring has zero divisors.

sq = normalize(Mat2(3, 1, -2, 0))
B1, B2 = zero_divisor_witness(sq)
print(B1, "@", B2, "=", B1 @ B2)

# %%
# Closed-form powers
# ------------------

from m2zeq.matpow import mat_pow_closed, mat_pow_naive

M = Mat2(11, 6, 6, 5)
print(mat_pow_closed(M, 3), mat_pow_closed(M, 200) == mat_pow_naive(M, 200))
