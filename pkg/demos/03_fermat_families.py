"""
Fermat's equation over 2x2 integer matrices
===========================================

Scalar solutions in a quadratic ring lift to matrix solutions inside a
commutant. We reproduce the classical families and ask what is known for
other exponents.
"""

# %%
# Lifting a scalar identity
# -------------------------

from m2zeq.commutant import make_basis
from m2zeq.fermat import EquationSpec, lift_general, lift_uniform
from m2zeq.quadratic import QuadInt

x, y, z = QuadInt(11, 3, 5), QuadInt.from_xy(8, 3, 5), QuadInt.from_xy(9, 3, 5)
print("x^3 + y^3 == z^3:", x**3 + y**3 == z**3)

triple = lift_uniform(make_basis(1, 1, 1), x, y, z, 3)
print(triple.X, triple.Y, triple.Z)

a = QuadInt(1, 1, -7)
aig = lift_general(make_basis(1, 1, -2), a, a.conj(), QuadInt.from_int(1, -7), EquationSpec.fermat(4))
print("fourth powers:", aig.X, aig.Y, aig.Z)

# %%
# Families
# --------

from m2zeq.fermat import family_burnside, family_kaddoura, scale_solution

for k in (1, 2, 3):
    t = family_burnside(k)
    print(f"k={k}: basis {t.basis}, Z = {t.Z}")

kad = family_kaddoura(2, 1, make_basis(1, -1, 1), 11)
print("n=11:", kad.X, kad.Y, kad.Z)

# multiplying by any member of the commutant gives another solution
bigger = scale_solution(triple.basis.member(2, 1), triple)
print(bigger.X, bigger.Y, bigger.Z, bigger.verified)

# %%
# Feasibility
# -----------

from m2zeq.fermat import fermat_feasibility

for abc, n in [((2, 1, 1), 5), ((1, 1, 1), 4), ((1, 1, -2), 4), ((1, 1, 1), 3), ((1, 1, 1), 5)]:
    v = fermat_feasibility(make_basis(*abc), n)
    print(abc, n, v.status.value, v.reason)
