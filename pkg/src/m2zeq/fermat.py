"""The equation ``u X^i + v Y^j = w Z^k`` inside a commutant C(A).

Solutions move between C(A) and the ring of integers of
``Q(sqrt(a^2 + 4bc))``:

* :func:`project` sends a matrix solution to its two eigenvalue triples;
* :func:`lift_general` builds ``X = beta I + alpha A`` from a scalar
  solution whose sqrt(D)-coordinates are divisible by ``m``;
* :func:`lift_uniform` handles equal exponents with no divisibility
  condition by scaling the eigenvalues by ``m``.

:func:`fermat_feasibility` reports what is known about ``X^n + Y^n = Z^n``
in a given commutant.  The explicit families (``family_*``) build matrix
solutions from classical scalar identities and verify every one of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product

from .commutant import (
    CommutantBasis,
    CommutantMember,
    Mat2,
    branch_eigenvalue,
    make_basis,
    membership,
)
from .errors import (
    ContractViolation,
    FamilyConditionError,
    InapplicableError,
    LiftConditionError,
    OutOfScopeError,
)
from .matpow import mat_pow_closed
from .quadratic import QuadInt, is_squarefree, squarefree_decompose

__all__ = [
    "EquationSpec",
    "SolutionTriple",
    "Status",
    "FeasibilityVerdict",
    "equation_holds",
    "scalar_equation_holds",
    "make_triple",
    "project",
    "lift_general",
    "lift_integer",
    "lift_uniform",
    "fermat_feasibility",
    "basis_for_field",
    "burnside_field",
    "family_chien_meng",
    "family_burnside",
    "family_aigner",
    "family_kaddoura",
    "scale_solution",
    "search_fermat",
]


@dataclass(frozen=True)
class EquationSpec:
    u: int
    v: int
    w: int
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.u * self.v * self.w == 0:
            raise ValueError("coefficients u, v, w must be nonzero")
        if math.gcd(self.u, self.v, self.w) != 1:
            raise ValueError("gcd(u, v, w) must be 1")
        if min(self.i, self.j, self.k) < 1:
            raise ValueError("exponents must be positive")

    @classmethod
    def fermat(cls, n: int) -> EquationSpec:
        return cls(1, 1, 1, n, n, n)

    @property
    def uniform(self) -> bool:
        return self.i == self.j == self.k

    def to_record(self) -> dict:
        return {f: str(getattr(self, f)) for f in "uvwijk"}


def equation_holds(spec: EquationSpec, X: Mat2, Y: Mat2, Z: Mat2) -> bool:
    lhs = spec.u * mat_pow_closed(X, spec.i) + spec.v * mat_pow_closed(Y, spec.j)
    return lhs == spec.w * mat_pow_closed(Z, spec.k)


def scalar_equation_holds(spec: EquationSpec, x: QuadInt, y: QuadInt, z: QuadInt) -> bool:
    return spec.u * x**spec.i + spec.v * y**spec.j == spec.w * z**spec.k


@dataclass(frozen=True)
class SolutionTriple:
    """A non-trivial solution ``(X, Y, Z)``; built only via :func:`make_triple`."""

    X: Mat2
    Y: Mat2
    Z: Mat2
    spec: EquationSpec
    basis: CommutantBasis | None = None
    nontrivial: bool = True
    verified: bool = True

    def members(self) -> tuple[CommutantMember, CommutantMember, CommutantMember]:
        if self.basis is None:
            raise InapplicableError("triple carries no commutant basis")
        out = tuple(membership(self.basis, M) for M in (self.X, self.Y, self.Z))
        if None in out:
            raise ContractViolation("triple is not contained in its commutant")
        return out

    def eigenvalue_triples(self):
        return project(*self.members(), self.spec)

    def to_record(self) -> dict:
        rec = {
            "X": str(self.X),
            "Y": str(self.Y),
            "Z": str(self.Z),
            **self.spec.to_record(),
            "basis": None if self.basis is None else self.basis.to_record(),
        }
        if self.basis is not None:
            rec["eigenvalues"] = [
                [e.to_record() for e in triple] for triple in self.eigenvalue_triples()
            ]
        return rec


def make_triple(
    X: Mat2, Y: Mat2, Z: Mat2, spec: EquationSpec, basis: CommutantBasis | None = None
) -> SolutionTriple:
    """Verify ``u X^i + v Y^j = w Z^k`` exactly and package the solution.

    Trivial triples (``det(XYZ) == 0``) are rejected.
    """
    if X.det * Y.det * Z.det == 0:
        raise ContractViolation("trivial triple: det(XYZ) = 0")
    if not equation_holds(spec, X, Y, Z):
        raise ContractViolation(f"{spec} does not hold for X={X}, Y={Y}, Z={Z}")
    if basis is not None and any(membership(basis, M) is None for M in (X, Y, Z)):
        raise ContractViolation(f"triple is not contained in C{basis}")
    return SolutionTriple(X, Y, Z, spec, basis)


# -- transport -----------------------------------------------------------------


def project(
    X: CommutantMember, Y: CommutantMember, Z: CommutantMember, spec: EquationSpec
) -> tuple[tuple[QuadInt, QuadInt, QuadInt], tuple[QuadInt, QuadInt, QuadInt]]:
    """Eigenvalue triples of a solution in C(A), ``+sqrt`` branch first.

    Both triples are checked against the scalar equation.
    """
    basis = X.basis
    if Y.basis != basis or Z.basis != basis:
        raise ContractViolation("X, Y, Z must lie in one commutant")
    if not equation_holds(spec, X.matrix, Y.matrix, Z.matrix):
        raise ContractViolation("input triple does not satisfy the matrix equation")
    triples = tuple(
        tuple(branch_eigenvalue(M, sign) for M in (X, Y, Z)) for sign in (1, -1)
    )
    for tr in triples:
        if not scalar_equation_holds(spec, *tr):
            raise ContractViolation(f"eigenvalue triple {tr} fails the scalar equation")
    return triples


def _check_scalar_input(basis, elems, spec):
    if basis.square:
        raise InapplicableError("lift into a commutant with square discriminant; use lift_integer")
    for e in elems:
        if e.t and e.D != basis.D:
            raise LiftConditionError(f"{e} is not in Q(sqrt({basis.D}))")
        if e.is_zero():
            raise ContractViolation("scalar solution must be non-trivial (xyz != 0)")
    if not scalar_equation_holds(spec, *elems):
        raise ContractViolation(f"scalar identity fails for {elems}")


def lift_general(
    basis: CommutantBasis, x: QuadInt, y: QuadInt, z: QuadInt, spec: EquationSpec
) -> SolutionTriple:
    """Lift a scalar solution ``(s_r + t_r sqrt(D))/2`` with ``m | t_r``.

    ``X_r = beta_r I + alpha_r A`` where ``alpha_r = t_r / m`` and
    ``beta_r = (s_r - alpha_r a) / 2``; the eigenvalues of ``X_r`` are
    ``x_r`` and its conjugate.
    """
    _check_scalar_input(basis, (x, y, z), spec)
    mats = []
    for e in (x, y, z):
        alpha, r = divmod(e.t, basis.m)
        if r:
            raise LiftConditionError(
                f"m={basis.m} does not divide the sqrt(D) coordinate t={e.t} of {e}"
            )
        num = e.s - alpha * basis.a
        assert num % 2 == 0, (basis, e)
        mats.append(basis.member(num // 2, alpha).matrix)
    return make_triple(*mats, spec, basis)


def lift_integer(
    basis: CommutantBasis, x: int, y: int, z: int, spec: EquationSpec
) -> SolutionTriple:
    """Scalar-matrix lift ``(xI, yI, zI)`` of a rational integer solution."""
    elems = [QuadInt.from_int(e) for e in (x, y, z)]
    if not scalar_equation_holds(spec, *elems):
        raise ContractViolation(f"integer identity fails for {(x, y, z)}")
    return make_triple(Mat2.scalar(x), Mat2.scalar(y), Mat2.scalar(z), spec, basis)


def lift_uniform(
    basis: CommutantBasis,
    x: QuadInt,
    y: QuadInt,
    z: QuadInt,
    n: int,
    u: int = 1,
    v: int = 1,
    w: int = 1,
) -> SolutionTriple:
    """Lift a solution of ``u x^n + v y^n = w z^n`` with no divisibility condition.

    ``X_i = alpha_i I + t_i A`` with ``alpha_i = (m s_i - a t_i) / 2``; the
    eigenvalues of ``X_i`` are ``m x_i`` and ``m conj(x_i)``.
    """
    spec = EquationSpec(u, v, w, n, n, n)
    _check_scalar_input(basis, (x, y, z), spec)
    mats = []
    for e in (x, y, z):
        num = basis.m * e.s - basis.a * e.t
        assert num % 2 == 0, (basis, e)
        mats.append(basis.member(num // 2, e.t).matrix)
    return make_triple(*mats, spec, basis)


def scale_solution(B: CommutantMember, triple: SolutionTriple) -> SolutionTriple:
    """``(BX, BY, BZ)``: another solution when all exponents agree."""
    if not triple.spec.uniform:
        raise InapplicableError("scaling needs equal exponents i = j = k")
    if B.basis.square:
        raise InapplicableError("scaling needs a non-square discriminant")
    M = B.matrix
    if M == Mat2(0, 0, 0, 0):
        raise InapplicableError("B must be nonzero")
    basis = triple.basis if triple.basis is not None else B.basis
    return make_triple(M @ triple.X, M @ triple.Y, M @ triple.Z, triple.spec, basis)


# -- known results ---------------------------------------------------------------


class Status(str, Enum):
    NO_SOLUTIONS = "NoSolutions"
    SOLVABLE = "Solvable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    reason: str
    witness: SolutionTriple | None = None

    def to_record(self) -> dict:
        rec = {"status": self.status.value, "citation": self.reason}
        if self.witness is not None:
            rec["witness"] = self.witness.to_record()
        return rec


# Citation tags name the classical result each verdict rests on.
CITE_SQUARE = "rational-integers:fermat-last-theorem"
CITE_N4 = "exponent-4:only-Q(sqrt-7)[Aigner]"
CITE_N6_N9 = "exponent-6-9:no-quadratic-solutions"
CITE_SQRT2 = "Q(sqrt2):n>=4[Jarvis-Meekin]"
CITE_REAL_SMALL = "real-quadratic-3<=D<=23,D!=5,17:n>=4[Freitas-Siksek]"
CITE_WITNESS = "witness:{}"


def fermat_feasibility(basis: CommutantBasis, n: int) -> FeasibilityVerdict:
    """What is known about ``X^n + Y^n = Z^n`` in ``C(basis)`` for ``n >= 3``.

    Only table entries and machine-verified witnesses produce a definite
    answer; everything else is ``Unknown``.
    """
    if n < 3:
        raise OutOfScopeError("feasibility is tabulated for n >= 3 only")
    if basis.square:
        return FeasibilityVerdict(Status.NO_SOLUTIONS, CITE_SQUARE)
    D = basis.D
    if n == 4:
        if D == -7:
            return FeasibilityVerdict(Status.SOLVABLE, CITE_N4, family_aigner(basis))
        return FeasibilityVerdict(Status.NO_SOLUTIONS, CITE_N4)
    if n in (6, 9):
        return FeasibilityVerdict(Status.NO_SOLUTIONS, CITE_N6_N9)
    if n >= 4 and D == 2:
        return FeasibilityVerdict(Status.NO_SOLUTIONS, CITE_SQRT2)
    if n >= 4 and 3 <= D <= 23 and D not in (5, 17):
        return FeasibilityVerdict(Status.NO_SOLUTIONS, CITE_REAL_SMALL)
    witness = _find_witness(basis, n)
    if witness is not None:
        name, triple = witness
        return FeasibilityVerdict(Status.SOLVABLE, CITE_WITNESS.format(name), triple)
    return FeasibilityVerdict(Status.UNKNOWN, "no-applicable-result")


_BURNSIDE_K_RANGE = range(-60, 61)


def _find_witness(basis, n):
    D = basis.D
    if n == 3 and D == 5:
        return "chien-meng", family_chien_meng(basis)
    if D == -3 and n % 6 in (1, 5):
        return "kaddoura-mourad", family_kaddoura(1, 0, basis, n)
    if n == 3:
        for k in _BURNSIDE_K_RANGE:
            if k not in (0, -1) and burnside_field(k)[1] == D:
                return "burnside", family_burnside(k, basis)
    return None


# -- explicit families ----------------------------------------------------------------


def basis_for_field(D: int, t: int = 1) -> CommutantBasis:
    """A primitive basis with ``a^2 + 4bc = m^2 D`` for squarefree ``D != 1``."""
    if D == 1 or not is_squarefree(D):
        raise FamilyConditionError(f"D={D} must be squarefree and != 1")
    if t < 1:
        raise FamilyConditionError("t must be positive")
    r = D % 4
    k = (D - r) // 4
    if r == 1:
        basis = make_basis(t, 1, k * t * t)
    elif r == 2:
        basis = make_basis(2 * t, 1, t * t * (1 + 4 * k))
    else:
        basis = make_basis(2 * t, 1, 2 * t * t * (1 + 2 * k))
    assert basis.D == D
    return basis


def _require_field(basis: CommutantBasis, D: int, family: str):
    if basis.square or basis.D != D:
        raise FamilyConditionError(
            f"{family} needs a^2 + 4bc = m^2 * ({D}); basis {basis} has delta={basis.delta}"
        )


def _half(n: int) -> int:
    assert n % 2 == 0
    return n // 2


def family_chien_meng(basis: CommutantBasis) -> SolutionTriple:
    """Cubes from ``((11+3√5)/2)^3 + (8+3√5)^3 = (9+3√5)^3``."""
    _require_field(basis, 5, "chien-meng")
    a, b, c, m = basis.a, basis.b, basis.c, basis.m
    X = Mat2(_half(11 * m + 3 * a), 3 * b, 3 * c, _half(11 * m - 3 * a))
    Y = Mat2(8 * m + 3 * a, 6 * b, 6 * c, 8 * m - 3 * a)
    Z = Mat2(9 * m + 3 * a, 6 * b, 6 * c, 9 * m - 3 * a)
    return make_triple(X, Y, Z, EquationSpec.fermat(3), basis)


def burnside_field(k: int) -> tuple[int, int]:
    """``(t, D)`` with ``-3(1 + 4k^3) = t^2 D``."""
    if k in (0, -1):
        raise FamilyConditionError("burnside family needs k not in {0, -1}")
    return squarefree_decompose(-3 * (1 + 4 * k**3))


def family_burnside(k: int, basis: CommutantBasis | None = None) -> SolutionTriple:
    """Cubes from ``(-3 + sqrt(-3(1+4k^3)))^3 + (-3 - ...)^3 = (6k)^3``."""
    t, D = burnside_field(k)
    if basis is None:
        basis = basis_for_field(D)
    _require_field(basis, D, f"burnside(k={k})")
    a, b, c, m = basis.a, basis.b, basis.c, basis.m
    X = Mat2(-3 * m + a * t, 2 * t * b, 2 * t * c, -3 * m - a * t)
    Y = Mat2(-3 * m - a * t, -2 * t * b, -2 * t * c, -3 * m + a * t)
    Z = Mat2.scalar(6 * m * k)
    return make_triple(X, Y, Z, EquationSpec.fermat(3), basis)


def family_aigner(basis: CommutantBasis) -> SolutionTriple:
    """Fourth powers from ``((1+√-7)/2)^4 + ((1-√-7)/2)^4 = 1``."""
    _require_field(basis, -7, "aigner")
    a, b, c, m = basis.a, basis.b, basis.c, basis.m
    X = Mat2(_half(m + a), b, c, _half(m - a))
    Y = Mat2(_half(m - a), -b, -c, _half(m + a))
    return make_triple(X, Y, Mat2.scalar(m), EquationSpec.fermat(4), basis)


def family_kaddoura(r: int, s: int, basis: CommutantBasis, n: int) -> SolutionTriple:
    """Exponents ``n = 6k+1, 6k+5`` over ``Q(sqrt(-3))``.

    Eigenvalues ``(2s-r+r√-3)/2``, ``(2r-s-s√-3)/2`` and
    ``(r+s+(r-s)√-3)/2``, which are killed by ``xy + x^2 + y^2``.
    """
    if r == 0 and s == 0:
        raise FamilyConditionError("r and s must not both be zero")
    if n < 1 or n % 6 not in (1, 5):
        raise FamilyConditionError(f"n={n} must be congruent to 1 or 5 mod 6")
    _require_field(basis, -3, "kaddoura-mourad")
    a, b, c, m = basis.a, basis.b, basis.c, basis.m
    p, q = 2 * s - r, 2 * r - s
    X = Mat2(_half(m * p + a * r), r * b, r * c, _half(m * p - a * r))
    Y = Mat2(_half(m * q - a * s), -s * b, -s * c, _half(m * q + a * s))
    Z = Mat2(
        _half(m * (r + s) + a * (r - s)),
        (r - s) * b,
        (r - s) * c,
        _half(m * (r + s) - a * (r - s)),
    )
    return make_triple(X, Y, Z, EquationSpec.fermat(n), basis)


# -- bounded search oracle -----------------------------------------------------------


def search_fermat(
    basis: CommutantBasis, spec: EquationSpec, bound: int
) -> list[tuple[CommutantMember, CommutantMember, CommutantMember]]:
    """All non-trivial solutions among members ``xI + tA`` with ``|x|, |t| <= bound``."""
    rng = range(-bound, bound + 1)
    members = [basis.member(x, t) for x, t in product(rng, rng)]
    members = [M for M in members if M.matrix.det != 0]
    by_zk: dict[Mat2, list[CommutantMember]] = {}
    for Z in members:
        by_zk.setdefault(spec.w * mat_pow_closed(Z.matrix, spec.k), []).append(Z)
    xi = [(X, spec.u * mat_pow_closed(X.matrix, spec.i)) for X in members]
    yj = [(Y, spec.v * mat_pow_closed(Y.matrix, spec.j)) for Y in members]
    hits = []
    for X, px in xi:
        for Y, py in yj:
            for Z in by_zk.get(px + py, ()):
                hits.append((X, Y, Z))
    return hits

