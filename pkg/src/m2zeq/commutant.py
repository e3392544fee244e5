"""2x2 integer matrices and the commutant ring C(A) = {B : AB = BA}.

For ``A = [[a, b], [c, d]]`` with ``bc != 0`` the commutant only depends on
the normalized triple ``((a-d)/g, b/g, c/g)``, ``g = gcd(a-d, b, c)``.  With
``A`` normalized to ``[[a, b], [c, 0]]`` every member is ``xI + tA`` and the
eigenvalues of a member are ``(2x + ta +- t*sqrt(a^2 + 4bc)) / 2``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import UnsupportedMatrixError
from .quadratic import QuadInt, isqrt_exact, squarefree_decompose

__all__ = [
    "Mat2",
    "I2",
    "O2",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_trace",
    "mat_det",
    "parse_matrix",
    "mat_eigenvalues",
    "CommutantBasis",
    "CommutantMember",
    "make_basis",
    "normalize",
    "membership",
    "has_zero_divisors",
    "zero_divisor_witness",
    "eigenvalues_of_member",
    "branch_eigenvalue",
]


class Mat2(NamedTuple):
    """``[[a11, a12], [a21, a22]]`` with arbitrary-precision entries."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def scalar(cls, x: int) -> Mat2:
        return cls(x, 0, 0, x)

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (p, q), (r, s) = rows
        return cls(int(p), int(q), int(r), int(s))

    def rows(self) -> list[list[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    # NamedTuple defines + and * as tuple concatenation/repetition; override
    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return mat_scale(self, -1)

    def __mul__(self, k):
        return mat_scale(self, k)

    __rmul__ = __mul__

    @property
    def trace(self) -> int:
        return self.a11 + self.a22

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def disc(self) -> int:
        """Discriminant ``tr^2 - 4 det`` of the characteristic polynomial."""
        return self.trace**2 - 4 * self.det

    def is_scalar(self) -> bool:
        return self.a12 == 0 and self.a21 == 0 and self.a11 == self.a22

    def commutes_with(self, other: Mat2) -> bool:
        return mat_mul(self, other) == mat_mul(other, self)

    def __str__(self):
        return f"[[{self.a11},{self.a12}],[{self.a21},{self.a22}]]"


I2 = Mat2(1, 0, 0, 1)
O2 = Mat2(0, 0, 0, 0)


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a11 * B.a11 + A.a12 * B.a21,
        A.a11 * B.a12 + A.a12 * B.a22,
        A.a21 * B.a11 + A.a22 * B.a21,
        A.a21 * B.a12 + A.a22 * B.a22,
    )


def mat_add(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(A.a11 + B.a11, A.a12 + B.a12, A.a21 + B.a21, A.a22 + B.a22)


def mat_sub(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(A.a11 - B.a11, A.a12 - B.a12, A.a21 - B.a21, A.a22 - B.a22)


def mat_scale(A: Mat2, k: int) -> Mat2:
    return Mat2(k * A.a11, k * A.a12, k * A.a21, k * A.a22)


def mat_trace(A: Mat2) -> int:
    return A.trace


def mat_det(A: Mat2) -> int:
    return A.det


_INT = r"\s*([+-]?\d+)\s*"
_MATRIX_RE = re.compile(
    r"\s*\[\s*\[" + _INT + "," + _INT + r"\]\s*,\s*\[" + _INT + "," + _INT + r"\]\s*\]\s*"
)


def parse_matrix(text: str) -> Mat2:
    """Parse the literal ``[[a,b],[c,d]]`` (whitespace allowed)."""
    mt = _MATRIX_RE.fullmatch(text)
    if mt is None:
        raise ValueError(f"malformed matrix literal {text!r}; expected [[a,b],[c,d]]")
    return Mat2(*(int(g) for g in mt.groups()))


def mat_eigenvalues(M: Mat2) -> tuple[QuadInt, QuadInt]:
    """Eigenvalues of an arbitrary integer matrix as elements of one O_K.

    Integer eigenvalues come back in the rational case (``D == 1``), larger
    one first; otherwise the ``+sqrt(D)`` root comes first.
    """
    disc = M.disc
    root = isqrt_exact(disc)
    if root is not None:
        return QuadInt(M.trace + root, 0, 1), QuadInt(M.trace - root, 0, 1)
    m, D = squarefree_decompose(disc)
    return QuadInt(M.trace, m, D), QuadInt(M.trace, -m, D)


@dataclass(frozen=True)
class CommutantBasis:
    """Normalized generator ``A = [[a, b], [c, 0]]`` of a commutant ring.

    ``delta = a^2 + 4bc``.  When ``delta`` is a perfect square, ``square`` is
    set and ``root`` holds its nonnegative square root (``m`` and ``D`` are
    None).  Otherwise ``delta == m**2 * D`` with ``D`` squarefree, ``D != 1``.
    """

    a: int
    b: int
    c: int
    delta: int
    square: bool
    root: int | None
    m: int | None
    D: int | None

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.a, self.b, self.c, 0)

    @property
    def is_integral_domain(self) -> bool:
        return not self.square

    @property
    def has_nilpotents(self) -> bool:
        return self.delta == 0

    def member(self, x: int, t: int) -> CommutantMember:
        return CommutantMember(x, t, self)

    def to_record(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "delta": str(self.delta),
            "m": None if self.m is None else str(self.m),
            "D": None if self.D is None else str(self.D),
            "square": self.square,
        }

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def make_basis(a: int, b: int, c: int) -> CommutantBasis:
    """Validate an already-normalized triple and attach its discriminant data."""
    if b * c == 0:
        raise UnsupportedMatrixError("basis requires b*c != 0")
    if math.gcd(a, b, c) != 1:
        raise ValueError(f"basis ({a},{b},{c}) is not primitive: gcd != 1")
    delta = a * a + 4 * b * c
    root = isqrt_exact(delta)
    if root is not None:
        return CommutantBasis(a, b, c, delta, True, root, None, None)
    m, D = squarefree_decompose(delta)
    return CommutantBasis(a, b, c, delta, False, None, m, D)


def normalize(A: Mat2) -> CommutantBasis:
    """Return the basis of ``C(A)``: ``(A - dI)/g`` with ``g = gcd(a-d, b, c)``."""
    a, b, c, d = A
    if b * c == 0:
        raise UnsupportedMatrixError(
            f"normalize requires a12*a21 != 0, got {A}"
        )
    g = math.gcd(a - d, b, c)
    return make_basis((a - d) // g, b // g, c // g)


@dataclass(frozen=True)
class CommutantMember:
    """The matrix ``xI + tA`` of ``C(A)``."""

    x: int
    t: int
    basis: CommutantBasis

    @property
    def matrix(self) -> Mat2:
        B = self.basis
        return Mat2(self.x + self.t * B.a, self.t * B.b, self.t * B.c, self.x)

    def __mul__(self, other: CommutantMember) -> CommutantMember:
        # (x1 + t1 A)(x2 + t2 A) with A^2 = aA + bc I
        B = self.basis
        if other.basis != B:
            raise ValueError("members of different commutants")
        x1, t1, x2, t2 = self.x, self.t, other.x, other.t
        return CommutantMember(
            x1 * x2 + t1 * t2 * B.b * B.c,
            x1 * t2 + t1 * x2 + t1 * t2 * B.a,
            B,
        )


def membership(basis: CommutantBasis, M: Mat2) -> CommutantMember | None:
    """Write ``M`` as ``xI + tA`` if it commutes with ``A``, else None."""
    t, r = divmod(M.a12, basis.b)
    if r or M.a21 != t * basis.c:
        return None
    x = M.a22
    if M.a11 != x + t * basis.a:
        return None
    return CommutantMember(x, t, basis)


def has_zero_divisors(basis: CommutantBasis) -> bool:
    return basis.square


def zero_divisor_witness(basis: CommutantBasis) -> tuple[Mat2, Mat2] | None:
    """Nonzero ``B1, B2`` in C(A) with ``B1 @ B2 == O`` when delta is a square."""
    if not basis.square:
        return None
    k = basis.root
    # a and k share parity since a^2 + 4bc = k^2
    x1, x2 = (-basis.a + k) // 2, (-basis.a - k) // 2
    return basis.member(x1, 1).matrix, basis.member(x2, 1).matrix


def branch_eigenvalue(member: CommutantMember, sign: int = 1) -> QuadInt:
    """Eigenvalue ``(2x + ta + sign * t * sqrt(delta)) / 2`` of a member.

    For square ``delta`` the result is a rational integer (``D == 1``).
    """
    B = member.basis
    s = 2 * member.x + member.t * B.a
    if B.square:
        return QuadInt(s + sign * member.t * B.root, 0, 1)
    return QuadInt(s, sign * member.t * B.m, B.D)


def eigenvalues_of_member(member: CommutantMember) -> tuple[QuadInt, QuadInt]:
    """Both eigenvalues; nonnegative sqrt(D) coefficient first.

    A square discriminant is routed to integer eigenvalues (``D == 1``),
    larger first.
    """
    e1, e2 = branch_eigenvalue(member, 1), branch_eigenvalue(member, -1)
    if member.basis.square:
        return (e1, e2) if e1.s >= e2.s else (e2, e1)
    return (e1, e2) if e1.t >= 0 else (e2, e1)
