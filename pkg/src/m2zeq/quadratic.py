"""Exact arithmetic in rings of integers of quadratic fields.

Elements are stored in half-coordinates: ``QuadInt(s, t, D)`` denotes
``(s + t*sqrt(D)) / 2``.  The parity invariant is enforced at construction:

* ``D % 4 == 1``: ``s`` and ``t`` have the same parity;
* ``D % 4 in (2, 3)``: ``s`` and ``t`` are both even.

``D == 1`` is the rational case.  It is accepted only with ``t == 0`` so that
rational integers can be tagged with "no field" and still mix freely with any
quadratic field.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateInputError, IncompatibleFieldError

__all__ = [
    "QuadInt",
    "INFINITE",
    "squarefree_decompose",
    "is_squarefree",
    "isqrt_exact",
    "omega",
    "imag_unit",
    "sqrt_d",
    "exponent",
    "parse_quadint",
]

INFINITE = math.inf


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` into ``m**2 * D`` with ``m >= 1`` and ``D`` squarefree.

    Trial division; fine for desk-scale discriminants.

    >>> squarefree_decompose(8)
    (2, 2)
    >>> squarefree_decompose(-99)
    (3, -11)
    """
    if n == 0:
        raise DegenerateInputError("squarefree_decompose: n must be nonzero")
    sign = -1 if n < 0 else 1
    rem = abs(n)
    m = core = 1
    p = 2
    while p * p <= rem:
        e = 0
        while rem % p == 0:
            rem //= p
            e += 1
        if e:
            m *= p ** (e // 2)
            if e % 2:
                core *= p
        p += 1 if p == 2 else 2
    core *= rem
    return m, sign * core


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return squarefree_decompose(n)[0] == 1


def isqrt_exact(n: int) -> int | None:
    """Return ``r >= 0`` with ``r*r == n``, or None if ``n`` is not a square."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _check_parity(s: int, t: int, D: int) -> bool:
    if D % 4 == 1:
        return (s - t) % 2 == 0
    return s % 2 == 0 and t % 2 == 0


@dataclass(frozen=True, eq=False)
class QuadInt:
    """The algebraic integer ``(s + t*sqrt(D)) / 2``."""

    s: int
    t: int
    D: int

    def __post_init__(self):
        if self.D == 1:
            if self.t != 0:
                raise ValueError("rational case D=1 requires t=0")
            if self.s % 2:
                raise ValueError(f"(s)/2 with s={self.s} is not an integer")
            return
        if not is_squarefree(self.D):
            raise ValueError(f"D={self.D} is not squarefree")
        if not _check_parity(self.s, self.t, self.D):
            raise ValueError(
                f"({self.s}+{self.t}*sqrt({self.D}))/2 is not an algebraic integer"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int, D: int = 1) -> QuadInt:
        return cls(2 * n, 0, D)

    @classmethod
    def from_xy(cls, x: int, y: int, D: int) -> QuadInt:
        """Build ``x + y*sqrt(D)`` (whole coordinates)."""
        return cls(2 * x, 2 * y, D)

    @classmethod
    def from_record(cls, rec: dict) -> QuadInt:
        return cls(int(rec["s"]), int(rec["t"]), int(rec["D"]))

    def to_record(self) -> dict:
        return {"s": str(self.s), "t": str(self.t), "D": str(self.D)}

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational_integer(self) -> bool:
        return self.t == 0

    def is_zero(self) -> bool:
        return self.s == 0 and self.t == 0

    def as_int(self) -> int:
        if self.t:
            raise ValueError(f"{self} is not a rational integer")
        return self.s // 2

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other) -> tuple[QuadInt, QuadInt]:
        if isinstance(other, int):
            return self, QuadInt(2 * other, 0, self.D)
        if not isinstance(other, QuadInt):
            raise TypeError(other)
        if self.D == other.D:
            return self, other
        # rational integers live in every field
        if other.t == 0:
            return self, QuadInt(other.s, 0, self.D)
        if self.t == 0:
            return QuadInt(self.s, 0, other.D), other
        raise IncompatibleFieldError(
            f"cannot combine elements of Q(sqrt({self.D})) and Q(sqrt({other.D}))"
        )

    def __add__(self, other):
        if not isinstance(other, (int, QuadInt)):
            return NotImplemented
        x, y = self._coerce(other)
        return QuadInt(x.s + y.s, x.t + y.t, x.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.s, -self.t, self.D)

    def __sub__(self, other):
        if not isinstance(other, (int, QuadInt)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (int, QuadInt)):
            return NotImplemented
        x, y = self._coerce(other)
        D = x.D
        s2 = x.s * y.s + x.t * y.t * D
        t2 = x.s * y.t + x.t * y.s
        # both numerators are even by the parity invariant
        assert s2 % 2 == 0 and t2 % 2 == 0, (x, y)
        return QuadInt(s2 // 2, t2 // 2, D)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            raise ValueError("negative exponents are not supported")
        result = QuadInt(2, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.s, -self.t, self.D)

    def norm(self) -> int:
        num = self.s * self.s - self.t * self.t * self.D
        assert num % 4 == 0
        return num // 4

    def trace(self) -> int:
        return self.s

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.t == 0 and self.s == 2 * other
        if not isinstance(other, QuadInt):
            return NotImplemented
        if self.t == 0 and other.t == 0:
            return self.s == other.s
        return (self.s, self.t, self.D) == (other.s, other.t, other.D)

    def __hash__(self):
        if self.t == 0:
            return hash(self.s // 2)
        return hash((self.s, self.t, self.D))

    def __str__(self):
        if self.t == 0:
            return str(self.s // 2)
        sign = "+" if self.t > 0 else "-"
        return f"({self.s}{sign}{abs(self.t)}√{self.D})/2"

    def __repr__(self):
        return f"QuadInt({self.s}, {self.t}, {self.D})"


def sqrt_d(D: int, k: int = 1) -> QuadInt:
    """``k * sqrt(D)``."""
    return QuadInt(0, 2 * k, D)


def omega() -> QuadInt:
    """The primitive cube root of unity ``(-1 + sqrt(-3)) / 2``."""
    return QuadInt(-1, 1, -3)


def imag_unit() -> QuadInt:
    return QuadInt(0, 2, -1)


def exponent(x: QuadInt) -> int | float:
    """Least ``t >= 1`` with ``x**t`` a rational integer, or ``INFINITE``.

    Decided from the closed classification of finite exponents rather than
    by powering, which could never certify an infinite exponent.  With
    ``x = (s + t*sqrt(D))/2`` and ``t != 0``:

    ==========  ===================================  =========================
    exponent    set                                  half-coordinate test
    ==========  ===================================  =========================
    2           ``k*sqrt(D)``                        ``s == 0``
    3           ``k*w``, ``k*conj(w)`` (D = -3)      ``|s| == |t|``
    4           ``k(1+i)``, ``k(1-i)`` (D = -1)      ``|s| == |t|``
    6           ``k(1-w)``, ``k(1-conj(w))`` (D=-3)  ``|s| == 3|t|``
    ==========  ===================================  =========================
    """
    if x.is_zero():
        raise DegenerateInputError("exponent of 0 is undefined")
    s, t, D = x.s, x.t, x.D
    if t == 0:
        return 1
    if s == 0:
        return 2
    if D == -3 and abs(s) == abs(t):
        return 3
    if D == -1 and abs(s) == abs(t):
        return 4
    if D == -3 and abs(s) == 3 * abs(t):
        return 6
    return INFINITE


# -- parsing -------------------------------------------------------------------

_RADICAL = r"(?:√|sqrt)\(?(?P<D>[+-]?\d+)\)?"
_LINEAR = re.compile(
    r"(?P<a>[+-]?\d+)?(?:(?P<sign>[+-])?(?P<b>\d+)?\*?" + _RADICAL + r")?"
)
_HALF = re.compile(r"\((?P<inner>.+)\)/2")


def _parse_linear(text: str) -> tuple[int, int, int | None]:
    mt = _LINEAR.fullmatch(text)
    if mt is None or not text:
        raise ValueError(f"cannot parse quadratic integer {text!r}")
    a, sign, b, D = mt.group("a", "sign", "b", "D")
    if D is None:
        if a is None:
            raise ValueError(f"cannot parse quadratic integer {text!r}")
        return int(a), 0, None
    if sign is None and a is not None:
        if b is not None:
            raise ValueError(f"cannot parse quadratic integer {text!r}")
        # "3√2" or "-3√2": a is the coefficient of the radical
        return 0, int(a), int(D)
    coef = int(b) if b is not None else 1
    if sign == "-":
        coef = -coef
    return int(a) if a is not None else 0, coef, int(D)


def parse_quadint(text: str, D: int | None = None) -> QuadInt:
    """Parse ``"a+b√D"`` (whole coordinates) or ``"(s+t√D)/2"``.

    ``sqrt(D)`` may be written instead of ``√D``.  A bare integer needs the
    field from ``D`` (defaults to the rational case).
    """
    body = re.sub(r"\s+", "", text)
    half = _HALF.fullmatch(body)
    if half:
        s, t, d = _parse_linear(half.group("inner"))
    else:
        a, b, d = _parse_linear(body)
        s, t = 2 * a, 2 * b
    if d is None:
        d = D if D is not None else 1
    elif D is not None and D != d:
        raise IncompatibleFieldError(f"{text!r} is not in Q(sqrt({D}))")
    if d == 1 and t:
        raise ValueError("sqrt(1) is rational; write the integer directly")
    return QuadInt(s, t, d)
