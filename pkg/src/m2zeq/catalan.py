"""The Catalan matrix equation ``X^m - Y^n = I`` over 2x2 integer matrices.

Non-trivial solutions (``det(X) det(Y) != 0``, ``m, n >= 3``) fall into three
classes:

* ``IntegerEigen``: ``Y = 2I``, ``(m, n) = (4, 3)``, ``tr X = 0``, ``det X = ±3``;
* ``ScalarPower46`` / ``ScalarPower43``: ``X^m`` scalar, with the trace and
  determinant templates checked in :func:`classify`;
* ``CommutingQuadratic``: everything else, where X and Y commute and the
  pair comes from a scalar solution in a quadratic ring (:func:`catalan_lift`).

``m = 2`` only appears through :func:`trivial_m2_family`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .commutant import I2, CommutantBasis, Mat2, mat_eigenvalues
from .errors import ContractViolation, InapplicableError, NoSolutionsError
from .fermat import EquationSpec, lift_general
from .matpow import mat_pow_closed
from .quadratic import QuadInt, sqrt_d

__all__ = [
    "Tag",
    "CatalanSolution",
    "make_solution",
    "classify",
    "enumerate_integer_eigen",
    "enumerate_scalar_power_case",
    "exponent_case_lookup",
    "catalan_lift",
    "trivial_m2_family",
    "SearchResult",
    "brute_force_search",
    "brute_force_search_naive",
    "eigen_pairs_satisfy",
]


class Tag(str, Enum):
    INTEGER_EIGEN = "IntegerEigen"
    SCALAR_POWER_46 = "ScalarPower46"
    SCALAR_POWER_43 = "ScalarPower43"
    COMMUTING_QUADRATIC = "CommutingQuadratic"
    TRIVIAL_M2 = "TrivialM2"
    VIOLATION = "ClassificationViolation"


@dataclass(frozen=True)
class CatalanSolution:
    X: Mat2
    Y: Mat2
    m: int
    n: int
    tag: Tag
    # one of X, Y has integer eigenvalues and the other does not
    mixed: bool = field(default=False, compare=False)

    @property
    def key(self) -> tuple[Mat2, Mat2, int, int]:
        return self.X, self.Y, self.m, self.n

    def to_record(self) -> dict:
        return {
            "X": str(self.X),
            "Y": str(self.Y),
            "m": str(self.m),
            "n": str(self.n),
            "tag": self.tag.value,
            "mixed": self.mixed,
        }


def _residual(X: Mat2, Y: Mat2, m: int, n: int) -> Mat2:
    return mat_pow_closed(X, m) - mat_pow_closed(Y, n)


def make_solution(X: Mat2, Y: Mat2, m: int, n: int, tag: Tag) -> CatalanSolution:
    """Verify ``X^m - Y^n = I`` and the non-triviality rules, then package."""
    if _residual(X, Y, m, n) != I2:
        raise ContractViolation(f"X^{m} - Y^{n} != I for X={X}, Y={Y}")
    if tag is Tag.TRIVIAL_M2:
        if m != 2:
            raise ContractViolation("TrivialM2 solutions have m = 2")
    else:
        if min(m, n) < 3:
            raise ContractViolation("non-trivial Catalan solutions need m, n >= 3")
        if X.det * Y.det == 0:
            raise ContractViolation("non-trivial solution needs det(X) det(Y) != 0")
    return CatalanSolution(X, Y, m, n, tag, _is_mixed(X, Y))


def _has_integer_eigenvalues(M: Mat2) -> bool:
    return mat_eigenvalues(M)[0].is_rational_integer


def _is_mixed(X: Mat2, Y: Mat2) -> bool:
    return _has_integer_eigenvalues(X) != _has_integer_eigenvalues(Y)


def classify(X: Mat2, Y: Mat2, m: int, n: int) -> Tag:
    """Place a verified solution in the classification; VIOLATION if none fits."""
    if _has_integer_eigenvalues(X) or _has_integer_eigenvalues(Y):
        if (m, n) == (4, 3) and Y == 2 * I2 and X.trace == 0 and X.det in (3, -3):
            return Tag.INTEGER_EIGEN
        return Tag.VIOLATION
    if mat_pow_closed(X, m).is_scalar():
        if X.trace == 0 and X.det in (3, -3):
            if (m, n) == (4, 6) and Y.trace == 0 and Y.det == -2:
                return Tag.SCALAR_POWER_46
            if (m, n) == (4, 3) and Y.trace == -2 and Y.det == 4:
                return Tag.SCALAR_POWER_43
        return Tag.VIOLATION
    if X.commutes_with(Y):
        return Tag.COMMUTING_QUADRATIC
    return Tag.VIOLATION


def eigen_pairs_satisfy(X: Mat2, Y: Mat2, m: int, n: int) -> bool:
    """Every eigenvalue x of X pairs with some eigenvalue y of Y so x^m - y^n = 1.

    Eigenvalues of X and Y may lie in different fields; the comparison is
    done in whichever ring contains both sides.
    """
    ys = [y**n for y in mat_eigenvalues(Y)]
    for x in mat_eigenvalues(X):
        target = x**m - 1
        if not any(_same_element(target, yn) for yn in ys):
            return False
    return True


def _same_element(p: QuadInt, q: QuadInt) -> bool:
    if p.t == 0 and q.t == 0:
        return p.s == q.s
    return p.D == q.D and p == q


# -- closed classes --------------------------------------------------------------------


def _traceless(bound: int, dets: tuple[int, ...]):
    rng = range(-bound, bound + 1)
    for a, b, c in itertools.product(rng, rng, rng):
        if -a * a - b * c in dets:
            yield Mat2(a, b, c, -a)


def _with_trace_det(bound: int, tr: int, det: int):
    rng = range(-bound, bound + 1)
    for a, b, c in itertools.product(rng, rng, rng):
        d = tr - a
        if abs(d) <= bound and a * d - b * c == det:
            yield Mat2(a, b, c, d)


def enumerate_integer_eigen(bound: int) -> set[CatalanSolution]:
    """``(X, 2I, 4, 3)`` for every ``X`` with ``tr 0``, ``det ±3``, entries within ``bound``."""
    if bound < 1:
        raise ValueError("bound must be positive")
    Y = 2 * I2
    return {make_solution(X, Y, 4, 3, Tag.INTEGER_EIGEN) for X in _traceless(bound, (3, -3))}


def enumerate_scalar_power_case(bound: int) -> set[CatalanSolution]:
    """Both scalar-power templates, every pair with entries within ``bound``."""
    if bound < 1:
        raise ValueError("bound must be positive")
    xs = list(_traceless(bound, (3, -3)))
    out = set()
    for Y in _traceless(bound, (-2,)):
        out.update(make_solution(X, Y, 4, 6, Tag.SCALAR_POWER_46) for X in xs)
    for Y in _with_trace_det(bound, -2, 4):
        out.update(make_solution(X, Y, 4, 3, Tag.SCALAR_POWER_43) for X in xs)
    return out


def exponent_case_lookup(m: int, n: int) -> list[tuple[QuadInt, QuadInt]]:
    """Eigenvalue-level solutions of ``x^m - y^n = 1`` with ``x^m`` rational.

    Complete when ``x`` or ``y`` is a rational integer, or both are quadratic
    with ``x^m`` an integer; empty for every other ``(m, n)``.
    """
    if min(m, n) < 3:
        raise ValueError("m, n >= 3 required")
    xs = [sqrt_d(D, k) for D in (3, -3) for k in (1, -1)]
    if (m, n) == (4, 3):
        w = QuadInt(-2, 2, -3)  # 2ω
        ys = [QuadInt.from_int(2), w, w.conj()]
    elif (m, n) == (4, 6):
        ys = [sqrt_d(2, 1), sqrt_d(2, -1)]
    else:
        return []
    return [(x, y) for x in xs for y in ys]


def catalan_lift(
    basis: CommutantBasis, x: QuadInt, y: QuadInt, m: int, n: int
) -> CatalanSolution:
    """Lift ``x^m - y^n = 1`` to ``X^m - Y^n = I`` inside ``C(basis)``.

    Needs ``k | t`` for both sqrt(D)-coordinates, where ``delta = k^2 D``.
    """
    if basis.square:
        raise NoSolutionsError(
            "square discriminant: X^m - Y^n = I has no non-trivial solution in C(A)"
        )
    if min(m, n) < 3:
        raise InapplicableError("m, n >= 3 required")
    one = QuadInt.from_int(1, basis.D)
    triple = lift_general(basis, x, y, one, EquationSpec(1, -1, 1, m, n, 1))
    return make_solution(triple.X, triple.Y, m, n, Tag.COMMUTING_QUADRATIC)


def trivial_m2_family(t: int, n: int, A: Mat2) -> CatalanSolution:
    """``(A, tI, 2, n)`` for ``tr A = 0``, ``det A = -t^n - 1``."""
    if t in (0, -1):
        raise InapplicableError("t must not be 0 or -1")
    if n < 3:
        raise InapplicableError("n >= 3 required")
    if A.trace != 0 or A.det != -(t**n) - 1:
        raise InapplicableError(
            f"A needs trace 0 and det {-(t**n) - 1}; got trace {A.trace}, det {A.det}"
        )
    return make_solution(A, Mat2.scalar(t), 2, n, Tag.TRIVIAL_M2)


# -- exhaustive search -----------------------------------------------------------------


@dataclass
class SearchResult:
    solutions: set[CatalanSolution]
    violations: list[CatalanSolution]

    def by_exponents(self, m: int, n: int) -> set[CatalanSolution]:
        return {s for s in self.solutions if (s.m, s.n) == (m, n)}


def _nonsingular(bound: int) -> list[Mat2]:
    rng = range(-bound, bound + 1)
    return [M for M in itertools.starmap(Mat2, itertools.product(rng, repeat=4)) if M.det]


def _search_chunk(args) -> list[tuple[Mat2, Mat2, int, int]]:
    xs, roots, max_exp = args
    hits = []
    for X in xs:
        for m in range(3, max_exp + 1):
            for Y, n in roots.get(mat_pow_closed(X, m) - I2, ()):
                hits.append((X, Y, m, n))
    return hits


def _package(hits) -> SearchResult:
    sols, bad = set(), []
    for X, Y, m, n in hits:
        tag = classify(X, Y, m, n)
        if tag is not Tag.VIOLATION and not eigen_pairs_satisfy(X, Y, m, n):
            tag = Tag.VIOLATION
        sol = make_solution(X, Y, m, n, tag)
        if tag is Tag.VIOLATION:
            bad.append(sol)
        else:
            sols.add(sol)
    return SearchResult(sols, bad)


def brute_force_search(entry_bound: int, max_exp: int, workers: int = 1) -> SearchResult:
    """All non-trivial solutions with entries in ``[-B, B]`` and ``3 <= m, n <= max_exp``.

    The Y side is found by table lookup: every ``Y^n`` is indexed once and
    each ``X^m - I`` is looked up.  ``workers > 1`` splits the X range over
    processes.
    """
    if entry_bound < 1 or max_exp < 3:
        raise ValueError("need entry_bound >= 1 and max_exp >= 3")
    mats = _nonsingular(entry_bound)
    roots: dict[Mat2, list[tuple[Mat2, int]]] = {}
    for Y in mats:
        for n in range(3, max_exp + 1):
            roots.setdefault(mat_pow_closed(Y, n), []).append((Y, n))
    if workers <= 1:
        hits = _search_chunk((mats, roots, max_exp))
    else:
        chunks = [(mats[i::workers], roots, max_exp) for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            hits = [h for part in pool.map(_search_chunk, chunks) for h in part]
    return _package(hits)


def brute_force_search_naive(entry_bound: int, max_exp: int) -> SearchResult:
    """Reference double loop over all (X, Y, m, n); only for tiny bounds."""
    mats = _nonsingular(entry_bound)
    exps = range(3, max_exp + 1)
    powers = {M: {e: mat_pow_closed(M, e) for e in exps} for M in mats}
    hits = [
        (X, Y, m, n)
        for X in mats
        for Y in mats
        for m in exps
        for n in exps
        if powers[X][m] - powers[Y][n] == I2
    ]
    return _package(hits)
