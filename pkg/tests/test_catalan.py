import itertools

import pytest

from m2zeq.catalan import (
    CatalanSolution,
    Tag,
    brute_force_search,
    brute_force_search_naive,
    catalan_lift,
    classify,
    eigen_pairs_satisfy,
    enumerate_integer_eigen,
    enumerate_scalar_power_case,
    exponent_case_lookup,
    make_solution,
    trivial_m2_family,
)
from m2zeq.commutant import I2, Mat2, make_basis, mat_eigenvalues, membership, normalize
from m2zeq.errors import ContractViolation, InapplicableError, LiftConditionError, NoSolutionsError
from m2zeq.fermat import EquationSpec, project
from m2zeq.matpow import mat_pow_naive
from m2zeq.quadratic import QuadInt, sqrt_d

X3 = Mat2(0, 1, 3, 0)
X3b = Mat2(1, 2, -2, -1)


@pytest.fixture(scope="module")
def search3():
    return brute_force_search(3, 6)


def naive_catalan(X, Y, m, n):
    return mat_pow_naive(X, m) - mat_pow_naive(Y, n) == I2


def test_integer_eigen_examples():
    sols = enumerate_integer_eigen(3)
    keys = {s.key for s in sols}
    assert (X3, 2 * I2, 4, 3) in keys and (X3b, 2 * I2, 4, 3) in keys
    assert all(naive_catalan(*s.key) and s.tag is Tag.INTEGER_EIGEN for s in sols)
    assert enumerate_integer_eigen(1) == set()


def test_integer_eigen_matches_direct_enumeration():
    rng = range(-3, 4)
    expected = {
        Mat2(a, b, c, d)
        for a, b, c, d in itertools.product(rng, repeat=4)
        if a + d == 0 and a * d - b * c in (3, -3)
    }
    assert {s.X for s in enumerate_integer_eigen(3)} == expected


def test_scalar_power_examples():
    sols = enumerate_scalar_power_case(3)
    by_key = {s.key: s.tag for s in sols}
    assert by_key[(X3, Mat2(1, 1, 1, -1), 4, 6)] is Tag.SCALAR_POWER_46
    assert by_key[(X3b, Mat2(-1, 1, -3, -1), 4, 3)] is Tag.SCALAR_POWER_43
    assert all(naive_catalan(*k) for k in by_key)


def test_scalar_power_bound_one():
    sols = enumerate_scalar_power_case(1)
    # det 3 is out of reach with unit entries, so nothing survives
    assert sols == set()


def test_exponent_case_lookup():
    pairs43 = exponent_case_lookup(4, 3)
    assert len(pairs43) == 12
    assert (sqrt_d(3), QuadInt.from_int(2)) in pairs43
    assert (sqrt_d(-3, -1), QuadInt(-2, -2, -3)) in pairs43
    pairs46 = exponent_case_lookup(4, 6)
    assert len(pairs46) == 8
    for x, y in pairs43 + pairs46:
        assert x**4 - y ** (3 if (x, y) in pairs43 else 6) == 1
    assert exponent_case_lookup(5, 5) == []
    with pytest.raises(ValueError):
        exponent_case_lookup(2, 3)


@pytest.mark.parametrize("m, n", [(7, 5), (13, 11), (5, 7), (19, 17)])
def test_catalan_lift_periodic(m, n):
    basis = make_basis(1, 1, -1)
    x, y = QuadInt(1, -1, -3), QuadInt(-1, 1, -3)
    sol = catalan_lift(basis, x, y, m, n)
    assert naive_catalan(sol.X, sol.Y, m, n)
    assert sol.tag is Tag.COMMUTING_QUADRATIC
    if (m, n) == (7, 5):
        assert (sol.X, sol.Y) == (Mat2(0, -1, 1, 1), Mat2(0, 1, -1, -1))


def test_catalan_lift_errors():
    with pytest.raises(NoSolutionsError):
        catalan_lift(make_basis(3, 1, -2), QuadInt.from_int(2), QuadInt.from_int(1), 3, 3)
    # delta = -27 = 3^2 * -3; a half-coordinate of -1 is not divisible by 3
    basis = make_basis(3, 1, -9)
    assert (basis.m, basis.D) == (3, -3)
    with pytest.raises(LiftConditionError):
        catalan_lift(basis, QuadInt(1, -1, -3), QuadInt(-1, 1, -3), 7, 5)
    # with delta = 8 every element of Z[√2] already has an even half-coordinate
    with pytest.raises(ValueError):
        QuadInt(2, 1, 2)
    with pytest.raises(InapplicableError):
        catalan_lift(make_basis(1, 1, -1), QuadInt(1, -1, -3), QuadInt(-1, 1, -3), 2, 5)


@pytest.mark.parametrize(
    "t, n, A",
    [(1, 3, Mat2(1, 1, 1, -1)), (2, 3, Mat2(0, 1, 9, 0)), (-2, 3, Mat2(0, 7, -1, 0))],
)
def test_trivial_m2(t, n, A):
    sol = trivial_m2_family(t, n, A)
    assert sol.tag is Tag.TRIVIAL_M2 and naive_catalan(A, Mat2.scalar(t), 2, n)


def test_trivial_m2_rejects():
    with pytest.raises(InapplicableError):
        trivial_m2_family(0, 3, Mat2(0, 1, -1, 0))
    with pytest.raises(InapplicableError):
        trivial_m2_family(1, 3, Mat2(1, 1, 1, 1))


def test_make_solution_rejects():
    with pytest.raises(ContractViolation):
        make_solution(X3, I2, 4, 3, Tag.INTEGER_EIGEN)
    with pytest.raises(ContractViolation):
        make_solution(Mat2(1, 1, 1, -1), I2, 2, 3, Tag.COMMUTING_QUADRATIC)


def test_classify_examples():
    assert classify(X3, 2 * I2, 4, 3) is Tag.INTEGER_EIGEN
    assert classify(X3, Mat2(1, 1, 1, -1), 4, 6) is Tag.SCALAR_POWER_46
    assert classify(Mat2(0, -1, 1, 1), Mat2(0, 1, -1, -1), 7, 5) is Tag.COMMUTING_QUADRATIC


@pytest.mark.parametrize("bound, max_exp", [(1, 5), (2, 4)])
def test_fast_search_matches_naive(bound, max_exp):
    fast = brute_force_search(bound, max_exp)
    slow = brute_force_search_naive(bound, max_exp)
    assert fast.solutions == slow.solutions
    assert fast.violations == slow.violations == []


def test_search_parallel_matches_serial():
    assert brute_force_search(2, 6, workers=2).solutions == brute_force_search(2, 6).solutions


def test_search_no_noncommuting_55():
    res = brute_force_search(1, 5)
    hits = res.by_exponents(5, 5)
    assert all(s.X.commutes_with(s.Y) for s in hits)


def test_search_bound3_classified(search3):
    assert search3.violations == []
    integer = {s for s in search3.solutions if s.tag is Tag.INTEGER_EIGEN}
    assert integer == enumerate_integer_eigen(3)
    scalar = {s for s in search3.solutions if s.tag in (Tag.SCALAR_POWER_43, Tag.SCALAR_POWER_46)}
    assert scalar == enumerate_scalar_power_case(3)


def test_search_completeness_via_lift(search3):
    """Every commuting hit comes back out of catalan_lift from its eigenvalues."""
    commuting = [s for s in search3.solutions if s.tag is Tag.COMMUTING_QUADRATIC]
    assert commuting
    for s in commuting:
        basis = normalize(s.X)
        mx, my = membership(basis, s.X), membership(basis, s.Y)
        one = basis.member(1, 0)
        (x, y, _), _ = project(mx, my, one, EquationSpec(1, -1, 1, s.m, s.n, 1))
        again = catalan_lift(basis, x, y, s.m, s.n)
        assert again.key == s.key


def test_commuting_dichotomy(search3):
    checked = 0
    for s in search3.solutions:
        quadratic = not any(e.is_rational_integer for e in mat_eigenvalues(s.X) + mat_eigenvalues(s.Y))
        if quadratic and not mat_pow_naive(s.X, s.m).is_scalar():
            assert s.X.commutes_with(s.Y)
            checked += 1
    assert checked > 0


def test_eigen_pairs_every_hit(search3):
    for s in search3.solutions:
        assert eigen_pairs_satisfy(s.X, s.Y, s.m, s.n)


def test_mixed_flag_recorded(search3):
    for s in search3.solutions:
        assert isinstance(s, CatalanSolution)
        if s.tag is Tag.INTEGER_EIGEN:
            # X = ±√±3 eigenvalues, Y = 2I integer
            assert s.mixed
