import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from m2zeq.commutant import (
    I2,
    O2,
    Mat2,
    eigenvalues_of_member,
    has_zero_divisors,
    make_basis,
    mat_det,
    mat_eigenvalues,
    membership,
    normalize,
    parse_matrix,
    zero_divisor_witness,
)
from m2zeq.errors import UnsupportedMatrixError
from m2zeq.quadratic import QuadInt

small = st.integers(-20, 20)
nonzero = small.filter(bool)


@st.composite
def bases(draw):
    return normalize(Mat2(draw(small), draw(nonzero), draw(nonzero), draw(small)))


@pytest.mark.parametrize(
    "A, abc",
    [
        (Mat2(7, 3, 3, 4), (1, 1, 1)),
        (Mat2(11, 6, 6, 5), (1, 1, 1)),
        (Mat2(5, 1, 1, 0), (5, 1, 1)),
        (Mat2(-3, 1, 1, 0), (-3, 1, 1)),
        (Mat2(4, 4, -8, 2), (1, 2, -4)),
    ],
)
def test_normalize_examples(A, abc):
    basis = normalize(A)
    assert (basis.a, basis.b, basis.c) == abc


def test_normalize_discriminant_data():
    basis = normalize(Mat2(7, 3, 3, 4))
    assert (basis.delta, basis.m, basis.D, basis.square) == (5, 1, 5, False)
    sq = make_basis(3, 1, -2)
    assert (sq.delta, sq.square, sq.root) == (1, True, 1)
    nil = make_basis(2, 1, -1)
    assert nil.delta == 0 and nil.square and nil.has_nilpotents


def test_normalize_rejects_bc_zero():
    with pytest.raises(UnsupportedMatrixError):
        normalize(Mat2(1, 0, 5, 2))
    with pytest.raises(ValueError):
        make_basis(2, 2, 4)


@given(bases())
def test_normalize_idempotent(basis):
    assert normalize(basis.matrix) == basis


@given(small, nonzero, nonzero, small, st.lists(small, min_size=4, max_size=4))
def test_same_commutant(a, b, c, d, entries):
    A = Mat2(a, b, c, d)
    M = Mat2(*entries)
    assert M.commutes_with(A) == M.commutes_with(normalize(A).matrix)


@given(bases(), small, small, small, small)
def test_commutant_closure(basis, x1, t1, x2, t2):
    M1, M2 = basis.member(x1, t1), basis.member(x2, t2)
    P = M1.matrix @ M2.matrix
    assert P == M2.matrix @ M1.matrix
    member = membership(basis, P)
    assert member is not None and member == M1 * M2


def test_membership_examples():
    basis = make_basis(1, 1, 1)
    assert membership(basis, I2) == basis.member(1, 0)
    assert membership(basis, Mat2(12, 6, 6, 6)) == basis.member(6, 6)
    assert membership(basis, Mat2(1, 2, 1, 0)) is None
    # off-diagonal ratio fine but diagonal wrong
    assert membership(basis, Mat2(0, 1, 1, 0)) is None


@given(bases(), small, small)
def test_membership_recovers(basis, x, t):
    assert membership(basis, basis.member(x, t).matrix) == basis.member(x, t)


def test_zero_divisor_examples():
    assert not has_zero_divisors(make_basis(1, 1, 1))
    assert zero_divisor_witness(make_basis(1, 1, 1)) is None
    assert not has_zero_divisors(make_basis(2, 1, 1))
    basis = make_basis(3, 1, -2)
    B1, B2 = zero_divisor_witness(basis)
    assert B1 == Mat2(2, 1, -2, -1)
    assert B1 != O2 and B2 != O2 and B1 @ B2 == O2


def test_zero_divisor_exhaustive_small():
    for a, b, c in itertools.product(range(-4, 5), repeat=3):
        if b * c == 0 or math.gcd(a, b, c) != 1:
            continue
        basis = make_basis(a, b, c)
        rng = range(-5, 6)
        members = [basis.member(x, t).matrix for x, t in itertools.product(rng, rng) if x or t]
        singular = [M for M in members if M.det == 0]
        # a nonzero singular member exists iff the ring has zero divisors
        assert bool(singular) == has_zero_divisors(basis), basis


@pytest.mark.parametrize(
    "xt, expected",
    [
        ((0, 1), (QuadInt(1, 1, 5), QuadInt(1, -1, 5))),
        ((6, 6), (QuadInt.from_xy(9, 3, 5), QuadInt.from_xy(9, -3, 5))),
        ((1, 0), (QuadInt.from_int(1, 5), QuadInt.from_int(1, 5))),
    ],
)
def test_eigenvalues_of_member(xt, expected):
    assert eigenvalues_of_member(make_basis(1, 1, 1).member(*xt)) == expected


def test_eigenvalues_square_discriminant():
    basis = make_basis(3, 1, -2)  # A has eigenvalues 2 and 1
    e = eigenvalues_of_member(basis.member(0, 1))
    assert e == (2, 1) and all(x.is_rational_integer for x in e)


@given(bases(), small, small)
def test_eigen_det_trace_consistency(basis, x, t):
    M = basis.member(x, t)
    e1, e2 = eigenvalues_of_member(M)
    assert e1 * e2 == M.matrix.det
    assert e1 + e2 == M.matrix.trace
    if not basis.square:
        # the eigenvalues are conjugate, so each carries the full norm and trace
        for e in (e1, e2):
            assert e.norm() == M.matrix.det and e.trace() == M.matrix.trace


def test_matrix_helpers():
    A = Mat2(7, 3, 3, 4)
    assert mat_det(A) == 19 == QuadInt(11, 3, 5).norm()
    N = Mat2(0, 1, 0, 0)
    assert N @ N == O2
    assert A @ I2 == A
    assert 2 * A == A * 2 == Mat2(14, 6, 6, 8)
    assert A - A == O2 and -A + A == O2


@pytest.mark.parametrize(
    "text",
    ["[[7,3],[3,4]]", " [ [ 7 , 3 ] , [ 3 , 4 ] ] ", "[[+7,3],[3,4]]"],
)
def test_parse_matrix(text):
    assert parse_matrix(text) == Mat2(7, 3, 3, 4)


@pytest.mark.parametrize("text", ["[[7,3],[3]]", "7,3,3,4", "[[a,3],[3,4]]", "[[1.5,3],[3,4]]"])
def test_parse_matrix_rejects(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


def test_mat_eigenvalues_general():
    rng = random.Random(3)
    for _ in range(500):
        M = Mat2(*(rng.randint(-30, 30) for _ in range(4)))
        e1, e2 = mat_eigenvalues(M)
        assert e1 + e2 == M.trace and e1 * e2 == M.det
