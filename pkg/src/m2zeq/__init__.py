"""Fermat- and Catalan-type equations over 2x2 integer matrices.

Matrix solutions inside a commutant ring C(A) are transported to and from
solutions in the ring of integers of a quadratic field.
"""

from .commutant import (
    I2,
    O2,
    CommutantBasis,
    CommutantMember,
    Mat2,
    eigenvalues_of_member,
    has_zero_divisors,
    make_basis,
    membership,
    normalize,
    parse_matrix,
    zero_divisor_witness,
)
from .matpow import mat_pow_closed, mat_pow_naive
from .quadratic import INFINITE, QuadInt, exponent, parse_quadint, squarefree_decompose

__version__ = "0.1.0"
