"""Closed-form powers of 2x2 integer matrices.

Write ``x1, x2`` for the eigenvalues of ``M``, ``P = x1 + x2`` and
``Q = x1 * x2``.  When ``x1 != x2``::

    M^n = U_n * M - Q * U_{n-1} * I,   U_n = (x1^n - x2^n) / (x1 - x2)

which is the eigenvalue form of the power with the divisions by
``x1 - x2`` carried out symbolically.  ``U_n`` is the Lucas sequence
``U_0 = 0, U_1 = 1, U_n = P U_{n-1} - Q U_{n-2}``; it is integer-valued, so
nothing non-integral is ever formed.  Equal eigenvalues are handled by their
own closed form, including the nilpotent case.
"""

from __future__ import annotations

from .commutant import I2, O2, Mat2, mat_mul

__all__ = ["lucas_uv", "mat_pow_closed", "mat_pow_naive"]


def lucas_uv(P: int, Q: int, n: int) -> tuple[int, int, int]:
    """Return ``(U_n, V_n, Q**n)`` for the Lucas sequences of ``(P, Q)``.

    Left-to-right binary method using the doubling rules
    ``U_2k = U_k V_k``, ``V_2k = V_k^2 - 2Q^k`` and the increments
    ``U_{k+1} = (P U_k + V_k)/2``, ``V_{k+1} = (Δ U_k + P V_k)/2``
    with ``Δ = P^2 - 4Q``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    delta = P * P - 4 * Q
    U, V, Qk = 0, 2, 1
    for bit in bin(n)[2:]:
        U, V, Qk = U * V, V * V - 2 * Qk, Qk * Qk
        if bit == "1":
            U, V = (P * U + V) // 2, (delta * U + P * V) // 2
            Qk *= Q
    return U, V, Qk


def mat_pow_naive(M: Mat2, n: int) -> Mat2:
    """Square-and-multiply reference; ``M^0 = I``."""
    if n < 0:
        raise ValueError("negative exponents are not supported")
    result, base = I2, M
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def mat_pow_closed(M: Mat2, n: int) -> Mat2:
    """``M^n`` from the eigenvalue closed forms.

    ``n = 0`` returns the identity as a convenience.
    """
    if n < 0:
        raise ValueError("negative exponents are not supported")
    if n == 0:
        return I2
    P, Q = M.trace, M.det
    if P * P - 4 * Q == 0:
        # double eigenvalue; P is even here
        x1 = P // 2
        if x1 == 0:
            return M if n == 1 else O2
        # a_n = x1^n + n (a - x1) x1^(n-1), b_n = n b x1^(n-1)
        p = x1 ** (n - 1)
        a, b, c, d = M
        return Mat2(
            x1 * p + n * (a - x1) * p,
            n * b * p,
            n * c * p,
            x1 * p + n * (d - x1) * p,
        )
    U, _, _ = lucas_uv(P, Q, n)
    U_prev, _, _ = lucas_uv(P, Q, n - 1)
    a, b, c, d = M
    shift = Q * U_prev
    return Mat2(U * a - shift, U * b, U * c, U * d - shift)
