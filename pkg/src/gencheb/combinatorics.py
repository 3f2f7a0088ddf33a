"""Exact factorials, double factorials and binomial coefficients.

Everything here returns ``int`` or :class:`fractions.Fraction`; there is no
floating point path.
"""
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "factorial",
    "double_factorial",
    "binomial",
    "half_binomial",
    "check_central_identity",
    "check_ratio_identity",
]


def double_factorial(n: int) -> int:
    """Return ``n!!`` with the convention ``0!! = (-1)!! = 1``."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n} < -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k`` lies outside ``[0, n]``."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def half_binomial(r: int, k: int) -> Fraction:
    """Generalized binomial ``C(r + 1/2, k)`` as an exact fraction."""
    if k < 0:
        return Fraction(0)
    top = Fraction(2 * r + 1, 2)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / factorial(k)


def check_central_identity(n: int) -> bool:
    """``C(2n, n) == 2^(2n) (2n-1)!! / (2n)!!``."""
    lhs = Fraction(comb(2 * n, n))
    rhs = Fraction(4**n * double_factorial(2 * n - 1), double_factorial(2 * n))
    return lhs == rhs


def check_ratio_identity(n: int, k: int) -> bool:
    """``C(2n, 2k) / C(n, k) == (2n-1)!! / ((2k-1)!! (2n-2k-1)!!)``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    lhs = Fraction(comb(2 * n, 2 * k), comb(n, k))
    rhs = Fraction(
        double_factorial(2 * n - 1),
        double_factorial(2 * k - 1) * double_factorial(2 * n - 2 * k - 1),
    )
    return lhs == rhs
