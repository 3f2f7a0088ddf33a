"""Chebyshev polynomials of the second kind, ``U_n``."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .bernstein import BernsteinForm
from .combinatorics import binomial, double_factorial, half_binomial
from .numerics import PiRational, beta_half
from .polynomial import Polynomial

__all__ = [
    "u_poly",
    "u_eval_trig",
    "u_hypergeometric",
    "u_derivative",
    "bernstein_prefactor",
    "u_bernstein_coeffs",
    "u_bernstein_coeffs_printed",
    "u_orthogonality",
]


@lru_cache(maxsize=None)
def u_poly(n: int) -> Polynomial:
    """``U_n`` on [-1, 1] from ``U_{n+1} = 2x U_n - U_{n-1}``."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    prev, cur = Polynomial([Fraction(1)]), Polynomial([Fraction(0), Fraction(2)])
    if n == 0:
        return prev
    two_x = Polynomial([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def u_eval_trig(n: int, x: float) -> float:
    """``sin((n+1) theta) / sin(theta)`` with ``x = cos(theta)``."""
    if abs(x) > 1:
        raise ValueError(f"trigonometric form needs |x| <= 1, got {x}")
    if x == 1:
        return float(n + 1)
    if x == -1:
        return float((-1) ** n * (n + 1))
    theta = math.acos(x)
    return math.sin((n + 1) * theta) / math.sin(theta)


def u_hypergeometric(n: int, x):
    """``(n+1) 2F1(-n, n+2; 3/2; (1-x)/2)`` as a terminating sum.

    Works for ``Fraction`` (exact) and ``float`` arguments.
    """
    z = (1 - x) / 2
    term = 1 + 0 * z
    total = term
    for k in range(n):
        ratio = Fraction((k - n) * (k + n + 2)) / (Fraction(2 * k + 3, 2) * (k + 1))
        if isinstance(z, float):
            ratio = float(ratio)
        term = term * ratio * z
        total = total + term
    return (n + 1) * total


def u_derivative(n: int) -> Polynomial:
    return u_poly(n).derivative()


def bernstein_prefactor(n: int) -> Fraction:
    """``(n+1) (2n)!! / (2n+1)!!``."""
    return Fraction((n + 1) * double_factorial(2 * n), double_factorial(2 * n + 1))


def _half_ratio(n: int, k: int) -> Fraction:
    return half_binomial(n, k) * half_binomial(n, n - k) / binomial(n, k)


def u_bernstein_coeffs(n: int) -> BernsteinForm:
    """Bernstein coefficients of ``U_n(2x - 1)`` on [0, 1].

    The k-th coefficient is ``pref * (-1)**(n-k) * C(n+1/2,k) C(n+1/2,n-k) / C(n,k)``.
    """
    pref = bernstein_prefactor(n)
    return BernsteinForm(pref * (-1) ** (n - k) * _half_ratio(n, k) for k in range(n + 1))


def u_bernstein_coeffs_printed(n: int) -> BernsteinForm:
    """Same sum with a k-independent sign ``(-1)**(n+1)``.

    Kept only so the verification report can show that it is wrong.
    """
    pref = bernstein_prefactor(n)
    return BernsteinForm(pref * (-1) ** (n + 1) * _half_ratio(n, k) for k in range(n + 1))


def u_orthogonality(m: int, n: int) -> PiRational:
    """``int_0^1 sqrt(x(1-x)) U_m(2x-1) U_n(2x-1) dx`` exactly."""
    prod = (u_poly(m) * u_poly(n)).to_unit()
    # x^j sqrt(x(1-x)) integrates to B(j + 3/2, 3/2)
    return sum(
        (c * beta_half(2 * j + 3, 3) for j, c in enumerate(prod.coeffs) if c != 0),
        PiRational(Fraction(0), 1),
    )
