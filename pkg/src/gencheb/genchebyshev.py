"""Generalized Chebyshev-II polynomials with point masses at x = -1 and x = +1.

For masses ``M`` (at -1) and ``N`` (at +1)::

    U_n^(M,N) = c_n U_n + M Q_n + N R_n + M N S_n,   c_n = (2n+1)!! / (2^n (n+1)!)

The family is orthogonal for the Chebyshev-II weight ``(2/pi) sqrt(1-x^2)``
plus the two endpoint atoms.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bernstein import BernsteinForm, elevate
from .combinatorics import binomial, double_factorial, half_binomial
from .chebyshev import u_derivative, u_poly
from .numerics import as_fraction
from .polynomial import Polynomial

__all__ = [
    "MassParams",
    "GenU",
    "MASS_GRID",
    "c_norm",
    "q_poly",
    "r_poly",
    "s_poly",
    "s_poly_via_ode",
    "gen_u",
    "endpoint_values",
    "endpoint_closed_form",
    "leading_lambda",
    "expansion_lambdas",
    "theta",
    "theta_half_binomial",
    "theta_by_recurrence",
    "gen_bernstein_form",
    "gen_bernstein_form_printed",
    "symmetry_check",
]


@dataclass(frozen=True)
class MassParams:
    """Point masses: ``M`` at x = -1, ``N`` at x = +1."""

    M: Fraction = Fraction(0)
    N: Fraction = Fraction(0)

    def __post_init__(self):
        m, n = as_fraction(self.M), as_fraction(self.N)
        if m < 0 or n < 0:
            raise ValueError(f"masses must be nonnegative, got M={m}, N={n}")
        object.__setattr__(self, "M", m)
        object.__setattr__(self, "N", n)

    def swapped(self) -> MassParams:
        return MassParams(self.N, self.M)


MASS_GRID = (
    MassParams(0, 0),
    MassParams(1, 0),
    MassParams(0, 1),
    MassParams(1, 1),
    MassParams(Fraction(1, 2), 2),
)


def c_norm(n: int) -> Fraction:
    """``(2n+1)!! / (2^n (n+1)!)``."""
    return Fraction(double_factorial(2 * n + 1), 2**n * factorial(n + 1))


def _qr_scale(n: int) -> Fraction:
    return Fraction(double_factorial(2 * n + 1), 3 * 2**n * factorial(n))


def _s_scale(n: int) -> Fraction:
    return Fraction(
        factorial(n + 2) * double_factorial(2 * n + 1),
        9 * 2**n * factorial(n) * factorial(n - 1),
    )


@lru_cache(maxsize=None)
def q_poly(n: int) -> Polynomial:
    """Correction attached to the mass at x = -1."""
    if n == 0:
        return Polynomial()
    bracket = n * (n + 2) * u_poly(n) - Fraction(3, 2) * Polynomial([-1, 1]) * u_derivative(n)
    return _qr_scale(n) * bracket


@lru_cache(maxsize=None)
def r_poly(n: int) -> Polynomial:
    """Correction attached to the mass at x = +1."""
    if n == 0:
        return Polynomial()
    bracket = n * (n + 2) * u_poly(n) - Fraction(3, 2) * Polynomial([1, 1]) * u_derivative(n)
    return _qr_scale(n) * bracket


@lru_cache(maxsize=None)
def s_poly(n: int) -> Polynomial:
    """Correction attached to the product ``M N``."""
    if n == 0:
        return Polynomial()
    bracket = n * (n + 2) * u_poly(n) - 3 * Polynomial.x() * u_derivative(n)
    return _s_scale(n) * bracket


def s_poly_via_ode(n: int) -> Polynomial:
    """``S_n`` through ``(x^2 - 1) U_n''``."""
    if n < 1:
        raise ValueError("s_poly_via_ode needs n >= 1")
    return _s_scale(n) * (Polynomial([-1, 0, 1]) * u_poly(n).derivative().derivative())


class GenU:
    """One member ``U_n^(M,N)`` of the generalized family.

    ``poly`` lives on [-1, 1]; ``bernstein`` is the degree-n Bernstein form of
    ``poly(2x - 1)`` on [0, 1], built on first access.
    """

    __slots__ = ("degree", "params", "poly", "_bernstein", "_lock")

    def __init__(self, degree: int, params: MassParams, poly: Polynomial):
        self.degree = degree
        self.params = params
        self.poly = poly
        self._bernstein = None
        self._lock = threading.Lock()

    @property
    def bernstein(self) -> BernsteinForm:
        if self._bernstein is None:
            with self._lock:
                if self._bernstein is None:
                    self._bernstein = gen_bernstein_form(self.degree, self.params)
        return self._bernstein

    def __call__(self, x):
        return self.poly(x)

    def __repr__(self):
        return f"GenU(n={self.degree}, M={self.params.M}, N={self.params.N})"


def _gen_poly(n: int, p: MassParams) -> Polynomial:
    out = c_norm(n) * u_poly(n)
    if p.M:
        out = out + p.M * q_poly(n)
    if p.N:
        out = out + p.N * r_poly(n)
    if p.M and p.N:
        out = out + p.M * p.N * s_poly(n)
    return out


def gen_u(n: int, p: MassParams | None = None) -> GenU:
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    p = p or MassParams()
    return GenU(n, p, _gen_poly(n, p))


def endpoint_values(n: int) -> tuple[Fraction, Fraction]:
    """``(Q_n(1), R_n(-1))`` by direct evaluation."""
    if n < 1:
        raise ValueError("endpoint values are stated for n >= 1")
    return q_poly(n)(Fraction(1)), r_poly(n)(Fraction(-1))


def endpoint_closed_form(n: int) -> tuple[Fraction, Fraction]:
    """``(n+2)(2n+1)!! / (3 2^n (n-1)!) * U_n(+-1)``."""
    if n < 1:
        raise ValueError("endpoint values are stated for n >= 1")
    k = Fraction((n + 2) * double_factorial(2 * n + 1), 3 * 2**n * factorial(n - 1))
    return k * (n + 1), k * (-1) ** n * (n + 1)


def leading_lambda(n: int, p: MassParams) -> Fraction:
    """Top expansion coefficient ``M q_n + N r_n + M N s_n``."""
    qr = Fraction(n * (n + 1) * (2 * n + 1), 6)
    s = Fraction((n + 2) * (n + 1) ** 2 * n**2 * (n - 1), 9)
    return p.M * qr + p.N * qr + p.M * p.N * s


def expansion_lambdas(n: int, p: MassParams) -> list[Fraction]:
    """Coefficients ``lam_k`` with ``U_n^(M,N) - c_n U_n = sum lam_k c_k U_k``.

    Found by back substitution from the top degree: ``c_k U_k`` has leading
    coefficient ``c_k 2^k``.
    """
    rest = gen_u(n, p).poly - c_norm(n) * u_poly(n)
    lambdas = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        lead = rest.coeff(k)
        if lead == 0:
            continue
        lam = Fraction(lead) / (c_norm(k) * 2**k)
        lambdas[k] = lam
        rest = rest - lam * c_norm(k) * u_poly(k)
    if rest.degree >= 0:
        raise ArithmeticError("triangular solve left a nonzero remainder")
    return lambdas


def theta(i: int, r: int) -> Fraction:
    """Closed form ``(2r+1)^2 C(2r,r) C(2r,2i) / (4^r (2r-2i+1)(2i+1) C(r,i))``."""
    if not 0 <= i <= r:
        raise ValueError(f"need 0 <= i <= r, got i={i}, r={r}")
    return Fraction(
        (2 * r + 1) ** 2 * binomial(2 * r, r) * binomial(2 * r, 2 * i),
        4**r * (2 * r - 2 * i + 1) * (2 * i + 1) * binomial(r, i),
    )


def theta_half_binomial(i: int, r: int) -> Fraction:
    """``C(r+1/2, i) C(r+1/2, r-i) / C(r, i)``."""
    if not 0 <= i <= r:
        raise ValueError(f"need 0 <= i <= r, got i={i}, r={r}")
    return half_binomial(r, i) * half_binomial(r, r - i) / binomial(r, i)


def theta_by_recurrence(r: int) -> list[Fraction]:
    row = [Fraction((2 * r + 1) * binomial(2 * r, r), 4**r)]
    for i in range(1, r + 1):
        row.append(Fraction(2 * r - 2 * i + 3, 2 * i + 1) * row[-1])
    return row


def _signed_theta_form(k: int) -> BernsteinForm:
    # equals c_k U_k(2x - 1) in the degree-k Bernstein basis
    return BernsteinForm((-1) ** (k - i) * theta(i, k) for i in range(k + 1))


def gen_bernstein_form(n: int, p: MassParams) -> BernsteinForm:
    """Degree-n Bernstein coefficients of ``U_n^(M,N)(2x - 1)``."""
    total = _signed_theta_form(n)
    if n == 0:
        return total
    for k, lam in enumerate(expansion_lambdas(n, p)):
        if lam:
            total = total + elevate(_signed_theta_form(k).scale(lam), n)
    return total


def gen_bernstein_form_printed(n: int, p: MassParams) -> BernsteinForm:
    """Bernstein representation with the extra ``c_r``, ``c_k`` prefactors.

    Differs from :func:`gen_bernstein_form`; used by the discrepancy report.
    """
    total = _signed_theta_form(n).scale(c_norm(n))
    if n == 0:
        return total
    for k, lam in enumerate(expansion_lambdas(n, p)):
        if lam:
            total = total + elevate(_signed_theta_form(k).scale(lam * c_norm(k)), n)
    return total


def symmetry_check(n: int, p: MassParams) -> bool:
    """``U_n^(M,N)(x) == (-1)^n U_n^(N,M)(-x)`` together with its Q/R/S consequences."""
    sign = (-1) ** n
    lhs = gen_u(n, p).poly
    rhs = sign * gen_u(n, p.swapped()).poly.reflect()
    return (
        lhs == rhs
        and q_poly(n) == sign * r_poly(n).reflect()
        and s_poly(n) == sign * s_poly(n).reflect()
    )
