"""Independent referees for the exact paths.

Nothing here reuses the expansion code of the modules it checks: Chebyshev
coefficients come from the explicit sum, shifts are done by Horner
composition, and weighted integrals go through the ``x^i (1-x)^(d-i)``
re-expansion instead of the monomial route.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .genchebyshev import MassParams, gen_u
from .numerics import PiRational, beta_half, format_exact
from .polynomial import Domain, Polynomial

__all__ = [
    "DiscrepancyRecord",
    "integrate_halfweight_poly",
    "brute_lambda",
    "theorem2_direct",
    "halfweight_quadrature",
    "u_coeffs_explicit",
]

PI_OVER_8 = PiRational(Fraction(1, 8), 1)


@dataclass
class DiscrepancyRecord:
    identity: str
    parameters: dict
    printed_value: object
    corrected_value: object
    ratio_or_diff: object = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, (Fraction, PiRational, int)) and not isinstance(v, bool):
                return format_exact(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        out = {
            "identity": self.identity,
            "parameters": {k: enc(v) for k, v in self.parameters.items()},
            "printed_value": enc(self.printed_value),
            "corrected_value": enc(self.corrected_value),
            "ratio_or_diff": enc(self.ratio_or_diff),
        }
        if self.note:
            out["note"] = self.note
        return out


def u_coeffs_explicit(n: int) -> list[Fraction]:
    """``U_n(x) = sum_j (-1)^j C(n-j, j) (2x)^(n-2j)``, ascending monomials."""
    out = [Fraction(0)] * (n + 1)
    for j in range(n // 2 + 1):
        out[n - 2 * j] = Fraction((-1) ** j * comb(n - j, j) * 2 ** (n - 2 * j))
    return out


def _mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _shift_horner(coeffs) -> list:
    # p(2x - 1) by Horner composition
    acc: list = []
    for c in reversed(list(coeffs)):
        acc = _mul(acc, [Fraction(-1), Fraction(2)]) if acc else []
        if acc:
            acc[0] += c
        else:
            acc = [Fraction(c)]
    return acc


def _c(k: int) -> Fraction:
    return Fraction(factorial(2 * k + 1), 4**k * factorial(k) * factorial(k + 1))


def integrate_halfweight_poly(p: Polynomial) -> PiRational:
    """``int_0^1 x^(1/2) (1-x)^(1/2) p(x) dx`` for a [0,1] polynomial."""
    if p.domain is not Domain.UNIT:
        raise ValueError("expected a polynomial on [0,1]")
    d = max(p.degree, 0)
    # x^j = x^j (x + (1-x))^(d-j) = sum_i C(d-j, i-j) x^i (1-x)^(d-i)
    e = [Fraction(0)] * (d + 1)
    for j, a in enumerate(p.coeffs):
        for i in range(j, d + 1):
            e[i] += a * comb(d - j, i - j)
    total = PiRational(Fraction(0), 1)
    for i, w in enumerate(e):
        if w:
            total = total + w * beta_half(2 * i + 3, 2 * (d - i) + 3)
    return total


def brute_lambda(n: int, p: MassParams) -> list[Fraction]:
    """Expansion coefficients by projection on ``U_k(2x-1)`` (norm pi/8)."""
    g = gen_u(n, p).poly
    corr = [Fraction(a) - _c(n) * b for a, b in zip(g.coeffs + (0,) * (n + 1), u_coeffs_explicit(n))]
    corr_unit = _shift_horner(corr)
    out = []
    for k in range(n + 1):
        uk = _shift_horner(u_coeffs_explicit(k))
        val = integrate_halfweight_poly(Polynomial(_mul(corr_unit, uk), Domain.UNIT))
        out.append((val / (PI_OVER_8 * _c(k))).coeff if not val.is_zero() else Fraction(0))
    return out


def theorem2_direct(n: int, r: int, i: int, p: MassParams) -> PiRational:
    """The weighted Bernstein x generalized-U integral by brute expansion."""
    b = [Fraction(0)] * (n + 1)
    for j in range(r, n + 1):
        b[j] = Fraction(comb(n, r) * comb(n - r, j - r) * (-1) ** (j - r))
    u = _shift_horner(gen_u(i, p).poly.coeffs)
    return integrate_halfweight_poly(Polynomial(_mul(b, u), Domain.UNIT))


def halfweight_quadrature(f, npts: int = 200) -> float:
    """``int_0^1 sqrt(x(1-x)) f(x) dx`` by an ``npts``-node Chebyshev-II rule."""
    h = math.pi / (npts + 1)
    total = 0.0
    for k in range(1, npts + 1):
        s = math.sin(k * h)
        total += s * s * f((1 + math.cos(k * h)) / 2)
    return total * math.pi / (npts + 1) / 4
