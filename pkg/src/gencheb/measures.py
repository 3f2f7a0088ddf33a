"""Chebyshev-II measure with endpoint atoms and the weighted Bernstein integral.

The measure is ``(2/pi) sqrt(1 - x^2) dx + M delta(x+1) + N delta(x-1)`` on
[-1, 1]; its continuous part has unit mass.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .combinatorics import binomial, half_binomial
from .chebyshev import u_poly as _u
from .genchebyshev import MassParams, c_norm, expansion_lambdas, gen_u
from .numerics import PiRational, beta_half
from .polynomial import Domain, Polynomial

__all__ = [
    "PointMassMeasure",
    "moment",
    "inner_product",
    "quadrature_oracle",
    "gram_schmidt_reference",
    "gram_schmidt_multiples",
    "theorem2_integral",
    "theorem2_integral_printed",
    "lambdas_by_quadrature",
]


@lru_cache(maxsize=None)
def moment(m: int) -> Fraction:
    """``(2/pi) int_{-1}^{1} x^m sqrt(1 - x^2) dx``."""
    if m % 2:
        return Fraction(0)
    # u = x^2 turns the even moment into B(m/2 + 1/2, 3/2)
    b = beta_half(m + 1, 3)
    return 2 * b.coeff


def _check_canonical(*polys: Polynomial):
    for p in polys:
        if p.domain is not Domain.CANONICAL:
            raise ValueError(f"inner product is defined on [-1,1], got {p.domain.value}")


def inner_product(f: Polynomial, g: Polynomial, p: MassParams):
    _check_canonical(f, g)
    total = 0
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b == 0 or (i + j) % 2:
                continue
            total += a * b * moment(i + j)
    if p.M:
        total += p.M * f(-1) * g(-1)
    if p.N:
        total += p.N * f(1) * g(1)
    return total


class PointMassMeasure:
    """Callable wrapper bundling the measure parameters."""

    normalization = Fraction(2)  # times 1/pi on the continuous part

    def __init__(self, params: MassParams | None = None):
        self.params = params or MassParams()

    def moment(self, m: int) -> Fraction:
        return moment(m)

    def inner(self, f: Polynomial, g: Polynomial):
        return inner_product(f, g, self.params)

    def quadrature(self, f: Callable[[float], float], npts: int = 64) -> float:
        return quadrature_oracle(f, self.params, npts)


def quadrature_oracle(f: Callable[[float], float], p: MassParams, npts: int = 64) -> float:
    """Gauss-Chebyshev-II rule plus endpoint atoms.

    Exact (up to rounding) for polynomial ``f`` of degree ``<= 2*npts - 1``.
    """
    if npts < 2:
        raise ValueError("need at least two nodes")
    h = math.pi / (npts + 1)
    total = 0.0
    for k in range(1, npts + 1):
        s = math.sin(k * h)
        total += s * s * f(math.cos(k * h))
    total *= 2.0 / (npts + 1)
    return total + float(p.M) * f(-1.0) + float(p.N) * f(1.0)


def gram_schmidt_reference(max_deg: int, p: MassParams) -> list[Polynomial]:
    """Orthogonalize ``1, x, ..., x^max_deg`` (no normalization)."""
    basis: list[Polynomial] = []
    norms: list[Fraction] = []
    for d in range(max_deg + 1):
        v = Polynomial([Fraction(0)] * d + [Fraction(1)])
        for b, nb in zip(basis, norms):
            v = v - (inner_product(v, b, p) / nb) * b
        nv = inner_product(v, v, p)
        if nv <= 0:
            raise ArithmeticError(f"nonpositive norm at degree {d}")
        basis.append(v)
        norms.append(nv)
    return basis


def gram_schmidt_multiples(max_deg: int, p: MassParams) -> list[Fraction]:
    """Ratios ``gen_u(n).poly / gs[n]``; raises if any pair is not proportional."""
    out = []
    for n, v in enumerate(gram_schmidt_reference(max_deg, p)):
        g = gen_u(n, p).poly
        ratio = Fraction(g.coeff(n)) / v.coeff(n)
        if ratio * v != g or ratio == 0:
            raise ArithmeticError(f"degree {n}: Gram-Schmidt vector not proportional")
        out.append(ratio)
    return out


def _beta_row(n: int, r: int, k: int) -> PiRational:
    # binom(n,r) sum_j (-1)^(k-j) C(k+1/2,j) C(k+1/2,k-j) B(r+j+3/2, n+k-r-j+3/2)
    acc = PiRational(Fraction(0), 1)
    for j in range(k + 1):
        w = (-1) ** (k - j) * half_binomial(k, j) * half_binomial(k, k - j)
        acc = acc + w * beta_half(2 * (r + j) + 3, 2 * (n + k - r - j) + 3)
    return binomial(n, r) * acc


def _theorem2(n: int, r: int, i: int, p: MassParams, printed: bool) -> PiRational:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if i < 0:
        raise ValueError(f"degree must be nonnegative, got i={i}")
    lead = c_norm(i) if printed else 1
    total = lead * _beta_row(n, r, i)
    if i == 0:
        return total
    for d, lam in enumerate(expansion_lambdas(i, p)):
        if lam:
            scale = lam * c_norm(d) if printed else lam
            total = total + scale * _beta_row(n, r, d)
    return total


def theorem2_integral(n: int, r: int, i: int, p: MassParams) -> PiRational:
    """``int_0^1 sqrt(x(1-x)) B_r^n(x) U_i^(M,N)(2x-1) dx`` as a double Beta sum."""
    return _theorem2(n, r, i, p, printed=False)


def theorem2_integral_printed(n: int, r: int, i: int, p: MassParams) -> PiRational:
    """The same sum carrying the extra ``c_i``/``c_d`` prefactors (for diffing)."""
    return _theorem2(n, r, i, p, printed=True)


def lambdas_by_quadrature(n: int, p: MassParams, npts: int = 64) -> list[float]:
    """Float cross-check of :func:`expansion_lambdas` by projection.

    Under the continuous part alone ``c_k U_k`` has norm ``c_k^2``, so
    ``lam_k = <rest, U_k> / c_k``.
    """
    rest = (gen_u(n, p).poly - c_norm(n) * _u(n)).as_float()
    out = []
    for k in range(n + 1):
        uk = _u(k).as_float()
        val = quadrature_oracle(lambda x: rest(x) * uk(x), MassParams(), npts)
        out.append(val / float(c_norm(k)))
    return out
