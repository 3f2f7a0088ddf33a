"""Least-squares approximation on [0, 1].

Two routes: the monomial normal equations (a Hilbert system, solved in
floating point on purpose) and orthogonal projection onto the generalized
Chebyshev-II family, whose Gram matrix is diagonal.
"""
from __future__ import annotations

import math
from math import comb
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .genchebyshev import MassParams, gen_u
from .measures import inner_product
from .numerics import format_exact
from .polynomial import Domain, Polynomial

__all__ = [
    "ApproxResult",
    "hilbert_matrix",
    "hilbert_inverse",
    "hilbert_condition",
    "solve_rational",
    "fit_monomial",
    "fit_orthogonal",
    "error_functional",
]

RHS_NODES = 64
ERROR_NODES = 128


@dataclass
class ApproxResult:
    degree: int
    basis: str
    coefficients: list[float]
    l2_error: float
    condition_estimate: float
    params: MassParams | None = None
    approximant: Polynomial | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "basis": self.basis,
            "coefficients": [float(c) for c in self.coefficients],
            "l2_error": self.l2_error,
            "condition_estimate": self.condition_estimate,
        }
        if self.params is not None:
            out["M"] = format_exact(self.params.M)
            out["N"] = format_exact(self.params.N)
        return out


def hilbert_matrix(n: int) -> list[list[Fraction]]:
    """Gram matrix of ``1, x, ..., x^n`` on [0, 1]: entries ``1/(i+k+1)``."""
    return [[Fraction(1, i + k + 1) for k in range(n + 1)] for i in range(n + 1)]


def hilbert_inverse(n: int) -> list[list[int]]:
    """Exact integer inverse of :func:`hilbert_matrix` ``(n)``."""
    m = n + 1
    return [
        [
            (-1) ** (i + j) * (i + j + 1) * comb(m + i, m - j - 1) * comb(m + j, m - i - 1) * comb(i + j, i) ** 2
            for j in range(m)
        ]
        for i in range(m)
    ]


def hilbert_condition(n: int) -> float:
    """2-norm condition number of the (n+1)x(n+1) Hilbert matrix.

    Uses ``|H| |H^-1|`` with the exact inverse; a float SVD of ``H`` alone
    cannot resolve its smallest singular value once ``n`` reaches about 9.
    """
    h = np.array(hilbert_matrix(n), dtype=float)
    hinv = np.array(hilbert_inverse(n), dtype=float)
    return float(np.linalg.norm(h, 2) * np.linalg.norm(hinv, 2))


def solve_rational(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Exact Gaussian elimination; the referee for the float Hilbert solve."""
    n = len(b)
    m = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _legendre_unit(npts: int):
    x, w = np.polynomial.legendre.leggauss(npts)
    return (x + 1) / 2, w / 2


def _sample(f: Callable, xs: np.ndarray) -> np.ndarray:
    return np.array([float(f(float(x))) for x in xs])


def error_functional(f: Callable, approximant, npts: int = ERROR_NODES) -> float:
    """``int_0^1 (f(x) - p(x))^2 dx`` by Gauss-Legendre quadrature."""
    xs, ws = _legendre_unit(npts)
    resid = _sample(f, xs) - _sample(approximant, xs)
    return float(np.dot(ws, resid * resid))


def fit_monomial(f: Callable, n: int) -> ApproxResult:
    """Least squares in ``1, x, ..., x^n`` through the Hilbert normal equations."""
    xs, ws = _legendre_unit(RHS_NODES)
    fx = _sample(f, xs)
    rhs = np.array([np.dot(ws, fx * xs**i) for i in range(n + 1)])
    h = np.array(hilbert_matrix(n), dtype=float)
    try:
        coeffs = np.linalg.solve(h, rhs)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(f"Hilbert solve failed at degree {n}: {exc}") from exc
    poly = Polynomial(coeffs.tolist(), Domain.UNIT)
    err = error_functional(f, poly)
    return ApproxResult(
        degree=n,
        basis="monomial",
        coefficients=coeffs.tolist(),
        l2_error=math.sqrt(max(err, 0.0)),
        condition_estimate=hilbert_condition(n),
        approximant=poly,
    )


def _weighted_rule(npts: int):
    h = math.pi / (npts + 1)
    k = np.arange(1, npts + 1)
    nodes = np.cos(k * h)
    weights = 2.0 / (npts + 1) * np.sin(k * h) ** 2
    return nodes, weights


def fit_orthogonal(f: Callable, n: int, p: MassParams | None = None) -> ApproxResult:
    """Projection of ``f`` onto ``U_0^(M,N), ..., U_n^(M,N)``.

    ``f`` is given on [0, 1] and pulled to [-1, 1]. Coefficient ``a_i`` does not
    depend on ``n``, so raising the degree only appends entries. ``l2_error``
    is measured in the weighted norm the projection minimizes.
    """
    p = p or MassParams()
    g = lambda t: float(f((t + 1.0) / 2.0))  # noqa: E731
    nodes, weights = _weighted_rule(RHS_NODES)
    gx = np.array([g(t) for t in nodes])
    g_left, g_right = g(-1.0), g(1.0)
    mass_m, mass_n = float(p.M), float(p.N)

    def weighted_dot(u: np.ndarray, v: np.ndarray, ul, vl, ur, vr) -> float:
        return float(np.dot(weights, u * v)) + mass_m * ul * vl + mass_n * ur * vr

    coeffs: list[float] = []
    norms: list[float] = []
    approx_canon = Polynomial((), Domain.CANONICAL)
    for i in range(n + 1):
        ui = gen_u(i, p).poly
        norm = inner_product(ui, ui, p)
        assert norm > 0
        uf = ui.as_float()
        ux = np.array([uf(t) for t in nodes])
        a = weighted_dot(gx, ux, g_left, uf(-1.0), g_right, uf(1.0)) / float(norm)
        coeffs.append(a)
        norms.append(float(norm))
        approx_canon = approx_canon + a * uf

    px = np.array([approx_canon(t) for t in nodes])
    r = gx - px
    err2 = weighted_dot(r, r, g_left - approx_canon(-1.0), g_left - approx_canon(-1.0),
                        g_right - approx_canon(1.0), g_right - approx_canon(1.0))
    return ApproxResult(
        degree=n,
        basis="orthogonal",
        coefficients=coeffs,
        l2_error=math.sqrt(max(err2, 0.0)),
        condition_estimate=max(norms) / min(norms),
        params=p,
        approximant=approx_canon.to_unit(),
    )
