"""Bernstein basis algebra on [0, 1]."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial
from .polynomial import Domain, Polynomial

__all__ = [
    "BernsteinForm",
    "basis_eval",
    "eval_form",
    "recurrence_check",
    "product",
    "elevate",
    "derivative",
    "integral_basis",
    "to_monomial",
    "from_monomial",
]


@dataclass(frozen=True)
class BernsteinForm:
    """``sum(coeffs[k] * B_k^n(x))`` with ``n = len(coeffs) - 1``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a Bernstein form needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return eval_form(self, x)

    def __add__(self, other: BernsteinForm) -> BernsteinForm:
        n = max(self.degree, other.degree)
        a, b = elevate(self, n), elevate(other, n)
        return BernsteinForm(p + q for p, q in zip(a.coeffs, b.coeffs))

    def scale(self, c) -> BernsteinForm:
        return BernsteinForm(c * v for v in self.coeffs)

    @classmethod
    def basis(cls, n: int, k: int) -> BernsteinForm:
        return cls(Fraction(int(i == k)) for i in range(n + 1))


def basis_eval(n: int, k: int, x):
    """``B_k^n(x)``; zero for ``k`` outside ``[0, n]``."""
    if k < 0 or k > n:
        return 0 * x
    return binomial(n, k) * x**k * (1 - x) ** (n - k)


def eval_form(f: BernsteinForm, x):
    """Evaluate by repeated convex averaging (de Casteljau)."""
    b = list(f.coeffs)
    y = 1 - x
    for stage in range(f.degree):
        for k in range(f.degree - stage):
            b[k] = y * b[k] + x * b[k + 1]
    return b[0]


def recurrence_check(n: int, k: int, x) -> bool:
    """``B_k^n = (1 - x) B_k^{n-1} + x B_{k-1}^{n-1}`` at ``x``."""
    if n < 1:
        raise ValueError("the recurrence needs n >= 1")
    lhs = basis_eval(n, k, x)
    rhs = (1 - x) * basis_eval(n - 1, k, x) + x * basis_eval(n - 1, k - 1, x)
    return lhs == rhs


def product(i: int, n: int, j: int, m: int) -> tuple[int, int, Fraction]:
    """``B_i^n * B_j^m == factor * B_{i+j}^{n+m}``; returns (index, degree, factor)."""
    if not (0 <= i <= n and 0 <= j <= m):
        raise ValueError(f"indices out of range: B_{i}^{n} * B_{j}^{m}")
    factor = Fraction(binomial(n, i) * binomial(m, j), binomial(n + m, i + j))
    return i + j, n + m, factor


def elevate(f: BernsteinForm, n: int) -> BernsteinForm:
    """Rewrite a degree-r form in the degree-n basis, n >= r."""
    r = f.degree
    if n < r:
        raise ValueError(f"cannot elevate degree {r} to lower degree {n}")
    if n == r:
        return f
    out = [0] * (n + 1)
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        ck = binomial(r, k)
        for i in range(k, n - r + k + 1):
            out[i] += c * Fraction(ck * binomial(n - r, i - k), binomial(n, i))
    return BernsteinForm(out)


def derivative(f: BernsteinForm) -> BernsteinForm:
    """Derivative as a degree ``n-1`` form; a constant maps to the zero constant."""
    n = f.degree
    if n == 0:
        return BernsteinForm([0 * f.coeffs[0]])
    c = f.coeffs
    return BernsteinForm(n * (c[k + 1] - c[k]) for k in range(n))


def integral_basis(n: int, k: int) -> Fraction:
    """``int_0^1 B_k^n(x) dx``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return Fraction(1, n + 1)


def to_monomial(f: BernsteinForm) -> Polynomial:
    n = f.degree
    out = [0] * (n + 1)
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        nk = binomial(n, k)
        # C(n,k) x^k (1-x)^(n-k) = sum_j C(n,k) C(n-k, j-k) (-1)^(j-k) x^j
        for j in range(k, n + 1):
            out[j] += c * nk * binomial(n - k, j - k) * (-1) ** (j - k)
    return Polynomial(out, Domain.UNIT)


def from_monomial(p: Polynomial, n: int | None = None) -> BernsteinForm:
    """Bernstein coefficients of a [0,1] polynomial at degree ``n``."""
    if p.domain is not Domain.UNIT:
        raise ValueError("from_monomial expects a polynomial on [0,1]")
    if n is None:
        n = max(p.degree, 0)
    if p.degree > n:
        raise ValueError(f"degree {p.degree} polynomial does not fit in degree {n}")
    # x^j = sum_{k>=j} C(k,j)/C(n,j) B_k^n
    out = []
    for k in range(n + 1):
        acc = 0
        for j in range(min(k, p.degree) + 1):
            a = p.coeffs[j]
            if a != 0:
                acc += a * Fraction(binomial(k, j), binomial(n, j))
        out.append(acc)
    return BernsteinForm(out)
