"""Dense univariate polynomials in the monomial basis."""
from __future__ import annotations

import enum
from fractions import Fraction
from math import comb


class Domain(enum.Enum):
    CANONICAL = "[-1,1]"
    UNIT = "[0,1]"


class Polynomial:
    """Monomial coefficients (ascending) tagged with the interval they live on.

    Coefficients may be ``Fraction`` or ``float``; arithmetic stays in
    whatever type the coefficients carry. Trailing zeros are trimmed, so the
    zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs=(), domain: Domain = Domain.CANONICAL):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.domain = domain

    @classmethod
    def constant(cls, c, domain: Domain = Domain.CANONICAL) -> Polynomial:
        return cls([c], domain)

    @classmethod
    def x(cls, domain: Domain = Domain.CANONICAL) -> Polynomial:
        return cls([0, 1], domain)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Polynomial):
        if other.domain is not self.domain:
            raise ValueError(f"domain mismatch: {self.domain.value} vs {other.domain.value}")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.domain is other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.domain))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Polynomial([{body}], {self.domain.name})"

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.domain)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)], self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs], self.domain)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial((), self.domain)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.domain)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs) if i], self.domain)

    def reflect(self) -> Polynomial:
        """``p(-x)``."""
        return Polynomial([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.domain)

    def compose_affine(self, a, b) -> list:
        """Coefficients of ``p(a*x + b)``; no domain bookkeeping."""
        out = [0] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for i in range(j + 1):
                out[i] += c * comb(j, i) * a**i * b ** (j - i)
        return out

    def to_unit(self) -> Polynomial:
        """Pull a canonical polynomial back to [0,1]: ``x -> p(2x - 1)``."""
        if self.domain is not Domain.CANONICAL:
            raise ValueError("to_unit expects a polynomial on [-1,1]")
        return Polynomial(self.compose_affine(2, -1), Domain.UNIT)

    def to_canonical(self) -> Polynomial:
        """Inverse of :meth:`to_unit`: ``t -> p((t + 1)/2)``."""
        if self.domain is not Domain.UNIT:
            raise ValueError("to_canonical expects a polynomial on [0,1]")
        half = Fraction(1, 2)
        if any(isinstance(c, float) for c in self.coeffs):
            half = 0.5
        return Polynomial(self.compose_affine(half, half), Domain.CANONICAL)

    def map(self, fn) -> Polynomial:
        return Polynomial([fn(c) for c in self.coeffs], self.domain)

    def as_float(self) -> Polynomial:
        return self.map(float)
