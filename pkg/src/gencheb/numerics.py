"""Scalar tower and the Beta (Eulerian) integral.

Three kinds of scalar flow through the package:

* ``Fraction``   -- exact rational,
* ``PiRational`` -- exact ``q * pi**p`` with ``p`` in ``{0, 1}``,
* ``float``      -- double precision, no exactness claims.

Polynomial and Bernstein routines are written against ordinary arithmetic,
so they accept either ``Fraction`` or ``float`` arguments unchanged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .combinatorics import double_factorial

__all__ = [
    "PiRational",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "parse_exact",
    "format_exact",
    "to_float",
    "beta_half",
    "beta_float",
]


@dataclass(frozen=True)
class PiRational:
    """Exact value ``coeff * pi**pi_power``.

    Sums are only defined between equal powers of pi and products may not
    produce ``pi**2``; both raise ``ValueError``.
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        if self.pi_power not in (0, 1):
            raise ValueError(f"pi_power must be 0 or 1, got {self.pi_power}")
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", Fraction(self.coeff))

    @classmethod
    def pi(cls, coeff=1) -> PiRational:
        return cls(Fraction(coeff), 1)

    def _coerce(self, other) -> PiRational | None:
        if isinstance(other, PiRational):
            return other
        if isinstance(other, Rational):
            return PiRational(Fraction(other), 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.pi_power != self.pi_power:
            raise ValueError(f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms")
        return PiRational(self.coeff + other.coeff, self.pi_power)

    def __radd__(self, other):
        # lets builtin sum() start from the int 0
        if isinstance(other, int) and other == 0:
            return self
        return self.__add__(other)

    def __neg__(self):
        return PiRational(-self.coeff, self.pi_power)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self).__radd__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        power = self.pi_power + other.pi_power
        if power > 1:
            raise ValueError("product would contain pi^2")
        return PiRational(self.coeff * other.coeff, power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            if other.pi_power > self.pi_power:
                raise ValueError("quotient would contain pi^-1")
            return PiRational(self.coeff / other.coeff, self.pi_power - other.pi_power)
        if isinstance(other, Rational):
            return PiRational(self.coeff / Fraction(other), self.pi_power)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.coeff == 0 and other.coeff == 0:
            return True
        return self.pi_power == other.pi_power and self.coeff == other.coeff

    def __hash__(self):
        if self.coeff == 0:
            return hash(0)
        return hash((self.coeff, self.pi_power))

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __float__(self):
        return float(self.coeff) * (math.pi if self.pi_power else 1.0)

    def __str__(self):
        return format_exact(self)

    def __repr__(self):
        return f"PiRational({format_exact(self)!r})"


def as_fraction(value) -> Fraction:
    """Exact conversion; strings may be ``"p/q"``, integers or finite decimals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"not a finite number: {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


def parse_rational(text: str) -> Fraction:
    return as_fraction(text.strip())


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_exact(value) -> str:
    """Serialize an exact scalar as ``"p/q"`` or ``"p/q*pi"``."""
    if isinstance(value, PiRational):
        text = format_rational(value.coeff)
        return text + "*pi" if value.pi_power else text
    return format_rational(value)


def parse_exact(text: str) -> Fraction | PiRational:
    """Inverse of :func:`format_exact`."""
    text = text.strip()
    if text.endswith("*pi"):
        return PiRational(parse_rational(text[:-3]), 1)
    return parse_rational(text)


def to_float(value) -> float:
    return float(value)


def _gamma_twice(a_twice: int) -> tuple[Fraction, int]:
    # Gamma(a_twice/2) = q * sqrt(pi)**p, returned as (q, p)
    if a_twice % 2 == 0:
        return Fraction(math.factorial(a_twice // 2 - 1)), 0
    m = (a_twice - 1) // 2
    return Fraction(double_factorial(2 * m - 1), 2**m), 1


def beta_half(a_twice: int, b_twice: int) -> PiRational:
    """Exact ``B(a_twice/2, b_twice/2)`` for integer or half-odd arguments.

    Two half-odd arguments give a rational multiple of pi, two integers a
    rational. A mixed pair has no finite pi-rational form and is rejected.
    """
    if a_twice < 1 or b_twice < 1:
        raise ValueError(f"Beta arguments must be positive, got {a_twice}/2, {b_twice}/2")
    if (a_twice - b_twice) % 2:
        raise ValueError(
            f"B({a_twice}/2, {b_twice}/2) mixes integer and half-integer arguments; "
            "use beta_float"
        )
    ga, pa = _gamma_twice(a_twice)
    gb, pb = _gamma_twice(b_twice)
    gab = math.factorial((a_twice + b_twice) // 2 - 1)
    # (sqrt pi)^(pa+pb) is pi^0 or pi^1
    return PiRational(ga * gb / gab, (pa + pb) // 2)


def beta_float(x: float, y: float) -> float:
    """Beta function for positive real arguments."""
    if not (x > 0 and y > 0):
        raise ValueError(f"Beta arguments must be positive, got ({x}, {y})")
    if x + y < 170.0:
        return math.gamma(x) * math.gamma(y) / math.gamma(x + y)
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))
