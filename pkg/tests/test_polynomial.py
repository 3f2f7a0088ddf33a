
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gencheb.polynomial import Domain, Polynomial

coeff_lists = st.lists(st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100), max_size=7)


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial([0, 0]).degree == -1


def test_domain_mismatch_is_error():
    with pytest.raises(ValueError):
        Polynomial([1], Domain.UNIT) + Polynomial([1])


def test_shift_examples():
    # 4x^2 - 1 at 2x - 1 is 16x^2 - 16x + 3
    u2 = Polynomial([-1, 0, 4])
    assert u2.to_unit() == Polynomial([3, -16, 16], Domain.UNIT)
    with pytest.raises(ValueError):
        u2.to_unit().to_unit()


@given(coeff_lists, st.fractions(max_denominator=30).filter(lambda q: abs(q) <= 1))
def test_shift_round_trip_and_values(cs, x):
    p = Polynomial(cs)
    assert p.to_unit().to_canonical() == p
    assert p.to_unit()((x + 1) / 2) == p(x)


@given(coeff_lists, coeff_lists, st.fractions(max_denominator=30))
def test_ring_operations_pointwise(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.reflect()(x) == p(-x)


def test_derivative():
    assert Polynomial([5, 3, 2]).derivative() == Polynomial([3, 4])
    assert Polynomial([7]).derivative().degree == -1


def test_float_coefficients():
    p = Polynomial([0.5, 1.5])
    assert p(2.0) == 3.5
    assert p.to_unit().to_canonical() == p
