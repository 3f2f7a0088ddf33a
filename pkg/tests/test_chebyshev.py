import math
from fractions import Fraction

import pytest

from gencheb.bernstein import BernsteinForm, to_monomial
from gencheb.chebyshev import (
    u_bernstein_coeffs,
    u_bernstein_coeffs_printed,
    u_derivative,
    u_eval_trig,
    u_hypergeometric,
    u_orthogonality,
    u_poly,
)
from gencheb.numerics import PiRational
from gencheb.polynomial import Polynomial

F = Fraction
PI_8 = PiRational(F(1, 8), 1)
POINTS = [F(-1), F(-2, 3), F(-1, 5), F(0), F(1, 7), F(1, 2), F(5, 6), F(1)]


@pytest.mark.parametrize("n,coeffs", [(0, [1]), (1, [0, 2]), (2, [-1, 0, 4]), (3, [0, -4, 0, 8])])
def test_u_poly(n, coeffs):
    assert u_poly(n) == Polynomial(coeffs)


def test_u_poly_against_trig_definition():
    for n in range(16):
        for k in range(101):
            x = -1 + 2 * k / 100
            exact = float(u_poly(n)(F(x)))
            assert u_eval_trig(n, x) == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_trig_examples():
    assert u_eval_trig(4, 1.0) == 5
    assert u_eval_trig(1, 0.5) == pytest.approx(1.0)
    assert u_eval_trig(3, -1.0) == -4
    with pytest.raises(ValueError):
        u_eval_trig(2, 1.5)


def test_hypergeometric_examples():
    assert u_hypergeometric(6, F(1)) == 7
    assert u_hypergeometric(2, F(0)) == -1
    assert u_hypergeometric(3, F(1, 2)) == u_poly(3)(F(1, 2))


def test_hypergeometric_exact_agreement():
    for n in range(13):
        for x in POINTS:
            assert u_hypergeometric(n, x) == u_poly(n)(x)


def test_hypergeometric_float_mode():
    assert u_hypergeometric(7, 0.3) == pytest.approx(float(u_poly(7)(F(3, 10))), rel=1e-12)


def test_endpoint_values():
    for n in range(16):
        assert u_poly(n)(1) == n + 1
        assert u_poly(n)(-1) == (-1) ** n * (n + 1)


@pytest.mark.parametrize("n,coeffs", [(0, []), (1, [2]), (2, [0, 8])])
def test_u_derivative(n, coeffs):
    assert u_derivative(n) == Polynomial(coeffs)


@pytest.mark.parametrize("n,coeffs", [(0, [1]), (1, [-2, 2]), (2, [3, -5, 3])])
def test_u_bernstein_examples(n, coeffs):
    assert u_bernstein_coeffs(n) == BernsteinForm([F(c) for c in coeffs])


def test_u_bernstein_round_trip():
    for n in range(13):
        assert to_monomial(u_bernstein_coeffs(n)) == u_poly(n).to_unit()


def test_printed_sign_fails_at_n1():
    # k-independent sign would make U_1(2x-1) constant
    printed = u_bernstein_coeffs_printed(1)
    assert printed.coeffs == (2, 2)
    assert to_monomial(printed) != u_poly(1).to_unit()


@pytest.mark.parametrize("m,n,expected", [(0, 0, PI_8), (0, 1, 0), (3, 3, PI_8)])
def test_orthogonality_examples(m, n, expected):
    assert u_orthogonality(m, n) == expected


def test_orthogonality_table():
    for m in range(11):
        for n in range(11):
            assert u_orthogonality(m, n) == (PI_8 if m == n else 0)


def test_orthogonality_float_referee():
    from gencheb.oracle import halfweight_quadrature

    v = halfweight_quadrature(lambda x: u_eval_trig(4, 2 * x - 1) ** 2)
    assert v == pytest.approx(math.pi / 8, rel=1e-13)
