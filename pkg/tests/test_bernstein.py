from fractions import Fraction

import pytest
import sympy as sp

from gencheb.bernstein import (
    BernsteinForm,
    basis_eval,
    derivative,
    elevate,
    eval_form,
    from_monomial,
    integral_basis,
    product,
    recurrence_check,
    to_monomial,
)
from gencheb.polynomial import Domain, Polynomial

F = Fraction
X = sp.Symbol("x")
SAMPLES = [F(k, 11) for k in range(1, 11)]


def sym_basis(n, k):
    return sp.binomial(n, k) * X**k * (1 - X) ** (n - k)


def sym_coeffs(expr, n):
    poly = sp.Poly(sp.expand(expr), X)
    return [F(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in reversed(poly.all_coeffs())]


@pytest.mark.parametrize("n,k,x,expected", [(2, 1, F(1, 2), F(1, 2)), (4, 0, F(0), 1), (3, 5, F(1, 4), 0), (0, 0, F(1, 3), 1)])
def test_basis_eval(n, k, x, expected):
    assert basis_eval(n, k, x) == expected


@pytest.mark.parametrize(
    "coeffs,x,expected",
    [([1, 1, 1], F(1, 3), 1), ([0, 1], F(3, 4), F(3, 4)), ([1, 0, 0], F(1, 2), F(1, 4))],
)
def test_eval_form(coeffs, x, expected):
    assert eval_form(BernsteinForm([F(c) for c in coeffs]), x) == expected


def test_eval_form_matches_direct_sum():
    f = BernsteinForm([F(k * k - 2, k + 3) for k in range(8)])
    for x in SAMPLES:
        assert eval_form(f, x) == sum(c * basis_eval(7, k, x) for k, c in enumerate(f.coeffs))


@pytest.mark.parametrize("n,k,x", [(1, 0, F(1, 2)), (5, 2, F(1, 3)), (8, 8, F(2, 7))])
def test_recurrence(n, k, x):
    assert recurrence_check(n, k, x)


def test_b00_is_one():
    # the definition gives B_0^0 = 1; the recurrence only needs the k<0, k>n zeros
    assert basis_eval(0, 0, F(1, 2)) == 1
    assert all(recurrence_check(n, k, x) for n in range(1, 10) for k in range(-1, n + 2) for x in SAMPLES[:3])


@pytest.mark.parametrize(
    "args,expected",
    [((0, 1, 0, 1), (0, 2, 1)), ((1, 1, 1, 1), (2, 2, 1)), ((1, 2, 1, 2), (2, 4, F(2, 3)))],
)
def test_product_examples(args, expected):
    assert product(*args) == expected


def test_product_against_symbolic_expansion():
    for n in range(7):
        for m in range(7):
            for i in range(n + 1):
                for j in range(m + 1):
                    k, d, f = product(i, n, j, m)
                    lhs = sym_basis(n, i) * sym_basis(m, j)
                    rhs = sp.Rational(f.numerator, f.denominator) * sym_basis(d, k)
                    assert sp.expand(lhs - rhs) == 0


def test_product_rejects_bad_index():
    with pytest.raises(ValueError):
        product(3, 2, 0, 1)


def test_elevate_examples():
    assert elevate(BernsteinForm([F(1), F(0)]), 2).coeffs == (1, F(1, 2), 0)
    assert elevate(BernsteinForm([F(0), F(1)]), 2).coeffs == (0, F(1, 2), 1)
    f = BernsteinForm([F(2), F(-1), F(5)])
    assert elevate(f, 2) == f
    with pytest.raises(ValueError):
        elevate(f, 1)


def test_elevate_preserves_values():
    for r in range(9):
        f = BernsteinForm([F((-1) ** k * (k + 1), k + 2) for k in range(r + 1)])
        for n in range(r, 13):
            g = elevate(f, n)
            assert g.degree == n
            assert all(eval_form(f, x) == eval_form(g, x) for x in SAMPLES)


def test_derivative_examples():
    assert derivative(BernsteinForm([F(0), F(1)])).coeffs == (1,)
    d = derivative(BernsteinForm([F(1), F(0), F(0)]))
    assert to_monomial(d) == Polynomial([-2, 2], Domain.UNIT)
    assert to_monomial(derivative(BernsteinForm([F(1)] * 5))).degree == -1
    assert derivative(BernsteinForm([F(4)])).coeffs == (0,)


def test_derivative_commutes_with_monomial_conversion():
    for n in range(1, 16):
        f = BernsteinForm([F(k * k - 3, k + 1) for k in range(n + 1)])
        assert to_monomial(derivative(f)) == to_monomial(f).derivative()


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (5, 2, F(1, 6)), (10, 10, F(1, 11))])
def test_integral_examples(n, k, expected):
    assert integral_basis(n, k) == expected


def test_integral_against_monomial_integration():
    for n in range(16):
        for k in range(n + 1):
            mono = to_monomial(BernsteinForm.basis(n, k))
            assert integral_basis(n, k) == sum(F(c) / (j + 1) for j, c in enumerate(mono.coeffs))
    with pytest.raises(ValueError):
        integral_basis(2, 3)


def test_monomial_conversion_examples():
    assert to_monomial(BernsteinForm([F(0), F(1)])) == Polynomial([0, 1], Domain.UNIT)
    assert from_monomial(Polynomial([1], Domain.UNIT), 3).coeffs == (1, 1, 1, 1)
    assert to_monomial(BernsteinForm([F(1), F(0), F(0)])) == Polynomial([1, -2, 1], Domain.UNIT)
    with pytest.raises(ValueError):
        from_monomial(Polynomial([1, 2, 3], Domain.UNIT), 1)


def test_to_monomial_matches_sympy():
    for n in range(9):
        coeffs = [F(3 * k - 4, k + 2) for k in range(n + 1)]
        expr = sum(sp.Rational(c.numerator, c.denominator) * sym_basis(n, k) for k, c in enumerate(coeffs))
        expected = Polynomial(sym_coeffs(expr, n), Domain.UNIT)
        assert to_monomial(BernsteinForm(coeffs)) == expected


def test_round_trip():
    for n in range(13):
        f = BernsteinForm([F(k**3 - 5, 2 * k + 1) for k in range(n + 1)])
        assert from_monomial(to_monomial(f), n) == f
        p = Polynomial([F(j + 1, j + 2) for j in range(n + 1)], Domain.UNIT)
        assert to_monomial(from_monomial(p, n + 2)) == p


def test_partition_of_unity_and_symmetry():
    for n in range(16):
        for x in SAMPLES:
            assert sum(basis_eval(n, k, x) for k in range(n + 1)) == 1
            for k in range(n + 1):
                assert basis_eval(n, k, x) == basis_eval(n, n - k, 1 - x)


def test_nonnegative_float():
    for n in range(16):
        for i in range(101):
            x = i / 100
            assert all(basis_eval(n, k, x) >= 0 for k in range(n + 1))


def test_float_mode_eval():
    f = BernsteinForm([0.25, -1.0, 2.0])
    assert eval_form(f, 0.3) == pytest.approx(float(eval_form(BernsteinForm([F(1, 4), F(-1), F(2)]), F(3, 10))))
