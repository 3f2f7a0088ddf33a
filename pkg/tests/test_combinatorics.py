from fractions import Fraction
from math import factorial, prod

import pytest

from gencheb.combinatorics import (
    binomial,
    check_central_identity,
    check_ratio_identity,
    double_factorial,
    half_binomial,
)


@pytest.mark.parametrize("n,expected", [(0, 1), (-1, 1), (7, 105), (6, 48), (1, 1), (2, 2)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


def test_double_factorial_matches_direct_product():
    for n in range(1, 40):
        assert double_factorial(n) == prod(range(n, 0, -2))


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        double_factorial(-2)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0), (64, 32, 1832624140942590534)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize(
    "r,k,expected",
    [(1, 1, Fraction(3, 2)), (2, 2, Fraction(15, 8)), (5, 0, Fraction(1)), (0, 1, Fraction(1, 2)), (0, 2, Fraction(-1, 8))],
)
def test_half_binomial(r, k, expected):
    assert half_binomial(r, k) == expected


def test_half_binomial_denominator_is_power_of_two():
    for r in range(12):
        for k in range(r + 3):
            scaled = half_binomial(r, k) * factorial(k)
            assert scaled.denominator == 2**k or (scaled.numerator == 0)


def test_double_factorial_identities():
    for n in range(31):
        assert double_factorial(2 * n) == 2**n * factorial(n)
        assert factorial(2 * n) == double_factorial(2 * n - 1) * 2**n * factorial(n)


@pytest.mark.parametrize("n", [0, 5, 20])
def test_central_identity_examples(n):
    assert check_central_identity(n)


@pytest.mark.parametrize("n,k", [(1, 0), (6, 2), (10, 10)])
def test_ratio_identity_examples(n, k):
    assert check_ratio_identity(n, k)


def test_identities_exhaustive():
    for n in range(31):
        assert check_central_identity(n)
        for k in range(n + 1):
            assert check_ratio_identity(n, k)


def test_ratio_identity_rejects_bad_k():
    with pytest.raises(ValueError):
        check_ratio_identity(3, 4)
