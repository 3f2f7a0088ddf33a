import math
from fractions import Fraction

import numpy as np
import pytest

from gencheb.approx import (
    error_functional,
    fit_monomial,
    fit_orthogonal,
    hilbert_condition,
    hilbert_inverse,
    hilbert_matrix,
    solve_rational,
)
from gencheb.genchebyshev import MASS_GRID, MassParams, gen_u
from gencheb.polynomial import Domain, Polynomial

F = Fraction

# frozen from hilbert_condition(9); agrees with a 50-digit SVD and with power iteration below
HILBERT_COND_9 = 1.6026286870217e13


def test_hilbert_examples():
    assert hilbert_matrix(0) == [[1]]
    assert hilbert_matrix(1) == [[1, F(1, 2)], [F(1, 2), F(1, 3)]]
    assert hilbert_matrix(2)[2][2] == F(1, 5)


def test_hilbert_is_monomial_gram_matrix():
    h = hilbert_matrix(5)
    for i in range(6):
        for k in range(6):
            # int_0^1 x^i x^k dx
            assert h[i][k] == F(1, i + k + 1)


def test_condition_growth():
    conds = [hilbert_condition(n) for n in range(12)]
    assert all(b > a for a, b in zip(conds, conds[1:]))
    assert conds[9] > 1e10
    assert conds[9] == pytest.approx(HILBERT_COND_9, rel=1e-9)


def test_condition_by_power_iteration():
    h = np.array(hilbert_matrix(9), dtype=float)
    inv = np.array(solve_inverse(hilbert_matrix(9)), dtype=float)

    def top_eig(a):
        v = np.ones(a.shape[0])
        for _ in range(500):
            v = a @ v
            v /= np.linalg.norm(v)
        return float(v @ a @ v)

    assert top_eig(h) * top_eig(inv) == pytest.approx(HILBERT_COND_9, rel=1e-6)


def solve_inverse(a):
    n = len(a)
    cols = [solve_rational(a, [F(int(i == j)) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def test_hilbert_inverse_closed_form():
    for n in range(8):
        assert [[F(v) for v in row] for row in hilbert_inverse(n)] == solve_inverse(hilbert_matrix(n))


def test_solve_rational():
    h = hilbert_matrix(4)
    x = [F(1), F(-2), F(3, 5), F(0), F(7)]
    b = [sum(h[i][k] * x[k] for k in range(5)) for i in range(5)]
    assert solve_rational(h, b) == x


def test_fit_monomial_examples():
    r = fit_monomial(lambda x: x, 3)
    assert np.allclose(r.coefficients, [0, 1, 0, 0], atol=1e-10)
    assert r.l2_error <= 1e-10
    assert fit_monomial(lambda x: 1.0, 0).coefficients == pytest.approx([1.0])
    e = fit_monomial(math.exp, 3)
    assert 0 < e.l2_error < 1e-3


def test_fit_monomial_against_exact_normal_equations():
    # for a polynomial the right-hand side is exact: sum_j a_j / (i + j + 1)
    a = [F(1), F(-2), F(1, 2), F(3)]
    n = 5
    rhs = [sum(c / (i + j + 1) for j, c in enumerate(a)) for i in range(n + 1)]
    exact = solve_rational(hilbert_matrix(n), rhs)
    assert exact == a + [0, 0]
    r = fit_monomial(Polynomial(a, Domain.UNIT).as_float(), n)
    assert np.allclose(r.coefficients, [float(v) for v in exact], atol=1e-7)


def test_fit_orthogonal_reproduces_generalized_u():
    for p in MASS_GRID:
        u3 = gen_u(3, p).poly.to_unit().as_float()
        r = fit_orthogonal(u3, 3, p)
        assert r.coefficients == pytest.approx([0, 0, 0, 1], abs=1e-12)
        assert r.l2_error <= 1e-10


def test_fit_orthogonal_prefix_property():
    for f in (math.exp, math.sin, lambda x: abs(x - 0.5)):
        for p in MASS_GRID:
            prev = fit_orthogonal(f, 0, p).coefficients
            for n in range(1, 9):
                cur = fit_orthogonal(f, n, p).coefficients
                assert cur[: len(prev)] == prev
                prev = cur


def test_in_space_polynomials_reproduced_by_both():
    cubic = Polynomial([F(1), F(-2), F(0), F(1, 2)], Domain.UNIT).as_float()
    for n in range(3, 8):
        assert fit_monomial(cubic, n).l2_error <= 1e-10
        for p in MASS_GRID:
            r = fit_orthogonal(cubic, n, p)
            assert r.l2_error <= 1e-10
            assert error_functional(cubic, r.approximant) <= 1e-20


def test_exp_fits_agree_at_degree_six():
    a = fit_monomial(math.exp, 6).approximant
    b = fit_orthogonal(math.exp, 6, MassParams()).approximant
    xs = np.linspace(0, 1, 101)
    assert max(abs(a(x) - b(x)) for x in xs) < 1e-6


def test_error_monotone_in_degree():
    for basis_fit in (lambda f, n: fit_monomial(f, n), lambda f, n: fit_orthogonal(f, n, MassParams(1, 2))):
        errs = [basis_fit(math.exp, n).l2_error for n in range(8)]
        assert all(b <= a for a, b in zip(errs, errs[1:]))


def test_error_functional_examples():
    p = Polynomial([0.5, 1.0], Domain.UNIT)
    assert error_functional(p, p) == pytest.approx(0.0, abs=1e-14)
    assert error_functional(lambda x: x, Polynomial((), Domain.UNIT)) == pytest.approx(1 / 3, rel=1e-14)


def test_runge_residual_positive():
    runge = lambda x: 1.0 / (1.0 + 25.0 * (2 * x - 1) ** 2)  # noqa: E731
    assert fit_monomial(runge, 2).l2_error > 0
    assert fit_orthogonal(runge, 2).l2_error > 0
