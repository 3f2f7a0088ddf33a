"""Run every identity check and collect a machine-readable report."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import bernstein as bz
from .approx import hilbert_matrix
from .chebyshev import (
    u_bernstein_coeffs,
    u_bernstein_coeffs_printed,
    u_eval_trig,
    u_hypergeometric,
    u_orthogonality,
    u_poly,
)
from .combinatorics import check_central_identity, check_ratio_identity, double_factorial
from .genchebyshev import (
    MASS_GRID,
    c_norm,
    endpoint_closed_form,
    endpoint_values,
    expansion_lambdas,
    gen_bernstein_form,
    gen_bernstein_form_printed,
    gen_u,
    leading_lambda,
    s_poly,
    s_poly_via_ode,
    symmetry_check,
    theta,
    theta_by_recurrence,
    theta_half_binomial,
)
from .measures import gram_schmidt_multiples, inner_product, theorem2_integral, theorem2_integral_printed
from .numerics import PiRational
from .oracle import DiscrepancyRecord, brute_lambda, theorem2_direct

PI_OVER_8 = PiRational(Fraction(1, 8), 1)
SAMPLES = [Fraction(k, 11) for k in range(1, 11)]


@dataclass
class CheckResult:
    identity: str
    parameters: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"identity": self.identity, "parameters": self.parameters,
               "status": "PASS" if self.passed else "FAIL"}
        if self.detail:
            out["detail"] = self.detail
        return out


def _grid_label(grid) -> str:
    return ",".join(f"({p.M},{p.N})" for p in grid)


def _first_failure(cases: Iterable, pred: Callable) -> str:
    for case in cases:
        if not pred(*case):
            return f"fails at {case}"
    return ""


def _check(identity, parameters, cases, pred) -> CheckResult:
    cases = list(cases)
    detail = _first_failure(cases, pred)
    return CheckResult(identity, parameters, not detail, detail)


def _proportional(printed, corrected):
    ratio = None
    for a, b in zip(printed, corrected):
        if a == 0 and b == 0:
            continue
        if a == 0:
            return None
        q = Fraction(b) / a
        if ratio is None:
            ratio = q
        elif q != ratio:
            return None
    return ratio


def _ratio_or_diff(printed, corrected):
    ratio = _proportional(printed, corrected)
    if ratio is not None:
        return ratio
    return [b - a for a, b in zip(printed, corrected)]


def corrected_checks(max_degree: int, grid) -> list[CheckResult]:
    deg = max_degree
    lbl = _grid_label(grid)
    out = [
        _check("double_factorial_even", "n<=30", [(n,) for n in range(31)],
               lambda n: double_factorial(2 * n) == 2**n * math.factorial(n)),
        _check("factorial_split", "n<=30", [(n,) for n in range(31)],
               lambda n: math.factorial(2 * n) == double_factorial(2 * n - 1) * 2**n * math.factorial(n)),
        _check("central_binomial", "n<=30", [(n,) for n in range(31)], check_central_identity),
        _check("binomial_ratio", "k<=n<=30", [(n, k) for n in range(31) for k in range(n + 1)],
               check_ratio_identity),
        _check("bernstein_partition_of_unity", "n<=15", [(n, x) for n in range(16) for x in SAMPLES],
               lambda n, x: sum(bz.basis_eval(n, k, x) for k in range(n + 1)) == 1),
        _check("bernstein_symmetry", "k<=n<=15",
               [(n, k, x) for n in range(16) for k in range(n + 1) for x in SAMPLES[:3]],
               lambda n, k, x: bz.basis_eval(n, k, x) == bz.basis_eval(n, n - k, 1 - x)),
        _check("bernstein_recurrence", "1<=n<=15",
               [(n, k, x) for n in range(1, 16) for k in range(n + 1) for x in SAMPLES[:3]],
               bz.recurrence_check),
        _check("bernstein_product", "i<=n<=6, j<=m<=6",
               [(i, n, j, m) for n in range(7) for m in range(7) for i in range(n + 1) for j in range(m + 1)],
               _product_ok),
        _check("bernstein_elevation", "r<=8, r<=n<=12",
               [(r, n) for r in range(9) for n in range(r, 13)], _elevation_ok),
        _check("bernstein_derivative", "n<=15", [(n,) for n in range(1, 16)], _derivative_ok),
        _check("bernstein_integral", "k<=n<=15", [(n, k) for n in range(16) for k in range(n + 1)],
               lambda n, k: bz.integral_basis(n, k)
               == sum(Fraction(c, j + 1) for j, c in enumerate(bz.to_monomial(bz.BernsteinForm.basis(n, k)).coeffs))),
        _check("u_hypergeometric", "n<=12", [(n, x) for n in range(13) for x in SAMPLES[:8]],
               lambda n, x: u_poly(n)(2 * x - 1) == u_hypergeometric(n, 2 * x - 1)),
        _check("u_trig", "n<=15, 101 points, rel 1e-12",
               [(n, -1 + 2 * k / 100) for n in range(16) for k in range(101)], _trig_ok),
        _check("u_endpoints", "n<=15", [(n,) for n in range(16)],
               lambda n: u_poly(n)(1) == n + 1 and u_poly(n)(-1) == (-1) ** n * (n + 1)),
        _check("u_orthogonality", "m,n<=10", [(m, n) for m in range(11) for n in range(11)],
               lambda m, n: u_orthogonality(m, n) == (PI_OVER_8 if m == n else 0)),
        _check("u_bernstein_form", "n<=12", [(n,) for n in range(13)],
               lambda n: bz.to_monomial(u_bernstein_coeffs(n)) == u_poly(n).to_unit()),
        _check("theta_forms", "i<=r<=20", [(i, r) for r in range(21) for i in range(r + 1)],
               lambda i, r: theta(i, r) == theta_by_recurrence(r)[i] == theta_half_binomial(i, r)
               and theta(0, r) == Fraction((2 * r + 1) * math.comb(2 * r, r), 4**r)),
        _check("s_poly_ode", "1<=n<=12", [(n,) for n in range(1, 13)],
               lambda n: s_poly(n) == s_poly_via_ode(n)),
        _check("endpoint_values", "1<=n<=12", [(n,) for n in range(1, 13)],
               lambda n: endpoint_values(n) == endpoint_closed_form(n)),
        _check("gen_symmetry", f"n<={deg}; grid {lbl}", [(n, p) for n in range(deg + 1) for p in grid],
               symmetry_check),
        _check("gen_reduces_to_u", f"n<={deg}", [(n,) for n in range(deg + 1)],
               lambda n: gen_u(n).poly == c_norm(n) * u_poly(n)),
        _check("leading_lambda", f"1<=n<={deg}; grid {lbl}",
               [(n, p) for n in range(1, deg + 1) for p in grid],
               lambda n, p: expansion_lambdas(n, p)[n] == leading_lambda(n, p)),
        _check("lambda_projection_oracle", f"n<={deg}; grid {lbl}",
               [(n, p) for n in range(deg + 1) for p in grid],
               lambda n, p: expansion_lambdas(n, p) == brute_lambda(n, p)),
        _check("theorem1_bernstein_form", f"n<={min(deg, 10)}; grid {lbl}",
               [(n, p) for n in range(min(deg, 10) + 1) for p in grid],
               lambda n, p: gen_bernstein_form(n, p) == bz.from_monomial(gen_u(n, p).poly.to_unit(), n)),
        _check("gen_orthogonality", f"m<n<={deg}; grid {lbl}", _ortho_cases(deg, grid),
               lambda a, b, p: inner_product(a, b, p) == 0),
        _check("gram_schmidt_proportional", f"n<={min(deg, 8)}; grid {lbl}", [(p,) for p in grid],
               lambda p: _gs_ok(min(deg, 8), p)),
        _check("theorem2_integral", f"r<=n<=6, i<=6; grid {lbl}",
               [(n, r, i, p) for n in range(7) for r in range(n + 1) for i in range(7) for p in grid],
               lambda n, r, i, p: theorem2_integral(n, r, i, p) == theorem2_direct(n, r, i, p)),
        _check("theorem2_spot_values", "(0,0,0) and (1,0,0)", [(p,) for p in grid],
               lambda p: theorem2_integral(0, 0, 0, p) == PI_OVER_8
               and theorem2_integral(1, 0, 0, p) == PiRational(Fraction(1, 16), 1)),
    ]
    return out


def _ortho_cases(deg, grid):
    for p in grid:
        polys = [gen_u(n, p).poly for n in range(deg + 1)]
        for m in range(deg + 1):
            for n in range(m + 1, deg + 1):
                yield polys[m], polys[n], p


def _gs_ok(deg, p):
    try:
        gram_schmidt_multiples(deg, p)
    except ArithmeticError:
        return False
    return True


def _product_ok(i, n, j, m):
    k, d, f = bz.product(i, n, j, m)
    lhs = bz.to_monomial(bz.BernsteinForm.basis(n, i)) * bz.to_monomial(bz.BernsteinForm.basis(m, j))
    return lhs == f * bz.to_monomial(bz.BernsteinForm.basis(d, k))


def _elevation_ok(r, n):
    f = bz.BernsteinForm(Fraction((-1) ** k * (k + 1), k + 2) for k in range(r + 1))
    g = bz.elevate(f, n)
    return all(bz.eval_form(f, x) == bz.eval_form(g, x) for x in SAMPLES)


def _derivative_ok(n):
    f = bz.BernsteinForm(Fraction(k * k - 3, k + 1) for k in range(n + 1))
    return bz.to_monomial(bz.derivative(f)) == bz.to_monomial(f).derivative()


def _trig_ok(n, x):
    exact = float(u_poly(n)(Fraction(x)))
    return math.isclose(u_eval_trig(n, x), exact, rel_tol=1e-12, abs_tol=1e-12)


def printed_form_discrepancies(max_degree: int, grid) -> list[DiscrepancyRecord]:
    """Compare the literally printed formulas with the corrected ones."""
    recs: list[DiscrepancyRecord] = []
    recs.append(DiscrepancyRecord(
        "bernstein_b00_boundary", {"n": 0, "k": 0}, Fraction(0), bz.basis_eval(0, 0, Fraction(1, 2)),
        ratio_or_diff=Fraction(1), note="recurrence boundary B_0^0 = 0 contradicts the definition B_0^0 = 1",
    ))
    for n in range(1, 4):
        printed = [Fraction(1, i + 2) for i in range(n + 1) for _ in range(n + 1)]
        corrected = [e for row in hilbert_matrix(n) for e in row]
        recs.append(DiscrepancyRecord(
            "hilbert_integrand", {"n": n}, printed, corrected, _ratio_or_diff(printed, corrected),
            note="normal-equation entries need x^(i+k), not x^(i+1)",
        ))
    for n in range(1, min(max_degree, 12) + 1):
        printed = list(u_bernstein_coeffs_printed(n).coeffs)
        corrected = list(u_bernstein_coeffs(n).coeffs)
        if printed != corrected:
            recs.append(DiscrepancyRecord(
                "u_bernstein_sign", {"n": n}, printed, corrected, _ratio_or_diff(printed, corrected),
                note="sign (-1)^(n+1) replaced by (-1)^(n-k)",
            ))
    for r in range(1, min(max_degree, 10) + 1):
        for p in grid:
            printed = list(gen_bernstein_form_printed(r, p).coeffs)
            corrected = list(gen_bernstein_form(r, p).coeffs)
            if printed != corrected:
                recs.append(DiscrepancyRecord(
                    "theorem1_prefactor", {"r": r, "M": p.M, "N": p.N}, printed, corrected,
                    _ratio_or_diff(printed, corrected),
                    note="c_r and c_k prefactors double-count the normalization",
                ))
    for n in range(1, min(max_degree, 12) + 1):
        for p in grid:
            lam = expansion_lambdas(n, p)
            closed = [leading_lambda(k, p) if k else Fraction(0) for k in range(n + 1)]
            if lam != closed:
                recs.append(DiscrepancyRecord(
                    "lambda_lower_closed_form", {"n": n, "M": p.M, "N": p.N}, closed, lam,
                    _ratio_or_diff(closed, lam),
                    note="closed forms for q_k, r_k, s_k hold only at k = n",
                ))
    for n in range(7):
        for r in range(n + 1):
            for i in range(7):
                for p in grid:
                    printed = theorem2_integral_printed(n, r, i, p)
                    corrected = theorem2_integral(n, r, i, p)
                    if printed != corrected:
                        recs.append(DiscrepancyRecord(
                            "theorem2_prefactor", {"n": n, "r": r, "i": i, "M": p.M, "N": p.N},
                            printed, corrected,
                            corrected / printed if not printed.is_zero() else corrected - printed,
                        ))
    return recs


def run_verification(max_degree: int = 12, grid=MASS_GRID) -> dict:
    checks = corrected_checks(max_degree, grid)
    discrepancies = printed_form_discrepancies(max_degree, grid)
    printed_checks = {}
    for rec in discrepancies:
        printed_checks.setdefault(rec.identity, 0)
        printed_checks[rec.identity] += 1
    ok = all(c.passed for c in checks)
    return {
        "max_degree": max_degree,
        "mass_grid": [[str(p.M), str(p.N)] for p in grid],
        "status": "PASS" if ok else "FAIL",
        "checks": [c.as_dict() for c in checks],
        "printed_form_checks": [
            {"identity": k, "status": "FAIL", "failures": v} for k, v in sorted(printed_checks.items())
        ],
        "discrepancies": [r.as_dict() for r in discrepancies],
    }
