#!/usr/bin/env python3
"""
Tests for the saddle-point estimates, the critical point of F and the
Gaussian lattice sums
"""

import itertools
import math
import sys
from fractions import Fraction

import numpy as np
import pytest

from algebra_core import EquationSpec, cyclic_group, trivial_group
from asymptotics import (
    F_log,
    a_asymptotic,
    bender_excess,
    bender_ratio,
    c_asymptotic,
    commutativity_cost,
    critical_equations,
    critical_jacobian,
    critical_point,
    delta_eval,
    elementary_expansion_log_a,
    elementary_expansion_log_s,
    gaussian_sum_2d,
    hayman_a,
    hayman_b,
    hayman_radius,
    lattice_sum_F,
    log_count,
    log_psi,
    refined_guess,
    s_asymptotic,
    verify_gaussian_1d,
    verify_gaussian_2d,
)
from egf_engine import a_sequence, c_exact_collapsed, c_sequence, exp_transform, solution_series
from error_handler import DomainError, PreconditionError
from index_set import IndexSet

IDEMPOTENT = EquationSpec(1, 2)
ALL = IndexSet.everything()


def log_error(estimate, exact):
    return abs(estimate.log_value - log_count(exact))


# ---------- Δ AND HAYMAN ----------
def test_delta_eval():
    d0 = delta_eval(0, 0.7)
    assert (d0.value, d0.first, d0.second) == (0.7, 1.0, 0.0)
    d1 = delta_eval(1, 1.0)
    e = math.e
    assert math.isclose(d1.value, e) and math.isclose(d1.first, 2 * e) and math.isclose(d1.second, 3 * e)
    with pytest.raises(DomainError):
        delta_eval(1, 0.0)


def test_delta_derivatives_by_finite_differences():
    step = 1e-6
    for x in (0.3, 0.8, 1.5):
        d = delta_eval(2, x)
        up, down = delta_eval(2, x + step), delta_eval(2, x - step)
        assert math.isclose((up.value - down.value) / (2 * step), d.first, rel_tol=1e-5)
        assert math.isclose((up.first - down.first) / (2 * step), d.second, rel_tol=1e-5)


def test_delta_overflow_stays_in_log_scale():
    d = delta_eval(3, 3.0)
    assert d.overflow and math.isinf(d.value)
    assert math.isfinite(delta_eval(2, 3.0).log_value)


def test_hayman_functions_for_idempotents():
    trivial = trivial_group()
    for r in (0.5, 1.0, 2.0):
        assert math.isclose(hayman_a(r, IDEMPOTENT, trivial), r * (1 + r) * math.exp(r), rel_tol=1e-12)
        # b = r·a'(r) with a'(r) = (1 + 3r + r²)e^r
        assert math.isclose(hayman_b(r, IDEMPOTENT, trivial), r * (1 + 3 * r + r * r) * math.exp(r), rel_tol=1e-12)


def test_hayman_functions_by_finite_differences():
    for eq in (EquationSpec(1, 2), EquationSpec(1, 3), EquationSpec(2, 3)):
        for group in (trivial_group(), cyclic_group(2)):
            for r in (0.5, 1.0, 2.0):
                step = r * 1e-6
                # a(r) = r·(log Ψ)'(r) and b(r) = r·a'(r)
                slope = (log_psi(r + step, eq, group) - log_psi(r - step, eq, group)) / (2 * step)
                assert math.isclose(hayman_a(r, eq, group), r * slope, rel_tol=1e-4), (str(eq), group.name, r)
                a_slope = (hayman_a(r + step, eq, group) - hayman_a(r - step, eq, group)) / (2 * step)
                assert math.isclose(hayman_b(r, eq, group), r * a_slope, rel_tol=1e-4), (str(eq), group.name, r)

            grid = [0.05 * k for k in range(1, 41)]
            values = [hayman_a(r, eq, group) for r in grid]
            assert all(x < y for x, y in zip(values, values[1:])), (str(eq), group.name)


def test_psi_against_its_coefficients():
    eq, group = EquationSpec(1, 3), cyclic_group(2)
    # divisors {1, 2} with ι(2) = 2, ι(1) = 1 in C₂
    delta = 2 * math.exp(2)
    assert math.isclose(log_psi(1.0, eq, group), (2 * delta + delta**2 / 2) / 2, rel_tol=1e-12)

    # truncated where the tail is below e^-45 even at r = 1/2
    seq = solution_series(eq, group, ALL, ALL, 150)
    for r in (Fraction(1, 4), Fraction(1, 2)):
        series_value = math.fsum(float(Fraction(seq[n], math.factorial(n)) * r**n) for n in range(151))
        assert math.isclose(math.log(series_value), log_psi(float(r), eq, group), rel_tol=1e-12)


def test_hayman_radius():
    trivial = trivial_group()
    r = hayman_radius(100, IDEMPOTENT, trivial)
    assert 2.4 < r < 2.5
    assert abs(r * (1 + r) * math.exp(r) - 100) <= 1e-9 * 100
    assert math.isclose(hayman_radius(1, IDEMPOTENT, trivial), 0.44413, abs_tol=1e-5)

    # with |H| = 2 the radius equation reads ρ(1+ρ)e^ρ = 2n for ρ = 2r
    rho = 2 * hayman_radius(100, IDEMPOTENT, cyclic_group(2))
    assert math.isclose(rho * (1 + rho) * math.exp(rho), 200, rel_tol=1e-9)


def test_s_estimate_for_idempotents_has_closed_form():
    trivial = trivial_group()
    for n in (50, 1000):
        estimate = s_asymptotic(n, IDEMPOTENT, trivial)
        r = estimate.details["radius"]
        closed = n * math.log(n / (math.e * r)) + n / (1 + r) - 0.5 * math.log(math.log(n))
        assert math.isclose(estimate.log_value, closed, rel_tol=1e-12)
        assert estimate.parts_dict()["divisor_correction"] == 0.0


def test_s_estimate_converges():
    trivial = trivial_group()
    exact = solution_series(IDEMPOTENT, trivial, ALL, ALL, 300)
    sizes = (50, 100, 200, 300)

    def relative_errors(form):
        return [
            log_error(s_asymptotic(n, IDEMPOTENT, trivial, form=form), exact[n]) / log_count(exact[n])
            for n in sizes
        ]

    # relative log error ≈ 5.5e-5, 1.3e-5, 3.0e-6, 1.3e-6
    hayman = relative_errors("hayman")
    assert all(x > y for x, y in zip(hayman, hayman[1:]))
    assert hayman[-1] <= 0.02

    # ≈ 1.39e-4, 1.55e-4, 9.5e-5, 6.6e-5, so monotone only from n = 100
    theorem = relative_errors("theorem")
    assert all(x <= 0.02 for x in theorem)
    assert theorem[1] > theorem[2] > theorem[3]


def test_s_estimate_for_other_equations():
    group = cyclic_group(2)
    for eq in (EquationSpec(1, 3), EquationSpec(2, 4)):
        exact = solution_series(eq, group, ALL, ALL, 60)
        estimate = s_asymptotic(60, eq, group, form="hayman")
        assert log_error(estimate, exact[60]) < 0.1 * log_count(exact[60])
    with pytest.raises(PreconditionError):
        s_asymptotic(50, IDEMPOTENT, trivial_group(), form="nope")


def test_s_against_elementary_expansion():
    estimate = s_asymptotic(10_000, IDEMPOTENT, trivial_group())
    assert abs(estimate.log_value - elementary_expansion_log_s(10_000)) < 0.02 * estimate.log_value


# ---------- CRITICAL POINT ----------
def test_critical_point_large_n():
    cp = critical_point(1e4)
    L = math.log(1e4)
    assert cp.max_residual <= 1e-10
    assert 0.9 < cp.r * 2 * L / 1e4 < 2.2
    assert 0.9 < cp.s * 2 * L / 1e4 < 2.2
    assert 0.3 < cp.t / (2 * L) < 1.2
    assert math.isclose(cp.r, 773.49, rel_tol=1e-4)

    cp = critical_point(1e6)
    assert cp.max_residual <= 1e-10
    assert abs(cp.r - cp.s) / cp.s < 0.2
    assert math.isclose(cp.t, 18.148, rel_tol=1e-3)


def test_critical_point_small_n():
    cp = critical_point(100)
    assert np.allclose(cp.point, (15.530, 16.438, 3.667), rtol=1e-3)
    low = critical_point(50, floor=20)
    assert np.allclose(low.point, (8.755, 9.650, 2.831), rtol=1e-3)
    with pytest.raises(PreconditionError):
        critical_point(50)


def test_critical_point_is_a_maximum():
    n = 100
    cp = critical_point(n)
    peak = F_log(cp.r, cp.s, cp.t, n)
    for corner in itertools.product(*((math.floor(v), math.ceil(v)) for v in cp.point)):
        assert F_log(*corner, n) < peak
    eigenvalues = np.linalg.eigvalsh(critical_jacobian(n, *cp.point))
    assert np.all(eigenvalues < 0)


def test_critical_point_certificate():
    for n in (1e2, 1e3, 1e4, 1e6):
        cp = critical_point(n)
        assert cp.max_residual <= 1e-10, n
        assert min(cp.point) > 0 and n - sum(cp.point) > 0, n
        peak = F_log(cp.r, cp.s, cp.t, n)
        for k in range(3):
            for offset in (-1.0, 1.0):
                neighbour = list(cp.point)
                neighbour[k] += offset
                assert F_log(*neighbour, n) < peak, (n, k, offset)


def test_jacobian_matches_finite_differences():
    n = 1000.0
    x = np.array(refined_guess(n))
    jac = critical_jacobian(n, *x)
    step = 1e-5
    for k in range(3):
        dx = np.zeros(3)
        dx[k] = step
        column = (critical_equations(n, *(x + dx)) - critical_equations(n, *(x - dx))) / (2 * step)
        assert np.allclose(column, jac[:, k], rtol=1e-5, atol=1e-9)


# ---------- F AND c(n) ----------
def test_F_log_examples():
    assert math.isclose(F_log(1, 1, 0, 2), math.log(2))
    assert math.isclose(F_log(0, 2, 1, 3), math.log(12))
    assert F_log(0, 1, 1, 3) == -math.inf
    with pytest.raises(DomainError):
        F_log(2, 2, 0, 3)
    with pytest.raises(DomainError):
        F_log(-1, 2, 0, 3)


def test_lattice_sum_of_F_is_c():
    for n in list(range(1, 11)) + [20, 40]:
        assert math.isclose(lattice_sum_F(n), c_exact_collapsed(n), rel_tol=1e-9), n


def test_c_estimate_forms():
    ratios = []
    for n in (50, 100, 150, 200):
        estimate = c_asymptotic(n, floor=20)
        ratios.append(math.exp(estimate.log_value - log_count(c_exact_collapsed(n))))
    assert all(1.0 < q < 1.1 for q in ratios)
    assert all(x > y for x, y in zip(ratios, ratios[1:]))

    hessian = c_asymptotic(200, form="hessian", floor=20)
    assert 0.8 < math.exp(hessian.log_value - log_count(c_exact_collapsed(200))) < 1.25

    # the closed form drops lower-order prefactor terms: gaps ≈ 0.104 at 1e3 and 0.0697 at 1e4
    gaps = [abs(c_asymptotic(n).log_value - c_asymptotic(n, form="closed").log_value) for n in (1e3, 1e4, 1e6)]
    assert gaps[0] < 0.12
    assert gaps[1] < 0.08
    assert gaps[0] > gaps[1] > gaps[2]

    simple, closed = c_asymptotic(1e6, form="simple"), c_asymptotic(1e6, form="closed")
    assert abs(simple.log_value - closed.log_value) < 10
    with pytest.raises(PreconditionError):
        c_asymptotic(1e3, form="nope")


def test_a_estimate():
    trivial = c_asymptotic(500)
    assert math.isclose(a_asymptotic(500, trivial_group()).log_value, trivial.log_value, rel_tol=1e-14)

    exact = a_sequence(100, cyclic_group(2))[100]
    ratio = math.exp(a_asymptotic(100, cyclic_group(2)).log_value - log_count(exact))
    assert 0.5 < ratio < 2.0


def test_elementary_expansions():
    n = 1e6
    L = math.log(n)
    saddle = c_asymptotic(n).log_value
    elementary = elementary_expansion_log_a(n)
    assert abs(elementary - saddle) < 0.01 * 2 * n * L
    assert 0.6 < elementary / (2 * n * L) < 0.8
    assert math.isclose(
        elementary_expansion_log_a(n, 3) - elementary, (n - 1) * math.log(3), rel_tol=1e-9
    )
    assert -1.6 < commutativity_cost(n) / n < -1.2
    with pytest.raises(DomainError):
        commutativity_cost(2)


def test_exponential_transfer():
    c = c_sequence(200)
    b = exp_transform(c)
    excess = [bender_excess(c, b, n) for n in (50, 100, 150, 200)]
    assert all(x > y for x, y in zip(excess, excess[1:]))
    assert all(e <= 16 * math.log(n) ** 2 / n for e, n in zip(excess, (50, 100, 150, 200)))
    assert bender_ratio(c, 100) > bender_ratio(c, 200) > 0
    with pytest.raises(PreconditionError):
        bender_ratio(c, 1)


# ---------- GAUSSIAN LATTICE SUMS ----------
def test_gaussian_sums():
    check = verify_gaussian_1d(0.01, 0.0)
    assert math.isclose(check.closed_form, 17.7245385090, rel_tol=1e-10)
    assert check.relative_discrepancy < 1e-9

    shifted = verify_gaussian_1d(0.02, 0.3)
    assert shifted.relative_discrepancy < 1e-9

    wide = verify_gaussian_1d(5.0, 0.0)
    assert wide.relative_discrepancy > 0.1

    check = verify_gaussian_2d(0.02, 0.01, 0.02)
    assert math.isclose(check.closed_form, 2 * math.pi / math.sqrt(0.0015), rel_tol=1e-12)
    assert check.relative_discrepancy < 1e-6

    with pytest.raises(DomainError):
        gaussian_sum_2d(0.01, 0.1, 0.01)
    with pytest.raises(DomainError):
        verify_gaussian_1d(0.0, 1.0)


if __name__ == "__main__":
    print("=" * 60)
    print("wreathcount - asymptotics tests")
    print("=" * 60)
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
                print(f"PASS {name}")
            except Exception as e:
                failed += 1
                print(f"FAIL {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failed else 0)
