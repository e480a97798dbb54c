import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import rationals
from twophoton.eigenstates import (EigenProblem, ODESpec, SeriesSolution, check_residual, matrix_residual,
                                   ode_from_problem, solve, solve_series)
from twophoton.errors import DomainError, SingularPointError, VerificationError
from twophoton.scalars import Poly

from test_acceptance import hand_recurrence


def test_classical_ode():
    lam = Fraction(3)
    s = ode_from_problem(EigenProblem("classical", (1, 1, 1, 1, 1), lam, 6))
    assert s.p2[:3] == [1, 0, 0]
    assert s.p1[:3] == [1, 1, 0]
    assert s.p0[:4] == [-lam, 1, 1, 0]
    assert len(s.p2) == 7


def test_ua1_zero_parameter_is_classical():
    b = (Fraction(1, 2), 2, -1, Fraction(1, 3), 1)
    assert ode_from_problem(EigenProblem("ua1", b, 1, 8, 0)) == ode_from_problem(EigenProblem("classical", b, 1, 8))


def test_ua2_ode():
    a = Fraction(1, 2)
    s = ode_from_problem(EigenProblem("ua2", (0, 1, 0, 0, 0), 0, 6, a))
    assert s.p2[:3] == [1, 0, a]
    assert s.p1[:4] == [0, a, 0, Fraction(4, 3) * a ** 2]


def test_exponential_solution():
    lam = Fraction(2, 3)
    sol = solve(EigenProblem("classical", (0, 0, 0, 1, 0), lam, 10))
    assert sol.first_order
    assert sol.coeffs == [lam ** k / math.factorial(k) for k in range(11)]


def test_pure_b_minus_recurrence():
    lam = Fraction(5)
    sol = solve(EigenProblem("classical", (0, 1, 0, 0, 0), lam, 12), 1, 2)
    for k in range(10):
        assert sol.coeffs[k + 2] == lam * sol.coeffs[k] / ((k + 2) * (k + 1))


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals(), min_size=5, max_size=5), rationals(), rationals(), rationals())
def test_hand_recurrence(b, lam, c0, c1):
    if not b[1]:
        b[1] = Fraction(1)
    sol = solve_series(ode_from_problem(EigenProblem("classical", b, lam, 15)), c0, c1, 15)
    assert sol.coeffs == hand_recurrence(b, lam, c0, c1, 15)
    assert not any(sol.residual)


def test_number_operator_monomial_needs_frobenius():
    # alpha = 0 is a regular singular point of alpha f' = m f
    with pytest.raises(SingularPointError):
        solve(EigenProblem("classical", (1, 0, 0, 0, 0), 3, 8))
    with pytest.raises(SingularPointError):
        solve_series(ODESpec([0, 1, 0], [1, 0, 0], [0, 0, 0]))


def test_monomial_eigenvector_matrix_residual():
    m, n = 3, 8
    p = EigenProblem("classical", (1, 0, 0, 0, 0), m, n)
    coeffs = [Fraction(int(k == m)) for k in range(n + 1)]
    assert matrix_residual(p, SeriesSolution(coeffs, [], 0, 0), n + 4).ok
    bad = [Fraction(int(k == m + 1)) for k in range(n + 1)]
    with pytest.raises(VerificationError):
        matrix_residual(p, SeriesSolution(bad, [], 0, 0), n + 4)


@pytest.mark.parametrize("kind", ["ua1", "ua2"])
def test_sector_reductions(kind):
    a = Fraction(1, 3)
    for b in ((1, 0, 0, 2, Fraction(1, 2)), (1, 2, Fraction(-1, 2), 0, 0)):
        p = EigenProblem(kind, b, Fraction(3, 4), 16, a)
        sol = solve(p, 1, 1)
        assert check_residual(sol)
        assert matrix_residual(p, sol, 20).ok


@pytest.mark.parametrize("kind,var", [("ua1", "a1"), ("ua2", "a2")])
def test_polynomial_coefficients(kind, var):
    b = (Fraction(1, 2), 1, Fraction(-1, 3), 2, 1)
    x = Poly.var(var, (var,))
    sol = solve(EigenProblem(kind, b, 1, 10, x), 1, 0)
    classical = solve(EigenProblem("classical", b, 1, 10), 1, 0)
    for c, k in zip(sol.coeffs, classical.coeffs):
        assert (c.constant_term() if isinstance(c, Poly) else c) == k


def test_float_mode():
    p = EigenProblem("ua2", [0.3, 1.0, -0.2, 0.5, 0.1], 0.7, 20, 0.25)
    sol = solve(p)
    assert check_residual(sol)
    assert matrix_residual(p, sol, 24).ok


def test_preconditions():
    with pytest.raises(DomainError):
        EigenProblem("classical", (1, 1, 1, 1, 1), 0, 3)
    p = EigenProblem("classical", (0, 1, 0, 0, 0), 1, 10)
    with pytest.raises(ValueError):
        matrix_residual(p, solve(p), 12)
