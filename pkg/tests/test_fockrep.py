import math
from fractions import Fraction

import numpy as np
import pytest

from twophoton.errors import DomainError, VerificationError
from twophoton.fockrep import (boson_ops, bargmann_operators, check_relations, make_rep,
                               to_number_basis, ua2_functions)
from twophoton.matrices import Matrix, nilpotent_series
from twophoton.series import Series, exp_series, expm1_over
from twophoton.tables import GENERATORS


def test_boson_ops():
    up, down = boson_ops(3)
    assert up.rows() == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    assert down.entry(1, 2) == 2
    comm = down @ up - up @ down
    assert all(comm.entry(m, m) == 1 for m in range(2))


def test_nilpotent_exp_entries():
    up, _ = boson_ops(6)
    a = Fraction(2, 3)
    e = nilpotent_series(exp_series(a, 1, 6), up)
    for m in range(6):
        for k in range(6 - m):
            assert e.entry(m + k, m) == a ** k / math.factorial(k)
    assert nilpotent_series(exp_series(0, 1, 6), up) == Matrix.identity(6)
    with pytest.raises(DomainError):
        nilpotent_series(exp_series(1, 1, 6), up.transpose())


def test_composite_series_matches_ua1_bplus():
    a = Fraction(1, 2)
    up, _ = boson_ops(7)
    # ((1 - e^{-x})/x)^2 in x = a t, times t^2
    f = expm1_over(-1, 1, 9).shift(-1).regular()
    sq = f * f
    coeffs = [0, 0] + [sq.coeffs[k] * a ** k for k in range(7)]
    assert nilpotent_series(coeffs, up) == make_rep("ua1", 7, a)["B+"]


def test_classical_rep():
    rep = make_rep("classical", 6)
    assert all(rep["N"].entry(m, m) == m for m in range(6))
    assert rep["B-"].entry(0, 2) == 2
    assert rep["M"] == Matrix.identity(6)
    num = to_number_basis(rep)
    for m in range(4):
        assert num["A+"][m + 1, m] == pytest.approx(math.sqrt(m + 1), abs=1e-12)
        assert num["B+"][m + 2, m] == pytest.approx(math.sqrt((m + 1) * (m + 2)), abs=1e-12)
        if m:
            assert num["A-"][m - 1, m] == pytest.approx(math.sqrt(m), abs=1e-12)
        if m > 1:
            assert num["B-"][m - 2, m] == pytest.approx(math.sqrt(m * (m - 1)), abs=1e-12)


@pytest.mark.parametrize("kind", ["ua1", "ua2"])
@pytest.mark.parametrize("dim", [6, 9])
def test_zero_parameter_is_classical(kind, dim):
    assert make_rep(kind, dim, 0).matrices == make_rep("classical", dim).matrices


def test_ua1_examples():
    a = Fraction(1, 2)
    num = to_number_basis(make_rep("ua1", 6, a))
    assert num["A-"][1, 1] == pytest.approx(float(a), abs=1e-12)
    rep = make_rep("ua1", 6, a)
    assert rep["B+"] != rep["A+"] @ rep["A+"]


def test_ua2_series():
    a = Fraction(1, 2)
    f = ua2_functions(a, 8)
    assert f["B-1"].coeffs[:6] == [0, a, 0, Fraction(4, 3) * a ** 2, 0, f["B-1"].coeffs[5]]
    psi = f["A+"]
    want = expm1_over(-2 * a, 2, 8)
    assert (psi * psi).coeffs == want.coeffs
    assert psi.coeffs[1] == 1


def test_b_minus_regularization_has_no_poles():
    a = Fraction(3, 4)
    n = 10
    raw = exp_series(2 * a, 2, n + 4).shift(-1) - expm1_over(2 * a, 2, n + 4).shift(-3)
    assert raw.start < 0 and raw.negative_part() == []
    for key, ser in ua2_functions(a, n).items():
        assert ser.start == 0, key


def test_ua2_min_dim_and_unknown_kind():
    make_rep("ua2", 4, Fraction(1, 3))
    with pytest.raises(ValueError):
        make_rep("ua2", 3, 1)
    with pytest.raises(ValueError):
        make_rep("ua3", 5, 1)


@pytest.mark.parametrize("kind,a", [("classical", 0), ("ua1", Fraction(1, 3)), ("ua2", Fraction(1, 2)),
                                    ("ua1", Fraction(-7, 9)), ("ua2", Fraction(3, 4))])
@pytest.mark.parametrize("dim", [8, 10])
def test_relations(kind, a, dim):
    rep = make_rep(kind, dim, a)
    report = check_relations(rep, 4)
    assert report.ok and len(report.checked) == 15


def test_relation_failure_is_reported():
    rep = make_rep("ua1", 8, Fraction(1, 3))
    rep.matrices["B-"] = rep.matrices["B-"].scale(2)
    with pytest.raises(VerificationError):
        check_relations(rep, 4)
    report = check_relations(rep, 4, raise_on_failure=False)
    assert not report.ok and report.failures[0]["relation"].startswith("[")


def test_oscillator_brackets_undeformed_in_ua2():
    rep = make_rep("ua2", 10, Fraction(2, 5))
    idx = range(6)
    n, ap, am, m = (rep[g] for g in ("N", "A+", "A-", "M"))
    assert (am @ ap - ap @ am).differences(m, idx) == []
    assert (n @ ap - ap @ n).differences(ap, idx) == []


@pytest.mark.parametrize("kind", ["classical", "ua1", "ua2"])
def test_truncation_growth(kind):
    a = Fraction(-2, 5)
    small, big = make_rep(kind, 8, a), make_rep(kind, 16, a)
    for g in GENERATORS:
        for i in range(4):
            for j in range(4):
                assert small[g].entry(i, j) == big[g].entry(i, j)
