from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import rationals
from twophoton.algebra import (BASIS, LieElement, TensorElement, ad_tensor, basis_wedge, bracket,
                               jacobi_residual, tensor, wedge)
from twophoton.errors import DomainError
from twophoton.scalars import Poly

E = LieElement.basis

elements = st.builds(lambda cs: LieElement(dict(enumerate(cs))), st.lists(rationals(), min_size=6, max_size=6))


def test_table_entries():
    assert bracket(E("A-"), E("A+")) == E("M")
    assert bracket(E("B-"), E("B+")) == 4 * E("N") + 2 * E("M")
    assert bracket(E("A+"), E("B-")) == -2 * E("A-")
    assert bracket(E("N"), E("B-")) == -2 * E("B-")
    for g in BASIS:
        assert bracket(E("M"), E(g)).is_zero()


def test_jacobi():
    res = dict(jacobi_residual())
    assert len(res) == 20
    assert res[("N", "A+", "A-")].is_zero()
    assert res[("A+", "A-", "B-")].is_zero()
    assert all(r.is_zero() for r in res.values())


@settings(max_examples=50, deadline=None)
@given(elements, elements, rationals())
def test_bilinear_and_antisymmetric(x, y, s):
    assert bracket(s * x, y) == s * bracket(x, y)
    assert bracket(x, y) == -bracket(y, x)
    assert bracket(x, x).is_zero()


@settings(max_examples=30, deadline=None)
@given(elements, elements, elements)
def test_wedge_and_ad_antisymmetry(x, y, z):
    w = wedge(x, y)
    assert w.is_antisymmetric()
    assert ad_tensor(z, w).is_antisymmetric()
    assert (wedge(x, y) + wedge(y, x)).is_zero()


def test_wedge_normalization():
    assert wedge(E("N"), E("A+")) == tensor(E("N"), E("A+")) - tensor(E("A+"), E("N"))
    assert wedge(E("A+"), E("A+")).is_zero()


def test_ad_tensor_examples():
    assert ad_tensor(E("M"), basis_wedge("N", "A+")).is_zero()
    assert ad_tensor(E("A+"), basis_wedge("N", "M")) == -basis_wedge("A+", "M")
    assert ad_tensor(E("N"), TensorElement.zero(2)).is_zero()


def test_triple_wedge_alternates():
    t = basis_wedge("A+", "A-", "M")
    assert len(t.coeffs) == 6
    assert t.permuted((1, 0, 2)) == -t


def test_json_order():
    x = 3 * E("M") + E("N") - Fraction(1, 2) * E("B+")
    assert list(x.to_json()) == ["N", "B+", "M"]
    assert x.to_json()["B+"] == "-1/2"


def test_mixed_rings_rejected():
    x = LieElement({0: Poly.var("a", ("a",))})
    y = LieElement({1: Poly.var("b", ("b",))})
    with pytest.raises(DomainError):
        bracket(x, y)
