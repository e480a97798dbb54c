from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import rationals
from twophoton.errors import DomainError
from twophoton.scalars import Poly, format_scalar, parse_poly, to_scalar

VARS = ("x", "y", "z")


@st.composite
def polys(draw, max_terms=5):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), rationals(), max_size=max_terms))
    return Poly(VARS, terms)


points = st.fixed_dictionaries({v: rationals() for v in VARS})


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_distributive(p, q, r):
    assert (p + q) * r == p * r + q * r


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), points)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt)


@settings(max_examples=40, deadline=None)
@given(polys())
def test_no_stored_zeros_and_round_trip(p):
    assert all(c != 0 for c in p.terms.values())
    assert parse_poly(str(p), VARS) == p
    assert (p - p).terms == {}


def test_rational_normal_form():
    assert to_scalar("-6/4") == Fraction(-3, 2)
    assert format_scalar(Fraction(4, 6)) == "2/3"
    assert format_scalar(Fraction(5)) == "5"


def test_grlex_text():
    a1, b5, c2 = (Poly.var(v, ("a1", "b5", "c2")) for v in ("a1", "b5", "c2"))
    assert str(2 * a1 * b5 - Fraction(1, 2) * c2 ** 2) == "2*a1*b5 - 1/2*c2^2"


def test_floats_rejected():
    with pytest.raises(DomainError):
        to_scalar(0.5)


def test_mismatched_rings():
    with pytest.raises(DomainError):
        Poly.var("x", ("x",)) + Poly.var("y", ("y",))
