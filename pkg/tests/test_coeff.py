from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcsys.coeff import (FieldMismatch, NotAPower, QuadExt, conjugate, divide, nth_root,
                          parse_scalar, sqrt, to_text)

from .strategies import fractions, quad


def test_sqrt_squares_to_d():
    assert sqrt(-3) * sqrt(-3) == -3
    assert sqrt(5) ** 2 == 5


def test_collapses_to_rational():
    x = sqrt(5) * sqrt(5)
    assert isinstance(x, Fraction) and x == 5


def test_invalid_radicand():
    for d in (0, 1, 4, -12):
        with pytest.raises(ValueError):
            QuadExt(1, 1, d)


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatch):
        sqrt(2) + sqrt(3)


def test_divide_promotes_ints():
    assert divide(1, 2) == Fraction(1, 2)


def test_nth_root_rational_and_quadratic():
    assert nth_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert nth_root(1728, 3) == 12
    with pytest.raises(NotAPower):
        nth_root(2, 2)
    r = nth_root((1 + sqrt(-3)) ** 4, 4)
    assert r ** 4 == (1 + sqrt(-3)) ** 4
    with pytest.raises(NotAPower):
        nth_root(sqrt(5), 2)


@given(quad(), quad(), quad())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a != 0:
        assert a * (1 / a) == 1


@given(quad(), quad())
def test_conjugation_is_ring_automorphism(a, b):
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(conjugate(a)) == a


@given(quad(), st.integers(min_value=1, max_value=5))
def test_nth_root_inverts_power(a, n):
    assert nth_root(a ** n, n) ** n == a ** n


@given(st.one_of(fractions, quad(-3), quad(5)))
def test_text_roundtrip(x):
    assert parse_scalar(to_text(x)) == x
