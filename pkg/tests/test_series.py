from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrcsys.coeff import sqrt
from rrcsys.series import PrecisionError, PuiseuxSeries, ValuationError

from .strategies import fractions, nonzero_fractions, quad, series, units

q = PuiseuxSeries.variable()


def test_geometric_series():
    s = PuiseuxSeries.one(prec=6) / (1 - q)
    assert s.coefficients(6) == [1] * 6
    assert s.prec == 6


def test_precision_is_honest():
    s = PuiseuxSeries.from_coeffs([1, 2, 3], prec=3)
    with pytest.raises(PrecisionError):
        s[3]
    assert (s * q).prec == 4
    assert s.derivative().prec == 2


def test_exact_inverse_needs_precision():
    with pytest.raises(PrecisionError):
        (1 - q).inverse()
    assert (q * 3).inverse() == PuiseuxSeries.monomial(Fraction(1, 3), -1)


def test_fractional_exponents():
    s = PuiseuxSeries.monomial(1, Fraction(1, 2)) * PuiseuxSeries.monomial(1, Fraction(1, 3))
    assert s.items() == [(Fraction(5, 6), 1)]
    assert s.denom == 6


def test_sqrt_of_one_minus_4q():
    # catalan generating function check: (1 - sqrt(1-4q)) / 2q
    s = (1 - 4 * q).truncate(10).power(Fraction(1, 2))
    c = (1 - s) / (2 * q)
    assert c.coefficients(8) == [1, 1, 2, 5, 14, 42, 132, 429]


def test_exp_log_errors():
    with pytest.raises(ValuationError):
        PuiseuxSeries.one(prec=4).exp()
    with pytest.raises(ValuationError):
        (q * 2).log(prec=4)


def test_revert_of_q_exp():
    f = (q.exp(prec=8) - 1)
    assert f.revert() == (1 + q).log(prec=8)


def test_quadratic_coefficients():
    s = (1 + sqrt(-3) * q).truncate(6)
    assert (s * s.map_coefficients(lambda c: c.conjugate() if hasattr(c, "conjugate") else c)
            ) == (1 + 3 * q * q).truncate(6)


def test_json_roundtrip_and_format():
    s = PuiseuxSeries({1: Fraction(1, 4), 3: sqrt(-3)}, 4, 5)
    assert PuiseuxSeries.from_json(s.to_json()) == s
    assert PuiseuxSeries.from_json(s.to_json()).prec == 5
    assert "O(q^5)" in s.format()


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == PuiseuxSeries.zero(a.prec)


@given(series(coeffs=quad()), series(coeffs=quad()))
def test_ring_axioms_over_quadratic_field(a, b):
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b


@given(series(), series())
def test_leibniz_rule(a, b):
    assert (a * b).theta() == a.theta() * b + a * b.theta()
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(units(), units())
def test_division_inverts_multiplication(a, b):
    assert (a * b) / b == a
    assert a * a.inverse() == PuiseuxSeries.one(a.prec)


@given(units(), st.integers(min_value=1, max_value=5))
def test_nth_root_inverts_power(a, n):
    assert a.nth_root(n) ** n == a
    assert (a ** n).nth_root(n) == a


@given(units(), fractions, fractions)
def test_rational_powers_add(a, x, y):
    assert a.power(x) * a.power(y) == a.power(x + y)


@given(st.lists(fractions, min_size=1, max_size=7))
def test_exp_log_inverse(cs):
    f = PuiseuxSeries.from_coeffs(cs, prec=8, start=1)
    assert f.exp().log() == f
    u = 1 + f
    assert u.log().exp() == u


@settings(max_examples=40)
@given(nonzero_fractions, st.lists(fractions, max_size=6))
def test_reversion(c, rest):
    f = PuiseuxSeries.from_coeffs([c] + rest, prec=8, start=1)
    g = f.revert()
    assert f.compose(g) == q.truncate(8)
    assert g.compose(f) == q.truncate(8)


@given(series(denom=st.just(1)), nonzero_fractions)
def test_rescale_is_composition_with_cq(a, c):
    assert a.rescale(c) == a.compose(PuiseuxSeries.monomial(c, 1))


@given(series(), nonzero_fractions)
def test_rescale_fractional_exponents_by_square(a, c):
    # (c^6 q)^(e/6) has an exact rational coefficient for every e
    assert a.rescale(c ** 6) == a.compose(PuiseuxSeries.monomial(c ** 6, 1))


def test_rescale_fractional_exponent_outside_field():
    from rrcsys.coeff import NotAPower
    with pytest.raises(NotAPower):
        PuiseuxSeries.monomial(1, Fraction(1, 2)).rescale(-1)
