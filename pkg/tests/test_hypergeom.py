from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcsys.graded import Derivation, GradedPoly, sl2_check, weight_operator
from rrcsys.hypergeom import (HGParams, frobenius_pair, hg_residual, hg_series, log_residual,
                              nome, ohyama_field, qform, triangle_params, y_transform_exponents)
from rrcsys.series import PuiseuxSeries

from .strategies import fractions

params = st.builds(HGParams, fractions, fractions,
                   fractions.filter(lambda g: not (g.denominator == 1 and g <= 0)))


def test_triangle_params():
    p = triangle_params(2, 3, 1, 1)
    assert (p.alpha, p.beta, p.gamma) == (Fraction(5, 12), Fraction(1, 12), 1)
    assert triangle_params(3, 3, 1, 1) == HGParams(Fraction(1, 2), Fraction(1, 6))
    with pytest.raises(ValueError):
        triangle_params(2, 4, 1, 2)


def test_classical_coefficients():
    F = hg_series(HGParams(Fraction(1, 12), Fraction(5, 12)), 4)
    assert F.coefficients(3) == [1, Fraction(5, 144), Fraction(1105, 82944)]


def test_qform_of_classical_case():
    qp = qform(triangle_params(2, 3, 1, 1))
    assert (qp.a, qp.b, qp.c) == (Fraction(-1, 4), Fraction(-3, 16), Fraction(31, 144))


def test_classical_nome_and_log_partner():
    sol = frobenius_pair(triangle_params(2, 3, 1, 1), 12)
    assert log_residual(sol).is_zero()
    assert sol.h[1] == Fraction(31, 72)
    assert nome(sol).coefficients(3) == [0, 1, Fraction(31, 72)]


def test_frobenius_needs_gamma_one():
    with pytest.raises(ValueError):
        frobenius_pair(HGParams(1, 1, 2), 5)


def test_ohyama_field_is_sl2_module():
    D = ohyama_field(qform(triangle_params(2, 5, 1, 2)))
    spec = D.spec
    # every generator has weight 2, so delta lowers each of X, Y, Z
    minus = GradedPoly.constant(spec, Fraction(-1))
    delta = Derivation(spec, [minus, minus, minus], (-2,))
    assert sl2_check(D, weight_operator(spec), delta).ok


@given(params)
def test_hg_series_solves_equation(p):
    assert hg_residual(p, hg_series(p, 10)).is_zero()


@given(params)
def test_euler_transformation(p):
    # F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z)
    z = PuiseuxSeries.variable()
    lhs = hg_series(p, 10)
    rhs = (1 - z).truncate(10).power(p.gamma - p.alpha - p.beta) * \
        hg_series(HGParams(p.gamma - p.alpha, p.gamma - p.beta, p.gamma), 10)
    assert lhs == rhs


def not_nonpositive_int(x):
    return not (x.denominator == 1 and x <= 0)


def test_frobenius_rejects_terminating_series():
    with pytest.raises(ValueError):
        frobenius_pair(HGParams(-2, Fraction(1, 3)), 5)


@given(fractions.filter(not_nonpositive_int), fractions.filter(not_nonpositive_int))
def test_log_partner_solves_equation(a, b):
    sol = frobenius_pair(HGParams(a, b), 10)
    assert log_residual(sol).is_zero()


@given(fractions, fractions)
def test_y_transform_solves_qform_equation(a, b):
    # y = z^(g/2) (1-z)^e F solves y'' = Q y with Q = a/z^2 + b/(z-1)^2 + c/(z(z-1))
    p = HGParams(a, b)
    ez, e1 = y_transform_exponents(p)
    qp = qform(p)
    z = PuiseuxSeries.variable()
    y = PuiseuxSeries.monomial(1, ez) * (1 - z).truncate(12).power(e1) * hg_series(p, 12)
    zm1 = (z - 1).truncate(12)
    Q = qp.a / (z * z) + qp.b / (zm1 * zm1) + qp.c / (z * zm1)
    assert (y.derivative().derivative() - Q * y).is_zero()
