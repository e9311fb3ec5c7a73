from fractions import Fraction

import pytest

from rrcsys.graded import sl2_check
from rrcsys.rrc import (build_system, dimension_check, fixed_point, hysol_P,
                        independence_check, rescale, rescale_constant, series_residuals,
                        solve_q, solve_z, verify_system)
from rrcsys.series import PuiseuxSeries
from rrcsys.triangle import SHIPPED_GROUPS, TriangleSignature, candidate_embeddings

S = TriangleSignature
SIGS = [s for nm in SHIPPED_GROUPS for s in candidate_embeddings(*nm)]


def test_classical_system_shape():
    D = build_system(S(2, 3)).D
    P, Q, R = D.spec.gens()
    assert D.image("P") == P * P - Q / 144
    assert D.image("Q") == P * Q * 4 - R / 3
    assert D.image("R") == P * R * 6 - Q * Q / 2


def test_pentagonal_first_system():
    D = build_system(S(2, 5)).D
    P, Q, R = D.spec.gens()
    assert D.image("P") == P * P - Q ** 3 * Fraction(3, 20) ** 2
    assert D.image("Q") == P * Q * Fraction(4, 3) - R / 5
    assert D.image("R") == P * R * Fraction(10, 3) - Q ** 4 / 2


def test_laurent_systems_are_flagged():
    assert build_system(S(2, 3)).polynomial
    assert not build_system(S(2, 5, 1, 2)).polynomial


@pytest.mark.parametrize("sig", SIGS, ids=str)
def test_fixed_point_and_sl2(sig):
    assert fixed_point(sig) == (Fraction(sig.N, 2 * sig.m * sig.n), 1, 1)
    assert sl2_check(build_system(sig).D).ok


@pytest.mark.parametrize("sig", SIGS, ids=str)
def test_solution_properties(sig):
    sol = solve_z(sig, 20)
    assert verify_system(sol)["ok"]
    assert hysol_P(sol).truncate(20) == sol.P
    assert independence_check(sol)
    assert sol.Q[0] == 1 and sol.R[0] == 1


def test_perturbed_solution_is_caught():
    sol = solve_z(S(2, 3), 15)
    sol.Q = sol.Q + PuiseuxSeries.monomial(1, 7, prec=15)
    report = verify_system(sol)
    assert not report["ok"] and report["nonzero"]


def test_dimension_check_on_solution():
    sol = solve_z(S(2, 3), 20)
    for w in (12, 24):
        assert dimension_check(sol, w)["ok"]


def test_q_solution_rescale_constant():
    sol = solve_q(2, 3, 10)
    assert sol.Q.coefficients(2) == [1, Fraction(5, 36)]
    from rrcsys.catalog import eisenstein
    c = rescale_constant(sol.Q, eisenstein(4, 10).series)
    assert c == 1728
    assert rescale(sol, c).Q == eisenstein(4, 10).series


def test_residuals_keyed_by_generator():
    res = series_residuals(solve_z(S(2, 5, 1, 2), 10))
    assert set(res) == {"P", "Q", "R"} and all(r.is_zero() for r in res.values())
