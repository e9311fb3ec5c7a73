"""Hypothesis strategies shared by the unit tests."""

from fractions import Fraction

from hypothesis import strategies as st

from rrcsys.coeff import QuadExt
from rrcsys.series import PuiseuxSeries

small_ints = st.integers(min_value=-30, max_value=30)
fractions = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
nonzero_fractions = fractions.filter(lambda x: x != 0)


def quad(d=-3):
    return st.builds(lambda a, b: QuadExt(a, b, d) if b else a, fractions, fractions)


def series(max_len=6, prec=8, coeffs=fractions, denom=st.sampled_from([1, 2, 3])):
    """Truncated series with exponents in (1/denom) Z, valuation >= 0."""
    return st.builds(
        lambda cs, D: PuiseuxSeries({i: c for i, c in enumerate(cs)}, D, prec),
        st.lists(coeffs, min_size=1, max_size=max_len), denom)


def units(prec=8):
    """Integer-exponent series with constant term 1."""
    return st.builds(lambda cs: PuiseuxSeries.from_coeffs([Fraction(1)] + cs, prec=prec),
                     st.lists(fractions, max_size=prec - 1))
