from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcsys.triangle import (AmbiguousEmbedding, TriangleSignature, candidate_embeddings,
                             dim_pure_weight, dims_table, generator_weights, group_generators,
                             is_admissible, monomial_basis, monomial_rotation, multipliers,
                             valence_degree)

S = TriangleSignature


def test_signature_validation():
    assert S(2, 3).N == 1
    assert S(2, 7, 1, 3).N == 1
    for bad in [(3, 2, 1, 1), (2, 4, 1, 2), (2, 3, 0, 1), (1, 5, 1, 1)]:
        with pytest.raises(ValueError):
            S(*bad)
    assert str(S(2, 5, 1, 2)) == "(2,5,1,2)"


def test_embeddings_of_shipped_groups():
    assert candidate_embeddings(2, 3) == [S(2, 3)]
    assert candidate_embeddings(3, 3) == [S(3, 3)]
    assert candidate_embeddings(2, 5) == [S(2, 5), S(2, 5, 1, 2)]
    assert [s.N for s in candidate_embeddings(2, 7)] == [5, 3, 1]
    assert candidate_embeddings(2, 7) == [S(2, 7), S(2, 7, 1, 2), S(2, 7, 1, 3)]


def test_ambiguous_fold_is_reported():
    with pytest.raises(AmbiguousEmbedding):
        candidate_embeddings(3, 5)


def test_generator_weights():
    assert generator_weights(S(2, 3)) == (4, 6)
    assert generator_weights(S(2, 5)) == (Fraction(4, 3), Fraction(10, 3))
    assert generator_weights(S(3, 3)) == (2, 2)


def test_classical_dimensions():
    sig = S(2, 3)
    assert [dim_pure_weight(sig, k) for k in range(0, 26, 2)] == \
        [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3]
    assert dim_pure_weight(sig, 3) == 0
    assert monomial_basis(sig, 12) == [(0, 2), (3, 0)]


def test_level_two_weights_and_multipliers():
    sig = S(3, 3)
    assert is_admissible(sig, 2) and dim_pure_weight(sig, 2) == 2
    assert not is_admissible(sig, Fraction(2, 3))
    assert multipliers(sig) == (Fraction(2, 3), Fraction(1, 3))
    assert monomial_rotation(sig, 1, 1) == 0
    table = dims_table(sig, 6)
    row = next(r for r in table if r["w"] == "2")
    assert row["rotation"] is None and row["rotations"] == ["1/3", "2/3"]


def test_valence_degree():
    assert valence_degree([S(2, 3)], [12]) == 1
    with pytest.raises(ValueError):
        valence_degree([S(2, 3)], [12, 4])


def test_group_generators():
    g = group_generators(3, 3)
    assert g.exact and g.lam == 2
    assert g.S ** 3 == g.S ** 0
    g = group_generators(2, 5, 1, 2)
    assert not g.exact
    assert g.symbols == {"c_2_5": "x**2 + x - 1"}


@given(st.sampled_from([S(2, 3), S(3, 3), S(2, 5), S(2, 5, 1, 2), S(2, 7), S(2, 7, 1, 2),
                        S(2, 7, 1, 3), S(3, 4), S(4, 6), S(3, 6)]),
       st.integers(0, 200))
def test_dimension_formula_matches_monomial_count(sig, x):
    w = Fraction(x, sig.N)
    if is_admissible(sig, w):
        assert dim_pure_weight(sig, w) == len(monomial_basis(sig, w))
    else:
        assert dim_pure_weight(sig, w) == 0
