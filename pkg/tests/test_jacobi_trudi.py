"""The block determinant route and its agreement with the alternating sum.

The 3x3 matrix for gl(3|2), (3,2,-1;-1,-1) is frozen label-for-label:
    | hbar_3  h_2  h_0 |
    | hbar_2  h_3  h_1 |
    | hbar_1  h_4  h_2 |
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur.characters import su_zhang_char, typical_constant_delta_char
from superschur.jacobi_trudi import (character, dimension, general_char,
                                     jt_char, jt_entry_indices, jt_matrix,
                                     jt_matrix_labels, weyl_dimension)
from superschur.laurent import LaurentPoly
from superschur.symfunc import SymFuncContext, poly_det
from superschur.weights import Weight, special_class


GOLDEN = Weight(3, 2, (3, 2, -1), (-1, -1))


@st.composite
def constant_delta_weight_strategy(draw, m_max=3, n_max=2, bound=3):
    m = draw(st.integers(1, m_max))
    n = draw(st.integers(1, n_max))
    lam = tuple(sorted((draw(st.integers(-bound, bound)) for _ in range(m)),
                       reverse=True))
    mu = (draw(st.integers(-bound, bound)),) * n
    return Weight(m, n, lam, mu)


# -- the frozen 3x3 matrix ---------------------------------------------------


def test_golden_matrix_labels():
    sc = special_class(GOLDEN)
    assert sc is not None and sc.k == 1
    assert jt_matrix_labels(sc) == [
        ["hbar_3", "h_2", "h_0"],
        ["hbar_2", "h_3", "h_1"],
        ["hbar_1", "h_4", "h_2"],
    ]


def test_golden_matrix_entries_expand_generators():
    sc = special_class(GOLDEN)
    ctx = SymFuncContext(3, 2)
    mat = jt_matrix(sc)
    for row, irow in zip(mat, jt_entry_indices(sc)):
        for entry, (kind, r) in zip(row, irow):
            expected = ctx.super_h(r) if kind == "h" else ctx.dual_super_h(r)
            assert entry == expected


def test_golden_determinant_equals_both_other_routes():
    sc = special_class(GOLDEN)
    det = jt_char(sc)
    assert det == poly_det(jt_matrix(sc), 3, 2)
    assert det == su_zhang_char(GOLDEN)
    assert det == typical_constant_delta_char(GOLDEN)


def test_golden_dimension():
    assert weyl_dimension((3, 2, -1)) == 24
    assert dimension(GOLDEN) == 2 ** 6 * 24 == 1536
    assert dimension(GOLDEN, "suzhang") == 1536
    assert dimension(GOLDEN, "typical") == 1536


# -- small hand-checked determinants ------------------------------------------


def test_k1_two_by_two_indices():
    # gl(2|1), (0,-1;-1) lies in P_1; the index grid follows the formula
    sc = special_class(Weight(2, 1, (0, -1), (-1,)))
    assert sc is not None and sc.k == 1
    assert jt_matrix_labels(sc) == [["hbar_2", "h_-1"], ["hbar_1", "h_0"]]
    assert jt_char(sc) == su_zhang_char(sc.weight)


def test_p0_matrix_is_classical_shape():
    # k = 0: pure h-block with the usual h_{alpha_j + i - j} pattern
    sc = special_class(Weight(2, 1, (2, 1), (0,)))
    assert sc.k == 0
    assert jt_matrix_labels(sc) == [["h_2", "h_0"], ["h_3", "h_1"]]


def test_requires_constant_delta():
    sc = special_class(Weight(3, 2, (1, 0, -1), (-1, -2)))
    assert sc is not None  # in P_1, but mu is not constant
    with pytest.raises(ValueError):
        jt_char(sc)
    with pytest.raises(ValueError):
        general_char(Weight(2, 2, (1, 0), (0, -1)))


# -- the sigma-shift wrapper -----------------------------------------------------


def test_general_char_shift_known_value():
    # (j,...,j;-j,...,-j) is a monomial for any j
    w = Weight(2, 1, (-2, -2), (2,))
    assert general_char(w) == LaurentPoly.monomial(2, 1, (-4, -4, 4))


def test_general_char_requires_dominant():
    with pytest.raises(ValueError):
        general_char(Weight(2, 1, (0, 1), (0,)))


@settings(max_examples=30, deadline=None)
@given(constant_delta_weight_strategy())
def test_general_char_matches_alternating_sum(w):
    assert general_char(w) == su_zhang_char(w)


# -- dispatch ----------------------------------------------------------------------


def test_character_dispatch_routes_agree_on_golden():
    polys = [character(GOLDEN, meth)
             for meth in ("jt", "suzhang", "typical", "reduction")]
    assert all(p == polys[0] for p in polys)


def test_character_dispatch_rejects_unknown():
    with pytest.raises(ValueError):
        character(GOLDEN, "nope")


def test_reduction_dispatch_names_violated_hypothesis():
    with pytest.raises(ValueError, match="0 <= k <= m"):
        character(Weight(2, 1, (1, 0), (-3,)), "reduction")
    with pytest.raises(ValueError, match="alpha_{m-k}"):
        character(Weight(2, 1, (1, -1), (0,)), "reduction")


def test_weyl_dimension_values():
    assert weyl_dimension((0,)) == 1
    assert weyl_dimension((1, 0)) == 2
    assert weyl_dimension((2, 1, 0)) == 8
    assert weyl_dimension(()) == 1
