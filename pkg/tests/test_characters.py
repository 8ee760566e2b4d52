"""The alternating-sum character formula and its supporting machinery.

The worked r=2 character of gl(3|2) is frozen here as an explicit
two-alternant oracle, built from scratch with nothing but polynomial
arithmetic; it pins the permutation set, the cycle weights, and the
signs of the formula all at once.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur.characters import (CapExceeded, ConeElement, c_related,
                                   cone_offsets, dot_action, is_lexical,
                                   lemma_rho_identities, lexical_raise,
                                   lexical_raise_weight, reduction_char,
                                   s_lambda_set, strongly_c_related,
                                   su_zhang_char,
                                   typical_constant_delta_char)
from superschur.laurent import LaurentPoly
from superschur.weights import Weight, atypical_roots, special_class


@st.composite
def constant_delta_weight_strategy(draw, m_max=2, n_max=2, bound=2):
    """Dominant weights with constant delta-part, the alternating-sum
    formula's oracle-validated domain (the determinant grid plus the
    worked examples all live here or reduce to it)."""
    m = draw(st.integers(1, m_max))
    n = draw(st.integers(1, n_max))
    lam = tuple(sorted((draw(st.integers(-bound, bound)) for _ in range(m)),
                       reverse=True))
    mu = (draw(st.integers(-bound, bound)),) * n
    return Weight(m, n, lam, mu)


def mono(m, n, xexp, yexp):
    e = tuple(2 * v for v in xexp) + tuple(2 * v for v in yexp)
    return LaurentPoly.monomial(m, n, e)


def worked_r2_oracle():
    """ch V(1,0,-1;-1,-2) on gl(3|2) from its two-alternant expansion.

    The character equals
        [ alt(x1^2 x3^-3 y2^-2 Q) - (1/2) alt(x3^-3 Q) ]
          / (prod_{i<j}(x_i - x_j) * (y_1 - y_2)),
    where Q = (x1+y1)(x2+y2)(x3+y1)(x3+y2) and alt is the signed sum
    over S_3 x S_2 acting on the variable blocks.
    """
    m, n = 3, 2
    x = [LaurentPoly.x(m, n, i) for i in range(1, 4)]
    y = [LaurentPoly.y(m, n, j) for j in range(1, 3)]
    q = (x[0] + y[0]) * (x[1] + y[1]) * (x[2] + y[0]) * (x[2] + y[1])
    blocks = [("x", (1, 2, 3)), ("y", (1, 2))]
    alt1 = (mono(m, n, (2, 0, -3), (0, -2)) * q).alternating_sum(blocks)
    alt2 = (mono(m, n, (0, 0, -3), (0, 0)) * q).alternating_sum(blocks)
    numer = 2 * alt1 - alt2
    denom = [x[0] - x[1], x[0] - x[2], x[1] - x[2], y[0] - y[1]]
    halved = numer.exact_divide(denom) * Fraction(1, 2)
    assert halved.is_integral()
    return halved


def test_worked_r2_character_matches_oracle():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    ch = su_zhang_char(w)
    assert ch == worked_r2_oracle()
    assert ch.sum_of_coefficients() == 343
    assert ch.coeff(w.doubled()) == 1
    assert all(isinstance(c, int) and c > 0 for c in ch.terms.values())


def test_worked_r2_reduction_agrees():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    sc = special_class(w)
    assert reduction_char(sc) == su_zhang_char(w)


# -- trivial and typical sanity ------------------------------------------------


def test_trivial_modules_have_character_one():
    for m, n in [(1, 1), (2, 2), (3, 3)]:
        w = Weight(m, n, (0,) * m, (0,) * n)
        assert su_zhang_char(w) == LaurentPoly.one(m, n)


def test_one_dimensional_sigma_powers():
    # (j,...,j; -j,...,-j) is the j-th power of the superdeterminant
    for j in (-2, 1, 3):
        w = Weight(2, 1, (j, j), (-j,))
        expected = LaurentPoly.monomial(2, 1, (2 * j, 2 * j, -2 * j))
        assert su_zhang_char(w) == expected


def test_typical_closed_form_matches_alternating_sum():
    cases = [
        Weight(2, 1, (2, 1), (0,)),
        Weight(2, 1, (3, 0), (-1,)),
        Weight(2, 2, (3, 2), (0, 0)),
        Weight(3, 2, (3, 2, -1), (-1, -1)),
    ]
    for w in cases:
        assert atypical_roots(w).degree == 0
        assert typical_constant_delta_char(w) == su_zhang_char(w)


def test_typical_closed_form_rejects_bad_input():
    with pytest.raises(ValueError):
        typical_constant_delta_char(Weight(1, 1, (0,), (0,)))  # atypical
    with pytest.raises(ValueError):
        typical_constant_delta_char(Weight(1, 2, (5,), (0, -1)))


def test_kac_structure_of_typical_characters():
    # a typical constant-delta character is the odd-root product times
    # a Weyl-group alternant: all 2^{mn} odd directions contribute
    w = Weight(2, 1, (2, 1), (0,))
    ch = typical_constant_delta_char(w)
    assert ch.sum_of_coefficients() % 2 ** (w.m * w.n) == 0


def test_cap_guard():
    with pytest.raises(CapExceeded):
        su_zhang_char(Weight(3, 2, (1, 0, -1), (-1, -2)), cap=5)


# -- closeness and the permutation set ---------------------------------------


def test_worked_r2_slots_are_not_close():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    data = atypical_roots(w)
    assert not c_related(w, 1, 2, data)
    assert not strongly_c_related(w, 1, 2, data)
    assert c_related(w, 1, 1, data)


def test_constant_delta_slots_are_chain_close():
    w = Weight(3, 3, (0, 0, 0), (0, 0, 0))
    data = atypical_roots(w)
    assert data.degree == 3
    assert strongly_c_related(w, 1, 3, data)


def test_s_lambda_set_is_identity_only():
    for w in [Weight(3, 2, (1, 0, -1), (-1, -2)),
              Weight(2, 2, (0, 0), (0, 0))]:
        assert s_lambda_set(w) == [tuple(range(atypical_roots(w).degree))]


def test_closeness_index_bounds():
    w = Weight(1, 1, (0,), (0,))
    with pytest.raises(IndexError):
        c_related(w, 1, 2)


# -- dot action and lexical raising -------------------------------------------


def test_dot_action_worked_values():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    data = atypical_roots(w)
    swap = (1, 0)
    assert lexical_raise_weight(dot_action(swap, w, data), data) == \
        Weight(3, 2, (-1, 0, -1), (-1, 0))
    head = Weight(2, 2, (1, 0), (0, -1))
    hdata = atypical_roots(head)
    assert lexical_raise_weight(dot_action(swap, head, hdata), hdata) == \
        Weight(2, 2, (-1, 0), (0, 1))


def test_dot_action_identity_fixes_weight():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    data = atypical_roots(w)
    assert dot_action((0, 1), w, data) == w


def test_lexical_raise_produces_lexical_weight():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    data = atypical_roots(w)
    v = ConeElement(w, (2, 0)).value
    raised = lexical_raise_weight(v, data)
    assert is_lexical(raised, data)
    # raising is idempotent
    assert lexical_raise_weight(raised, data) == raised


def test_cone_offsets_roundtrip_and_rejection():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    data = atypical_roots(w)
    elem = ConeElement(w, (1, 2))
    assert cone_offsets(w, elem.value, data) == (1, 2)
    outside = Weight(3, 2, (2, 0, -1), (-1, -2))
    with pytest.raises(ValueError):
        cone_offsets(w, outside, data)


def test_lexical_raise_cone_element():
    w = Weight(3, 2, (1, 0, -1), (-1, -2))
    elem = ConeElement(w, (0, 1))
    raised = lexical_raise(elem)
    assert raised.base == w
    assert raised.level >= 0
    assert is_lexical(raised.value, atypical_roots(w))


# -- rho bookkeeping ------------------------------------------------------------


def test_lemma_rho_identities_small():
    for (m, n, p, q) in [(2, 1, 1, 1), (3, 2, 1, 2), (3, 2, 2, 1),
                         (4, 1, 2, 2)]:
        res = lemma_rho_identities(m, n, p, q)
        assert res["a"] and res["b"]
    with pytest.raises(ValueError):
        lemma_rho_identities(3, 1, 1, 1)


# -- reduction route -------------------------------------------------------------


def test_reduction_matches_alternating_sum_on_specials():
    cases = [
        Weight(2, 2, (1, 0), (-1, -1)),
        Weight(3, 2, (2, 1, 0), (-1, -1)),
        Weight(3, 2, (1, 0, -1), (-2, -2)),
        Weight(2, 1, (1, -1), (-1,)),
    ]
    for w in cases:
        sc = special_class(w)
        assert sc is not None
        assert reduction_char(sc) == su_zhang_char(w)


# -- structural properties over random weights ------------------------------------


@settings(max_examples=25, deadline=None)
@given(constant_delta_weight_strategy())
def test_character_structure(w):
    ch = su_zhang_char(w)
    # nonnegative integer coefficients
    assert all(isinstance(c, int) and c > 0 for c in ch.terms.values())
    # highest-weight multiplicity one
    assert ch.coeff(w.doubled()) == 1
    # positive integer dimension
    assert ch.sum_of_coefficients() >= 1
    # S_m x S_n symmetry: adjacent transpositions fix the character
    if w.m > 1:
        assert ch.act_permutation(wx=(1, 0) + tuple(range(2, w.m))) == ch
    if w.n > 1:
        assert ch.act_permutation(wy=(1, 0) + tuple(range(2, w.n))) == ch
