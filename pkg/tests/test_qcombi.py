from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from superw_kit.planepart import enumerate_counts
from superw_kit.qcombi import (QSeries, ZQSeries, beta_integral_residual, center_character, constant_term_character,
                               euler_function, false_theta, false_theta_expansion_residual, gl32_characters,
                               gl32_two_term_character, macmahon, multi_pochhammer, pit_gf_formula, pochhammer)


def test_euler_pentagonal():
    # (q;q)_inf = sum (-1)^k q^{k(3k-1)/2}
    want = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
    e = euler_function(16)
    assert e.to_list(16) == [want.get(i, 0) for i in range(17)]


def test_pochhammer_finite_and_infinite():
    assert pochhammer(1, 2, 5).to_list(5) == [1, -1, -1, 1, 0, 0]
    assert pochhammer(1, None, 6) == euler_function(6)
    assert multi_pochhammer([1, 2], 1, 4).to_list(4) == [1, -1, -1, 1, 0]


def test_half_integer_exponents():
    s = QSeries.monomial(F(1, 2), 3) + 1
    assert (s * s).coefficient(1) == 1 and (s * s).coefficient(F(1, 2)) == 2
    assert str(QSeries.monomial(F(3, 2), 2)) == "q^(3/2) + O(q^(5/2))"
    with pytest.raises(ValueError):
        s.coefficient(4)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=8))
def test_inverse(values):
    values[0] = values[0] or 1
    s = QSeries.from_list(values + [0] * (10 - len(values)), 9)
    assert (s * s.inverse()) == QSeries.one(9)


def test_false_theta():
    assert false_theta(0, 6).to_list(6) == [1, -1, 0, 1, 0, 0, -1]
    res = false_theta_expansion_residual(10, 10)
    assert all(r.is_zero() for r in res.values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_center_character_matches_enumeration(n):
    want = enumerate_counts(16, (2, n + 1))
    assert center_character(n, 16).to_list(16) == want
    assert pit_gf_formula(1, n, 16).to_list(16) == want
    if n >= 2:
        assert constant_term_character(n, 16).to_list(16) == want


def test_constant_term_form_needs_n_at_least_2():
    with pytest.raises(ValueError):
        constant_term_character(1, 4)


def test_two_row_pit_formula():
    for n in (2, 3):
        assert pit_gf_formula(2, n, 10).to_list(10) == enumerate_counts(10, (3, n + 1))


def test_macmahon():
    assert macmahon(12).to_list(12) == [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479]


def test_gl32_characters_agree():
    closed, ct, pbw = gl32_characters(10)
    assert closed == ct == pbw == gl32_two_term_character(10)
    assert closed.coefficient(F(3, 2)) == 2


@pytest.mark.parametrize("a,b", [(0, 0), (F(1, 2), F(1, 3)), (F(-1), F(1, 4))])
def test_beta_integral(a, b):
    assert beta_integral_residual(a, b, 6).is_zero()


def test_zqseries_constant_term():
    z = ZQSeries({(1,): QSeries.one(3), (-1,): QSeries.one(3), (0,): QSeries.monomial(1, 3)}, 1, 3)
    sq = z * z
    assert sq.constant_term() == QSeries.from_list([2, 0, 1, 0], 3)


def test_json():
    d = macmahon(2).to_json("macmahon")
    assert d == {"name": "macmahon", "trunc": "2", "coeffs": [["0", "1"], ["1", "1"], ["2", "3"]]}
