from hypothesis import given, settings, strategies as st

from superw_kit.miura import DiffPoly, critical_specialize, w_coefficients
from superw_kit.planepart import enumerate_counts
from superw_kit.susy import (affine_graded_dimension, h_bar, is_supersymmetric, power_sum, symmetric_in,
                             to_super_variables, u_names)

V = DiffPoly.var


def test_power_sums():
    assert power_sum(1, 1, 1) == V("u1") + V("v1")
    assert power_sum(2, 1, 2) == V("u1") ** 2 + V("u2") ** 2 - V("v1") ** 2


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(1, 2), st.integers(1, 5))
def test_power_sums_are_supersymmetric(m, n, p):
    assert is_supersymmetric(power_sum(m, n, p), m, n)


def test_non_supersymmetric_detected():
    assert not is_supersymmetric(V("u1"), 1, 1)
    assert not is_supersymmetric(V("u1") * V("u1") + V("v1") * V("v1"), 1, 1)


def test_products_and_derivatives_stay_supersymmetric():
    f = power_sum(2, 1, 1) * power_sum(2, 1, 3).derivative(2)
    assert is_supersymmetric(f, 2, 1)


def test_critical_symbols():
    for n in (1, 2, 3):
        for p, w in enumerate(w_coefficients(n, 4), 1):
            sym = to_super_variables(critical_specialize(w).degree_part(p), n)
            assert is_supersymmetric(sym, n, 1)
            assert symmetric_in(sym, u_names(n))


def test_h_bar_is_supersymmetric():
    for n in (1, 2, 3):
        for p in (1, 2, 3):
            assert is_supersymmetric(h_bar(n, p), n, 1)


def test_graded_dimension_matches_pit_2_2():
    assert affine_graded_dimension(1, 1, 8) == enumerate_counts(8, (2, 2))
