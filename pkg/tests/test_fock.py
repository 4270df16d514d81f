import random

import pytest

from superw_kit.fock import FockSpace, NonIntegralPairing, ScreeningCharge
from superw_kit.paperlib import t_space, ux_space
from superw_kit.scalars import EPS, ONE, ZERO, Scalar
from superw_kit.suites import random_fock_state


def fermion_space():
    return FockSpace([[1]], ["x"], x_index=0)


def test_boson_fermion_dictionary():
    S = fermion_space()
    psi, psis = S.vector((ONE,)), S.vector((-ONE,))
    assert S.lambda_bracket(psi, psis).coefficient(0) == S.vacuum()
    assert S.lambda_bracket(psis, psi).coefficient(0) == S.vacuum()
    assert S.vertex_mode(psi, -1, psis) == S.gen("x")
    assert S.lambda_bracket(psi, psi).is_zero()
    assert psi.parity() == 1 and S.vacuum().parity() == 0


def test_heisenberg_acts_by_pairing():
    S = t_space(1)
    gamma = S.weight(t1=Scalar(2), t2=EPS)
    v = S.vector(gamma)
    br = S.lambda_bracket(S.gen("t1"), v)
    assert br.coefficient(0) == v * S.pair(S.weight(t1=1), gamma)
    assert br.coefficient(1).is_zero()


def test_translation_of_exponential():
    S = fermion_space()
    assert S.translate(S.vector((ONE,))) == S.from_state(S.alg.gen("x"), (ONE,))


def test_non_integral_pairing():
    T = FockSpace([[2]], ["h"])
    with pytest.raises(NonIntegralPairing):
        T.vertex_mode(T.vector((Scalar(1) / 3,)), 0, T.vector((Scalar(1) / 5,)))


def test_screening_is_zero_mode():
    S = fermion_space()
    assert S.screen(ScreeningCharge((ONE,)), S.vector((-ONE,))) == S.vacuum()
    assert S.screen(ScreeningCharge((ONE,)), S.vacuum()).is_zero()


def test_lattice_parity_in_ux_space():
    S = ux_space(2)
    assert S.lattice_parity(S.weight(x=1)) == 1
    assert S.lattice_parity(S.weight(x=2, u1=EPS)) == 0


def test_borcherds_commutator_formula_on_random_states():
    # [a_(m), b_(n)] w = sum_j C(m, j) (a_(j) b)_(m+n-j) w on lattice states; with the trivial
    # cocycle e^alpha and e^beta commute up to (-1)^{(alpha, beta)}
    from math import comb

    S = t_space(1)
    beta = S.weight(t1=-1 / (1 + 1 / EPS), t2=-1 / (1 + 1 / EPS))
    rng = random.Random(2)
    lattice = [tuple(c * j for c in beta) for j in (-1, 0, 1)]
    for _ in range(4):
        a = random_fock_state(S, rng, lattice, terms=1)
        b = random_fock_state(S, rng, lattice, terms=1)
        w = random_fock_state(S, rng, lattice, terms=2)
        for m in (0, 1):
            for n in (-1, 0):
                lhs = S.vertex_mode(a, m, S.vertex_mode(b, n, w))
                pa = S.pair(a.exponent(), b.exponent()).as_integer() % 2
                lhs = lhs - S.vertex_mode(b, n, S.vertex_mode(a, m, w)) * ((-1) ** pa)
                rhs = S.zero()
                for j in range(m + 1):
                    ab = S.vertex_mode(a, j, b)
                    if not ab.is_zero():
                        rhs = rhs + S.vertex_mode(ab, m + n - j, w) * comb(m, j)
                assert lhs == rhs
