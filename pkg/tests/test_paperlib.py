from fractions import Fraction

import pytest

from superw_kit.fock import FockState
from superw_kit.paperlib import (CATALOG, Gl11ScreeningProof, RootDatumGlN1, c_n, check_gl32, coset_algebra,
                                 critical_W_script, g_fields, gl11_affine, gl11_embedding, gl32_images,
                                 gl32_presentation, gl32_target, homomorphism_residuals, homomorphism_residuals_va,
                                 level_K, screen_state, screening_data, t_space, tilde_generators, ux_space,
                                 varkappa, w_states, w_states_ux, wakimoto_gl11, wakimoto_space)
from superw_kit.scalars import EPS, ONE, Scalar
from superw_kit.vacore import Algebra, check_presentation


def test_levels():
    assert level_K() == (EPS + 1) / EPS
    assert varkappa() == 1 / EPS
    assert level_K(Scalar(-1)) == 0


def test_root_datum():
    R = RootDatumGlN1(2)
    assert R.form() == [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
    assert R.simple_root(1) == (1, -1, 0) and R.simple_root(2) == (0, 1, 1)
    assert R.pairing(R.simple_root(2), R.simple_root(2)) == 0  # odd isotropic root
    assert R.pairing(R.simple_root(1), R.simple_root(1)) == 2


def test_screening_charges_have_the_expected_norms():
    for n in (1, 2, 3):
        sp = t_space(n)
        for i in range(1, n + 1):
            b = screening_data(n, i).beta
            norm = sp.pair(b, b)
            assert norm == (2 / level_K() if i < n else ONE)


def test_screenings_do_not_kill_everything():
    sp = t_space(2)
    assert not screen_state(screening_data(2, 1), sp, sp.alg.gen("t1")).is_zero()


def test_t_and_ux_coordinates_agree():
    # the screenings in ux coordinates kill the W_p written in ux coordinates
    n = 2
    sp = ux_space(n)
    for w in w_states_ux(n, 3):
        for i in range(1, n + 1):
            assert sp.screen(screening_data(n, i, coords="ux"), sp.from_state(w)).is_zero()


def test_central_charge_value():
    assert c_n(1) == Scalar(-2)
    A = coset_algebra(1)
    _, W2, _ = tilde_generators(1)
    assert A.lambda_bracket(W2, W2).coefficient(3) == A.scalar_state(Fraction(-1, 6))


def test_w3_as_printed_is_not_primary():
    # with W_2 in place of W~_2 inside W~_3 the bracket with W~_2 picks up extra terms
    for n in (1, 2):
        A = coset_algebra(n)
        _, W2, W3 = tilde_generators(n, literal=True)
        assert A.lambda_bracket(W2, W3).degree() > 1


def test_gl11_proof_identities():
    P = Gl11ScreeningProof()
    for k in range(4):
        for fn in (P.A, P.B, P.C):
            lhs, rhs = fn(k)
            assert lhs == rhs
    # the printed extra factor (p+1) in C_n only survives n = 0
    assert [(lambda l, r: l == r)(*P.C(k, literal=True)) for k in range(4)] == [True, False, False, False]


def test_commutator_with_d2_has_coefficient_m_minus_1():
    P = Gl11ScreeningProof()
    w = P.space.vacuum()
    for m in range(-1, 3):
        assert P.commutator(m, P.D2, w) == P.Q_mode(m - 1, w) * (m - 1)
        assert P.commutator(m, P.D1, w) == P.Q_mode(m - 1, w) * (EPS + m)


def test_g_fields_charge_and_critical_bracket():
    n = 2
    Gp, Gm = g_fields(n, Scalar(-1))
    sp = Gp.space
    b = sp.lambda_bracket(Gp, Gm)
    assert b.coefficient(0) == sp.from_state(
        __import__("superw_kit.miura", fromlist=["as_state"]).as_state(critical_W_script(n), sp.alg))
    assert isinstance(Gm, FockState) and Gm.parity() == 1


def test_homomorphism_checker_detects_a_wrong_image():
    imgs = dict(wakimoto_gl11())
    assert homomorphism_residuals(imgs, gl11_affine(), wakimoto_space()) == []
    imgs["e12"] = imgs["e12"] * 2
    assert homomorphism_residuals(imgs, gl11_affine(), wakimoto_space())


def test_gl11_embedding_at_critical_level():
    for n in (1, 2):
        assert homomorphism_residuals(gl11_embedding(n), gl11_affine(Scalar(-1)), ux_space(n, Scalar(-1))) == []


def test_gl32_presentation_and_images():
    report, pairs = check_gl32()
    assert report.ok
    assert len(pairs) == 36 and not any(pairs.values())


def test_gl32_printed_coefficient_is_inconsistent():
    report = check_presentation(gl32_presentation(literal=True))
    assert not report.ok and "weight" in report.error


def test_gl32_wrong_image_is_detected():
    T = gl32_target()
    imgs = gl32_images(T)
    imgs["L"] = imgs["L"] + T.translate(imgs["J"])
    assert homomorphism_residuals_va(imgs, Algebra(gl32_presentation(), validate=False), T)


@pytest.mark.parametrize("name", ["coset_algebra", "w_states", "g_fields", "wakimoto_gl11", "gl32_images"])
def test_catalog_builds(name):
    entry = CATALOG[name]
    args = {"coset_algebra": (1,), "w_states": (1, 2), "g_fields": (1,), "wakimoto_gl11": (), "gl32_images": ()}[name]
    assert entry.build(*args) is not None
    assert entry.anchor
