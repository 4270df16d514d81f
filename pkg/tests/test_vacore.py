import random

import pytest

from superw_kit.scalars import EPS, ONE, Scalar
from superw_kit.suites import _integral_np, _wick, engine_algebras, random_state
from superw_kit.vacore import (AlgebraSpec, InconsistentSpec, _gen, affine_gl, bc_pairs, betagamma_pairs,
                               build_algebra, check_presentation, degenerate_betagamma_pairs, heisenberg,
                               jacobi_residual, skew_residual, tensor)


def test_heisenberg_bracket():
    A = build_algebra(heisenberg([[EPS]], ["h"]))
    h = A.gen("h")
    assert A.lambda_bracket(h, h).coeffs_dict() == {1: {(): EPS}}
    hh = A.normal_product(h, h)
    br = A.lambda_bracket(h, hh)
    assert br.coefficient(1) == h * (2 * EPS)
    assert br.coefficient(0).is_zero()


def test_nth_products():
    A = build_algebra(heisenberg([[1]], ["h"]))
    h = A.gen("h")
    assert A.nth_product(h, h, 1) == A.unit()
    assert A.nth_product(h, h, -1) == A.word("h", "h")
    assert A.nth_product(h, h, -2) == A.normal_product(A.gen("h", 1), h)


def test_bc_signs():
    A = build_algebra(bc_pairs(1))
    p, q = A.gen("psi"), A.gen("psi*")
    assert A.lambda_bracket(p, q).coefficient(0) == A.unit()
    assert A.lambda_bracket(q, p).coefficient(0) == A.unit()
    assert A.normal_product(p, p).is_zero()
    assert A.normal_product(p, q) == -A.normal_product(q, p)


def test_betagamma_and_degenerate():
    A = build_algebra(betagamma_pairs(1))
    assert A.lambda_bracket(A.gen("beta"), A.gen("gamma")).coefficient(0) == A.unit()
    assert A.lambda_bracket(A.gen("gamma"), A.gen("beta")).coefficient(0) == -A.unit()
    D = build_algebra(degenerate_betagamma_pairs(2))
    assert D.lambda_bracket(D.gen("a1"), D.gen("a1*")).is_zero()


def test_affine_gl11_table():
    A = build_algebra(affine_gl(1, 1, EPS))
    e12, e21, e11, e22 = (A.gen(x) for x in ("e12", "e21", "e11", "e22"))
    br = A.lambda_bracket(e12, e21)
    assert br.coefficient(0) == e11 + e22
    assert br.coefficient(1) == A.scalar_state(EPS)
    assert A.lambda_bracket(e11, e12).coefficient(0) == e12


def test_weights_and_parity():
    A = build_algebra(tensor(heisenberg([[1]], ["h"]), bc_pairs(1)))
    s = A.word("h", ("psi", 2))
    assert s.weight() == 1 + 2 + Scalar(1) / 2 or s.weight() == 3 + 0.5
    assert s.parity() == 1


def test_inconsistent_specs_are_rejected():
    bad = AlgebraSpec([_gen("a"), _gen("b", 1)], {("a", "b"): {0: [(ONE, ())]}})
    with pytest.raises(InconsistentSpec):
        build_algebra(bad)
    skew_bad = AlgebraSpec([_gen("a"), _gen("b")], {("a", "b"): {1: [(ONE, ())]}, ("b", "a"): {1: [(Scalar(2), ())]}})
    with pytest.raises(InconsistentSpec):
        build_algebra(skew_bad)


def test_check_presentation_detects_jacobi_failure():
    # sl2-like table with a wrong structure constant
    gens = [_gen("e"), _gen("f"), _gen("h")]
    good = {("e", "f"): {0: [(ONE, (("h", 0),))]}, ("h", "e"): {0: [(Scalar(2), (("e", 0),))]},
            ("h", "f"): {0: [(Scalar(-2), (("f", 0),))]}}
    assert check_presentation(AlgebraSpec(gens, good)).ok
    bad = dict(good)
    bad[("h", "f")] = {0: [(Scalar(-3), (("f", 0),))]}
    rep = check_presentation(AlgebraSpec(gens, bad))
    assert not rep.ok and rep.jacobi_residuals


@pytest.mark.parametrize("name", list(engine_algebras()))
def test_axioms_on_random_states(name):
    A = engine_algebras()[name]
    rng = random.Random(hash(name) % 1000)
    for _ in range(12):
        a, b, c = (random_state(A, rng, terms=1) for _ in range(3))
        assert not skew_residual(A, a.terms, b.terms)
        assert not jacobi_residual(A, a.terms, b.terms, c.terms)
        got = A.lambda_bracket(a, A.normal_product(b, c))
        assert got.coeffs_dict() == {k: v.terms for k, v in _wick(A, a, b, c).items()}
        lhs = A.normal_product(A.normal_product(a, b), c) - A.normal_product(a, A.normal_product(b, c))
        sign = -1 if (a.parity() and b.parity()) else 1
        assert lhs == _integral_np(A, a, A.lambda_bracket(b, c)) + _integral_np(A, b, A.lambda_bracket(a, c)) * sign


def test_translation_is_a_derivation():
    A = engine_algebras()["gl(1|1)"]
    rng = random.Random(3)
    for _ in range(10):
        a, b = random_state(A, rng), random_state(A, rng)
        lhs = A.translate(A.normal_product(a, b))
        assert lhs == A.normal_product(A.translate(a), b) + A.normal_product(a, A.translate(b))


def test_sesquilinearity():
    A = engine_algebras()["gl(2|1) critical"]
    rng = random.Random(4)
    for _ in range(8):
        a, b = random_state(A, rng), random_state(A, rng)
        br = A.lambda_bracket(a, b)
        # [d a lambda b] = -lambda [a lambda b]
        da = A.lambda_bracket(A.translate(a), b)
        assert da.coeffs_dict() == {j + 1: (-br.coefficient(j)).terms for j in br.powers()}
        # [a lambda d b] = (lambda + d) [a lambda b]
        db = A.lambda_bracket(a, A.translate(b))
        want = {}
        for j in br.powers():
            want[j + 1] = want.get(j + 1, A.zero()) + br.coefficient(j)
            want[j] = want.get(j, A.zero()) + A.translate(br.coefficient(j))
        assert db.coeffs_dict() == {k: v.terms for k, v in want.items() if not v.is_zero()}
