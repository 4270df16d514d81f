import pytest
from hypothesis import given, settings, strategies as st

from superw_kit.miura import (ClassicalLambda, DepthExceeded, DiffPoly, MatrixDiffOp, PsiDO, apply_to_function,
                              classical_lambda_bracket, compose, critical_affine, critical_miura_operator,
                              critical_specialize, differential_monomials, frac_power, gram_dict, miura_operator,
                              segal_sugawara, solve_in_span, span_rank, w_coefficients)
from superw_kit.scalars import EPS, ONE, Scalar

V = DiffPoly.var


@st.composite
def diffpolys(draw, names=("u", "v")):
    f = DiffPoly()
    for _ in range(draw(st.integers(0, 3))):
        term = DiffPoly.const(draw(st.sampled_from([1, -1, 2, EPS, EPS + 1])))
        for _ in range(draw(st.integers(0, 2))):
            term = term * V(draw(st.sampled_from(names)), draw(st.integers(0, 2)))
        f = f + term
    return f


@st.composite
def diffops(draw):
    return PsiDO({k: draw(diffpolys()) for k in range(draw(st.integers(0, 2)) + 1)})


def test_diffpoly_basics():
    u = V("u")
    assert (u * u).derivative() == u * V("u", 1) * 2
    assert (u + V("v")).generators() == {"u", "v"}
    assert (u * V("u", 2)).partial(("u", 2)) == u
    assert (u * u + V("v", 1)).degree_part(2) == u * u
    assert (u * u).substitute({"u": V("a") + V("b")}) == V("a") * V("a") + V("a") * V("b") * 2 + V("b") * V("b")
    assert V("u", 1).substitute({"u": V("a") * V("b")}) == V("a", 1) * V("b") + V("a") * V("b", 1)


@settings(max_examples=40, deadline=None)
@given(diffpolys(), diffpolys())
def test_leibniz_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@settings(max_examples=30, deadline=None)
@given(diffops(), diffops(), diffops())
def test_composition_is_associative_on_differential_operators(A, B, C):
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@settings(max_examples=30, deadline=None)
@given(diffops(), diffops(), diffpolys())
def test_composition_matches_action_on_functions(A, B, g):
    assert apply_to_function(compose(A, B), g) == apply_to_function(A, apply_to_function(B, g))


@settings(max_examples=25, deadline=None)
@given(diffpolys(), st.integers(-3, 3), st.integers(-3, 3))
def test_fractional_power_semigroup(f, a, b):
    D = PsiDO.first_order(f)
    depth = 4
    lhs = compose(frac_power(D, depth, a), frac_power(D, depth, b), depth)
    rhs = frac_power(D, depth, a + b)
    low = max(x for x in (lhs.low, rhs.low, a + b - depth) if x is not None)
    assert lhs.truncate(low) == rhs.truncate(low)


def test_integer_powers_are_exact():
    D = PsiDO.first_order(V("u"))
    assert frac_power(D, 3, 1) == D
    assert frac_power(D, 3, 2) == compose(D, D)
    inv = frac_power(D, 5, -1)
    one = compose(D, inv, 5)
    assert one.coefficient(0) == DiffPoly.const(1)
    assert all(one.coefficient(m).is_zero() for m in range(one.low, 0))


def test_depth_is_enforced():
    D = frac_power(PsiDO.first_order(V("u")), 2)
    with pytest.raises(DepthExceeded):
        D.coefficient(-5)


def test_w1_is_the_trace():
    # W_1 = eps (t_1 + ... + t_n) - eps^2 t_{n+1}
    for n in (1, 2, 3):
        want = sum((V(f"t{i}") * EPS for i in range(1, n + 1)), DiffPoly()) - V(f"t{n + 1}") * (EPS * EPS)
        assert w_coefficients(n, 1)[0] == want


def test_critical_limit_two_routes():
    # eps -> -1 of the deformed operator versus the direct integer-exponent computation
    for n in (1, 2, 3):
        assert critical_specialize(miura_operator(n, 4)).truncate(n - 4) == critical_miura_operator(n, 4).truncate(n - 4)


def test_classical_bracket_basics():
    gram = gram_dict(["u"], [[1]])
    assert classical_lambda_bracket(V("u"), V("u"), gram) == ClassicalLambda({1: DiffPoly.const(1)})
    br = classical_lambda_bracket(V("u") * V("u"), V("u"), gram)
    assert br.coefficient(1) == V("u") * 2


@settings(max_examples=30, deadline=None)
@given(diffpolys(), diffpolys())
def test_classical_bracket_skew_symmetry(f, g):
    # {g lambda f} = -{f_{-lambda-d} g}
    gram = gram_dict(["u", "v"], [[1, 0], [0, EPS]])
    fg = classical_lambda_bracket(f, g, gram)
    gf = classical_lambda_bracket(g, f, gram)
    want = {}
    from math import comb
    for j, c in fg.coeffs.items():
        for k in range(j + 1):
            term = c.derivative(j - k) * (comb(j, k) * (-1) ** j * -1)
            want[k] = want.get(k, DiffPoly()) + term
    assert gf == ClassicalLambda(want)


def test_classical_closure_of_critical_symbols():
    # symbols of the critical W_1, W_2 for n = 2 close under the classical bracket
    n = 2
    ws = [critical_specialize(w).degree_part(p) for p, w in enumerate(w_coefficients(n, 2), 1)]
    assert ws[0] == -(V("u1") + V("u2") + V("u3"))
    assert ws[1] == (V("u1") + V("u3")) * (V("u2") + V("u3"))
    gram = gram_dict(["u1", "u2", "u3"], [[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    gens = {"W1": ws[0], "W2": ws[1]}
    assert classical_lambda_bracket(ws[0], ws[1], gram).is_zero()
    for a, b in ((0, 0), (1, 1)):
        br = classical_lambda_bracket(ws[a], ws[b], gram)
        for j, c in br.coeffs.items():
            w = a + b + 2 - j - 1
            basis = [p for _, p in differential_monomials(gens, {"W1": 1, "W2": 2}, w)] if w > 0 else [DiffPoly.const(1)]
            assert solve_in_span(c, basis) is not None


def test_span_helpers():
    u, v = V("u"), V("v")
    assert span_rank([u, v, u + v]) == 2
    assert span_rank([]) == 0
    assert solve_in_span(u * 2 + v, [u, v]) == [2, 1]
    assert solve_in_span(u * v, [u, v]) is None
    labels = [lab for lab, _ in differential_monomials({"a": u}, {"a": 1}, 3)]
    assert len(labels) == 3  # d^2 a, a d a, a a a


def test_segal_sugawara_low_degree():
    for m, n in ((1, 1), (2, 1)):
        alg = critical_affine(m, n)
        s1 = segal_sugawara(m, n, 1, alg)
        assert s1[0] == alg.scalar_state(m - n)
        # the (-1)^{p(i)} in the matrix entries cancels the supertrace sign
        want = sum((alg.gen(f"e{i}{i}") for i in range(1, m + n + 1)), alg.zero())
        assert s1[1] == want


def test_matrix_operator_supertrace_degree_zero():
    M = MatrixDiffOp.d_plus_e(2, 1)
    tr = M.supertrace()
    assert tr[((), 1)] == Scalar(1)
