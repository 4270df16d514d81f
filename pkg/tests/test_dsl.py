import random

import pytest

from superw_kit.dsl import ParseError, parse_expression, parse_scalar_expr, tokenize
from superw_kit.paperlib import coset_algebra, g_fields, gl32_presentation, ux_space
from superw_kit.scalars import EPS
from superw_kit.suites import random_state
from superw_kit.vacore import build_algebra, tensor, heisenberg, bc_pairs


def test_generator_names_with_symbols_are_single_tokens():
    toks = tokenize("s1+ + s2-", ["s1+", "s2-", "s1-"])
    assert [(t.kind, t.value) for t in toks[:3]] == [("gen", "s1+"), ("op", "+"), ("gen", "s2-")]


def test_states_and_normal_products():
    A = coset_algebra(2)
    s = parse_expression("3/2*eps :t1 d^2 t2: - d t3", A)
    want = A.word("t1", ("t2", 2)) * (EPS * 3 / 2) - A.gen("t3", 1)
    assert s == want
    nested = parse_expression(":t1 (:t2 t3:):", A)
    assert nested == parse_expression(":t1 t2 t3:", A)
    assert parse_expression(":(t1 + t2) t3:", A) == A.word("t1", "t3") + A.word("t2", "t3")


def test_scalars_become_multiples_of_the_vacuum():
    A = coset_algebra(1)
    assert parse_expression("2*eps", A) == A.scalar_state(2 * EPS)


def test_fock_vectors():
    S = ux_space(1)
    v = parse_expression("|0, 0, 1>", S)
    assert v == S.vector(S.weight(x=1))
    Gm = g_fields(1)[1]
    assert parse_expression(str(Gm), S) == Gm
    assert parse_expression(":u1 |0,0,1>:", S) == S.vertex_mode(S.gen("u1"), -1, v)


def test_gl32_names():
    A = build_algebra(gl32_presentation())
    assert parse_expression("s1+ - 2 s2-", A) == A.gen("s1+") - A.gen("s2-") * 2


@pytest.mark.parametrize("text,pos", [("eps+", 4), ("(1", 2), ("1/0", 2), ("foo", 0), ("1 $", 2), ("2^x", 2)])
def test_scalar_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_scalar_expr(text)
    assert info.value.pos == pos
    assert "^" in str(info.value)


@pytest.mark.parametrize("text", [":t1 :t2 t3::", ":t1:", "t1 t2", "t1 / t2", "|1>", ":t1 t2", "t1^2"])
def test_state_errors(text):
    with pytest.raises(ParseError):
        parse_expression(text, coset_algebra(1))


def test_fock_coordinate_count_is_checked():
    with pytest.raises(ParseError):
        parse_expression("|1,2>", ux_space(1))


def test_roundtrip_random_states():
    rng = random.Random(5)
    for spec in (heisenberg([[1, 0], [0, EPS]], ["a", "b"]), tensor(heisenberg([[1]], ["h"]), bc_pairs(2))):
        A = build_algebra(spec)
        for _ in range(40):
            s = random_state(A, rng, terms=3, length=3, deriv=2)
            assert parse_expression(str(s), A) == s
