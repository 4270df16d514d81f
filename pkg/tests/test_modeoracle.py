import random

import pytest

from superw_kit.modeoracle import ModeOracle, oracle_for
from superw_kit.scalars import EPS
from superw_kit.suites import random_state
from superw_kit.vacore import affine_gl, bc_pairs, betagamma_pairs, build_algebra, heisenberg, tensor

SPECS = {
    "heisenberg": heisenberg([[2, 1], [1, EPS]], ["a", "b"]),
    "bc": bc_pairs(2),
    "betagamma": betagamma_pairs(1),
    "mixed": tensor(heisenberg([[1]], ["h"]), bc_pairs(1), betagamma_pairs(1)),
}


def test_oracle_basic_values():
    A = build_algebra(tensor(heisenberg([[2]], ["h"]), bc_pairs(1)))
    O = oracle_for(A)
    h = O.from_terms(A.gen("h").terms)
    p = O.from_terms(A.gen("psi").terms)
    q = O.from_terms(A.gen("psi*").terms)
    assert O.nth_product(h, h, 1) == {(): 2}
    assert O.nth_product(p, q, 0) == {(): 1}
    hh = O.nth_product(h, h, -1)
    assert O.nth_product(hh, hh, 3) == {(): 8}
    assert O.nth_product(p, p, -1) == {}


def test_oracle_rejects_composite_brackets():
    with pytest.raises(ValueError):
        ModeOracle(affine_gl(1, 1, EPS))


@pytest.mark.parametrize("name", list(SPECS))
def test_engine_matches_mode_oracle(name):
    A = build_algebra(SPECS[name])
    O = oracle_for(A)
    rng = random.Random(11)
    for _ in range(12):
        a, b, c = (random_state(A, rng, terms=2, length=2, deriv=2) for _ in range(3))
        oa, ob, oc = (O.from_terms(x.terms) for x in (a, b, c))
        for n in range(-2, 4):
            assert O.from_terms(A.nth_product(a, b, n).terms) == O.nth_product(oa, ob, n)
        ab = A.normal_product(a, b)
        # quasi-associativity: both bracketings against the oracle
        assert O.from_terms(A.normal_product(ab, c).terms) == O.nth_product(O.from_terms(ab.terms), oc, -1)
        bc = A.normal_product(b, c)
        assert O.from_terms(A.normal_product(a, bc).terms) == O.nth_product(oa, O.from_terms(bc.terms), -1)
