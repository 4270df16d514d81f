"""Acceptance criteria 1-11, each with exact equality.

Checks named "as printed: ..." encode claims exactly as stated that turn out
to be false; they are collected separately and marked as strict expected
failures so that a silent change in either direction is caught.
"""

import pytest

from superw_kit.suites import Config, run_suite

PRINTED = "as printed:"

_cache = {}


def checks(suite):
    if suite not in _cache:
        _cache[suite] = run_suite(suite, Config(seed=0))
    return _cache[suite]


def split(cs):
    main = [c for c in cs if not c.name.startswith(PRINTED)]
    printed = [c for c in cs if c.name.startswith(PRINTED)]
    return main, printed


def failures(cs):
    return [f"{c.name}: {c.residual}" for c in cs if not c.passed]


def _criterion(record, number, cs, text, printed=()):
    bad = failures(cs)
    printed_bad = failures(printed)
    ok = not bad and not printed_bad
    note = text
    if printed_bad:
        note += f"; {len(printed_bad)} check(s) of the claim as printed are false (corrected form passes)" if not bad else ""
    record(number, ok, f"{note} [{len(cs) + len(printed)} checks]")
    assert not bad, bad


def test_criterion_1_character_three_way(acceptance_record):
    cs = [c for c in checks("characters") if "constant-term" not in c.name and "false theta" not in c.name]
    assert len(cs) == 8
    _criterion(acceptance_record, 1, cs, "center character = pit formula = pit (2,n+1) enumeration, n=1..4, to q^16")


def test_criterion_2_constant_term_and_false_theta(acceptance_record):
    cs = [c for c in checks("characters") if "constant-term" in c.name or "false theta" in c.name]
    assert len(cs) == 4
    _criterion(acceptance_record, 2, cs, "constant-term extraction n=2..4 to q^16 and false theta expansion to q^10")


def test_criterion_3_macmahon(acceptance_record):
    cs = [c for c in checks("plane-partitions") if "MacMahon" in c.name]
    assert len(cs) == 1
    _criterion(acceptance_record, 3, cs, "unrestricted plane partitions = MacMahon to weight 12")


def test_criterion_4_screening(acceptance_record):
    main, printed = split(checks("screening-gl_n1"))
    assert len([c for c in main if c.name.startswith("n=")]) == 4 * (1 + 2 + 3)
    _criterion(acceptance_record, 4, main, "screenings kill W_p (n<=3, p<=4); [Q_(m),D_1], [Q_(m),D_2] = (m-1)Q_(m-1), A_n", printed)


@pytest.mark.xfail(strict=True, reason="[Q_(m), D_2] = (m+1) Q_(m-1) is false; the coefficient is m-1")
def test_criterion_4_as_printed():
    _, printed = split(checks("screening-gl_n1"))
    assert printed
    assert not failures(printed)


def test_criterion_5_tilde_brackets(acceptance_record):
    main, printed = split(checks("miura"))
    assert len(main) == 15
    _criterion(acceptance_record, 5, main, "lambda-brackets of W~_1, W~_2, W~_3 for n=1,2,3 (central term c_n/12)", printed)


@pytest.mark.xfail(strict=True, reason="the lambda^3 coefficient of [W~2 W~2] is c_n/12, not -c_n/2")
def test_criterion_5_as_printed():
    _, printed = split(checks("miura"))
    assert len(printed) == 3
    assert not failures(printed)


def test_criterion_6_g_fields(acceptance_record):
    cs = checks("g-fields")
    _criterion(acceptance_record, 6, cs, "G_+-, J-charge, [G_+ G_-] at eps=-1 and the gl(1|1) embedding, n<=3")


def test_criterion_7_wakimoto(acceptance_record):
    cs = checks("wakimoto-gl11")
    assert len(cs) == 5
    _criterion(acceptance_record, 7, cs, "free field gl(1|1) brackets at symbolic level and screening annihilation")


def test_criterion_8_segal_sugawara(acceptance_record):
    cs = checks("segal-sugawara")
    assert len(cs) == 12
    _criterion(acceptance_record, 8, cs, "s_{p,p} central at the critical level and symbol = power sum, (1|1), (2|1), p<=3")


def test_criterion_9_supersymmetry(acceptance_record):
    cs = checks("susy")
    assert len(cs) == 13
    _criterion(acceptance_record, 9, cs, "symbols of W_p at eps=-1 supersymmetric (n<=3, p<=4); (1|1) dimensions = pit (2,2) to weight 8")


def test_criterion_10_gl32(acceptance_record):
    cs = checks("gl32")
    assert len([c for c in cs if c.name.startswith("image bracket")]) == 36
    assert len([c for c in cs if c.name.startswith("beta-integral")]) == 5
    _criterion(acceptance_record, 10, cs, "gl(3|2) presentation, 36 image brackets, three characters to q^10, beta integral")


def test_criterion_11_engine_axioms(acceptance_record):
    cs = checks("engine-axioms")
    total = sum(int(c.name.split("(")[-1].split()[0]) for c in cs)
    assert total >= 200
    _criterion(acceptance_record, 11, cs, f"engine axioms on {total} seeded random cases")
