import pytest
from hypothesis import given, settings, strategies as st

from superw_kit.planepart import enumerate_counts, entry, has_pit, is_plane_partition, iterate, weight
from superw_kit.qcombi import macmahon


def test_trivial_cases():
    assert enumerate_counts(0) == [1]
    assert enumerate_counts(6, (1, 1)) == [1, 0, 0, 0, 0, 0, 0]
    assert enumerate_counts(5) == [1, 1, 3, 6, 13, 24]


def test_pit_validation():
    with pytest.raises(ValueError):
        enumerate_counts(3, (0, 2))


def test_has_pit_examples():
    assert all(has_pit((), i, j) for i in range(1, 4) for j in range(1, 4))
    assert not has_pit(((2, 1), (1, 1)), 2, 2)
    lam = ((2, 2, 1), (1, 1, 1), (1,))
    assert is_plane_partition(lam)
    assert has_pit(lam, 1, 4) and has_pit(lam, 3, 2) and has_pit(lam, 4, 1)
    assert not has_pit(lam, 2, 3)
    assert entry(lam, 2, 3) == 1 and entry(lam, 5, 5) == 0


def test_iterate_agrees_with_counts():
    for pit in (None, (2, 2), (2, 3), (3, 2)):
        by_weight = [0] * 8
        for pp in iterate(7, pit):
            assert is_plane_partition(pp)
            if pit is not None:
                assert has_pit(pp, *pit)
            by_weight[weight(pp)] += 1
        assert by_weight == enumerate_counts(7, pit)


def test_macmahon_to_weight_12():
    assert enumerate_counts(12) == macmahon(12).to_list(12)


def test_pit_2_2_is_hooks():
    # a pit at (2,2) leaves a hook: first row and first column
    assert enumerate_counts(10, (2, 2))[:6] == [1, 1, 3, 6, 12, 21]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 9))
def test_monotone_and_transpose_symmetric(i, j, N):
    free = enumerate_counts(N)
    with_pit = enumerate_counts(N, (i, j))
    assert all(a <= b for a, b in zip(with_pit, free))
    assert with_pit == enumerate_counts(N, (j, i))
