"""Brute-force plane partitions by weight, with an optional pit condition.

A plane partition is stored as a tuple of rows, each row a weakly decreasing
tuple of positive integers, every row dominated entrywise by the row above.
The pit (i, j) (1-based) forbids a box at (i, j), i.e. rows i, i+1, ... have
length at most j - 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

Row = Tuple[int, ...]
PlanePartition = Tuple[Row, ...]


def _rows_under(bound: Row, budget: int, maxlen: int) -> Iterator[Row]:
    """Non-empty weakly decreasing rows r with r[k] <= bound[k], len(r) <= maxlen, sum(r) <= budget."""
    limit = min(len(bound), maxlen)

    def rec(prefix: List[int], remaining: int):
        k = len(prefix)
        if prefix:
            yield tuple(prefix)
        if k >= limit:
            return
        top = bound[k] if not prefix else min(bound[k], prefix[-1])
        for v in range(min(top, remaining), 0, -1):
            prefix.append(v)
            yield from rec(prefix, remaining - v)
            prefix.pop()

    yield from rec([], budget)


def iterate(weight_cap: int, pit: Optional[Tuple[int, int]] = None) -> Iterator[PlanePartition]:
    """All plane partitions of weight <= weight_cap obeying the pit condition."""
    if weight_cap < 0:
        return
    pi, pj = pit if pit is not None else (None, None)
    if pit is not None and (pi < 1 or pj < 1):
        raise ValueError("pit coordinates start at 1")

    def rec(rows: List[Row], budget: int):
        yield tuple(rows)
        i = len(rows) + 1  # 1-based index of the next row
        bound = rows[-1] if rows else (weight_cap,) * weight_cap
        maxlen = weight_cap
        if pit is not None and i >= pi:
            maxlen = pj - 1
        for r in _rows_under(bound, budget, maxlen):
            rows.append(r)
            yield from rec(rows, budget - sum(r))
            rows.pop()

    yield from rec([], weight_cap)


def enumerate_counts(weight_cap: int, pit: Optional[Tuple[int, int]] = None) -> List[int]:
    """Number of plane partitions of each weight 0..weight_cap, optionally with a pit."""
    if pit is not None and (pit[0] < 1 or pit[1] < 1):
        raise ValueError("pit coordinates start at 1")
    return list(_counts(weight_cap, pit))


@lru_cache(maxsize=None)
def _counts(weight_cap: int, pit: Optional[Tuple[int, int]]) -> Tuple[int, ...]:
    pi, pj = pit if pit is not None else (None, None)

    @lru_cache(maxsize=None)
    def below(prev: Row, budget: int, i: int) -> Tuple[int, ...]:
        # counts by weight of all row stacks that may follow ``prev`` as rows i, i+1, ...
        out = [0] * (budget + 1)
        out[0] = 1
        maxlen = weight_cap if (pit is None or i < pi) else pj - 1
        nxt = min(i + 1, pi) if pit is not None else i + 1
        for r in _rows_under(prev, budget, maxlen):
            w = sum(r)
            rest = below(r, budget - w, nxt)
            for k, c in enumerate(rest):
                out[w + k] += c
        return tuple(out)

    return below((weight_cap,) * weight_cap, weight_cap, 1)


def weight(pp: PlanePartition) -> int:
    return sum(sum(r) for r in pp)


def entry(pp: Sequence[Sequence[int]], i: int, j: int) -> int:
    """lambda_{i,j} with 1-based indices (0 outside the stored support)."""
    if i < 1 or j < 1:
        raise ValueError("indices start at 1")
    if i > len(pp):
        return 0
    row = pp[i - 1]
    return row[j - 1] if j <= len(row) else 0


def is_plane_partition(pp: Sequence[Sequence[int]]) -> bool:
    for i, row in enumerate(pp):
        for j, v in enumerate(row):
            if v < 0:
                return False
            if j + 1 < len(row) and row[j + 1] > v:
                return False
            if i + 1 < len(pp) and j < len(pp[i + 1]) and pp[i + 1][j] > v:
                return False
    return True


def has_pit(pp: Sequence[Sequence[int]], i: int, j: int) -> bool:
    """True when the box (i, j) is empty, i.e. lambda_{i,j} = 0."""
    return entry(pp, i, j) == 0
