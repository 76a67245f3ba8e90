"""Brute-force combinatorial oracles, independent of the algebraic code paths."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator


def set_partitions(n: int, fixed: int = 0) -> Iterator[list[int]]:
    """Yield every set partition of ``{0..n-1}`` as a restricted growth string.

    With ``fixed = r`` the first ``r`` elements are pinned to blocks ``0..r-1``,
    i.e. only partitions placing them in distinct blocks are produced.
    """
    if fixed > n:
        raise ValueError("cannot pin more elements than the set holds")
    labels = list(range(fixed)) + [0] * (n - fixed)

    def extend(i: int, blocks: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for b in range(blocks + 1):
            labels[i] = b
            yield from extend(i + 1, max(blocks, b + 1))

    yield from extend(fixed, fixed)


@lru_cache(maxsize=None)
def partition_block_counts(n: int, fixed: int = 0) -> tuple[int, ...]:
    """``counts[b]`` = number of partitions of an ``n``-set into ``b`` blocks (see :func:`set_partitions`)."""
    tally = Counter(max(p) + 1 if p else 0 for p in set_partitions(n, fixed))
    return tuple(tally.get(b, 0) for b in range(n + 1))


def classical_stirling2(n: int, k: int) -> int:
    """Number of ways to split ``{1..n}`` into ``k`` nonempty blocks, by enumeration."""
    if k > n:
        return 0
    return partition_block_counts(n)[k]


def classical_rstirling2(n: int, k: int, r: int) -> int:
    """r-Stirling number ``S^{(r)}(n + r, k + r)``: partitions of an ``(n+r)``-set into
    ``k + r`` blocks with the first ``r`` elements in distinct blocks."""
    if k > n:
        return 0
    return partition_block_counts(n + r, r)[k + r]
