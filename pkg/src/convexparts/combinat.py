"""Shared enumeration helpers: set partitions, counts, bit tricks.

Set partitions are always produced in restricted-growth-string order (item 0
gets block 0; item i may open at most one new block), the canonical order all
searchers in this package quote in their transcripts.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def indices_of(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def partitions_le_count(n: int, kmax: int) -> int:
    """Partitions of an n-set into at most kmax nonempty blocks (1 when n=0)."""
    if n == 0:
        return 1
    return sum(stirling2(n, k) for k in range(1, min(n, kmax) + 1))


def rgs_partitions(items, max_blocks: int):
    """All partitions of items into <= max_blocks nonempty blocks, RGS order.

    Yields tuples of blocks; each block is a tuple of items in input order.
    The empty item list yields the empty partition.
    """
    items = list(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    if max_blocks < 1:
        return
    labels = [0] * n

    def rec(i, used):
        if i == n:
            blocks = [[] for _ in range(used)]
            for j, lab in enumerate(labels):
                blocks[lab].append(items[j])
            yield tuple(tuple(b) for b in blocks)
            return
        for lab in range(min(used + 1, max_blocks)):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    yield from rec(1, 1)


def rgs_partitions_exact(items, blocks: int):
    """Partitions into exactly `blocks` nonempty blocks, RGS order."""
    for part in rgs_partitions(items, blocks):
        if len(part) == blocks:
            yield part


def run_splits(count: int, max_runs: int):
    """Splits of a length-`count` sequence into <= max_runs consecutive blocks.

    Yields tuples of (start, end) half-open index ranges, ordered by run count
    then lexicographic cut positions.
    """
    from itertools import combinations

    if count == 0:
        yield ()
        return
    for k in range(1, min(count, max_runs) + 1):
        for cuts in combinations(range(1, count), k - 1):
            bounds = (0,) + cuts + (count,)
            yield tuple((bounds[i], bounds[i + 1]) for i in range(k))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
