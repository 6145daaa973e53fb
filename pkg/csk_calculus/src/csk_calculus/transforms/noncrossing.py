from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

Block = tuple[int, ...]
Partition = tuple[Block, ...]


def noncrossing_partitions(n: int) -> Iterator[Partition]:
    """
    Enumerate the non-crossing partitions of {1, ..., n}.

    Recursion on the block holding the smallest remaining element: each gap
    between consecutive elements of that block is partitioned on its own.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    yield from _nc(tuple(range(1, n + 1)))


def _nc(elems: tuple[int, ...]) -> Iterator[Partition]:
    if not elems:
        yield ()
        return
    yield from _extend((elems[0],), elems[1:])


def _extend(block: Block, rest: tuple[int, ...]) -> Iterator[Partition]:
    # Close the block; everything after it is free.
    for tail in _nc(rest):
        yield (block,) + tail
    # Or grow it by rest[j]; rest[:j] is enclosed and closes on itself.
    for j in range(len(rest)):
        for inner in _nc(rest[:j]):
            for outer in _extend(block + (rest[j],), rest[j + 1 :]):
                yield inner + outer


def count_noncrossing(n: int) -> int:
    return sum(1 for _ in noncrossing_partitions(n))


def is_noncrossing(partition: Partition) -> bool:
    for i, a in enumerate(partition):
        for b in partition[i + 1 :]:
            for p in a:
                for q in a:
                    if p >= q:
                        continue
                    for r in b:
                        for s in b:
                            if r < s and (p < r < q < s or r < p < s < q):
                                return False
    return True


@lru_cache(maxsize=None)
def block_size_profile(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Sorted block-size multisets of the NC partitions of n, with multiplicities."""
    counts = Counter(tuple(sorted(len(b) for b in p)) for p in noncrossing_partitions(n))
    return tuple(sorted(counts.items()))
