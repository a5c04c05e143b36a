"""Finite index sets and tabulated dependent functions.

A dependent table is a tuple whose i-th entry lies in ``range(sizes[i])``.
Enumeration order is lexicographic with index 0 most significant; every
search result and report in the package relies on this single order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

# ranks are plain ints, but we refuse to build anything that could not be
# enumerated anyway
MAX_RANK_SPACE = 2**63


class RankError(ValueError):
    pass


@dataclass(frozen=True)
class FinIndexSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"negative index set size {self.size}")

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and 0 <= i < self.size

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size


@dataclass(frozen=True)
class DepTable:
    domain_sizes: tuple[int, ...]
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.domain_sizes):
            raise ValueError(
                f"table has {len(self.entries)} entries for "
                f"{len(self.domain_sizes)} domain indices")
        for i, (e, n) in enumerate(zip(self.entries, self.domain_sizes)):
            if not 0 <= e < n:
                raise ValueError(f"entry {i} = {e} outside range({n})")

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def space_size(sizes: Sequence[int]) -> int:
    n = math.prod(sizes)
    if n > MAX_RANK_SPACE:
        raise RankError(f"dependent map space of size {n} is too large")
    return n


def iter_dep_maps(sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Raw entry tuples of every map, in canonical order."""
    return itertools.product(*(range(n) for n in sizes))


def enumerate_dep_maps(sizes: Sequence[int]) -> list[DepTable]:
    sizes = tuple(sizes)
    space_size(sizes)
    return [DepTable(sizes, t) for t in iter_dep_maps(sizes)]


def rank_dep_map(t: DepTable | Sequence[int], sizes: Sequence[int] | None = None) -> int:
    if isinstance(t, DepTable):
        sizes, entries = t.domain_sizes, t.entries
    else:
        if sizes is None:
            raise TypeError("sizes are required for a raw entry tuple")
        entries = tuple(t)
        if len(entries) != len(sizes):
            raise RankError("entry/size length mismatch")
    space_size(sizes)
    r = 0
    for e, n in zip(entries, sizes):
        if not 0 <= e < n:
            raise RankError(f"entry {e} outside range({n})")
        r = r * n + e
    return r


def unrank_dep_map(sizes: Sequence[int], rank: int) -> DepTable:
    sizes = tuple(sizes)
    total = space_size(sizes)
    if not 0 <= rank < total:
        raise RankError(f"rank {rank} outside range({total})")
    out = []
    for n in reversed(sizes):
        rank, e = divmod(rank, n)
        out.append(e)
    return DepTable(sizes, tuple(reversed(out)))


def nested_families(sizes: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All families over a dependent pair domain, as nested tuples.

    ``g[p][q]`` for ``q < sizes[p]``; each entry ranges over ``range(n)``.
    """
    total = sum(sizes)
    cuts = list(itertools.accumulate(sizes, initial=0))
    for flat in itertools.product(range(n), repeat=total):
        yield tuple(flat[cuts[i]:cuts[i + 1]] for i in range(len(sizes)))


def pair_index(sizes: Sequence[int]) -> list[tuple[int, int]]:
    """Flat enumeration of the pairs (p, q) with q < sizes[p]."""
    return [(p, q) for p, n in enumerate(sizes) for q in range(n)]
