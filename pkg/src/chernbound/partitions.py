"""Integer partitions and the canonical ordering used for all indexing."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Drop zeros and sort descending.

    >>> normalize([1, 0, 3, 1])
    (3, 1, 1)
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return normalize(int(tok) for tok in text.split(","))


def _descending(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in canonical order.

    Each partition lists its parts in descending order, and the partitions
    themselves are sorted lexicographically, so ``(1, 1, ..., 1)`` comes first
    and ``(n,)`` last.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(sorted(_descending(n, n)))


def count(n: int) -> int:
    return len(partitions(n))


def index(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(partitions(n))}


def compositions(n: int, length: int, caps: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of nonnegative integers of the given length summing to n.

    ``caps`` bounds each entry from above.
    """
    if length == 0:
        if n == 0:
            yield ()
        return
    cap = n if caps is None else min(n, caps[0])
    rest_caps = None if caps is None else caps[1:]
    for first in range(cap + 1):
        for rest in compositions(n - first, length - 1, rest_caps):
            yield (first,) + rest


def bounded_tuples(caps: Sequence[int], max_total: int) -> Iterator[tuple[int, ...]]:
    """Tuples ``d`` with ``0 <= d[i] <= caps[i]`` and ``sum(d) <= max_total``."""
    if max_total < 0:
        return
    if not caps:
        yield ()
        return
    for first in range(min(caps[0], max_total) + 1):
        for rest in bounded_tuples(caps[1:], max_total - first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def fmt(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def chern_monomial(lam: Partition) -> str:
    """Human-readable Chern monomial, e.g. ``(2, 1, 1)`` -> ``c1^2*c2``."""
    if not lam:
        return "1"
    out = []
    for part in sorted(set(lam)):
        e = lam.count(part)
        out.append(f"c{part}" if e == 1 else f"c{part}^{e}")
    return "*".join(out)
