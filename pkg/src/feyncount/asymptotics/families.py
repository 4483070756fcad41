"""Composition families that feed the large-m expansion.

A family member is an ordered composition of m in which ``large_count``
parts grow with m (each written m/large_count - deficit) and the rest are
fixed small integers.  Only members whose small mass (total deficit =
total of the small parts) stays within the offset budget can touch the
expansion coefficients up to t^budget, which is why the budget defaults
to the requested order downstream.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

Part = tuple[str, int]  # ("large", deficit) or ("small", value)


def large(deficit: int) -> Part:
    return ("large", deficit)


def small(value: int) -> Part:
    return ("small", value)


def partitions(total: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` as non-increasing tuples; () for total 0."""
    if total < 0:
        raise ValueError("cannot partition a negative total")
    if max_parts is not None and max_parts < 0:
        raise ValueError("part bound must be non-negative")

    def rec(remaining: int, cap: int, room: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, room - 1):
                yield (first,) + rest

    room = total if max_parts is None else max_parts
    yield from rec(total, total, room)


def multiset_permutations(items: Sequence[Part]) -> Iterator[tuple[Part, ...]]:
    """Distinct orderings of a multiset, lexicographic in the part tuples."""
    counts = Counter(items)
    keys = sorted(counts)
    total = len(items)

    def rec(depth: int) -> Iterator[tuple[Part, ...]]:
        if depth == total:
            yield ()
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                for rest in rec(depth + 1):
                    yield (key,) + rest
                counts[key] += 1

    yield from rec(0)


@dataclass(frozen=True)
class CompositionFamily:
    """All compositions with ``large_count`` growing parts and bounded small mass."""

    large_count: int
    offset_budget: int

    def __post_init__(self):
        if self.large_count < 1:
            raise ValueError("a family needs at least one large part")
        if self.offset_budget < 0:
            raise ValueError("offset budget must be non-negative")

    @property
    def kind(self) -> str:
        return "principal" if self.large_count == 1 else f"centered({self.large_count})"

    def members(self) -> Iterator[tuple[Part, ...]]:
        """Ordered members, grouped by small mass then deterministically.

        The all-large member (deficits zero, no small parts) comes first;
        for the principal family that member is the ``1`` of the bracket
        and callers skip it.
        """
        for mass in range(self.offset_budget + 1):
            for deficits in partitions(mass, self.large_count):
                padded = deficits + (0,) * (self.large_count - len(deficits))
                larges = tuple(large(d) for d in padded)
                for smalls in partitions(mass):
                    base = larges + tuple(small(v) for v in smalls)
                    yield from multiset_permutations(base)
