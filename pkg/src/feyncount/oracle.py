"""Brute-force referee: enumerate Wick contractions and count connected ones.

A contraction of order m with N external pairs is a bijection from the
2m + N out-slots (two per vertex, one per source) to the 2m + N in-slots
(two per vertex, one per sink).  The induced multigraph joins the owners
of paired slots; a contraction is connected when that graph has a single
component over all m + 2N nodes.

Normalization convention: the connected generating function weights the
pair variable by x^N / N! while the total series carries x^N / (N!)^2, so
the raw number of connected bijections is divided by N! (the division is
asserted exact).  With this convention the count for one vertex and two
pairs is 4 / 2! = 2, matching the exact formulas, and the six m=2, N=3
diagrams come out as 48 / (2^2 2!).  A lone source-sink edge is its own
component, hence disconnected unless it is the entire diagram (m=0, N=1).

Enumeration is deliberately plain: lexicographic permutation order, one
union-find pass per permutation, no symmetry reduction.  The point of the
module is independence from the formula machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exact import factorial

try:
    import numba
    import numpy as np

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

DEFAULT_BUDGET = 4_000_000


class EnumerationBudgetError(RuntimeError):
    """Raised when (2m + N)! exceeds the permutation budget."""

    def __init__(self, m: int, n_pairs: int, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumerating m={m}, N={n_pairs} needs {required} permutations, "
            f"budget is {budget} (raise it with --budget)"
        )


@dataclass(frozen=True)
class SlotModel:
    """Slot-to-owner layout for order m with n_pairs external pairs.

    Nodes 0..m-1 are vertices, m..m+N-1 sources, m+N..m+2N-1 sinks.
    Out-slot k < 2m belongs to vertex k // 2, the rest to sources; in-slots
    mirror this with sinks.
    """

    m: int
    n_pairs: int

    def __post_init__(self):
        if self.m < 0 or self.n_pairs < 0:
            raise ValueError("order and pair count must be non-negative")

    @property
    def slot_count(self) -> int:
        return 2 * self.m + self.n_pairs

    @property
    def node_count(self) -> int:
        return self.m + 2 * self.n_pairs

    def out_owner(self) -> list[int]:
        return [k // 2 for k in range(2 * self.m)] + [
            self.m + j for j in range(self.n_pairs)
        ]

    def in_owner(self) -> list[int]:
        return [k // 2 for k in range(2 * self.m)] + [
            self.m + self.n_pairs + j for j in range(self.n_pairs)
        ]


def _count_connected_py(
    out_owner: list[int],
    in_owner: list[int],
    node_count: int,
    start: int,
    count: int,
) -> tuple[int, int]:
    """Pure-Python enumeration over permutation ranks [start, start+count)."""
    n = len(out_owner)
    perms = itertools.islice(
        itertools.permutations(range(n)), start, start + count
    )
    connected = 0
    total = 0
    for perm in perms:
        total += 1
        parent = list(range(node_count))
        comps = node_count
        for k in range(n):
            a = out_owner[k]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = in_owner[perm[k]]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                comps -= 1
        if comps == 1:
            connected += 1
    return connected, total


if _HAVE_NUMBA:

    @numba.njit(nogil=True, cache=True)
    def _count_connected_jit(out_owner, in_owner, node_count, start_perm, count):
        n = out_owner.shape[0]
        perm = start_perm.copy()
        parent = np.empty(node_count, dtype=np.int64)
        connected = 0
        total = 0
        while total < count:
            total += 1
            for v in range(node_count):
                parent[v] = v
            comps = node_count
            for k in range(n):
                a = out_owner[k]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                b = in_owner[perm[k]]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    comps -= 1
            if comps == 1:
                connected += 1
            # next permutation in lexicographic order
            i = n - 2
            while i >= 0 and perm[i] >= perm[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while perm[j] <= perm[i]:
                j -= 1
            perm[i], perm[j] = perm[j], perm[i]
            lo = i + 1
            hi = n - 1
            while lo < hi:
                perm[lo], perm[hi] = perm[hi], perm[lo]
                lo += 1
                hi -= 1
        return connected, total


def _unrank_permutation(rank: int, n: int) -> list[int]:
    """Permutation of 0..n-1 at a given rank in lexicographic order."""
    available = list(range(n))
    perm = []
    for k in range(n, 0, -1):
        block = factorial(k - 1)
        idx, rank = divmod(rank, block)
        perm.append(available.pop(idx))
    return perm


def _enumerate(
    model: SlotModel, budget: int, jobs: int
) -> tuple[int, int]:
    """(connected, total) over all bijections of the slot model."""
    n = model.slot_count
    total_perms = factorial(n)
    if total_perms > budget:
        raise EnumerationBudgetError(model.m, model.n_pairs, total_perms, budget)
    if n == 0:
        # the empty bijection; one component iff there are no nodes at all
        return (1 if model.node_count == 0 else 0), 1
    out_owner = model.out_owner()
    in_owner = model.in_owner()
    jobs = max(1, jobs)
    bounds = [total_perms * w // jobs for w in range(jobs + 1)]
    ranges = [
        (bounds[w], bounds[w + 1] - bounds[w])
        for w in range(jobs)
        if bounds[w + 1] > bounds[w]
    ]
    connected = 0
    total = 0
    if _HAVE_NUMBA:
        oo = np.asarray(out_owner, dtype=np.int64)
        io = np.asarray(in_owner, dtype=np.int64)

        def run(start: int, count: int) -> tuple[int, int]:
            start_perm = np.asarray(_unrank_permutation(start, n), dtype=np.int64)
            return _count_connected_jit(oo, io, model.node_count, start_perm, count)

    else:

        def run(start: int, count: int) -> tuple[int, int]:
            return _count_connected_py(out_owner, in_owner, model.node_count, start, count)

    if len(ranges) > 1 and _HAVE_NUMBA:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            for c, t in pool.map(lambda r: run(*r), ranges):
                connected += c
                total += t
    else:
        for start, count in ranges:
            c, t = run(start, count)
            connected += c
            total += t
    return connected, total


@lru_cache(maxsize=None)
def _enumerate_cached(m: int, n_pairs: int, budget: int) -> tuple[int, int]:
    return _enumerate(SlotModel(m, n_pairs), budget, jobs=1)


def brute_force_connected(
    m: int, n_pairs: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> int:
    """Connected count by exhaustive enumeration, divided by N!.

    m=0, N=0 returns 1 without enumeration (the empty diagram counts as
    connected by convention).
    """
    if m == 0 and n_pairs == 0:
        return 1
    if jobs > 1:
        connected, _ = _enumerate(SlotModel(m, n_pairs), budget, jobs)
    else:
        connected, _ = _enumerate_cached(m, n_pairs, budget)
    quotient, remainder = divmod(connected, factorial(n_pairs))
    if remainder:
        raise AssertionError(
            f"raw connected count {connected} not divisible by {n_pairs}!"
        )
    return quotient


def brute_force_total(m: int, n_pairs: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count of all enumerated bijections; must equal (2m + N)!."""
    if m == 0 and n_pairs == 0:
        return 1
    _, total = _enumerate_cached(m, n_pairs, budget)
    return total
