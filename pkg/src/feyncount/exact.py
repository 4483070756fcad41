"""Exact combinatorial kernel: compositions and contraction-count symbols.

Everything here is big-integer arithmetic.  The central objects are the
coefficients ``h_m`` of the reciprocal of the vacuum generating series
g(y) = sum_m (2m)!/m! y^m, the symbols ``C(n, m) = (m!/n!) h_{m-n}`` that
weight the connected-count formulas, and their f-weighted generalizations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    """k! for k >= 0."""
    if k < 0:
        raise ValueError(f"factorial of negative argument {k}")
    return math.factorial(k)


def total_contractions(m: int, n_pairs: int) -> int:
    """Number of all m-order Wick contractions with n_pairs external pairs.

    Equals (2m + n_pairs)!.  With n_pairs = 0 this is the total vacuum
    count (2m)!.
    """
    if m < 0 or n_pairs < 0:
        raise ValueError("order and pair count must be non-negative")
    return factorial(2 * m + n_pairs)


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Yield every composition of ``total``, by length then largest-first.

    A composition is an ordered tuple of positive integers with the given
    sum.  There are exactly 2**(total-1) of them.
    """
    if total < 1:
        raise ValueError("compositions are defined for positive totals")
    for parts in range(1, total + 1):
        yield from compositions_with_parts(total, parts)


def compositions_with_parts(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield the binomial(total-1, parts-1) compositions with a fixed length.

    Order is deterministic: largest first part first.
    """
    if not 1 <= parts <= total:
        raise ValueError(f"need 1 <= parts <= total, got parts={parts}, total={total}")
    if parts == 1:
        yield (total,)
        return
    for first in range(total - parts + 1, 0, -1):
        for rest in compositions_with_parts(total - first, parts - 1):
            yield (first,) + rest


def vacuum_weight(a: int) -> int:
    """(2a)!/a!, the y^a coefficient of the vacuum series g(y) times a!."""
    if a < 1:
        raise ValueError("parts must be positive")
    return factorial(2 * a) // factorial(a)


def composition_weight(c: Sequence[int]) -> int:
    """Product of (2a)!/a! over the parts of a composition."""
    w = 1
    for a in c:
        w *= vacuum_weight(a)
    return w


@lru_cache(maxsize=None)
def _h(m: int) -> int:
    # Reciprocal-series recurrence: sum_{n=0}^{m} (2n)!/n! h_{m-n} = [m == 0].
    if m == 0:
        return 1
    return -sum(vacuum_weight(n) * _h(m - n) for n in range(1, m + 1))


def h_inverse_coeff(m: int, method: str = "recurrence") -> int:
    """Coefficient h_m of y^m in 1/g(y).

    ``recurrence`` solves the convolution with cached predecessors in O(m)
    multiplications.  ``composition-sum`` evaluates the alternating sum
    sum_i (-1)^i sum_{c in C_i(m)} composition_weight(c), which costs
    2**(m-1) terms and exists as an independent cross-check.
    """
    if m < 0:
        raise ValueError("order must be non-negative")
    if method == "recurrence":
        return _h(m)
    if method == "composition-sum":
        if m == 0:
            return 1
        return sum((-1) ** len(c) * composition_weight(c) for c in compositions(m))
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def c_symbol(n: int, m: int) -> int:
    """The symbol C(n, m) = (m!/n!) h_{m-n}, with C(m, m) = 1.

    Computed through the cached h coefficients; the literal composition sum
    is kept in c_symbol_composition_sum as a test path.
    """
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    return factorial(m) // factorial(n) * _h(m - n)


def c_symbol_composition_sum(n: int, m: int) -> int:
    """C(n, m) by its defining alternating composition sum (exponential cost)."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    if n == m:
        return 1
    acc = sum((-1) ** len(c) * composition_weight(c) for c in compositions(m - n))
    return factorial(m) // factorial(n) * acc


def f_leg(leg: int, a: int) -> int:
    """Leg weight binomial(2a + leg, leg) - 1 attached to a composition part."""
    if leg < 0:
        raise ValueError("leg index must be non-negative")
    if a < 1:
        raise ValueError("composition parts are positive")
    return math.comb(2 * a + leg, leg) - 1


def multi_index(indices: Sequence[int]) -> tuple[int, ...]:
    """Canonical (non-decreasing) form of a multi-index of leg counts."""
    idx = tuple(sorted(indices))
    if any(i < 1 for i in idx):
        raise ValueError("multi-index entries must be positive")
    return idx


def c_symbol_generalized(n: int, m: int, indices: Sequence[int]) -> int:
    """f-weighted symbol <C(n, m)>_{indices}.

    (m!/n!) sum_{i=k}^{m-n} (-1)^i binomial(i, k)
        sum_{c in C_i(m-n)} f_{i1}(a_1) ... f_{ik}(a_k) composition_weight(c)

    where k = len(indices).  An empty index list reduces to c_symbol.
    """
    idx = multi_index(indices) if indices else ()
    k = len(idx)
    if k == 0:
        return c_symbol(n, m)
    if n < 1 or n > m - k:
        raise ValueError(f"need 1 <= n <= m - k, got n={n}, m={m}, k={k}")
    acc = 0
    for c in compositions(m - n):
        i = len(c)
        if i < k:
            continue
        term = math.comb(i, k) * composition_weight(c)
        for r in range(k):
            term *= f_leg(idx[r], c[r])
        acc += (-1) ** i * term
    return factorial(m) // factorial(n) * acc


@lru_cache(maxsize=None)
def h_coeff(m: int, n_pairs: int) -> int:
    """Column coefficient H_m of the normalized external-pair series.

    H_m = sum_{n=1}^{m} C(n, m) [ (2n + N)!/N! - (2n)! ]  with N = n_pairs.
    """
    if m < 1 or n_pairs < 1:
        raise ValueError("need m >= 1 and n_pairs >= 1")
    n_fact = factorial(n_pairs)
    return sum(
        c_symbol(n, m) * (total_contractions(n, n_pairs) // n_fact - factorial(2 * n))
        for n in range(1, m + 1)
    )


def h_multi(m: int, indices: Sequence[int], method: str = "convolution") -> int:
    """Multi-column coefficient H_m^{(i1, ..., ij)}.

    ``convolution``: multinomial sum of products of h_coeff over ordered
    splittings of m into j positive parts.  ``simplified``: the closed form
    (-1)^(j+1) sum_n <C(n, m)>_{i1..i_{j-1}} [ (2n+ij)!/ij! - (2n)! ] with
    ij the largest index.  Both agree; returns 0 when m < j (empty sum).
    """
    idx = multi_index(indices)
    j = len(idx)
    if j < 1:
        raise ValueError("multi-index must be non-empty")
    if m < j:
        return 0
    if method == "convolution":
        m_fact = factorial(m)
        acc = 0
        for ks in compositions_with_parts(m, j):
            term = Fraction(m_fact)
            for k, leg in zip(ks, idx):
                term *= Fraction(h_coeff(k, leg), factorial(k))
            acc += term
        assert acc.denominator == 1
        return int(acc)
    if method == "simplified":
        largest = idx[-1]
        rest = idx[:-1]
        leg_fact = factorial(largest)
        acc = 0
        for n in range(1, m - j + 2):
            weight = c_symbol_generalized(n, m, rest) if rest else c_symbol(n, m)
            acc += weight * (total_contractions(n, largest) // leg_fact - factorial(2 * n))
        return (-1) ** (j + 1) * acc
    raise ValueError(f"unknown method {method!r}")
