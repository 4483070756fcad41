"""Public counting API: vacuum counts, external-pair counts, normalization.

Three independent routes exist for every count: the explicit composition
formulas (pair counts 1 to 5), the bivariate series logarithm, and the
brute-force oracle.  This module exposes the first two; disagreements
between routes are bugs by construction and the verification suite treats
them as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    c_symbol,
    c_symbol_generalized,
    composition_weight,
    compositions,
    factorial,
    total_contractions,
)
from .formulas import FORMULAS, MAX_EXPLICIT_PAIRS, leg_step_polynomial
from .series import connected_from_log, vacuum_series

DEFAULT_X_ORDER = 6
DEFAULT_Y_ORDER = 14


@dataclass(frozen=True)
class CountRecord:
    """One exact count: pair parameter, order, producing method, value."""

    n_pairs: int
    m: int
    method: str
    value: int


@lru_cache(maxsize=None)
def _vacuum_recurrence(m: int) -> int:
    # D_m = sum_{i=1}^{m} binom(m-1, i-1) Dc_i D_{m-i}, solved for Dc_m.
    if m == 0:
        return 1
    total = total_contractions(m, 0)
    for i in range(1, m):
        total -= (
            factorial(m - 1)
            // (factorial(i - 1) * factorial(m - i))
            * _vacuum_recurrence(i)
            * total_contractions(m - i, 0)
        )
    return total


def vacuum_connected(m: int, method: str = "recurrence") -> int:
    """Number of connected vacuum contractions of order m.

    The order-0 value is 1 by convention (the empty diagram is connected).
    ``composition-sum`` evaluates m! sum_i (-1)^(i+1)/i sum_c weight(c);
    ``recurrence`` inverts the exp/log convolution between the total and
    connected vacuum series.
    """
    if m < 0:
        raise ValueError("order must be non-negative")
    if m == 0:
        return 1
    if method == "recurrence":
        return _vacuum_recurrence(m)
    if method == "composition-sum":
        acc = Fraction(0)
        for c in compositions(m):
            i = len(c)
            acc += Fraction((-1) ** (i + 1), i) * composition_weight(c)
        value = acc * factorial(m)
        assert value.denominator == 1
        return int(value)
    raise ValueError(f"unknown method {method!r}")


def connected_explicit(n_pairs: int, m: int) -> int:
    """Connected count from the closed-form composition formulas (N <= 5).

    Counts vanish for m < N - 1.  The N=1, m=0 count is the bare
    propagator, which sits below the formulas' summation range and is
    returned as 1 directly.
    """
    if not 1 <= n_pairs <= MAX_EXPLICIT_PAIRS:
        raise ValueError(
            f"explicit formulas cover 1..{MAX_EXPLICIT_PAIRS} pairs; "
            "use connected_general"
        )
    if m < 0:
        raise ValueError("order must be non-negative")
    if m < n_pairs - 1:
        return 0
    if m == 0:
        return 1  # n_pairs == 1 here: the lone source-sink edge
    total = Fraction(0)
    for group in FORMULAS[n_pairs]:
        k = len(group.weights)
        for n in range(1, m - k + 1):
            num, den = group.coeff(n, m)
            if num == 0:
                continue
            step_num, step_den = leg_step_polynomial(n_pairs, n)
            symbol = c_symbol_generalized(n, m, group.weights)
            if symbol == 0:
                continue
            total += Fraction(
                num * symbol * factorial(2 * n) * step_num, den * step_den
            )
    assert total.denominator == 1
    return int(total)


class _SeriesCache:
    """Grow-only cache of the log-extraction table."""

    def __init__(self):
        self.x_order = 0
        self.y_order = -1
        self.table: dict[tuple[int, int], int] = {}

    def get(self, n_pairs: int, m: int) -> int:
        if n_pairs > self.x_order or m > self.y_order:
            self.x_order = max(self.x_order, n_pairs, DEFAULT_X_ORDER)
            self.y_order = max(self.y_order, m, DEFAULT_Y_ORDER)
            self.table = connected_from_log(self.x_order, self.y_order)
        return self.table[(n_pairs, m)]


_series_cache = _SeriesCache()


def connected_general(
    n_pairs: int,
    m: int,
    x_order: int | None = None,
    y_order: int | None = None,
) -> int:
    """Connected count from the bivariate series logarithm (any N >= 1).

    Truncation orders default to exactly what the request needs; passing
    explicit orders that are too small is an error, never a silent
    truncation.
    """
    if n_pairs < 1 or m < 0:
        raise ValueError("need n_pairs >= 1 and m >= 0")
    if x_order is not None or y_order is not None:
        x = x_order if x_order is not None else max(n_pairs, 1)
        y = y_order if y_order is not None else m
        if x < n_pairs or y < m:
            raise ValueError(
                f"truncation orders ({x}, {y}) too small for N={n_pairs}, m={m}"
            )
        return connected_from_log(x, y)[(n_pairs, m)]
    return _series_cache.get(n_pairs, m)


def connected_count(n_pairs: int, m: int, method: str = "explicit") -> CountRecord:
    """Dispatch to a counting route and wrap the result."""
    if method == "explicit":
        value = (
            vacuum_connected(m)
            if n_pairs == 0
            else connected_explicit(n_pairs, m)
        )
    elif method == "series-log":
        value = (
            vacuum_connected_from_series(m)
            if n_pairs == 0
            else connected_general(n_pairs, m)
        )
    elif method == "oracle":
        from .oracle import brute_force_connected

        value = brute_force_connected(m, n_pairs)
    elif method == "recurrence":
        if n_pairs != 0:
            raise ValueError("the recurrence route is vacuum-only")
        value = vacuum_connected(m, "recurrence")
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountRecord(n_pairs, m, method, value)


def vacuum_connected_from_series(m: int) -> int:
    """m! [y^m] log g(y); equals vacuum_connected(m) for m >= 1."""
    if m == 0:
        return 1
    w = vacuum_series(m).log()
    value = w[m] * factorial(m)
    assert value.denominator == 1
    return int(value)


def normalized_count(n_pairs: int, m: int) -> Fraction:
    """Connected diagrams with labeled external legs: count / (2^m m!).

    Integrality is expected on theoretical grounds but asserted by the
    callers that rely on it, not silently rounded here.
    """
    if n_pairs == 0:
        value = vacuum_connected(m)
    elif n_pairs <= MAX_EXPLICIT_PAIRS:
        value = connected_explicit(n_pairs, m)
    else:
        value = connected_general(n_pairs, m)
    return Fraction(value, 2**m * factorial(m))
