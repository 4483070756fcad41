"""Closed-form expressions for connected counts with 1 to 5 external pairs.

Each formula is a sum of groups; a group pairs a symbol subscript (empty
for the plain symbol C(n, m), otherwise the leg indices of the f-weighted
generalization) with a rational coefficient in n and m.  The coefficient
callables use only ring operations so the same table can be evaluated
with integers for exact counting or with polynomial operands when the
asymptotic engine expands around large m.

The group count per formula equals the number of integer partitions of
the pair count: 1, 2, 3, 5, 7.  The two-pair formula is usually printed
as a single sum with numerator 4m - 2n - 1; it is stored here split into
its structural groups (2n - 1) + 4(m - n) over the common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class FormulaGroup:
    """One sum of the explicit formula.

    ``weights`` is the generalized-symbol subscript (a non-decreasing tuple
    of leg indices; empty means the plain symbol).  ``coeff`` maps (n, m)
    to a (numerator, denominator) pair.
    """

    weights: tuple[int, ...]
    coeff: Callable[..., tuple]


FORMULAS: dict[int, tuple[FormulaGroup, ...]] = {
    1: (
        FormulaGroup((), lambda n, m: (1, 1)),
    ),
    2: (
        FormulaGroup((), lambda n, m: (2 * n - 1, 2 * n + 1)),
        FormulaGroup((), lambda n, m: (4 * (m - n), 2 * n + 1)),
    ),
    3: (
        FormulaGroup(
            (),
            lambda n, m: ((n - 1) * (2 * n - 1), (n + 1) * (2 * n + 1)),
        ),
        FormulaGroup(
            (),
            lambda n, m: (9 * (m - n) * (2 * n - 1), (n + 1) * (2 * n + 1)),
        ),
        FormulaGroup(
            (1, 1),
            lambda n, m: (6, (n + 1) * (2 * n + 1)),
        ),
    ),
    4: (
        FormulaGroup(
            (),
            lambda n, m: (
                (2 * n - 1) * (2 * n - 3) * (n - 1),
                (2 * n + 1) * (2 * n + 3) * (n + 1),
            ),
        ),
        FormulaGroup(
            (),
            lambda n, m: (
                16 * (m - n) * (4 * n * n - 24 * n - 7),
                (2 * n + 1) * (2 * n + 3) * (n + 1),
            ),
        ),
        FormulaGroup(
            (2,),
            lambda n, m: (18, (2 * n + 1) * (n + 1)),
        ),
        FormulaGroup(
            (1, 1),
            lambda n, m: (
                72 * (2 * n - 1),
                (2 * n + 3) * (2 * n + 1) * (n + 1),
            ),
        ),
        FormulaGroup(
            (1, 1, 1),
            lambda n, m: (72, (2 * n + 3) * (2 * n + 1) * (n + 1)),
        ),
    ),
    5: (
        FormulaGroup(
            (),
            lambda n, m: (
                (2 * n - 1) * (2 * n - 3) * (n - 1) * (n - 2),
                (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2),
            ),
        ),
        FormulaGroup(
            (),
            lambda n, m: (
                25 * (m - n) * (4 * n**3 - 44 * n * n + 131 * n + 89),
                (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2),
            ),
        ),
        FormulaGroup(
            (2,),
            lambda n, m: (
                100 * (2 * n * n - 3 * n - 8),
                (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2),
            ),
        ),
        FormulaGroup(
            (1, 1),
            lambda n, m: (
                200 * (2 * n * n - 21 * n - 8),
                (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2),
            ),
        ),
        FormulaGroup(
            (1, 2),
            lambda n, m: (450, (2 * n + 1) * (n + 1) * (n + 2)),
        ),
        FormulaGroup(
            (1, 1, 1),
            lambda n, m: (
                900 * (2 * n - 1),
                (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2),
            ),
        ),
        FormulaGroup(
            (1, 1, 1, 1),
            lambda n, m: (720, (2 * n + 1) * (2 * n + 3) * (n + 1) * (n + 2)),
        ),
    ),
}

MAX_EXPLICIT_PAIRS = max(FORMULAS)


def group_count(n_pairs: int) -> int:
    """Number of structural sum groups in the explicit formula."""
    return len(FORMULAS[n_pairs])


def leg_step_polynomial(n_pairs: int, n):
    """Polynomial part of the pair-difference factor.

    (2n + N)!/N! - (2n + N - 1)!/(N - 1)! equals (2n)! times this ratio:
    returns (prod_{r=0}^{N-1} (2n + r), N!).  Works for integer or
    polynomial n.
    """
    num = 1
    for r in range(n_pairs):
        num = num * (2 * n + r)
    den = 1
    for r in range(2, n_pairs + 1):
        den *= r
    return num, den
