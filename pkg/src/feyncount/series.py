"""Truncated formal power series over exact rationals.

Univariate series in y carry the vacuum generating function g(y) and its
logarithm; bivariate series in (x, y) carry the full contraction series
Z(x, y) and its logarithm W(x, y), from which connected counts with
external pairs are read off.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import factorial, h_inverse_coeff, total_contractions


class TruncatedSeries:
    """Power series truncated at a fixed order, coefficients are Fractions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        # Cauchy product, truncated.
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def scale(self, factor: Fraction | int) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries([f * c for c in self.coeffs])

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; requires constant term 1.

        Solved coefficient by coefficient from u' = a'/a, i.e.
        k u_k = k a_k - sum_{j=1}^{k-1} j u_j a_{k-j}.
        """
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        u = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            s = k * self.coeffs[k]
            for j in range(1, k):
                s -= j * u[j] * self.coeffs[k - j]
            u[k] = s / k
        return TruncatedSeries(u)

    def exp(self) -> "TruncatedSeries":
        """Formal exponential; requires constant term 0.

        From e' = a' e: k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp requires constant term 0")
        n = self.order
        e = [Fraction(0)] * (n + 1)
        e[0] = Fraction(1)
        for k in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s += j * self.coeffs[j] * e[k - j]
            e[k] = s / k
        return TruncatedSeries(e)


def vacuum_series(order: int) -> TruncatedSeries:
    """g(y) = sum_m (2m)!/m! y^m, truncated."""
    return TruncatedSeries(
        [Fraction(total_contractions(m, 0), factorial(m)) for m in range(order + 1)]
    )


def vacuum_inverse_series(order: int) -> TruncatedSeries:
    """1/g(y), built from the cached reciprocal coefficients."""
    return TruncatedSeries([h_inverse_coeff(m) for m in range(order + 1)])


class BivariateTruncatedSeries:
    """Series in x and y with independent truncation orders.

    coeff(i, j) is the coefficient of x^i y^j; the rectangular coefficient
    table is fixed at construction and all arithmetic truncates to it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Sequence[Fraction | int]]):
        width = len(coeffs[0])
        if any(len(row) != width for row in coeffs):
            raise ValueError("coefficient table must be rectangular")
        self.coeffs = tuple(tuple(Fraction(c) for c in row) for row in coeffs)

    @property
    def x_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def y_order(self) -> int:
        return len(self.coeffs[0]) - 1

    @classmethod
    def zero(cls, x_order: int, y_order: int) -> "BivariateTruncatedSeries":
        return cls([[0] * (y_order + 1) for _ in range(x_order + 1)])

    def coeff(self, i: int, j: int) -> Fraction:
        return self.coeffs[i][j]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BivariateTruncatedSeries) and self.coeffs == other.coeffs
        )

    def _check_orders(self, other: "BivariateTruncatedSeries") -> None:
        if self.x_order != other.x_order or self.y_order != other.y_order:
            raise ValueError("truncation order mismatch")

    def __add__(self, other: "BivariateTruncatedSeries") -> "BivariateTruncatedSeries":
        self._check_orders(other)
        return BivariateTruncatedSeries(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeffs, other.coeffs)
            ]
        )

    def __mul__(self, other: "BivariateTruncatedSeries") -> "BivariateTruncatedSeries":
        self._check_orders(other)
        nx, ny = self.x_order, self.y_order
        out = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
        for i1, row in enumerate(self.coeffs):
            for j1, a in enumerate(row):
                if a == 0:
                    continue
                for i2 in range(nx + 1 - i1):
                    orow = other.coeffs[i2]
                    for j2 in range(ny + 1 - j1):
                        b = orow[j2]
                        if b:
                            out[i1 + i2][j1 + j2] += a * b
        return BivariateTruncatedSeries(out)

    def scale(self, factor: Fraction | int) -> "BivariateTruncatedSeries":
        f = Fraction(factor)
        return BivariateTruncatedSeries(
            [[f * c for c in row] for row in self.coeffs]
        )


def build_Z(x_order: int, y_order: int) -> BivariateTruncatedSeries:
    """All-contraction generating function Z(x, y).

    The coefficient of x^N y^m is (2m + N)! / (N! N! m!).
    """
    if x_order < 0 or y_order < 0:
        raise ValueError("orders must be non-negative")
    table = [
        [
            Fraction(
                total_contractions(m, npairs),
                factorial(npairs) ** 2 * factorial(m),
            )
            for m in range(y_order + 1)
        ]
        for npairs in range(x_order + 1)
    ]
    return BivariateTruncatedSeries(table)


def _pair_columns(x_order: int, y_order: int) -> BivariateTruncatedSeries:
    """S(x, y) with Z = g(y) (1 + S): column N holds g^{-1} * (pair-N series) / N!."""
    g_inv = vacuum_inverse_series(y_order)
    rows: list[list[Fraction]] = [[Fraction(0)] * (y_order + 1)]
    for npairs in range(1, x_order + 1):
        n_fact = factorial(npairs)
        col = TruncatedSeries(
            [
                Fraction(total_contractions(m, npairs), n_fact * factorial(m))
                for m in range(y_order + 1)
            ]
        )
        normalized = g_inv * col
        rows.append([c / n_fact for c in normalized.coeffs])
    return BivariateTruncatedSeries(rows)


def connected_from_log(x_order: int, y_order: int) -> dict[tuple[int, int], int]:
    """Connected counts with external pairs from the bivariate logarithm.

    Factors Z = g(y) (1 + S(x, y)) and expands log(1 + S); S has no x^0
    term, so the expansion stops after x_order powers.  Returns a table
    mapping (n_pairs, m) to N! m! [x^N y^m] log(1 + S), asserting that
    every extracted value is an integer.
    """
    if x_order < 1 or y_order < 0:
        raise ValueError("need x_order >= 1 and y_order >= 0")
    s = _pair_columns(x_order, y_order)
    log_sum = BivariateTruncatedSeries.zero(x_order, y_order)
    power = s
    for k in range(1, x_order + 1):
        log_sum = log_sum + power.scale(Fraction((-1) ** (k + 1), k))
        if k < x_order:
            power = power * s
    table: dict[tuple[int, int], int] = {}
    for npairs in range(1, x_order + 1):
        n_fact = factorial(npairs)
        for m in range(y_order + 1):
            value = log_sum.coeff(npairs, m) * n_fact * factorial(m)
            if value.denominator != 1:
                raise AssertionError(
                    f"non-integer connected count at N={npairs}, m={m}: {value}"
                )
            table[(npairs, m)] = int(value)
    return table
