"""Truncated series in t = 1/m over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class LaurentSeries:
    """Coefficients for t^0 .. t^order; arithmetic never reads past order.

    Negative powers of m never appear here: the engine keeps the overall
    m-power of a quantity in a separate exponent, so this class only has
    to model the unit-series part.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        if not coeffs:
            raise ValueError("need at least the constant term")
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls([1] + [0] * order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self.order:
            return self
        return LaurentSeries(self.coeffs[: order + 1])

    def _aligned(self, other: "LaurentSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        n = self._aligned(other)
        return LaurentSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)]
        )

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        n = self._aligned(other)
        return LaurentSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)]
        )

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries([-c for c in self.coeffs])

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        n = self._aligned(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return LaurentSeries(out)

    def scale(self, factor: Fraction | int) -> "LaurentSeries":
        f = Fraction(factor)
        return LaurentSeries([f * c for c in self.coeffs])

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k, keeping the truncation order."""
        if k < 0:
            raise ValueError("only non-negative shifts")
        if k == 0:
            return self
        return LaurentSeries(
            (Fraction(0),) * k + self.coeffs[: self.order + 1 - k]
        )

    def reciprocal(self) -> "LaurentSeries":
        """1 / series; requires a non-zero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("reciprocal requires a unit (non-zero constant term)")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s += self.coeffs[j] * out[k - j]
            out[k] = -s / c0
        return LaurentSeries(out)

    def exp(self) -> "LaurentSeries":
        """Exponential of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires constant term 0")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for k in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s += j * self.coeffs[j] * out[k - j]
            out[k] = s / k
        return LaurentSeries(out)

    def evaluate(self, m: int) -> Fraction:
        """Sum of coeff_k / m^k at a concrete positive integer m."""
        if m <= 0:
            raise ValueError("evaluation point must be positive")
        acc = Fraction(0)
        for k in range(self.order, -1, -1):
            acc = acc / m + self.coeffs[k]
        return acc
