"""Dense polynomials in m over exact rationals.

Just enough ring structure for the asymptotic engine: the explicit-formula
coefficient lambdas are evaluated with Poly operands, and the results are
expanded into Laurent form exactly (no truncation happens at the
polynomial level).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentSeries


class Poly:
    """coeffs[i] is the coefficient of m^i; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def affine(cls, slope, intercept) -> "Poly":
        """slope * m + intercept."""
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def eval(self, m) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def expansion(self, order: int) -> tuple[int, Fraction, LaurentSeries]:
        """Write p(m) = lead * m^degree * unit(1/m).

        Returns (degree, leading coefficient, unit Laurent series with
        constant term 1).  Zero polynomials are not expandable.
        """
        if self.is_zero():
            raise ValueError("cannot expand the zero polynomial")
        d = self.degree
        lead = self.coeffs[-1]
        unit = [self.coeffs[d - k] / lead if k <= d else Fraction(0) for k in range(order + 1)]
        return d, lead, LaurentSeries(unit)
