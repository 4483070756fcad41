"""Exact large-m expansion of balanced products of Gamma factors.

A factor is Gamma(scale*m + offset) with sign +1 (numerator) or -1
(denominator).  For a balanced product (the scale*m parts cancel in the
log-linear sense) the value splits as

    scalar * sqrt(s) * geometric^m * m^power * U(1/m)

with scalar and geometric rational, s a squarefree integer, power rational
and U a unit Laurent series with exact rational coefficients.  The split
comes from the Stirling series for log-Gamma; everything transcendental
(log primes, log 2pi) is carried symbolically and must cancel or exponentiate
into the rational fields above, otherwise the product was not balanced and
a GammaBalanceError is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .laurent import LaurentSeries
from .poly import Poly

GammaFactor = tuple[Fraction | int, Fraction | int, int]  # (scale, offset, sign)


class GammaBalanceError(ValueError):
    """The factor list does not cancel to a supported asymptotic shape."""


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """Bernoulli number B_k (B_1 = -1/2 convention)."""
    if k < 0:
        raise ValueError("index must be non-negative")
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        acc += comb(k + 1, j) * bernoulli_number(j)
    return -acc / (k + 1)


def _prime_exponents(q: Fraction) -> dict[int, int]:
    """Prime factorization exponents of a positive rational."""
    if q <= 0:
        raise ValueError("only positive rationals factor over the primes")
    out: dict[int, int] = {}
    for value, direction in ((q.numerator, 1), (q.denominator, -1)):
        p = 2
        while p * p <= value:
            while value % p == 0:
                out[p] = out.get(p, 0) + direction
                value //= p
            p += 1
        if value > 1:
            out[value] = out.get(value, 0) + direction
    return {p: e for p, e in out.items() if e}


def _loggamma_tail(scale: Fraction, offset: Fraction, order: int) -> LaurentSeries:
    """The 1/m part of log Gamma(scale*m + offset), constant term zero.

    Built from (z - 1/2) log z - z + Stirling corrections with
    z = scale*m + offset; the m log m, m, log m and constant pieces are
    accounted for separately by the caller.
    """
    ratio = offset / scale
    # log(1 + ratio/m) through t^(order+1); index j holds the t^j coefficient
    ell = [Fraction(0)] * (order + 2)
    for j in range(1, order + 2):
        ell[j] = Fraction((-1) ** (j + 1), j) * ratio**j
    tail = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1):
        # scale*m * ell contributes at one order lower; its t^0 piece cancels
        # the -offset from -(scale*m + offset) and is omitted here
        tail[j] = scale * ell[j + 1] + (offset - Fraction(1, 2)) * ell[j]
    for k in range(1, (order + 1) // 2 + 1):
        lead = bernoulli_number(2 * k) / (2 * k * (2 * k - 1))
        base = 2 * k - 1  # expanding (scale*m + offset)^(1 - 2k)
        for j in range(base, order + 1):
            i = j - base
            tail[j] += (
                lead
                * scale ** (-base)
                * Fraction((-1) ** i * comb(base - 1 + i, i))
                * ratio**i
            )
    return LaurentSeries(tail)


@dataclass(frozen=True)
class GammaExpansion:
    """Normalized expansion of a balanced Gamma product."""

    geometric: Fraction  # contributes geometric**m
    m_power: Fraction
    scalar: Fraction  # positive or negative rational
    sqrt: int  # squarefree positive integer under a square root
    series: LaurentSeries  # unit series, constant term 1


def loggamma_ratio_series(
    factors: Sequence[GammaFactor], order: int
) -> GammaExpansion:
    """Expand prod Gamma(scale*m + offset)^sign for large m.

    Raises GammaBalanceError when the m log m part does not cancel, when a
    residual log(2 pi) survives (unequal numerator/denominator factor
    counts), or when the geometric part fails to be rational.
    """
    slope = Fraction(0)
    log_m = Fraction(0)
    two_pi = Fraction(0)
    geo_exp: dict[int, Fraction] = {}
    const_exp: dict[int, Fraction] = {}
    tail = LaurentSeries.zero(order)
    for scale, offset, sign in factors:
        scale = Fraction(scale)
        offset = Fraction(offset)
        if scale <= 0:
            raise GammaBalanceError("scales must be positive")
        if sign not in (1, -1):
            raise GammaBalanceError("signs must be +1 or -1")
        slope += sign * scale
        log_m += sign * (offset - Fraction(1, 2))
        two_pi += Fraction(sign, 2)
        for p, v in _prime_exponents(scale).items():
            geo_exp[p] = geo_exp.get(p, 0) + sign * scale * v
            const_exp[p] = const_exp.get(p, 0) + sign * (offset - Fraction(1, 2)) * v
        piece = _loggamma_tail(scale, offset, order)
        tail = tail + piece if sign == 1 else tail - piece
    if slope != 0:
        raise GammaBalanceError(f"m log m residue {slope} does not cancel")
    if two_pi != 0:
        raise GammaBalanceError("unbalanced factor count leaves a sqrt(2 pi)")
    geometric = Fraction(1)
    for p, e in geo_exp.items():
        if e.denominator != 1:
            raise GammaBalanceError(f"irrational geometric factor {p}^{e}")
        geometric *= Fraction(p) ** e
    scalar = Fraction(1)
    sqrt = 1
    for p, f in sorted(const_exp.items()):
        doubled = 2 * f
        if doubled.denominator != 1:
            raise GammaBalanceError(f"unsupported constant factor {p}^{f}")
        whole, half = divmod(doubled.numerator, 2)
        scalar *= Fraction(p) ** whole
        if half:
            sqrt *= p
    return GammaExpansion(geometric, log_m, scalar, sqrt, tail.exp())


def gamma_product_rational(factors: Sequence[GammaFactor]) -> tuple[Poly, Poly]:
    """Balanced Gamma product as an exact rational function of m.

    Applicable when, for every scale, numerator and denominator factors
    pair up with integer offset differences; each pair collapses to a
    finite product of linear factors.  This is the cross-check path for
    one-large-part families, independent of the Stirling series.
    """
    by_scale: dict[Fraction, dict[int, list[Fraction]]] = {}
    for scale, offset, sign in factors:
        by_scale.setdefault(Fraction(scale), {1: [], -1: []})[sign].append(
            Fraction(offset)
        )
    num = Poly.const(1)
    den = Poly.const(1)
    for scale, sides in by_scale.items():
        plus = sorted(sides[1], reverse=True)
        minus = sorted(sides[-1], reverse=True)
        if len(plus) != len(minus):
            raise GammaBalanceError(
                f"scale {scale}: {len(plus)} numerator vs {len(minus)} denominator factors"
            )
        for c_plus, c_minus in zip(plus, minus):
            diff = c_plus - c_minus
            if diff.denominator != 1:
                raise GammaBalanceError(
                    f"scale {scale}: offsets {c_plus}, {c_minus} differ by a non-integer"
                )
            steps = diff.numerator
            if steps >= 0:
                for j in range(steps):
                    num = num * Poly.affine(scale, c_minus + j)
            else:
                for j in range(-steps):
                    den = den * Poly.affine(scale, c_plus + j)
    return num, den
