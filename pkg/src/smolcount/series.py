"""Truncated formal power series over exact Python integers.

The coefficient of x^mu in f(1) + f(2)x + f(3)x^2 + ... raised to the d-th
power (times (1-x)^(d-1) for the deduplicated count) is the number of
sparse-grid nodes at level mu.  Keeping the truncation order fixed at mu
and the coefficients as plain ints makes the extraction exact at any size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .growth import GrowthSpec


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_T of a power series truncated at order T."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        """The multiplicative identity 1 + 0x + ... + 0x^order."""
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls((1,) + (0,) * order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order.

    Mixing truncation orders is a contract error: it would silently drop
    information from the longer operand.
    """
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} != {b.order}")
    t = a.order
    ca, cb = a.coeffs, b.coeffs
    out = [0] * (t + 1)
    for j, aj in enumerate(ca):
        if aj == 0:
            continue
        for k in range(j, t + 1):
            out[k] += aj * cb[k - j]
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """a**e by repeated squaring; e = 0 gives the identity series."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def one_minus_x_pow(e: int, order: int) -> TruncatedSeries:
    """(1 - x)^e truncated at the given order."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    coeffs = tuple(
        (-1) ** k * math.comb(e, k) if k <= e else 0 for k in range(order + 1)
    )
    return TruncatedSeries(coeffs)


def g1_series(growth: GrowthSpec, order: int) -> TruncatedSeries:
    """The base series whose x^l coefficient is f(l + 1).

    This single series generates both counts: its d-th power counts nodes
    with duplicates, and multiplying by (1 - x)^(d-1) removes the overlap
    between nested levels.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries(tuple(growth(level) for level in range(1, order + 2)))


def count_via_genfun(growth: GrowthSpec, d: int, mu: int, kind: str = "nested") -> int:
    """Node count extracted as a series coefficient.

    kind = "nested" reads the x^mu coefficient of g1^d * (1-x)^(d-1);
    kind = "with_duplicates" reads it from g1^d.  The truncation order is
    exactly mu, since higher coefficients cannot influence the result.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if mu < 0:
        raise ValueError("level must be >= 0")
    gd = series_pow(g1_series(growth, mu), d)
    if kind == "nested":
        gd = series_mul(gd, one_minus_x_pow(d - 1, mu))
    elif kind != "with_duplicates":
        raise ValueError(f'kind must be "nested" or "with_duplicates", got {kind!r}')
    return gd[mu]
