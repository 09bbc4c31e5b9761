"""Growth functions: rule level -> univariate node count.

A growth function f maps a level k >= 1 to the cardinality of the k-th
univariate node set.  The parametric families here (n^k - 1, n^k, n^k + 1,
k, 2k - 1) are the ones with closed counting formulas downstream; the
Clenshaw-Curtis doubling rule and user-supplied tables are counted by the
recursion and generating-function paths instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nodes import NodeFamily

POWER_MINUS_ONE = "power_minus_one"  # f(k) = n^k - 1
POWER = "power"                      # f(k) = n^k
POWER_PLUS_ONE = "power_plus_one"    # f(k) = n^k + 1
LINEAR = "linear"                    # f(k) = k
ODD = "odd"                          # f(k) = 2k - 1
CLENSHAW_CURTIS = "clenshaw_curtis"  # f(1) = 1, f(k) = 2^(k-1) + 1 for k > 1
CUSTOM = "custom"                    # explicit finite table

PARAMETRIC_FAMILIES = frozenset({POWER_MINUS_ONE, POWER, POWER_PLUS_ONE})
GROWTH_FAMILIES = PARAMETRIC_FAMILIES | {LINEAR, ODD, CLENSHAW_CURTIS, CUSTOM}


class GrowthRangeError(ValueError):
    """A level beyond the domain of a custom growth table was requested."""


@dataclass(frozen=True)
class GrowthSpec:
    """A non-decreasing growth function, callable on levels k >= 1.

    Custom tables are validated at construction and never extrapolated:
    levels beyond the table raise GrowthRangeError rather than silently
    producing wrong counts.
    """

    family: str
    base: int = 0
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.family not in GROWTH_FAMILIES:
            names = ", ".join(sorted(GROWTH_FAMILIES))
            raise ValueError(f"unknown growth family {self.family!r} (expected one of: {names})")
        if self.family in PARAMETRIC_FAMILIES and self.base < 2:
            raise ValueError(f"{self.family} needs an integer base >= 2, got {self.base}")
        if self.family == CUSTOM:
            if not self.values:
                raise ValueError("custom growth needs at least one value")
            if any(v < 1 for v in self.values):
                raise ValueError("custom growth values must be >= 1")
            if any(b < a for a, b in zip(self.values, self.values[1:])):
                raise ValueError("custom growth values must be non-decreasing")

    @classmethod
    def power_minus_one(cls, n: int) -> "GrowthSpec":
        return cls(POWER_MINUS_ONE, base=n)

    @classmethod
    def power(cls, n: int) -> "GrowthSpec":
        return cls(POWER, base=n)

    @classmethod
    def power_plus_one(cls, n: int) -> "GrowthSpec":
        return cls(POWER_PLUS_ONE, base=n)

    @classmethod
    def linear(cls) -> "GrowthSpec":
        return cls(LINEAR)

    @classmethod
    def odd(cls) -> "GrowthSpec":
        return cls(ODD)

    @classmethod
    def clenshaw_curtis(cls) -> "GrowthSpec":
        return cls(CLENSHAW_CURTIS)

    @classmethod
    def custom(cls, values) -> "GrowthSpec":
        return cls(CUSTOM, values=tuple(int(v) for v in values))

    @property
    def max_level(self) -> int | None:
        """Largest evaluable level, or None when unbounded."""
        return len(self.values) if self.family == CUSTOM else None

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError("level must be >= 1")
        fam = self.family
        if fam == POWER_MINUS_ONE:
            return self.base**k - 1
        if fam == POWER:
            return self.base**k
        if fam == POWER_PLUS_ONE:
            return self.base**k + 1
        if fam == LINEAR:
            return k
        if fam == ODD:
            return 2 * k - 1
        if fam == CLENSHAW_CURTIS:
            return 1 if k == 1 else 2 ** (k - 1) + 1
        if k > len(self.values):
            raise GrowthRangeError(
                f"custom growth table has {len(self.values)} levels, level {k} requested"
            )
        return self.values[k - 1]

    def __str__(self) -> str:
        if self.family in PARAMETRIC_FAMILIES:
            return f"{self.family}:{self.base}"
        if self.family == CUSTOM:
            return "custom:" + ",".join(str(v) for v in self.values)
        return self.family


def parse_growth(text: str) -> GrowthSpec:
    """Parse a CLI/JSON growth name like ``"power:3"`` or ``"custom:1,3,5"``."""
    name, _, arg = text.strip().partition(":")
    name = name.lower()
    if name in PARAMETRIC_FAMILIES:
        try:
            base = int(arg)
        except ValueError:
            raise ValueError(f"{name} needs an integer base, e.g. {name}:2") from None
        return GrowthSpec(name, base=base)
    if name == CUSTOM:
        if not arg:
            raise ValueError("custom growth needs a value list, e.g. custom:1,3,5")
        try:
            values = tuple(int(v) for v in arg.split(","))
        except ValueError:
            raise ValueError(f"bad custom growth table {arg!r}") from None
        return GrowthSpec(CUSTOM, values=values)
    if name in (LINEAR, ODD, CLENSHAW_CURTIS):
        if arg:
            raise ValueError(f"growth family {name} takes no parameter")
        return GrowthSpec(name)
    names = ", ".join(sorted(GROWTH_FAMILIES))
    raise ValueError(f"unknown growth family {name!r} (expected one of: {names})")


# ---------------------------------------------------------------------------
# Nestedness
# ---------------------------------------------------------------------------
#
# For each node family there is an exact criterion for when the level sets
# S_k = family(f(k)) satisfy S_k <= S_{k+1}:
#
#   interior equidistant   E*(a) <= E*(b)  iff  (a+1) | (b+1)
#   boundary equidistant   E(a)  <= E(b)   iff  (a-1) | (b-1); E(1) = {0}
#   / Chebyshev 2nd kind                        needs b odd to recur
#   Chebyshev 1st kind     C1(a) <= C1(b)  iff  a | b with b/a odd
#   Leja                   always (prefixes of one master sequence)
#   symmetric Leja         f(k) odd for all k (odd prefixes are the
#                          symmetric sets; prefixes nest by construction)
#
# The parametric families are decided structurally below; custom tables are
# checked value by value, which also recognizes tables that happen to match
# a nested shape such as 3^(k-1).


def is_nested_pairing(family: NodeFamily, growth: GrowthSpec) -> bool:
    """True when the level sets family(f(1)), family(f(2)), ... are nested."""
    if family == NodeFamily.LEJA:
        return True
    if family == NodeFamily.SYMMETRIC_LEJA:
        return _all_values_odd(growth)
    if family == NodeFamily.EQUIDISTANT_INTERIOR:
        return _interior_steps_divide(growth)
    if family in (NodeFamily.EQUIDISTANT_BOUNDARY, NodeFamily.CHEBYSHEV2):
        return _boundary_steps_divide(growth)
    if family == NodeFamily.CHEBYSHEV1:
        return _consecutive_ratio_odd(growth)
    raise ValueError(f"unknown node family: {family!r}")


def _all_values_odd(g: GrowthSpec) -> bool:
    if g.family in (ODD, CLENSHAW_CURTIS):
        return True
    if g.family == POWER:
        return g.base % 2 == 1
    if g.family in (POWER_MINUS_ONE, POWER_PLUS_ONE):
        return g.base % 2 == 0
    if g.family == CUSTOM:
        return all(v % 2 == 1 for v in g.values)
    return False  # linear hits even counts at k = 2


def _interior_steps_divide(g: GrowthSpec) -> bool:
    if g.family == POWER_MINUS_ONE:
        return True  # f(k)+1 = n^k divides n^(k+1)
    if g.family == CUSTOM:
        return all((b + 1) % (a + 1) == 0 for a, b in zip(g.values, g.values[1:]))
    # power: (n^k+1) | (n^(k+1)+1) forces n+1 | 2; power_plus_one, linear,
    # odd and clenshaw_curtis all fail the divisibility at small k.
    return False


def _boundary_steps_divide(g: GrowthSpec) -> bool:
    if g.family == POWER_PLUS_ONE:
        return True  # f(k)-1 = n^k divides n^(k+1)
    if g.family == CLENSHAW_CURTIS:
        return True  # {0} <= E(3), then 2^(k-1) | 2^k
    if g.family == CUSTOM:
        for a, b in zip(g.values, g.values[1:]):
            if a == 1:
                if b != 1 and b % 2 == 0:  # 0 reappears only in odd-count sets
                    return False
            elif (b - 1) % (a - 1) != 0:
                return False
        return True
    # power/power_minus_one fail (n^k-1) | (n^(k+1)-1) beyond k = 1; linear
    # fails at E(1) = {0} vs E(2) = {-1, 1}; odd fails at 4 | 6.
    return False


def _consecutive_ratio_odd(g: GrowthSpec) -> bool:
    if g.family == POWER:
        return g.base % 2 == 1
    if g.family == CUSTOM:
        return all(b % a == 0 and (b // a) % 2 == 1 for a, b in zip(g.values, g.values[1:]))
    # The remaining families have non-integer or even consecutive ratios.
    return False
