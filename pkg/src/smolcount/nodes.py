"""Univariate node families with exact symbolic node identities.

A node is never identified by its floating-point coordinate.  Chebyshev
nodes are identified by their reduced angle fraction t (the coordinate is
cos(pi*t), and cos is injective on [0, pi], so reduced fractions in [0, 1]
are canonical), equidistant nodes by their exact coordinate fraction, and
Leja-type nodes by their index into a deterministic master sequence.
Exact keys are what make cross-level deduplication in sparse grids
watertight: two nodes coincide iff their keys are equal, with no float
tolerance anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Union

import numpy as np


class NodeFamily(str, Enum):
    EQUIDISTANT_INTERIOR = "equidistant_interior"
    EQUIDISTANT_BOUNDARY = "equidistant_boundary"
    CHEBYSHEV1 = "chebyshev1"
    CHEBYSHEV2 = "chebyshev2"
    LEJA = "leja"
    SYMMETRIC_LEJA = "symmetric_leja"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


COSINE_FAMILIES = (NodeFamily.CHEBYSHEV1, NodeFamily.CHEBYSHEV2)
EQUIDISTANT_FAMILIES = (
    NodeFamily.EQUIDISTANT_INTERIOR,
    NodeFamily.EQUIDISTANT_BOUNDARY,
)
LEJA_FAMILIES = (NodeFamily.LEJA, NodeFamily.SYMMETRIC_LEJA)

#: Exact node identity: a reduced fraction (angle fraction for the cosine
#: families, coordinate fraction for the equidistant ones) or a 1-based
#: index into a Leja master sequence.
NodeKey = Union[Fraction, int]

#: Hard cap on Leja master-sequence length; each point costs a scan over
#: the candidate grid, so unbounded requests would hang silently.
LEJA_MAX_POINTS = 10_000

_CANDIDATE_COUNT = 100_001
_TIE_WINDOW = 1e-9  # log-scale window inside which argmax ties are resolved
_REFINE_TOL = 1e-15  # relative bracket width for the derivative bisection


def parse_family(text: str) -> NodeFamily:
    """Resolve a CLI/JSON family name like ``"chebyshev1"``."""
    try:
        return NodeFamily(text.strip().lower())
    except ValueError:
        names = ", ".join(f.value for f in NodeFamily)
        raise ValueError(f"unknown node family {text!r} (expected one of: {names})") from None


@dataclass(frozen=True)
class NodeSet:
    """An ordered set of univariate nodes with exact keys and float coords."""

    family: NodeFamily
    keys: tuple[NodeKey, ...]
    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.keys) != len(self.coords):
            raise ValueError("keys and coords must have equal length")
        if len(set(self.keys)) != len(self.keys):
            raise ValueError("node keys must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return len(self.keys)


def _cos_pi(t: Fraction) -> float:
    """cos(pi*t) for an exact angle fraction t in [0, 1].

    Folds t onto [0, 1/2] first so that symmetric keys (t and 1-t) map to
    exactly opposite floats and t = 1/2 maps to exactly 0.0.
    """
    if t < 0 or t > 1:
        raise ValueError("angle fraction must lie in [0, 1]")
    double = 2 * t
    if double == 1:
        return 0.0
    if double > 1:
        return -math.cos(math.pi * float(1 - t))
    return math.cos(math.pi * float(t))


def make_nodes(family: NodeFamily, n: int, *, leja_seed: float = 1.0) -> NodeSet:
    """Build the n-point node set of the given family.

    The boundary families use the single-midpoint convention for n = 1,
    so every family is defined for all n >= 1.
    """
    if n < 1:
        raise ValueError("node count must be >= 1")
    if family == NodeFamily.EQUIDISTANT_INTERIOR:
        keys = tuple(Fraction(2 * k - (n + 1), n + 1) for k in range(1, n + 1))
        coords = tuple(float(t) for t in keys)
    elif family == NodeFamily.EQUIDISTANT_BOUNDARY:
        if n == 1:
            keys = (Fraction(0),)
        else:
            keys = tuple(Fraction(2 * (k - 1) - (n - 1), n - 1) for k in range(1, n + 1))
        coords = tuple(float(t) for t in keys)
    elif family == NodeFamily.CHEBYSHEV1:
        keys = tuple(Fraction(2 * k - 1, 2 * n) for k in range(1, n + 1))
        coords = tuple(_cos_pi(t) for t in keys)
    elif family == NodeFamily.CHEBYSHEV2:
        if n == 1:
            keys = (Fraction(1, 2),)
        else:
            keys = tuple(Fraction(k - 1, n - 1) for k in range(1, n + 1))
        coords = tuple(_cos_pi(t) for t in keys)
    elif family in LEJA_FAMILIES:
        return make_leja(n, x1=leja_seed, symmetric=family == NodeFamily.SYMMETRIC_LEJA)
    else:
        raise ValueError(f"unknown node family: {family!r}")
    return NodeSet(family, keys, coords)


def make_leja(n: int, x1: float = 1.0, symmetric: bool = False) -> NodeSet:
    """First n points of a deterministic (symmetric) Leja sequence.

    Keys are the 1-based sequence indices, so prefixes of the same master
    sequence are nested by construction.
    """
    coords = leja_sequence(n, x1=x1, symmetric=symmetric)
    family = NodeFamily.SYMMETRIC_LEJA if symmetric else NodeFamily.LEJA
    return NodeSet(family, tuple(range(1, n + 1)), coords)


def key_to_coord(key: NodeKey, family: NodeFamily, *, leja_seed: float = 1.0) -> float:
    """Evaluate a node key to its float64 coordinate in [-1, 1]."""
    if family in COSINE_FAMILIES:
        if not isinstance(key, Fraction):
            raise TypeError(f"{family.value} keys are angle fractions, got {key!r}")
        return _cos_pi(key)
    if family in EQUIDISTANT_FAMILIES:
        if not isinstance(key, Fraction):
            raise TypeError(f"{family.value} keys are coordinate fractions, got {key!r}")
        if key < -1 or key > 1:
            raise ValueError("coordinate fraction must lie in [-1, 1]")
        return float(key)
    if family in LEJA_FAMILIES:
        if isinstance(key, bool) or not isinstance(key, int):
            raise TypeError(f"{family.value} keys are sequence indices, got {key!r}")
        if key < 1:
            raise ValueError("sequence index must be >= 1")
        seq = leja_sequence(key, x1=leja_seed, symmetric=family == NodeFamily.SYMMETRIC_LEJA)
        return seq[key - 1]
    raise ValueError(f"unknown node family: {family!r}")


# ---------------------------------------------------------------------------
# Leja machinery
# ---------------------------------------------------------------------------
#
# A Leja point maximizes the product of distances to all previous points.
# We work with the log of that product (the product itself underflows after
# a few dozen points), scan a fixed cosine-spaced candidate grid, and then
# polish the winning bracket by bisecting the derivative of the log-product.
# Cosine spacing gives quadratic resolution near the endpoints, where the
# distance product varies fastest.  Bisecting the derivative rather than
# comparing objective values matters: near a smooth maximum the objective
# is flat to within float rounding over a ~1e-8 neighbourhood, so any
# value-comparison search stalls there, while the derivative still crosses
# zero cleanly and localizes the maximizer to ~1e-15.

_cand_cache: np.ndarray | None = None


def _candidates() -> np.ndarray:
    global _cand_cache
    if _cand_cache is None:
        u = np.arange(_CANDIDATE_COUNT) / (_CANDIDATE_COUNT - 1)
        _cand_cache = np.cos(np.pi * (1.0 - u))  # ascending from -1 to 1
    return _cand_cache


def _refine_max(
    phi: Callable[[float], float],
    dphi: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = _REFINE_TOL,
) -> float:
    """Maximizer of phi on [lo, hi], where dphi is its exact derivative.

    The bracket comes from adjacent scan candidates around a local maximum,
    so either the derivative changes sign inside (interior maximum, found
    by bisection) or phi is monotone and an endpoint wins; endpoint ties go
    to the smaller coordinate.
    """
    dlo, dhi = dphi(lo), dphi(hi)
    if not (dlo > 0.0 > dhi):
        return lo if phi(lo) >= phi(hi) else hi
    for _ in range(200):
        if (hi - lo) <= tol * max(1.0, abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if dphi(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class _LejaBuilder:
    """Incrementally extended master sequence for one (seed, symmetric) pair."""

    def __init__(self, seed: float, symmetric: bool) -> None:
        self.symmetric = symmetric
        first = 0.0 if symmetric else float(seed)
        self.points: list[float] = [first]
        with np.errstate(divide="ignore"):
            self.logsum = np.log(np.abs(_candidates() - first))

    def _objective(self, x: float) -> float:
        pts = np.asarray(self.points)
        with np.errstate(divide="ignore"):
            return float(np.log(np.abs(x - pts)).sum())

    def _slope(self, x: float) -> float:
        pts = np.asarray(self.points)
        with np.errstate(divide="ignore"):
            return float(np.sum(1.0 / (x - pts)))

    def _next_point(self) -> float:
        cand = _candidates()
        s = self.logsum
        # Restrict to local maxima of the scan so the refinement bracket is
        # guaranteed to straddle a peak, then resolve near-ties (symmetric
        # configurations produce exactly equal peaks) toward the smaller
        # coordinate: candidates ascend, so the first tie wins.
        interior = (s[1:-1] >= s[:-2]) & (s[1:-1] >= s[2:])
        peaks = np.flatnonzero(interior) + 1
        if s[0] >= s[1]:
            peaks = np.concatenate(([0], peaks))
        if s[-1] >= s[-2]:
            peaks = np.concatenate((peaks, [len(s) - 1]))
        best = s[peaks].max()
        tie = peaks[s[peaks] >= best - _TIE_WINDOW]
        i = int(tie[0])
        lo = float(cand[i - 1]) if i > 0 else float(cand[0])
        hi = float(cand[i + 1]) if i + 1 < len(cand) else float(cand[-1])
        return _refine_max(self._objective, self._slope, lo, hi)

    def _append(self, x: float) -> None:
        self.points.append(x)
        with np.errstate(divide="ignore"):
            self.logsum = self.logsum + np.log(np.abs(_candidates() - x))

    def extend_to(self, n: int) -> None:
        while len(self.points) < n:
            x = self._next_point()
            self._append(x)
            if self.symmetric:
                self._append(-x)


_builders: dict[tuple[float, bool], _LejaBuilder] = {}


def leja_sequence(n: int, x1: float = 1.0, symmetric: bool = False) -> tuple[float, ...]:
    """Coordinates of the first n (symmetric) Leja points.

    The symmetric variant starts at 0 and grows by +-pairs, so its odd
    prefixes are symmetric sets; the seed is ignored in that case.  Master
    sequences are cached per (seed, symmetric) configuration and only ever
    appended to, so previously returned prefixes never change.
    """
    if n < 1:
        raise ValueError("sequence length must be >= 1")
    if n > LEJA_MAX_POINTS:
        raise ValueError(f"leja sequences are capped at {LEJA_MAX_POINTS} points")
    seed = 0.0 if symmetric else float(x1)
    if not -1.0 <= seed <= 1.0:
        raise ValueError("seed must lie in [-1, 1]")
    key = (seed, bool(symmetric))
    builder = _builders.get(key)
    if builder is None:
        builder = _builders[key] = _LejaBuilder(seed, symmetric)
    builder.extend_to(n)
    return tuple(builder.points[:n])
