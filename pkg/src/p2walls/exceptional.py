"""Exceptional slopes, the mutation tree, and the stability threshold curve.

Every rational slope sits inside the interval I_alpha = (alpha - x_alpha,
alpha + x_alpha) of a unique exceptional slope alpha; the threshold curve
is given there by P(-|mu - alpha|) - disc(alpha).  The hosting slope is
found by walking the binary mutation tree spanned between consecutive
integers; the walk terminates for every rational (the complement of the
intervals contains no rationals) and is depth-guarded so a violation
would surface loudly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chern import ChernChar, from_invariants, hilbert_poly
from .errors import TreeDepthExceeded
from .exactmath import QuadVal, quad_cmp

TREE_DEPTH_LIMIT = 64


@dataclass(frozen=True)
class ExcSlope:
    """An exceptional slope with its rank, discriminant and interval half-width.

    rank is the smallest positive integer r with r*alpha integral (the
    denominator), disc = (1 - 1/rank^2)/2 < 1/2, and the half-width is
    x = (3 - sqrt(5 + 8*disc))/2.
    """

    alpha: Fraction
    rank: int
    disc: Fraction
    half_width: QuadVal

    def character(self) -> ChernChar:
        return from_invariants(self.rank, self.alpha, self.disc)

    def interval_contains(self, mu) -> bool:
        """Strict membership |mu - alpha| < x; endpoints are irrational."""
        return quad_cmp(abs(Fraction(mu) - self.alpha), self.half_width) < 0

    def shifted(self, n: int) -> "ExcSlope":
        return ExcSlope(self.alpha + n, self.rank, self.disc, self.half_width)


def exc_slope(alpha) -> ExcSlope:
    """Populate the invariants of an exceptional slope.

    The fields are formula-driven; membership of alpha in the exceptional
    set is the caller's concern (integers always qualify, other slopes come
    out of the mutation tree).
    """
    alpha = Fraction(alpha)
    rank = alpha.denominator
    disc = Fraction(1, 2) * (1 - Fraction(1, rank * rank))
    half_width = QuadVal(Fraction(3, 2), (5 + 8 * disc) / 4, sign=-1)
    return ExcSlope(alpha, rank, disc, half_width)


def dot(a: ExcSlope, b: ExcSlope) -> ExcSlope:
    """The exceptional slope generated between two adjacent ones by mutation."""
    alpha = (a.alpha + b.alpha) / 2 + (b.disc - a.disc) / (3 + a.alpha - b.alpha)
    return exc_slope(alpha)


@lru_cache(maxsize=None)
def _containing_in_unit(mu: Fraction) -> ExcSlope:
    lo, hi = exc_slope(0), exc_slope(1)
    if mu == lo.alpha:
        return lo
    for _ in range(TREE_DEPTH_LIMIT):
        if lo.interval_contains(mu):
            return lo
        if hi.interval_contains(mu):
            return hi
        mid = dot(lo, hi)
        if mu == mid.alpha:
            return mid
        if mu < mid.alpha:
            hi = mid
        else:
            lo = mid
    raise TreeDepthExceeded(f"no hosting interval found for {mu} within depth {TREE_DEPTH_LIMIT}")


def containing_exceptional(mu) -> ExcSlope:
    """The unique exceptional slope whose interval contains mu (or equals it)."""
    mu = Fraction(mu)
    shift = math.floor(mu)
    home = _containing_in_unit(mu - shift)
    return home.shifted(shift) if shift else home


def is_exceptional_slope(mu) -> bool:
    return containing_exceptional(mu).alpha == Fraction(mu)


def delta(mu) -> Fraction:
    """The stability threshold at mu: P(-|mu - alpha|) - disc(alpha).

    Positive-dimensional moduli exist exactly for discriminants >= delta(mu).
    Invariant under integer translation and under mu -> -mu.
    """
    mu = Fraction(mu)
    home = containing_exceptional(mu)
    return hilbert_poly(-abs(mu - home.alpha)) - home.disc


def slopes_in_unit_interval(max_rank: int):
    """All exceptional slopes in [0, 1] with rank at most max_rank, ascending."""
    out = []

    def gen(lo: ExcSlope, hi: ExcSlope):
        mid = dot(lo, hi)
        if mid.rank > max_rank:
            return
        gen(lo, mid)
        out.append(mid)
        gen(mid, hi)

    lo, hi = exc_slope(0), exc_slope(1)
    out.append(lo)
    gen(lo, hi)
    out.append(hi)
    return out
