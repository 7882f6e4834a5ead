"""Integral Chern characters on the plane: invariants, pairings, twists, lattices.

A character is the triple (r, c1, ch2) in hyperplane units.  Integrality
means c2 = (c1^2 - 2*ch2)/2 is an integer, equivalently ch2 = c1^2/2 mod 1.
For positive rank the equivalent record is (r, mu, disc) with slope
mu = c1/r and discriminant disc = mu^2/2 - ch2/r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveRank, NotIntegral
from .exactmath import Rat, rat_str


def hilbert_poly(m) -> Fraction:
    """P(m) = (m^2 + 3m + 2)/2, the Euler characteristic of O(m) on the plane."""
    m = Fraction(m)
    return (m * m + 3 * m + 2) / 2


@dataclass(frozen=True)
class ChernChar:
    r: int
    c1: int
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch2", Fraction(self.ch2))
        if self.r == 0 and self.c1 == 0 and self.ch2 == 0:
            raise NotIntegral("the zero class is not a Chern character")
        if (Fraction(self.c1 * self.c1, 2) - self.ch2).denominator != 1:
            raise NotIntegral(
                f"({self.r},{self.c1},{self.ch2}): c2 = (c1^2 - 2*ch2)/2 is not an integer"
            )

    @property
    def mu(self) -> Fraction:
        """Slope c1/r; requires positive rank."""
        if self.r <= 0:
            raise NonPositiveRank(f"slope undefined for rank {self.r}")
        return Fraction(self.c1, self.r)

    @property
    def disc(self) -> Fraction:
        """Discriminant mu^2/2 - ch2/r; requires positive rank."""
        mu = self.mu
        return mu * mu / 2 - Fraction(self.ch2, 1) / self.r

    def invariants(self) -> tuple[Fraction, Fraction]:
        return self.mu, self.disc

    @property
    def euler(self) -> Fraction:
        """chi = r + (3/2) c1 + ch2.  Integral for every integral character."""
        return self.r + Fraction(3 * self.c1, 2) + self.ch2

    def twist(self, n: int) -> "ChernChar":
        """Tensor by O(n): slope shifts by n, discriminant is unchanged."""
        return ChernChar(
            self.r,
            self.c1 + n * self.r,
            self.ch2 + n * self.c1 + Fraction(n * n * self.r, 2),
        )

    def elem_mod(self, k: int = 1) -> "ChernChar":
        """k elementary modifications: disc grows by k/r, chi drops by k."""
        if self.r <= 0:
            raise NonPositiveRank("elementary modification needs positive rank")
        if k < 0:
            raise ValueError("k must be nonnegative")
        return ChernChar(self.r, self.c1, self.ch2 - k)

    def dual(self) -> "ChernChar":
        return ChernChar(self.r, -self.c1, self.ch2)

    def __add__(self, other: "ChernChar") -> "ChernChar":
        return ChernChar(self.r + other.r, self.c1 + other.c1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernChar") -> "ChernChar":
        return ChernChar(self.r - other.r, self.c1 - other.c1, self.ch2 - other.ch2)

    def __str__(self) -> str:
        return f"{self.r},{self.c1},{rat_str(self.ch2)}"

    def invariant_str(self) -> str:
        """The "r:mu:disc" rendering (positive rank only)."""
        return f"{self.r}:{rat_str(self.mu)}:{rat_str(self.disc)}"


def from_invariants(r: int, mu, disc) -> ChernChar:
    """The unique character with the given rank, slope and discriminant.

    Rejects non-integral data rather than rounding; round-trips with
    ``invariants()``.
    """
    if r <= 0:
        raise NonPositiveRank(f"rank must be positive, got {r}")
    mu, disc = Fraction(mu), Fraction(disc)
    c1 = mu * r
    if c1.denominator != 1:
        raise NotIntegral(f"r*mu = {r}*{mu} is not an integer")
    ch2 = r * (mu * mu / 2 - disc)
    return ChernChar(r, int(c1), ch2)


def char_product(x: ChernChar, y: ChernChar) -> ChernChar:
    """Componentwise product of characters (the tensor-product character)."""
    return ChernChar(
        x.r * y.r,
        x.r * y.c1 + y.r * x.c1,
        x.r * y.ch2 + x.c1 * y.c1 + y.r * x.ch2,
    )


def euler_char(x: ChernChar) -> Fraction:
    return x.euler


def euler_pair(x: ChernChar, y: ChernChar) -> Fraction:
    """chi(x, y), computed as the Euler characteristic of dual(x) * y.

    Agrees with the closed Riemann-Roch form
    rk(x) rk(y) (P(mu(y) - mu(x)) - disc(x) - disc(y)) when both ranks are
    positive, and covers rank-0 arguments uniformly.
    """
    return char_product(x.dual(), y).euler


def sym_pair(x: ChernChar, y: ChernChar) -> Fraction:
    """The symmetric pairing chi(x * y); used for all orthogonality computations."""
    return char_product(x, y).euler


@dataclass(frozen=True)
class DiscLattice:
    """All discriminants of integral characters with a fixed (rank, c1).

    The set is base + step*Z with step = 1/rank and base reduced into
    [0, step); elementary modifications move along it by one step.
    """

    base: Fraction
    step: Fraction

    def contains(self, x) -> bool:
        return (Fraction(x) - self.base) % self.step == 0

    def at_least(self, x) -> Fraction:
        """Smallest lattice element >= x."""
        k = math.ceil((Fraction(x) - self.base) / self.step)
        return self.base + k * self.step

    def above(self, x) -> Fraction:
        """Smallest lattice element > x."""
        v = self.at_least(x)
        return v + self.step if v == Fraction(x) else v


def disc_lattice(r: int, c1: int) -> DiscLattice:
    if r <= 0:
        raise NonPositiveRank(f"rank must be positive, got {r}")
    step = Fraction(1, r)
    base = (Fraction(c1 * c1, 2 * r) * (Fraction(1, r) - 1)) % step
    return DiscLattice(base, step)
