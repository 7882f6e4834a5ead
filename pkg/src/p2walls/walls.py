"""Potential stability walls, the largest actual wall, and the exclusion oracle.

In the (s, t) half-plane the locus where two characters have equal
central-charge slope is a vertical line (equal Mumford slopes) or a
semicircle with rational center and rational squared radius:

    center = (mu1 + mu2)/2 - (disc1 - disc2)/(mu1 - mu2)
    radius^2 = (center - mu1)^2 - 2*disc1

Walls store radius^2, never the radius; the endpoints center +- sqrt(radius^2)
are QuadVals.  A nonpositive radius^2 is a first-class Empty wall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .chern import ChernChar, disc_lattice, from_invariants
from .errors import (
    DependentCharacters,
    EmptyWallAnomaly,
    NoRoot,
    SearchBudgetExceeded,
)
from .exactmath import QuadVal, farey_pred, quad_cmp
from .extremal import (
    Decomposition,
    _extremal_sub,
    classify,
    containing_exceptional,
    curve_decomposition,
    delta,
    extremal_triple,
    is_special_character,
    require_positive_height,
)

DEFAULT_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class VerticalWall:
    s: Fraction

    kind = "vertical"

    def __str__(self) -> str:
        return f"vertical wall s = {self.s}"


@dataclass(frozen=True)
class SemicircleWall:
    center: Fraction
    radius_sq: Fraction

    kind = "semicircle"

    @property
    def x_plus(self) -> QuadVal:
        return QuadVal(self.center, self.radius_sq)

    @property
    def x_minus(self) -> QuadVal:
        return QuadVal(self.center, self.radius_sq, sign=-1)

    def __str__(self) -> str:
        return f"semicircle center {self.center}, radius^2 {self.radius_sq}"


@dataclass(frozen=True)
class EmptyWall:
    center: Optional[Fraction] = None
    radius_sq: Optional[Fraction] = None

    kind = "empty"

    def __str__(self) -> str:
        return "empty wall"


Wall = Union[VerticalWall, SemicircleWall, EmptyWall]


def _dependent(a: ChernChar, b: ChernChar) -> bool:
    return (
        a.r * b.c1 == b.r * a.c1
        and a.r * b.ch2 == b.r * a.ch2
        and a.c1 * b.ch2 == b.c1 * a.ch2
    )


def _slope_disc(x: ChernChar) -> tuple[Fraction, Fraction]:
    mu = Fraction(x.c1, x.r)
    return mu, mu * mu / 2 - x.ch2 / x.r


def potential_wall(a: ChernChar, b: ChernChar) -> Wall:
    """The wall where the two characters have equal central-charge slope.

    A rank-0 argument is first replaced by its sum with the other (both span
    the same wall plane).  Two rank-0 characters have equal (infinite) slope
    and span the empty set.
    """
    if _dependent(a, b):
        raise DependentCharacters(f"{a} and {b} are proportional")
    if a.r == 0 and b.r == 0:
        return EmptyWall()
    if a.r == 0:
        a = a + b
    if b.r == 0:
        b = b + a
    mu1, d1 = _slope_disc(a)
    mu2, d2 = _slope_disc(b)
    if mu1 == mu2:
        return VerticalWall(mu1)
    center = (mu1 + mu2) / 2 - (d1 - d2) / (mu1 - mu2)
    radius_sq = (center - mu1) ** 2 - 2 * d1
    if radius_sq <= 0:
        return EmptyWall(center, radius_sq)
    return SemicircleWall(center, radius_sq)


def on_wall(xi: ChernChar, zeta: ChernChar, s, t_sq) -> bool:
    """Whether the point (s, t) with t^2 = t_sq lies on the wall of the pair.

    Decided by the t-free cross-multiplied slope equality
    ReZ(xi) * (ImZ(zeta)/t) = ReZ(zeta) * (ImZ(xi)/t).
    """
    s, t_sq = Fraction(s), Fraction(t_sq)
    if t_sq <= 0:
        raise ValueError("t_sq must be positive")

    def re(x: ChernChar) -> Fraction:
        return -(x.ch2 - s * x.c1 + (s * s - t_sq) * Fraction(x.r, 2))

    def im_over_t(x: ChernChar) -> Fraction:
        return x.c1 - s * x.r

    return re(xi) * im_over_t(zeta) == re(zeta) * im_over_t(xi)


def rank_bound_radius_sq(xi: ChernChar) -> Fraction:
    """r^2 disc / (2(r+1)): destabilizers of higher rank cannot beat this radius^2."""
    if xi.r <= 0:
        raise ValueError("positive rank required")
    return Fraction(xi.r * xi.r, 2 * (xi.r + 1)) * xi.disc


def exclusion_bound_root(r: int, mu) -> QuadVal:
    """Larger root in the discriminant of radius^2 = r^2 disc / (2(r+1)).

    The destabilizer is slope/rank-determined, so the equation depends only
    on (r, mu); above the root, higher-rank destabilizers are excluded.
    """
    mu = Fraction(mu)
    sub = _extremal_sub(r, mu)
    mu_s, d_s = sub.mu, sub.disc
    # center(D) = A + B*D, radius_sq(D) = (center - mu_s)^2 - 2 d_s
    b_lin = 1 / (mu_s - mu)
    a_lin = (mu_s + mu) / 2 - d_s / (mu_s - mu)
    c_lin = a_lin - mu_s
    qa = b_lin * b_lin
    qb = 2 * b_lin * c_lin - Fraction(r * r, 2 * (r + 1))
    qc = c_lin * c_lin - 2 * d_s
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        raise NoRoot(f"exclusion quadratic at ({r}, {mu}) has no real root")
    return QuadVal(-qb / (2 * qa), disc / (4 * qa * qa))


@dataclass(frozen=True)
class WallChecks:
    """Itemized explicit-bound checklist for the upper-bound certificate.

    Item 2 (generic Hom vanishing) is not decidable from the invariants and
    is always reported as assumed.
    """

    quot_stable: bool
    hom_vanishing: str
    radius_bound: bool
    farey_gap: bool

    def all_pass(self) -> bool:
        return self.quot_stable and self.radius_bound and self.farey_gap


CERT_SMALL_RANK = "proved_small_rank"
CERT_SPECIAL = "proved_special"
CERT_UPPER_BOUND = "upper_bound_plus_hom_assumption"
CERT_HEURISTIC = "heuristic"


@dataclass(frozen=True)
class GiesekerReport:
    wall: SemicircleWall
    destabilizer: ChernChar
    decomposition: Decomposition
    certificate: str
    checks: WallChecks


def gieseker_wall(xi: ChernChar) -> GiesekerReport:
    """The largest actual wall, its destabilizer, and the certificate level.

    Twists of the special rank-6 character use the rank-5 structure-sheaf
    multiple (their extremal wall is empty); everything else uses the
    extremal destabilizer.  An empty wall anywhere else is an anomaly, not
    an answer.
    """
    require_positive_height(xi)
    special = is_special_character(xi)
    if special:
        dec, _ = curve_decomposition(xi)
    else:
        dec = extremal_triple(xi)
    wall = potential_wall(dec.sub, xi)
    if not isinstance(wall, SemicircleWall):
        raise EmptyWallAnomaly(
            f"wall of ({dec.sub.invariant_str()}, {xi.invariant_str()}) is {wall.kind}"
        )
    quot = dec.quot
    quot_stable = classify(quot).is_stable if quot.r > 0 else quot.c1 > 0
    checks = WallChecks(
        quot_stable=quot_stable,
        hom_vanishing="assumed",
        radius_bound=wall.radius_sq >= rank_bound_radius_sq(xi),
        farey_gap=quad_cmp(farey_pred(dec.sub.mu, xi.r), wall.x_plus) < 0,
    )
    if special:
        certificate = CERT_SPECIAL
    elif xi.r <= 6:
        certificate = CERT_SMALL_RANK
    elif math.gcd(xi.r, xi.c1) == 1 and checks.all_pass():
        certificate = CERT_UPPER_BOUND
    else:
        certificate = CERT_HEURISTIC
    return GiesekerReport(
        wall=wall,
        destabilizer=dec.sub,
        decomposition=dec,
        certificate=certificate,
        checks=checks,
    )


def _semistable_disc_candidates(rank: int, c1: int):
    """Discriminants of semistable characters at (rank, c1), ascending.

    Includes the (semi)exceptional value below the curve when the slope is
    exceptional, then the lattice points at or above the curve.
    """
    mu = Fraction(c1, rank)
    home = containing_exceptional(mu)
    if home.alpha == mu:
        yield home.disc
    lattice = disc_lattice(rank, c1)
    d = lattice.at_least(delta(mu))
    while True:
        yield d
        d += lattice.step


def exclusion_search(
    xi: ChernChar,
    wall: SemicircleWall,
    disc_floor=Fraction(0),
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> list[ChernChar]:
    """Brute-force oracle: every semistable lattice character whose slope lies
    strictly between the wall's right endpoint and mu(xi), of rank between 1
    and rk(xi), whose potential wall with xi is strictly larger.

    The returned violation list is expected to be empty; the per-(rank, c1)
    discriminant scan is finite because the candidate wall shrinks as the
    discriminant grows.  Results are canonically ordered.
    """
    if not isinstance(wall, SemicircleWall):
        raise ValueError("exclusion search needs a nonempty semicircular wall")
    disc_floor = Fraction(disc_floor)
    mu, disc = xi.invariants()
    target = wall.radius_sq
    xplus = wall.x_plus
    violations: list[ChernChar] = []
    examined = 0
    for rank in range(1, xi.r + 1):
        c1 = math.floor(xplus * rank)
        if quad_cmp(Fraction(c1, rank), xplus) <= 0:
            c1 += 1
        while Fraction(c1, rank) < mu:
            for d in _semistable_disc_candidates(rank, c1):
                if d < disc_floor:
                    continue
                examined += 1
                if examined > budget:
                    raise SearchBudgetExceeded(violations, examined, budget)
                cand = from_invariants(rank, Fraction(c1, rank), d)
                w = potential_wall(cand, xi)
                # only the family left of the vertical wall destabilizes; its
                # radius^2 decreases as the candidate discriminant grows
                if isinstance(w, SemicircleWall) and w.center < mu and w.radius_sq > target:
                    violations.append(cand)
                else:
                    break
            c1 += 1
    violations.sort(key=lambda c: (c.r, c.c1, c.ch2))
    return violations
