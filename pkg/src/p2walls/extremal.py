"""Stability classification and extremal/minimal decompositions of characters.

A decomposition splits a positive-rank character ``whole`` as ``sub + quot``.
Admissibility is the numeric conditions

  D1  sub semistable          D2  quot stable (rank 0: c1 > 0)
  D3  0 < rk(sub) <= rk(whole)
  D4  mu(sub) < mu(whole)     D5  rank quot > 0 implies mu(quot) - mu(sub) < 3

and the extremal decomposition is pinned down by slope-closeness (sub's
slope is the Farey predecessor of the whole's at order rk(whole)),
discriminant-minimality and rank-minimality of sub.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chern import ChernChar, disc_lattice, euler_pair, from_invariants, hilbert_poly
from .errors import (
    AdmissibilityFailed,
    HeightZeroInput,
    NoAdmissible,
    NonPositiveRank,
    NoStableCharacter,
    NotSemistableInput,
    UnexpectedPositiveChi,
)
from .exactmath import farey_pred
from .exceptional import containing_exceptional, delta

MINIMAL_SCAN_CEILING = 128


class StabKind(enum.Enum):
    NOT_SEMISTABLE = "not_semistable"
    EXCEPTIONAL = "exceptional"
    SEMI_EXCEPTIONAL = "semi_exceptional"
    HEIGHT_ZERO = "height_zero"
    POSITIVE_HEIGHT = "positive_height"


@dataclass(frozen=True)
class Classification:
    kind: StabKind
    mu: Fraction
    disc: Fraction
    threshold: Fraction  # value of the stability curve at mu

    @property
    def is_stable(self) -> bool:
        """A stable sheaf with these invariants exists."""
        return self.kind in (
            StabKind.EXCEPTIONAL,
            StabKind.HEIGHT_ZERO,
            StabKind.POSITIVE_HEIGHT,
        )

    @property
    def is_semistable(self) -> bool:
        return self.is_stable or self.kind is StabKind.SEMI_EXCEPTIONAL


def classify(xi: ChernChar) -> Classification:
    """Classify a positive-rank integral character against the threshold curve."""
    if xi.r <= 0:
        raise NonPositiveRank(f"classification needs positive rank, got {xi.r}")
    mu, disc = xi.invariants()
    threshold = delta(mu)
    home = containing_exceptional(mu)
    if home.alpha == mu and disc == home.disc:
        kind = StabKind.EXCEPTIONAL if xi.r == home.rank else StabKind.SEMI_EXCEPTIONAL
    elif disc > threshold:
        kind = StabKind.POSITIVE_HEIGHT
    elif disc == threshold:
        kind = StabKind.HEIGHT_ZERO
    else:
        kind = StabKind.NOT_SEMISTABLE
    return Classification(kind, mu, disc, threshold)


def require_positive_height(xi: ChernChar) -> Classification:
    """Gate used by the wall/ray operations; maps the other kinds to errors."""
    cls = classify(xi)
    if cls.kind is StabKind.POSITIVE_HEIGHT:
        return cls
    if cls.kind is StabKind.NOT_SEMISTABLE:
        raise NotSemistableInput(f"{xi.invariant_str()} lies below the threshold curve")
    raise HeightZeroInput(
        f"{xi.invariant_str()} has Picard rank one; no further cone computation"
    )


def min_stable_disc(mu, rmax: int) -> tuple[Fraction, int]:
    """Smallest discriminant of a stable character of slope mu and rank <= rmax,
    together with the minimal rank realizing it.

    An exceptional slope is realized by its exceptional bundle (disc < 1/2
    beats every on-or-above-curve candidate); otherwise the candidates are
    the first lattice points at or above the threshold for each admissible
    rank multiple.
    """
    mu = Fraction(mu)
    if mu.denominator > rmax:
        raise NoStableCharacter(f"no rank <= {rmax} admits slope {mu}")
    home = containing_exceptional(mu)
    if home.alpha == mu:
        return home.disc, home.rank
    threshold = delta(mu)
    den = mu.denominator
    best = None
    for rank in range(den, rmax + 1, den):
        cand = disc_lattice(rank, int(mu * rank)).at_least(threshold)
        if best is None or cand < best[0]:
            best = (cand, rank)
    return best


@dataclass(frozen=True)
class Decomposition:
    sub: ChernChar
    whole: ChernChar
    quot: ChernChar
    admissible: bool
    failed: tuple[str, ...]
    extremal: bool
    torsion: bool
    coprime: bool
    minimal: bool

    def chi_sub_quot(self) -> Fraction:
        return euler_pair(self.sub, self.quot)


def _admissibility_failures(sub: ChernChar, whole: ChernChar, quot: ChernChar) -> tuple[str, ...]:
    failed = []
    if not classify(sub).is_semistable:
        failed.append("D1")
    if quot.r > 0:
        if not classify(quot).is_stable:
            failed.append("D2")
    elif quot.r == 0:
        if quot.c1 <= 0:
            failed.append("D2")
    else:
        failed.append("D2")
    if not 0 < sub.r <= whole.r:
        failed.append("D3")
    if not sub.mu < whole.mu:
        failed.append("D4")
    if quot.r > 0 and quot.mu - sub.mu >= 3:
        failed.append("D5")
    return tuple(failed)


def _is_extremal(sub: ChernChar, whole: ChernChar) -> bool:
    if not sub.mu < whole.mu:
        return False
    if sub.mu < farey_pred(whole.mu, whole.r):
        return False  # a denominator <= r rational separates the slopes
    d, r = min_stable_disc(sub.mu, whole.r)
    return sub.disc == d and sub.r == r


def build_decomposition(sub: ChernChar, whole: ChernChar) -> Decomposition:
    """Assemble a decomposition of ``whole`` with all flags computed honestly."""
    quot = whole - sub
    failed = _admissibility_failures(sub, whole, quot)
    try:
        minimal = whole.disc == _minimal_whole_disc(whole.r, whole.mu)
    except (NoAdmissible, NoStableCharacter):
        minimal = False
    return Decomposition(
        sub=sub,
        whole=whole,
        quot=quot,
        admissible=not failed,
        failed=failed,
        extremal=not failed and _is_extremal(sub, whole),
        torsion=quot.r == 0,
        coprime=math.gcd(whole.r, whole.c1) == 1,
        minimal=minimal,
    )


def _extremal_sub(r: int, mu: Fraction) -> ChernChar:
    """The slope/rank-determined destabilizer; depends only on (r, mu)."""
    mu_sub = farey_pred(mu, r)
    disc_sub, rank_sub = min_stable_disc(mu_sub, r)
    return from_invariants(rank_sub, mu_sub, disc_sub)


def extremal_triple(xi: ChernChar) -> Decomposition:
    """The unique extremal decomposition of xi; twist-equivariant.

    Raises AdmissibilityFailed (listing the violated D-conditions) in the
    regimes where none exists; this cannot happen for rank <= 6 or large
    discriminant.
    """
    if xi.r <= 0:
        raise NonPositiveRank("extremal decomposition needs positive rank")
    dec = build_decomposition(_extremal_sub(xi.r, xi.mu), xi)
    if not dec.admissible:
        raise AdmissibilityFailed(dec.failed, f"no admissible extremal triple for {xi.invariant_str()}")
    return dec


def _stable_whole_candidates(r: int, mu: Fraction):
    """Discriminants of stable characters with invariants (r, mu), ascending."""
    home = containing_exceptional(mu)
    if home.alpha == mu and home.rank == r:
        yield home.disc
    lattice = disc_lattice(r, int(mu * r))
    d = lattice.at_least(delta(mu))
    while True:
        yield d
        d += lattice.step


@lru_cache(maxsize=None)
def _minimal_whole_disc(r: int, mu: Fraction) -> Fraction:
    """Smallest stable discriminant at (r, mu) whose extremal split is admissible.

    Admissibility is monotone upward in the discriminant (only the stability
    of quot varies, and it improves), so an ascending scan finds the minimum.
    """
    sub = _extremal_sub(r, mu)
    gen = _stable_whole_candidates(r, mu)
    for _ in range(MINIMAL_SCAN_CEILING):
        d = next(gen)
        whole = from_invariants(r, mu, d)
        if not _admissibility_failures(sub, whole, whole - sub):
            return d
    raise NoAdmissible(f"no admissible decomposition at ({r}, {mu}) within the scan ceiling")


def minimal_triple(r: int, mu) -> Decomposition:
    """The admissible extremal decomposition minimal with respect to elementary
    modification order at the given rank and slope."""
    mu = Fraction(mu)
    return extremal_triple(from_invariants(r, mu, _minimal_whole_disc(r, mu)))


def chi_chain(r: int, mu) -> tuple[Decomposition, int]:
    """Elementary-modify the minimal triple until chi(sub, quot) <= 0 first holds.

    chi drops by exactly rk(sub) >= 1 per step, so the chain is finite.
    """
    dec = minimal_triple(r, mu)
    while True:
        chi = dec.chi_sub_quot()
        if chi <= 0:
            assert chi.denominator == 1
            return dec, int(chi)
        dec = extremal_triple(dec.whole.elem_mod(1))


SPORADIC_TAG = "sporadic2"
SPECIAL_TAG = "special5"
STANDARD_TAG = "standard"

_SPECIAL_BASE = (6, Fraction(1, 3), Fraction(13, 18))


def _twist_to_unit(xi: ChernChar) -> tuple[int, Fraction]:
    """Twist amount n and normalized slope with 0 < mu - n <= 1."""
    n = math.ceil(xi.mu) - 1
    return n, xi.mu - n


def is_special_character(xi: ChernChar) -> bool:
    """Twists of the rank-6 character whose extremal wall is empty."""
    if xi.r != _SPECIAL_BASE[0]:
        return False
    _, mu0 = _twist_to_unit(xi)
    return mu0 == _SPECIAL_BASE[1] and xi.disc == _SPECIAL_BASE[2]


def _sporadic_rank(xi: ChernChar):
    """The rank r if xi is a twist of (r, 1/r, P(-1/r) + 1/r) with 2 <= r <= 6."""
    if not 2 <= xi.r <= 6:
        return None
    _, mu0 = _twist_to_unit(xi)
    if mu0 != Fraction(1, xi.r):
        return None
    if xi.disc != hilbert_poly(-mu0) + mu0:
        return None
    return xi.r


def curve_decomposition(xi: ChernChar) -> tuple[Decomposition, str]:
    """The decomposition whose extension curves witness the primary edge.

    Twists of the special rank-6 character route through the rank-5
    structure-sheaf multiple; the five sporadic characters (where
    chi(sub, quot) > 0) route through the rank-2 multiple, which leaves the
    wall unchanged.  Everything else keeps its extremal triple.
    """
    require_positive_height(xi)
    shift, _ = _twist_to_unit(xi)
    if is_special_character(xi):
        sub = ChernChar(5, 0, 0).twist(shift)
        return build_decomposition(sub, xi), SPECIAL_TAG
    dec = extremal_triple(xi)
    if dec.chi_sub_quot() > 0:
        if _sporadic_rank(xi) is None:
            raise UnexpectedPositiveChi(
                f"chi(sub, quot) > 0 for {xi.invariant_str()} outside the sporadic list"
            )
        sub = ChernChar(2, 0, 0).twist(shift)
        return build_decomposition(sub, xi), SPORADIC_TAG
    return dec, STANDARD_TAG
