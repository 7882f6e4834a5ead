"""The two boundary rays of the ample cone and the assembled report.

Orthogonality is always taken in the symmetric pairing chi(x * y); as a
linear functional in y = (rank, c1, ch2) this is

    chi(x) * rank  +  (3 rk(x)/2 + c1(x)) * c1  +  rk(x) * ch2,

so both rays come out of exact 2x3 linear algebra.  One edge is the rank-0
character cutting the map to the Donaldson-Uhlenbeck-Yau compactification;
the other is the negative-rank character orthogonal to both the input and
its wall destabilizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernChar, sym_pair
from .errors import DegenerateRay, NonPositiveRank, NotSemistableInput
from .exceptional import is_exceptional_slope
from .extremal import Decomposition, StabKind, classify, curve_decomposition, require_positive_height
from .walls import GiesekerReport, gieseker_wall


def duy_ray(xi: ChernChar) -> ChernChar:
    """The rank-0 character (0, -r, 3r/2 + c1) orthogonal to xi.

    Spans the edge of the ample cone realized by the morphism to the
    Donaldson-Uhlenbeck-Yau compactification.
    """
    require_positive_height(xi)
    return ChernChar(0, -xi.r, Fraction(3 * xi.r, 2) + xi.c1)


def _pairing_row(x: ChernChar) -> tuple[Fraction, Fraction, Fraction]:
    return (x.euler, Fraction(3 * x.r, 2) + x.c1, Fraction(x.r))


def _primitive_character(rank: Fraction, c1: Fraction, ch2: Fraction) -> ChernChar:
    """Scale a rational ray to the primitive integral character with rank < 0."""
    two_ch2 = 2 * ch2
    scale = math.lcm(rank.denominator, c1.denominator, two_ch2.denominator)
    r_i, c_i, d_i = int(rank * scale), int(c1 * scale), int(two_ch2 * scale)
    content = math.gcd(r_i, math.gcd(c_i, d_i))
    r_i, c_i, d_i = r_i // content, c_i // content, d_i // content
    if (d_i - c_i * c_i) % 2 != 0:
        # primitive in the half-integer lattice but not an integral character
        r_i, c_i, d_i = 2 * r_i, 2 * c_i, 2 * d_i
    if r_i == 0:
        raise DegenerateRay("primary ray degenerated to rank zero")
    if r_i > 0:
        r_i, c_i, d_i = -r_i, -c_i, -d_i
    return ChernChar(r_i, c_i, Fraction(d_i, 2))


def primary_ray(xi: ChernChar, destabilizer: ChernChar | None = None) -> ChernChar:
    """The primitive negative-rank character orthogonal to xi and its
    wall destabilizer; the direction of the extremal nef divisor."""
    if destabilizer is None:
        destabilizer = gieseker_wall(xi).destabilizer
    u1, u2, u3 = _pairing_row(xi)
    v1, v2, v3 = _pairing_row(destabilizer)
    kernel = (u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1)
    if kernel == (0, 0, 0):
        raise DegenerateRay("orthogonality rows are proportional")
    return _primitive_character(*kernel)


def singular_locus_empty(xi: ChernChar) -> bool:
    """Whether the moduli space contains no singular (non-locally-free) sheaf:
    disc - threshold < 1/r and the slope is not exceptional."""
    if xi.r <= 0:
        raise NonPositiveRank("positive rank required")
    cls = classify(xi)
    if cls.kind in (StabKind.NOT_SEMISTABLE, StabKind.EXCEPTIONAL, StabKind.SEMI_EXCEPTIONAL):
        raise NotSemistableInput(
            f"{xi.invariant_str()}: the singular-locus criterion needs disc >= threshold"
        )
    gap = cls.disc - cls.threshold
    return gap < Fraction(1, xi.r) and not is_exceptional_slope(cls.mu)


def duy_edge(xi: ChernChar) -> bool:
    """Whether the rank-0 ray really is an edge, i.e. singular sheaves exist."""
    require_positive_height(xi)
    return not singular_locus_empty(xi)


@dataclass(frozen=True)
class AmpleReport:
    xi: ChernChar
    duy_ray: ChernChar
    primary_ray: ChernChar
    gieseker: GiesekerReport
    curve_witness: Decomposition
    curve_tag: str
    singular_locus_empty: bool
    duy_edge: bool
    moduli_dim: int


def moduli_dimension(xi: ChernChar) -> int:
    """r^2 (2 disc - 1) + 1; integral for every integral character."""
    dim = xi.r * xi.r * (2 * xi.disc - 1) + 1
    assert dim.denominator == 1
    return int(dim)


def ample_cone(xi: ChernChar) -> AmpleReport:
    """Assemble both rays, the wall report, the curve witness and the predicates."""
    require_positive_height(xi)
    gr = gieseker_wall(xi)
    witness, tag = curve_decomposition(xi)
    sing = singular_locus_empty(xi)
    return AmpleReport(
        xi=xi,
        duy_ray=duy_ray(xi),
        primary_ray=primary_ray(xi, gr.destabilizer),
        gieseker=gr,
        curve_witness=witness,
        curve_tag=tag,
        singular_locus_empty=sing,
        duy_edge=not sing,
        moduli_dim=moduli_dimension(xi),
    )
