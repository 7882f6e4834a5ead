"""JSON-ready report assembly with canonical exact-rational encodings.

Every numeric field is rendered from exact values: rationals as "p/q"
strings, quadratic irrationals as an exact string plus a decimal computed
at the end.  Field order is fixed so identical inputs give byte-identical
serialized output.
"""

from __future__ import annotations

from fractions import Fraction

from .ample import AmpleReport, ample_cone
from .chern import ChernChar, from_invariants
from .errors import P2WallsError
from .exactmath import QuadVal, rat_str
from .exceptional import ExcSlope, containing_exceptional, delta
from .extremal import Classification, Decomposition, classify
from .tables import min_positive_height_disc, rank_slope_pairs
from .walls import (
    EmptyWall,
    GiesekerReport,
    SemicircleWall,
    VerticalWall,
    Wall,
)


def char_dict(x: ChernChar) -> dict:
    out = {"r": x.r, "c1": x.c1, "ch2": rat_str(x.ch2), "text": str(x)}
    if x.r > 0:
        out["mu"] = rat_str(x.mu)
        out["disc"] = rat_str(x.disc)
        out["invariant_text"] = x.invariant_str()
    return out


def quadval_dict(x: QuadVal, decimals: int) -> dict:
    return {"exact": str(x), "decimal": x.decimal(decimals)}


def wall_dict(w: Wall, decimals: int) -> dict:
    if isinstance(w, VerticalWall):
        return {"kind": w.kind, "s": rat_str(w.s)}
    if isinstance(w, SemicircleWall):
        return {
            "kind": w.kind,
            "center": rat_str(w.center),
            "radius_sq": rat_str(w.radius_sq),
            "x_plus": quadval_dict(w.x_plus, decimals),
            "x_minus": quadval_dict(w.x_minus, decimals),
        }
    assert isinstance(w, EmptyWall)
    out = {"kind": w.kind}
    if w.center is not None:
        out["center"] = rat_str(w.center)
        out["radius_sq"] = rat_str(w.radius_sq)
    return out


def decomposition_dict(dec: Decomposition) -> dict:
    return {
        "sub": char_dict(dec.sub),
        "whole": char_dict(dec.whole),
        "quot": char_dict(dec.quot),
        "chi_sub_quot": rat_str(dec.chi_sub_quot()),
        "flags": {
            "admissible": dec.admissible,
            "failed": list(dec.failed),
            "extremal": dec.extremal,
            "torsion": dec.torsion,
            "coprime": dec.coprime,
            "minimal": dec.minimal,
        },
    }


def classification_dict(cls: Classification, decimals: int) -> dict:
    return {
        "kind": cls.kind.value,
        "mu": rat_str(cls.mu),
        "disc": rat_str(cls.disc),
        "threshold": rat_str(cls.threshold),
        "height": rat_str(cls.disc - cls.threshold),
    }


def exc_slope_dict(e: ExcSlope, decimals: int) -> dict:
    return {
        "alpha": rat_str(e.alpha),
        "rank": e.rank,
        "disc": rat_str(e.disc),
        "half_width": quadval_dict(e.half_width, decimals),
    }


def delta_dict(mu, decimals: int) -> dict:
    mu = Fraction(mu)
    return {
        "mu": rat_str(mu),
        "delta": rat_str(delta(mu)),
        "host": exc_slope_dict(containing_exceptional(mu), decimals),
    }


def gieseker_dict(report: GiesekerReport, decimals: int) -> dict:
    return {
        "wall": wall_dict(report.wall, decimals),
        "destabilizer": char_dict(report.destabilizer),
        "decomposition": decomposition_dict(report.decomposition),
        "certificate": report.certificate,
        "checks": {
            "quot_stable": report.checks.quot_stable,
            "hom_vanishing": report.checks.hom_vanishing,
            "radius_bound": report.checks.radius_bound,
            "farey_gap": report.checks.farey_gap,
        },
    }


def ample_dict(report: AmpleReport, decimals: int) -> dict:
    return {
        "character": char_dict(report.xi),
        "classification": classification_dict(classify(report.xi), decimals),
        "duy_ray": char_dict(report.duy_ray),
        "primary_ray": char_dict(report.primary_ray),
        "gieseker": gieseker_dict(report.gieseker, decimals),
        "curve_witness": decomposition_dict(report.curve_witness),
        "curve_tag": report.curve_tag,
        "singular_locus_empty": report.singular_locus_empty,
        "duy_edge": report.duy_edge,
        "moduli_dim": report.moduli_dim,
    }


def sweep_items(ranks, mu_filter, steps: int, decimals: int = 4):
    """Ample reports for `steps` lattice discriminants per (rank, slope) column,
    starting at the minimal positive-height value.  Per-item errors are
    embedded in the stream, never aborting it."""
    for r in ranks:
        if mu_filter is not None:
            slopes = [Fraction(mu_filter)]
        else:
            slopes = sorted({mu for rr, mu in rank_slope_pairs(r) if rr == r})
        for mu in slopes:
            try:
                d0 = min_positive_height_disc(r, mu)
            except P2WallsError as exc:
                yield {
                    "input": {"r": r, "mu": rat_str(mu)},
                    "error": {"type": type(exc).__name__, "message": str(exc)},
                }
                continue
            for k in range(steps):
                d = d0 + Fraction(k, r)
                item_input = {"r": r, "mu": rat_str(mu), "disc": rat_str(d)}
                try:
                    xi = from_invariants(r, mu, d)
                    yield {"input": item_input, "report": ample_dict(ample_cone(xi), decimals)}
                except P2WallsError as exc:
                    yield {
                        "input": item_input,
                        "error": {"type": type(exc).__name__, "message": str(exc)},
                    }
