"""Command-line interface.

Every command is deterministic: fixed field order, canonical rational
rendering, decimals computed from exact values at the end.  Exit codes:
0 success, 2 parse/validation error, 3 table mismatch, 4 internal
assertion (unexpected positive chi, empty wall anomaly, nonempty exclusion
list, exhausted search budget).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .ample import ample_cone
from .chern import ChernChar, from_invariants
from .errors import (
    EmptyWallAnomaly,
    P2WallsError,
    SearchBudgetExceeded,
    UnexpectedPositiveChi,
)
from .exactmath import parse_rat, rat_str
from .extremal import classify, extremal_triple
from .reports import (
    ample_dict,
    char_dict,
    classification_dict,
    decomposition_dict,
    delta_dict,
    gieseker_dict,
    sweep_items,
)
from .svg import wall_diagram
from .tables import verify as verify_table
from .walls import DEFAULT_SEARCH_BUDGET, exclusion_search, gieseker_wall

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TABLE_MISMATCH = 3
EXIT_ASSERTION = 4


def parse_character(text: str) -> ChernChar:
    """Accept "r,c1,ch2" (ch2 a rational literal) or "r:mu:disc"."""
    from .errors import ParseError

    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ParseError(f"expected r:mu:disc, got {text!r}")
        r_s, mu_s, d_s = parts
        return from_invariants(_parse_int(r_s), parse_rat(mu_s), parse_rat(d_s))
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected r,c1,ch2 or r:mu:disc, got {text!r}")
    return ChernChar(_parse_int(parts[0]), _parse_int(parts[1]), parse_rat(parts[2]))


def _parse_int(text: str) -> int:
    from .errors import ParseError

    try:
        return int(text.strip())
    except ValueError as exc:
        raise ParseError(f"not an integer: {text!r}") from exc


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _emit_kv(pairs) -> None:
    for key, value in pairs:
        sys.stdout.write(f"{key}: {value}\n")


def _cmd_classify(args) -> int:
    xi = parse_character(args.character)
    cls = classify(xi)
    payload = {"character": char_dict(xi), "classification": classification_dict(cls, args.decimals)}
    if args.json:
        _emit_json(payload)
    else:
        _emit_kv(
            [
                ("character", xi.invariant_str()),
                ("kind", cls.kind.value),
                ("mu", rat_str(cls.mu)),
                ("disc", rat_str(cls.disc)),
                ("threshold", rat_str(cls.threshold)),
                ("height", rat_str(cls.disc - cls.threshold)),
            ]
        )
    return EXIT_OK


def _cmd_delta(args) -> int:
    mu = parse_rat(args.mu)
    payload = delta_dict(mu, args.decimals)
    if args.json:
        _emit_json(payload)
    else:
        host = payload["host"]
        _emit_kv(
            [
                ("mu", payload["mu"]),
                ("delta", payload["delta"]),
                ("host alpha", host["alpha"]),
                ("host rank", host["rank"]),
                ("host disc", host["disc"]),
                (
                    "host half width",
                    f"{host['half_width']['exact']} ~ {host['half_width']['decimal']}",
                ),
            ]
        )
    return EXIT_OK


def _cmd_extremal(args) -> int:
    xi = parse_character(args.character)
    dec = extremal_triple(xi)
    payload = decomposition_dict(dec)
    if args.json:
        _emit_json(payload)
    else:
        flags = payload["flags"]
        _emit_kv(
            [
                ("sub", dec.sub.invariant_str()),
                ("whole", dec.whole.invariant_str()),
                ("quot", str(dec.quot) + (f" = {dec.quot.invariant_str()}" if dec.quot.r > 0 else "")),
                ("chi(sub, quot)", payload["chi_sub_quot"]),
                ("flags", ", ".join(k for k, v in flags.items() if v is True)),
            ]
        )
    return EXIT_OK


def _cmd_wall(args) -> int:
    xi = parse_character(args.character)
    report = gieseker_wall(xi)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(wall_diagram(xi, report, interior=args.interior))
    _emit_json({"character": char_dict(xi), **gieseker_dict(report, args.decimals)})
    return EXIT_OK


def _cmd_exclude(args) -> int:
    xi = parse_character(args.character)
    report = gieseker_wall(xi)
    budget = args.max_candidates
    if budget is None:
        budget = int(os.environ.get("P2WALLS_SEARCH_BUDGET", DEFAULT_SEARCH_BUDGET))
    try:
        violations = exclusion_search(xi, report.wall, budget=budget)
    except SearchBudgetExceeded as exc:
        _emit_json(
            {
                "character": char_dict(xi),
                "wall": gieseker_dict(report, args.decimals)["wall"],
                "budget": exc.budget,
                "examined": exc.examined,
                "violations": [char_dict(v) for v in exc.partial],
                "exhausted": True,
            }
        )
        return EXIT_ASSERTION
    _emit_json(
        {
            "character": char_dict(xi),
            "wall": gieseker_dict(report, args.decimals)["wall"],
            "budget": budget,
            "violations": [char_dict(v) for v in violations],
            "exhausted": False,
        }
    )
    return EXIT_ASSERTION if violations else EXIT_OK


def _cmd_ample(args) -> int:
    xi = parse_character(args.character)
    report = ample_cone(xi)
    payload = ample_dict(report, args.decimals)
    if args.text:
        wall = payload["gieseker"]["wall"]
        _emit_kv(
            [
                ("character", xi.invariant_str()),
                ("duy ray", str(report.duy_ray)),
                ("primary ray", str(report.primary_ray)),
                ("destabilizer", report.gieseker.destabilizer.invariant_str()),
                ("wall center", wall["center"]),
                ("wall radius^2", wall["radius_sq"]),
                ("wall x_plus", f"{wall['x_plus']['exact']} ~ {wall['x_plus']['decimal']}"),
                ("certificate", report.gieseker.certificate),
                ("curve witness tag", report.curve_tag),
                ("singular locus empty", report.singular_locus_empty),
                ("duy edge", report.duy_edge),
                ("moduli dim", report.moduli_dim),
            ]
        )
    else:
        _emit_json(payload)
    return EXIT_OK


def _cmd_tables(args) -> int:
    report = verify_table(args.table)
    for line in report.lines():
        sys.stdout.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_TABLE_MISMATCH


def _parse_rank_range(text: str) -> range:
    from .errors import ParseError

    if ":" in text:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = _parse_int(lo_s), _parse_int(hi_s)
    else:
        lo = hi = _parse_int(text)
    if lo < 1 or hi < lo:
        raise ParseError(f"bad rank range {text!r}")
    return range(lo, hi + 1)


def _cmd_sweep(args) -> int:
    ranks = _parse_rank_range(args.rank)
    mu = parse_rat(args.mu) if args.mu is not None else None
    items = list(sweep_items(ranks, mu, args.steps, args.decimals))
    for item in items:
        sys.stdout.write(json.dumps(item) + "\n")
    if args.plot:
        from .plots import render_sweep_figure

        render_sweep_figure(items, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2walls",
        description="Exact stability walls and ample cones for moduli of sheaves on the plane.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, character=True):
        if character:
            p.add_argument("character", help='character as "r,c1,ch2" or "r:mu:disc"')
        p.add_argument("--decimals", type=int, default=4, help="decimal places for display")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("classify", help="stability classification of a character")
    add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("delta", help="threshold curve value and hosting exceptional slope")
    p.add_argument("mu", help="rational slope")
    p.add_argument("--decimals", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("extremal", help="the extremal decomposition of a character")
    add_common(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("wall", help="largest actual wall with certificate (JSON)")
    p.add_argument("character")
    p.add_argument("--decimals", type=int, default=4)
    p.add_argument("--svg", metavar="PATH", help="also write an SVG wall diagram")
    p.add_argument("--interior", type=int, default=3, help="nested interior walls in the SVG")
    p.set_defaults(func=_cmd_wall)

    p = sub.add_parser("exclude", help="brute-force oracle for larger walls (JSON)")
    p.add_argument("character")
    p.add_argument("--decimals", type=int, default=4)
    p.add_argument(
        "--max-candidates",
        type=int,
        default=None,
        help="candidate budget (default: P2WALLS_SEARCH_BUDGET or built-in)",
    )
    p.set_defaults(func=_cmd_exclude)

    p = sub.add_parser("ample", help="full ample-cone report")
    p.add_argument("character")
    p.add_argument("--decimals", type=int, default=4)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", default=True)
    group.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_ample)

    p = sub.add_parser("tables", help="recompute and diff the embedded reference tables")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--table", type=int, required=True, choices=[1, 2, 3])
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("sweep", help="newline-delimited ample reports over a range")
    p.add_argument("--rank", required=True, help='rank or range "lo:hi"')
    p.add_argument("--mu", default=None, help="restrict to one slope (rational)")
    p.add_argument("--steps", type=int, default=5, help="lattice steps per column")
    p.add_argument("--decimals", type=int, default=4)
    p.add_argument("--plot", metavar="PATH", help="write a matplotlib figure of the sweep")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnexpectedPositiveChi, EmptyWallAnomaly) as exc:
        sys.stderr.write(f"internal assertion: {exc}\n")
        return EXIT_ASSERTION
    except P2WallsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
