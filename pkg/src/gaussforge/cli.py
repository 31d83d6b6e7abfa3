"""Command-line front end.

Exit codes: 0 on success, 1 on validation errors, 2 on usage errors.
All error output goes to standard error with an ``error:`` prefix.
Numeric output uses bare integers, "p/q" rationals, and floats with 12
significant digits.  The environment variable GAUSS_FORGE_SEED overrides
the default seed of seeded operations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    LONG_KNOT,
    casson,
    count_knot_patterns,
    count_link_patterns,
    linking,
    mu123,
)
from .corpus import corpus_list, corpus_raw
from .errors import GaussForgeError, ValidationError
from .files import (
    dumps_diagram,
    load_diagram,
    load_polyline,
    loads_diagram,
    loads_polyline,
    save_diagram,
)
from .geometry import bounding_diameter, close_link, extract_diagram
from .oracles import casson_oracle, conway, gauss_linking_integral, magnus_mu123
from .pd import close_diagram, parse_pd
from .resolve import resolve_all, resolve_crossing_seeded


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _default_seed() -> int:
    raw = os.environ.get("GAUSS_FORGE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"GAUSS_FORGE_SEED must be an integer, got {raw!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(f"--pair wants 'i,j', got {text!r}")
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValidationError(f"--pair wants integers, got {text!r}")
    return i, j


def _cmd_compute(args) -> int:
    diagram = load_diagram(args.input)
    invariant = args.invariant
    if invariant is None:
        invariant = "casson" if diagram.kind == LONG_KNOT else "mu123"
    if invariant == "lk":
        if args.pair is None:
            raise ValidationError("--invariant lk needs --pair i,j")
        i, j = _parse_pair(args.pair)
        print(linking(diagram, i, j))
        return 0
    if invariant == "casson":
        if diagram.kind != LONG_KNOT:
            raise ValidationError("casson is defined for long_knot diagrams")
        value = casson(diagram)
        if args.counts:
            c = count_knot_patterns(diagram).counts
            print(
                f"X={c['X']} X1'={c['X1p']} X2'={c['X2p']} X3'={c['X3p']}"
                f" casson={value}"
            )
        else:
            print(value)
        return 0
    if diagram.kind == LONG_KNOT:
        raise ValidationError("mu123 is defined for long_link3 diagrams")
    value = mu123(diagram)
    if args.counts:
        c = count_link_patterns(diagram).counts
        print(
            f"X1={c['Xc1']} X2={c['Xc2']} X3={c['Xc3']}"
            f" X1'={c['Xc1p']} X2'={c['Xc2p']} X3'={c['Xc3p']}"
            f" mu123={value}"
        )
    else:
        print(value)
    return 0


def _cmd_resolve(args) -> int:
    diagram = load_diagram(args.input)
    seed = args.seed if args.seed is not None else _default_seed()
    if args.crossing is not None:
        out = resolve_crossing_seeded(diagram, args.crossing, seed)
    else:
        out = resolve_all(diagram, seed)
    save_diagram(out, args.output)
    return 0


def _cmd_ingest(args) -> int:
    link = load_polyline(args.polyline)
    snap = None
    if args.snap_eps is not None:
        snap = args.snap_eps * bounding_diameter(link.components)
    extraction = extract_diagram(link, snap_eps=snap)
    save_diagram(extraction.diagram, args.output)
    return 0


def _load_closed(path):
    """A ClosedDiagram from a PD text file or a long-diagram JSON file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return close_diagram(resolve_all(loads_diagram(text)))
    return parse_pd(text)


def _cmd_oracle(args) -> int:
    if args.which == "conway":
        print(conway(_load_closed(args.input)))
    elif args.which == "a2":
        print(casson_oracle(_load_closed(args.input)))
    elif args.which == "mu123":
        print(magnus_mu123(_load_closed(args.input)))
    else:  # gauss-lk
        if args.pair is None:
            raise ValidationError("oracle gauss-lk needs --pair i,j")
        i, j = _parse_pair(args.pair)
        link = load_polyline(args.input)
        polys = close_link(link)
        if not (0 <= i < len(polys) and 0 <= j < len(polys)) or i == j:
            raise ValidationError(f"bad component pair {i},{j}")
        print(_fmt_float(gauss_linking_integral(polys[i], polys[j])))
    return 0


def _cmd_corpus(args) -> int:
    if args.action == "list":
        for name in corpus_list():
            print(name)
        return 0
    if args.name is None:
        raise ValidationError("corpus emit needs an entry name")
    raw = corpus_raw(args.name)
    payload = raw["payload"]
    if raw["payload_type"] == "pd":
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_check(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}")
    if not isinstance(obj, dict):
        raise ValidationError("input must be a JSON object")
    if "kind" in obj:
        diagram = loads_diagram(text)
        print(
            f"ok: {diagram.kind} diagram,"
            f" {len(diagram.crossings)} crossings,"
            f" {len(diagram.chords)} chords"
        )
        return 0
    if "closure" in obj:
        link = loads_polyline(text)
        if link.closure == "long":
            extraction = extract_diagram(link)
            r = extraction.report
            print(f"ok: long polyline, {len(extraction.diagram.crossings)} crossings")
            print(f"min crossing angle: {_fmt_float(r.min_crossing_angle)}")
            print(f"min height gap: {_fmt_float(r.min_height_gap)}")
            print(f"min cluster separation: {_fmt_float(r.min_cluster_separation)}")
        else:
            print(f"ok: closed polyline, {len(link.components)} components")
        return 0
    raise ValidationError("input is neither a diagram nor a polyline file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussforge")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of a diagram file")
    p.add_argument("--input", required=True)
    p.add_argument("--invariant", choices=("casson", "mu123", "lk"))
    p.add_argument("--pair", help="component pair i,j for lk")
    p.add_argument("--counts", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("resolve", help="split multiple crossings")
    p.add_argument("--input", required=True)
    p.add_argument("--crossing", help="resolve only this crossing id")
    p.add_argument("--seed", type=int)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("ingest", help="extract a diagram from a polyline")
    p.add_argument("--polyline", required=True)
    p.add_argument(
        "--snap-eps",
        type=float,
        help="snap radius relative to the bounding-box diameter (default 1e-6)",
    )
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("oracle", help="independent ground-truth computations")
    p.add_argument("which", choices=("conway", "a2", "mu123", "gauss-lk"))
    p.add_argument("--input", required=True)
    p.add_argument("--pair", help="component pair i,j for gauss-lk")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("corpus", help="bundled examples")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("check", help="validate a diagram or polyline file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except GaussForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
