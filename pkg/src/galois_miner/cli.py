"""Command-line interface: ``galois-miner <command> INPUT [options]``.

INPUT is either a long-format trait CSV (scaled on the fly with ``--method``)
or a Burmeister ``.cxt`` file. Exit status: 0 success, 1 input or usage
error, 2 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .context import BinaryContext, popcount
from .errors import ConfigError, GaloisMinerError, InputError, ResourceError
from .histogram import enumerate_histogram_concepts
from .implications import association_rules, dg_basis, render_implication, render_rule
from .io import (
    build_document,
    export_dot,
    export_json,
    ingest_csv,
    read_burmeister,
    write_burmeister,
)
from .lattice import build_lattice, level_count, max_concepts_default
from .scaling import disjunctive_scale, get_grouping, group_affinities, pattern_scale


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid fraction {text!r}, expected P/Q") from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("input", help="trait CSV or Burmeister .cxt file")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.add_argument("--method", choices=("disjunctive", "pattern"), default="disjunctive",
                   help="scaling applied to CSV input (default: disjunctive)")
    p.add_argument("--group", metavar="GROUPING",
                   help="affinity grouping: presence, lowhigh or name=0:0,1:1,...")
    p.add_argument("--full-columns", action="store_true",
                   help="disjunctive scaling emits every (modality, affinity) column")
    p.add_argument("--max-affinity", type=int, default=3)
    p.add_argument("--strict", action="store_true", help="missing CSV cells are errors")
    p.add_argument("--max-concepts", type=int, default=None,
                   help="abort enumeration past N concepts (default 1000000 or "
                        "$GALOIS_MINER_MAX_CONCEPTS)")
    return p


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galois-miner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()

    sub.add_parser("scale", parents=[common], help="write the scaled Burmeister context")

    p = sub.add_parser("lattice", parents=[common], help="concept and level counts")
    p.add_argument("--concepts", action="store_true", help="list every concept")

    sub.add_parser("implications", parents=[common], help="Duquenne-Guigues basis")

    p = sub.add_parser("rules", parents=[common], help="association rules")
    p.add_argument("--min-support", type=int, default=0)
    p.add_argument("--min-confidence", type=_fraction, default=Fraction(1))

    p = sub.add_parser("hist", parents=[common], help="histogram concepts (CSV input)")
    p.add_argument("--mode", choices=("union", "intersection"), required=True)

    p = sub.add_parser("export", parents=[common], help="DOT or JSON export")
    p.add_argument("--format", choices=("dot", "json"), required=True)
    p.add_argument("--rules", action="store_true", help="JSON: include association rules")
    p.add_argument("--min-support", type=int, default=0)
    p.add_argument("--min-confidence", type=_fraction, default=Fraction(1))
    p.add_argument("--hist-mode", choices=("union", "intersection"),
                   help="JSON: include histogram concepts (CSV input)")
    return parser


def _is_cxt(path: str) -> bool:
    return Path(path).suffix.lower() == ".cxt"


def _load_mvc(args):
    if _is_cxt(args.input):
        raise InputError("this command needs trait CSV input, not a .cxt context")
    mvc = ingest_csv(args.input, max_affinity=args.max_affinity, strict=args.strict)
    if args.group:
        mvc = group_affinities(mvc, get_grouping(args.group, mvc.max_affinity))
    return mvc


def _load_context(args) -> tuple[BinaryContext, object]:
    if _is_cxt(args.input):
        return read_burmeister(Path(args.input).read_text(encoding="utf-8")), None
    mvc = _load_mvc(args)
    if args.method == "pattern":
        return pattern_scale(mvc), mvc
    return disjunctive_scale(mvc, full_columns=args.full_columns), mvc


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" + ("" if n == 1 else "s")


def _run(args) -> str:
    limit = args.max_concepts if args.max_concepts is not None else max_concepts_default()

    if args.command == "hist":
        mvc = _load_mvc(args)
        concepts = enumerate_histogram_concepts(mvc, args.mode, max_concepts=limit)
        lines = [_plural(len(concepts), f"{args.mode} concept")]
        lines += [f"{h.intent}\t{', '.join(h.extent) or '-'}" for h in concepts]
        return "\n".join(lines) + "\n"

    ctx, mvc = _load_context(args)

    if args.command == "scale":
        return write_burmeister(ctx)

    if args.command == "lattice":
        lat = build_lattice(ctx, max_concepts=limit)
        lines = [_plural(len(lat), "concept"), _plural(level_count(lat), "level")]
        if args.concepts:
            for c in lat.concepts:
                lines.append(
                    f"({', '.join(c.intent)}) ({', '.join(c.extent)}) "
                    f"support {popcount(c.extent_mask)}"
                )
        return "\n".join(lines) + "\n"

    if args.command == "implications":
        basis = dg_basis(ctx, max_concepts=limit)
        lines = [_plural(len(basis), "implication")]
        lines += [render_implication(i) for i in basis]
        return "\n".join(lines) + "\n"

    if args.command == "rules":
        lat = build_lattice(ctx, max_concepts=limit)
        rules = association_rules(ctx, args.min_support, args.min_confidence, lattice=lat)
        lines = [_plural(len(rules), "rule")] + [render_rule(r) for r in rules]
        return "\n".join(lines) + "\n"

    if args.command == "export":
        lat = build_lattice(ctx, max_concepts=limit)
        if args.format == "dot":
            return export_dot(lat, ctx)
        basis = dg_basis(ctx, max_concepts=limit)
        rules = None
        if args.rules:
            rules = association_rules(
                ctx, args.min_support, args.min_confidence, lattice=lat, basis=basis
            )
        hist = None
        if args.hist_mode:
            if mvc is None:
                raise InputError("--hist-mode needs trait CSV input")
            hist = enumerate_histogram_concepts(mvc, args.hist_mode, max_concepts=limit)
        doc = build_document(ctx, lat, basis, rules, hist, mvc=mvc)
        return export_json(doc)

    raise ConfigError(f"unknown command {args.command!r}")


def run_cli(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        text = _run(args)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except ResourceError as exc:
        print(f"galois-miner: {exc}", file=sys.stderr)
        return 2
    except (GaloisMinerError, OSError) as exc:
        print(f"galois-miner: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
