"""Command-line front end: ``biserial-walls <command> --n N [options]``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Sequence

from biserial_walls import report
from biserial_walls.chambers import MAX_DESK_N, chamber_structure
from biserial_walls.checks import verify
from biserial_walls.representations import Indecomposable, enumerate_indecomposables, find_module, module_id
from biserial_walls.stability import CLOSED_FORM, ORACLE, module_cone, walls
from biserial_walls.strings import StringClass, star_classes

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_class(text: str, n: int) -> StringClass:
    """``a,b,eta`` for an interval class, ``i`` for S_i, ``cycle`` for the cycle class."""
    text = text.strip()
    try:
        if text.lower() == "cycle":
            c = StringClass.cycle(n)
        else:
            parts = [int(p) for p in text.split(",")]
            if len(parts) == 1:
                c = StringClass.trivial(parts[0])
            elif len(parts) == 3:
                c = StringClass.interval(*parts)
            else:
                raise ValueError("expected a,b,eta or a vertex")
    except ValueError as exc:
        raise UsageError(f"bad class {text!r}: {exc}") from None
    if c not in star_classes(n):
        raise UsageError(f"class {text!r} does not exist for n={n}")
    return c


def _modules(args: argparse.Namespace) -> list[Indecomposable]:
    if args.class_ is not None:
        return [find_module(args.n, module_id(parse_class(args.class_, args.n)))]
    if args.module is not None:
        try:
            return [find_module(args.n, args.module)]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return enumerate_indecomposables(args.n)


def _text_cone(record: dict[str, Any]) -> list[str]:
    lines = [f"{record['id']}  (dim {record['dim']})"]
    text = record["text"]
    lines.append("  equalities:   " + (", ".join(text["equalities"]) or "none"))
    lines.append("  inequalities: " + (", ".join(text["inequalities"]) or "none"))
    for key in ("rays", "lineality"):
        if key in record:
            vecs = ["(" + ", ".join(v) + ")" for v in record[key]]
            lines.append(f"  {key + ':':<13} " + (" ".join(vecs) or "none"))
    return lines


def cmd_strings(args: argparse.Namespace) -> tuple[int, Any, str]:
    records = [report.class_record(c, args.n) for c in star_classes(args.n)]
    rows = [[r["class"], r["word"], r["star_word"], " ".join(map(str, r["profile"]))] for r in records]
    return EXIT_OK, records, report.table(rows, ["class", "word", "star", "profile"])


def cmd_indecomposables(args: argparse.Namespace) -> tuple[int, Any, str]:
    records = [report.module_record(m, args.order) for m in enumerate_indecomposables(args.n)]
    rows = [[r["id"], r["kind"], " ".join(map(str, r["dim_vector"])), "yes" if r["thin"] else "no"] for r in records]
    return EXIT_OK, records, report.table(rows, ["id", "kind", "dim", "thin"])


def cmd_stability(args: argparse.Namespace) -> tuple[int, Any, str]:
    records = [
        report.cone_record(m.id, module_cone(m, args.n, args.method), args.order)
        for m in _modules(args)
    ]
    lines = [line for r in records for line in _text_cone(r)]
    return EXIT_OK, records, "\n".join(lines)


def cmd_walls(args: argparse.Namespace) -> tuple[int, Any, str]:
    records = [
        report.cone_record(ident, cone, args.order, rays=args.emit_rays)
        for ident, cone in walls(args.n, args.method)
    ]
    lines = [line for r in records for line in _text_cone(r)]
    return EXIT_OK, records, "\n".join(lines)


def cmd_chambers(args: argparse.Namespace) -> tuple[int, Any, str]:
    if args.n > MAX_DESK_N and not args.allow_large:
        raise UsageError(f"chambers is limited to n <= {MAX_DESK_N}; pass --allow-large to override")
    result = chamber_structure(args.n, strict=args.strict, allow_large=args.allow_large)
    record = report.chambers_record(result, detail=args.detail, emit_rays=args.emit_rays, order=args.order)
    lines = [f"n={record['n']} walls={record['walls']} regions={record['regions']} chambers={record['chambers']}"]
    for entry in record.get("composition", []):
        line = f"  chamber {entry['id']}: " + " ".join(entry["regions"])
        if "rays" in entry:
            line += "  rays " + " ".join("(" + ", ".join(v) + ")" for v in entry["rays"])
        lines.append(line)
    return EXIT_OK, record, "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> tuple[int, Any, str]:
    results = verify(args.n, fail_fast=not args.keep_going)
    passed = all(r.passed for r in results)
    record = {
        "n": args.n,
        "passed": passed,
        "checks": [
            {"name": r.name, "passed": r.passed, "seconds": f"{r.seconds:.3f}", "detail": r.detail}
            for r in results
        ],
    }
    return (EXIT_OK if passed else EXIT_CHECK_FAILED), record, "\n".join(r.line() for r in results)


COMMANDS = {
    "strings": (cmd_strings, "list *-classes of strings with canonical words and profiles"),
    "indecomposables": (cmd_indecomposables, "list the indecomposable catalogue with dimension vectors"),
    "stability": (cmd_stability, "stability cones (H- and V-form) of one or all modules"),
    "walls": (cmd_walls, "list the walls (codimension-one stability cones)"),
    "chambers": (cmd_chambers, "count chambers and show their region composition"),
    "verify": (cmd_verify, "run the acceptance checks for one n"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="B(n) has vertices 0..n (n >= 1)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--order", choices=report.ORDERS, default=report.ASCENDING, help="vector order")

    parser = argparse.ArgumentParser(prog="biserial-walls", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {name: sub.add_parser(name, parents=[common], help=text) for name, (_, text) in COMMANDS.items()}

    target = parsers["stability"].add_mutually_exclusive_group()
    target.add_argument("--class", dest="class_", metavar="CLASS", help="a,b,eta | vertex | cycle")
    target.add_argument("--module", help="module id such as S0, M(0,2,-1), M(b1a1), R(0)")
    for name in ("stability", "walls"):
        parsers[name].add_argument("--method", choices=(ORACLE, CLOSED_FORM), default=ORACLE)
    for name in ("walls", "chambers"):
        parsers[name].add_argument("--emit-rays", action="store_true", help="include ray data for plotting")
    chambers_parser = parsers["chambers"]
    chambers_parser.add_argument("--detail", action="store_true", help="list the regions in each chamber")
    chambers_parser.add_argument("--strict", action="store_true", help="also block merges on non-thin spaces")
    chambers_parser.add_argument("--allow-large", action="store_true", help=f"permit n > {MAX_DESK_N}")
    parsers["verify"].add_argument("--keep-going", action="store_true", help="do not stop at the first failure")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be >= 1")
    handler = COMMANDS[args.command][0]
    try:
        status, payload, text = handler(args)
    except UsageError as exc:
        print(f"biserial-walls: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.dumps(payload) if args.format == "json" else text)
    return status


if __name__ == "__main__":
    sys.exit(main())
