"""Command-line interface: ``polybetti <command> ...``.

Exit status is 0 on success, 1 when the input fails validation and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .catalog import (
    CatalogEntry,
    classify,
    emit_planar_code,
    load_table2,
    read_polytopes,
    table2_row,
)
from .enumeration import enumerate_triangulations, filter_irreducible
from .hochster import bigraded_betti
from .koszul import tor_betti_via_koszul
from .polytope import DualTriangulation, PolytopeError, four_belts, three_belts
from .torring import ReducibleError, annihilator_dim
from .verify import verify_paper


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("input", nargs="?", help="polytope file")
    src.add_argument("--table2-row", type=int, metavar="K", help="row K of the 11-facet table")
    p.add_argument("--format", choices=("rows", "planar", "json"), default="rows")


def _inputs(args: argparse.Namespace) -> list[tuple[str, DualTriangulation]]:
    if args.table2_row is not None:
        return [(f"table2-row-{args.table2_row}", table2_row(args.table2_row))]
    polys = read_polytopes(args.input, args.format)
    return [(f"{args.input}#{k + 1}", t) for k, t in enumerate(polys)]


def _write(text: str) -> None:
    sys.stdout.write(text)


def cmd_betti(args: argparse.Namespace) -> int:
    items = _inputs(args)
    for name, t in items:
        table = tor_betti_via_koszul(t) if args.koszul else bigraded_betti(t)
        if len(items) > 1:
            _write(f"# {name}\n")
        _write(table.to_csv())
    return 0


def cmd_belts(args: argparse.Namespace) -> int:
    items = _inputs(args)
    for name, t in items:
        if len(items) > 1:
            _write(f"# {name}\n")
        b3 = ["".join(b.names(t)) for b in three_belts(t)]
        b4 = ["".join(b.names(t)) for b in four_belts(t)]
        _write(f"3-belts ({len(b3)}): {' '.join(b3)}\n".replace(": \n", ":\n"))
        _write(f"4-belts ({len(b4)}): {' '.join(b4)}\n".replace(": \n", ":\n"))
    return 0


def cmd_annihilator(args: argparse.Namespace) -> int:
    for _, t in _inputs(args):
        _write(annihilator_dim(t).to_json(t) + "\n")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    items = enumerate_triangulations(args.n)
    if args.irreducible:
        items = filter_irreducible(items)
    if args.output_format == "planar":
        sys.stdout.buffer.write(emit_planar_code(items))
        sys.stdout.flush()
    else:
        for r in items:
            _write(r.to_triangulation().to_rows() + "\n")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    if args.table2:
        entries = load_table2()
    else:
        polys = read_polytopes(args.catalog, args.format)
        entries = [
            CatalogEntry(f"{args.catalog}#{k + 1}", "file", t) for k, t in enumerate(polys)
        ]
    report = classify(entries, allow_mixed=args.allow_mixed)
    _write(report.to_json() + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    table1 = None
    if args.table1:
        with open(args.table1, encoding="utf-8") as fh:
            data = json.load(fh)
        table1 = {(c["i"], c["j"]): c["beta"] for c in data["cells"]}
    ok = verify_paper(table1)
    print("verify-paper: " + ("all checks passed" if ok else "FAILED"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polybetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="bigraded Betti table as CSV")
    _add_input(p)
    p.add_argument("--koszul", action="store_true", help="use the Koszul complex instead")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("belts", help="list 3- and 4-belts")
    _add_input(p)
    p.set_defaults(func=cmd_belts)

    p = sub.add_parser("annihilator", help="dimension of the annihilator of Tor^{-1,4}")
    _add_input(p)
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("enumerate", help="generate triangulations with N vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--output-format", choices=("planar", "rows"), default="rows")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="group a catalog by Betti tuple")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="FILE")
    src.add_argument("--table2", action="store_true")
    p.add_argument("--format", choices=("rows", "planar", "json"), default="rows")
    p.add_argument("--allow-mixed", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-paper", help="reproduce the published tables")
    p.add_argument("--table1", metavar="JSON", help="override the expected Betti table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.command == "enumerate":
        if not 4 <= args.n <= 12:
            parser.error("--n must be between 4 and 12")
    try:
        return args.func(args)
    except (PolytopeError, ReducibleError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"polybetti: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
