"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .arrangement import count_regions
from .catalog import SUITE, load_catalog
from .errors import InputError, InvariantError, OracleTooLargeError
from .formality import check_formality, restricted_system
from .involution import INVOLUTION_NAMES
from .render import (
    OracleRow,
    SuiteRow,
    dumps,
    fold_dict,
    fold_dot,
    fold_markdown,
    oracle_dict,
    oracle_markdown,
    report_dict,
    report_markdown,
    suite_dict,
    suite_markdown,
)
from .restricted import restricted_of_type, total_compartments
from .rootsys import build_root_system, format_type, format_types, parse_type
from .weyl import weyl_order_bfs, weyl_order_closed_form

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _param(text: str) -> tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected k=v, got {text!r}")
    try:
        return key.strip(), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter {key} must be an integer, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isoform", description=__doc__.splitlines()[0])
    parser.add_argument("--catalog", help="catalog JSON file (default: $ISOFORM_CATALOG or the embedded catalog)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="certify formality for one symmetric pair")
    p.add_argument("--pair", required=True, help="catalog label, e.g. AI, EI, TypeII-A2")
    p.add_argument("--param", action="append", type=_param, default=[], metavar="K=V")
    p.add_argument("--format", choices=("json", "markdown", "dot"), default="json")
    p.add_argument("--catalog", default=argparse.SUPPRESS)

    p = sub.add_parser("fold", help="restrict a root system along a diagram involution")
    p.add_argument("--type", required=True, dest="series", help="series letter A-G")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--involution", required=True, choices=INVOLUTION_NAMES)
    p.add_argument("--format", choices=("json", "markdown", "dot"), default="json")

    p = sub.add_parser("verify-all", help="check every entry of the verification suite")
    p.add_argument("--format", choices=("json", "markdown", "dot"), default="markdown")
    p.add_argument("--catalog", default=argparse.SUPPRESS)

    p = sub.add_parser("oracle", help="cross-check Weyl orders and compartment counts")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--format", choices=("json", "markdown", "dot"), default="markdown")
    p.add_argument("--catalog", default=argparse.SUPPRESS)
    return parser


def _no_dot(args) -> None:
    if args.format == "dot":
        raise InputError(f"--format dot is only available for fold, not {args.command}")


def cmd_analyze(args) -> tuple[str, int]:
    _no_dot(args)
    params = dict(args.param)
    entry = load_catalog(args.catalog).instantiate(args.pair, params)
    rep = check_formality(entry)
    text = dumps(report_dict(rep)) if args.format == "json" else report_markdown(rep)
    return text, EXIT_OK if rep.formal else EXIT_FAIL


def cmd_fold(args) -> tuple[str, int]:
    t = parse_type(f"{args.series}{args.rank}")
    g_type = (t, t) if args.involution == "swap" else (t,)
    rrs = restricted_of_type(g_type, args.involution)
    source = format_types(g_type)
    render = {"json": lambda *a: dumps(fold_dict(*a)), "markdown": fold_markdown, "dot": fold_dot}[args.format]
    return render(rrs, source, args.involution), EXIT_OK


def cmd_verify_all(args) -> tuple[str, int]:
    _no_dot(args)
    catalog = load_catalog(args.catalog)
    rows = []
    for label, params in SUITE:
        try:
            rows.append(SuiteRow(label, params, check_formality(catalog.instantiate(label, params))))
        except InvariantError as exc:
            rows.append(SuiteRow(label, params, None, str(exc)))
    text = dumps(suite_dict(rows)) if args.format == "json" else suite_markdown(rows)
    return text, EXIT_OK if all(r.ok for r in rows) else EXIT_FAIL


def oracle_types(max_rank: int) -> list[tuple[str, int]]:
    types = [("A", n) for n in range(1, max_rank + 1)]
    types += [("B", n) for n in range(2, max_rank + 1)]
    types += [("C", n) for n in range(3, max_rank + 1)]
    types += [("D", n) for n in range(4, max_rank + 1)]
    types += [t for t in (("G", 2), ("F", 4), ("E", 6)) if t[1] <= max_rank]
    return types + [("E", 7), ("E", 8)]


def weyl_oracle_rows(max_rank: int) -> list[OracleRow]:
    rows = []
    for t in oracle_types(max_rank):
        closed = weyl_order_closed_form([t]).value
        try:
            bfs = weyl_order_bfs(build_root_system([t])).value
        except OracleTooLargeError:
            rows.append(OracleRow(format_type(t), closed, None, "skipped"))
            continue
        rows.append(OracleRow(format_type(t), closed, bfs, "match" if bfs == closed else "mismatch"))
    return rows


def restricted_oracle_rows(catalog) -> list[OracleRow]:
    rows = []
    for label, params in SUITE:
        entry = catalog.instantiate(label, params)
        rrs = restricted_system(entry)
        total = total_compartments(rrs)
        bfs = weyl_order_bfs(rrs.reduced).value
        regions = count_regions(rrs.restricted_roots)
        status = "match" if total == bfs == regions else "mismatch"
        rows.append(OracleRow(entry.name(), total, bfs, status, {"kprime": rrs.folded_name(), "regions": regions}))
    return rows


def cmd_oracle(args) -> tuple[str, int]:
    _no_dot(args)
    if not 1 <= args.max_rank <= 6:
        raise InputError("--max-rank must be between 1 and 6")
    weyl_rows = weyl_oracle_rows(args.max_rank)
    restricted_rows = restricted_oracle_rows(load_catalog(args.catalog))
    if args.format == "json":
        text = dumps(oracle_dict(weyl_rows, restricted_rows))
    else:
        text = oracle_markdown(weyl_rows, restricted_rows)
    failed = any(r.status == "mismatch" for r in [*weyl_rows, *restricted_rows])
    return text, EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "fold": cmd_fold, "verify-all": cmd_verify_all, "oracle": cmd_oracle}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"isoform: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"isoform: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
