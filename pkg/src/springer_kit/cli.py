"""Command-line front end.

    springer-kit classes --n N
    springer-kit springer "[[3,1],[2]]"
    springer-kit cuspidal --e E --f F
    springer-kit verify --max-n N
    springer-kit series --n N
    springer-kit levi --n N --e E

Output is JSON lines (``--format json``, the default) or a plain table.
Exit status: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import BinaryIO

from . import records
from .cuspidal import CuspidalDatum, sweep
from .errors import RepeatedEntries, SpringerKitError, UsageError
from .partitions import Bipartition, Partition, enumerate_symplectic_classes
from .springer import springer, wavefront_partition
from .symbols import format_symbol
from .weyl import WeylGroupB, component_group_A, enumerate_quasi_isolated, harish_chandra_levi, series_labels

VERBS = ("classes", "springer", "cuspidal", "verify", "series", "levi")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class Command:
    verb: str
    params: dict = field(default_factory=dict)
    output_format: str = "json"
    help_text: str = ""


class _HelpRequested(Exception):
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        raise _HelpRequested(self.format_help())

    def exit(self, status=0, message=None):
        raise UsageError(message or f"{self.prog}: exit {status}")


def _nonneg(flag):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}") from None
        if value < 0:
            raise argparse.ArgumentTypeError(f"{flag} must be non-negative, got {value}")
        return value

    return convert


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``"[[3,1],[2]]"``; parts must already be weakly decreasing."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bipartition {text!r} is not a nested bracket list: {exc}") from None
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(p, list) for p in obj)):
        raise UsageError(f"bipartition {text!r} must have the form [[parts],[parts]]")
    try:
        return Bipartition(Partition(obj[0]), Partition(obj[1]))
    except SpringerKitError as exc:
        raise UsageError(f"bipartition {text!r}: {exc}") from None


def parse_partition(text: str) -> Partition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"partition {text!r} is not a bracket list: {exc}") from None
    if not isinstance(obj, list):
        raise UsageError(f"partition {text!r} must have the form [parts]")
    try:
        return Partition(obj)
    except SpringerKitError as exc:
        raise UsageError(f"partition {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="springer-kit", description="Symbols, Springer correspondence and cuspidal checks for Sp_2n.")
    sub = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def verb(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=("json", "table"), default="json", dest="output_format")
        return p

    p = verb("classes", "unipotent classes of Sp_2n with component-group orders")
    p.add_argument("--n", type=_nonneg("--n"), required=True)

    p = verb("springer", "Springer symbol and wave-front class of a bipartition")
    p.add_argument("bipartition", help='nested bracket list, e.g. "[[3,1],[2]]"')

    p = verb("cuspidal", "cuspidal datum for B_a D_b with a=e(e+1), b=f^2")
    p.add_argument("--e", type=_nonneg("--e"), required=True)
    p.add_argument("--f", type=_nonneg("--f"), required=True)

    p = verb("verify", "check n_chi = |A(u)| for every (e, f) with e(e+1)+f^2 <= max-n")
    p.add_argument("--max-n", type=_nonneg("--max-n"), required=True, dest="max_n")

    p = verb("series", "quasi-isolated series labels (s, H^1 class) for rank n")
    p.add_argument("--n", type=_nonneg("--n"), required=True)

    p = verb("levi", "Levi shape of the Harish-Chandra datum of the e-th cuspidal")
    p.add_argument("--n", type=_nonneg("--n"), required=True)
    p.add_argument("--e", type=_nonneg("--e"), required=True)
    return parser


def parse_args(argv) -> Command:
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _HelpRequested as req:
        return Command("help", help_text=req.text)
    params = {k: v for k, v in vars(ns).items() if k not in ("verb", "output_format")}
    if ns.verb == "springer":
        params["bipartition"] = parse_bipartition(params["bipartition"])
    return Command(ns.verb, params, ns.output_format)


def _records(cmd: Command):
    """Yield (record, failed) pairs for the command."""
    p = cmd.params
    if cmd.verb == "classes":
        for label in enumerate_symplectic_classes(p["n"]):
            yield records.class_record(label), False
    elif cmd.verb == "springer":
        image = springer(p["bipartition"])
        try:
            wf = wavefront_partition(image.symbol)
        except RepeatedEntries:
            wf = None
        yield records.springer_record(image, wf), False
    elif cmd.verb == "cuspidal":
        yield records.cuspidal_record(CuspidalDatum(p["e"], p["f"])), False
    elif cmd.verb == "verify":
        for report in sweep(p["max_n"]):
            yield records.verification_record(report), not report.identity_holds
    elif cmd.verb == "series":
        n = p["n"]
        group = WeylGroupB(n)
        orders = {(d.a, d.b): component_group_A(d, group).order for d in enumerate_quasi_isolated(n)}
        for label in series_labels(n):
            inv = label.involution
            yield records.series_record(label, orders[inv.a, inv.b]), False
    elif cmd.verb == "levi":
        yield records.levi_record(harish_chandra_levi(p["n"], p["e"])), False
    else:
        raise UsageError(f"unknown verb {cmd.verb!r}")


_TABLE_SKIP = ("schema_version", "kind")


def _table_cell(value):
    if isinstance(value, dict) and "rows" in value:
        return format_symbol(records.symbol_from_json(value))
    if isinstance(value, list):
        return "[" + ",".join(_table_cell(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value).lower() if isinstance(value, bool) else str(value)


def format_table(recs: list[dict]) -> str:
    if not recs:
        return ""
    cols = [k for k in recs[0] if k not in _TABLE_SKIP]
    rows = [[_table_cell(r[c]) for c in cols] for r in recs]
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def run(cmd: Command, out: BinaryIO, err: BinaryIO | None = None) -> int:
    if cmd.verb == "help":
        out.write(cmd.help_text.encode())
        return EXIT_OK
    collected = []
    failed = False
    try:
        for rec, bad in _records(cmd):
            failed = failed or bad
            if cmd.output_format == "json":
                out.write((records.dumps(rec) + "\n").encode())
            else:
                collected.append(rec)
    except RepeatedEntries as exc:
        _report(err, exc)
        return EXIT_FAILED
    except (SpringerKitError, ValueError) as exc:
        _report(err, exc)
        return EXIT_USAGE
    if cmd.output_format == "table":
        out.write(format_table(collected).encode())
    return EXIT_FAILED if failed else EXIT_OK


def _report(err, exc):
    if err is not None:
        err.write((records.dumps(records.error_record(exc)) + "\n").encode())


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
    except UsageError as exc:
        sys.stderr.buffer.write((records.dumps(records.error_record(exc)) + "\n").encode())
        return EXIT_USAGE
    status = run(cmd, sys.stdout.buffer, sys.stderr.buffer)
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
