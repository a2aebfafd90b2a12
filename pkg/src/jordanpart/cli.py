"""Command-line surface.

Subcommands: compute, table, count, verify, report. Output formats:
human text (default), json-lines (one JSON object per record), and csv.
Identical invocations produce identical bytes. Exit codes: 0 ok,
1 verification mismatch, 2 usage error, 3 resource guard tripped,
4 forced method inapplicable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fastpath import InapplicableMethodError, Reduction, jordan_partition
from .harness import VerifyReport, verify_grid
from .oracle import DEFAULT_ORACLE_CEILING, ResourceGuardError
from .partitions import DeviationVector, JordanRecord, Partition
from .survey import DeviationTable, check_bound, deviation_table, enumerate_deviation_vectors

__all__ = ["main", "record_to_dict", "record_from_dict"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INAPPLICABLE = 4

THREADS_ENV_VAR = "JORDANPART_THREADS"

FORMATS = ("text", "json-lines", "csv")


def record_to_dict(rec: JordanRecord) -> dict:
    return {
        "r": rec.r,
        "s": rec.s,
        "p": rec.p,
        "m": rec.m,
        "lambda": list(rec.lam.parts),
        "epsilon": list(rec.epsilon.entries),
        "method": rec.method,
        "reductions": [
            {"kind": red.kind, "from": list(red.source), "to": list(red.target)}
            for red in rec.reductions
        ],
    }


def record_from_dict(data: dict) -> JordanRecord:
    return JordanRecord(
        r=data["r"],
        s=data["s"],
        p=data["p"],
        m=data["m"],
        lam=Partition(tuple(data["lambda"])),
        epsilon=DeviationVector(tuple(data["epsilon"])),
        method=data["method"],
        reductions=tuple(
            Reduction(red["kind"], tuple(red["from"]), tuple(red["to"]))
            for red in data["reductions"]
        ),
    )


def _csv_line(fields: list) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(fields)
    return buf.getvalue()


def _emit_compute(rec: JordanRecord, fmt: str, out) -> None:
    if fmt == "json-lines":
        print(json.dumps(record_to_dict(rec), separators=(",", ":")), file=out)
    elif fmt == "csv":
        print(_csv_line(["r", "s", "p", "m", "lambda", "epsilon", "method", "reductions"]), file=out)
        reductions = ";".join(red.render() for red in rec.reductions)
        print(
            _csv_line(
                [rec.r, rec.s, rec.p, rec.m, rec.lam.render(), rec.epsilon.render(), rec.method, reductions]
            ),
            file=out,
        )
    else:
        print(f"r={rec.r} s={rec.s} p={rec.p} m={rec.m}", file=out)
        print(f"lambda  {rec.lam.render()}", file=out)
        print(f"epsilon {rec.epsilon.render()}", file=out)
        print(f"method  {rec.method}", file=out)
        if rec.reductions:
            print("reductions " + " ".join(red.render() for red in rec.reductions), file=out)


def _emit_table(table: DeviationTable, fmt: str, out) -> None:
    if fmt == "json-lines":
        for row in table.rows:
            print(
                json.dumps(
                    {"r": table.r, "p": row.p, "class": row.residue, "epsilon": list(row.epsilon.entries)},
                    separators=(",", ":"),
                ),
                file=out,
            )
    elif fmt == "csv":
        print(_csv_line(["r", "p", "class", "epsilon"]), file=out)
        for row in table.rows:
            p_label = "p'" if row.p is None else row.p
            print(_csv_line([table.r, p_label, row.residue, row.epsilon.render()]), file=out)
    else:
        by_prime: dict[object, list] = {}
        for row in table.rows:
            by_prime.setdefault(row.p, []).append(row)
        for p, rows in by_prime.items():
            label = "p'" if p is None else str(p)
            cells = " ".join(f"{row.residue}={row.epsilon.render()}" for row in rows)
            print(f"eps({table.r},s,{label}): {cells}", file=out)


def _emit_count(census, show_vectors: bool, fmt: str, out) -> None:
    bound = 2 ** (census.r - 1)
    if fmt == "json-lines":
        print(
            json.dumps(
                {"r": census.r, "n": census.n, "bound": bound, "prime_bound": census.prime_bound},
                separators=(",", ":"),
            ),
            file=out,
        )
        if show_vectors:
            for vec in census.vectors:
                s, p = census.witnesses[vec.entries]
                print(
                    json.dumps(
                        {"epsilon": list(vec.entries), "witness_s": s, "witness_p": p},
                        separators=(",", ":"),
                    ),
                    file=out,
                )
    elif fmt == "csv":
        if show_vectors:
            print(_csv_line(["epsilon", "witness_s", "witness_p"]), file=out)
            for vec in census.vectors:
                s, p = census.witnesses[vec.entries]
                print(_csv_line([vec.render(), s, p]), file=out)
        else:
            print(_csv_line(["r", "n", "bound", "prime_bound"]), file=out)
            print(_csv_line([census.r, census.n, bound, census.prime_bound]), file=out)
    else:
        print(f"r={census.r} n={census.n} bound={bound} prime_bound={census.prime_bound}", file=out)
        if show_vectors:
            for vec in census.vectors:
                s, p = census.witnesses[vec.entries]
                print(f"{vec.render()} witness s={s} p={p}", file=out)


def _emit_verify(report: VerifyReport, fmt: str, out) -> None:
    if fmt == "json-lines":
        for name, cells in report.checks:
            bad = sum(1 for mm in report.mismatches if mm.check.startswith(name))
            print(json.dumps({"check": name, "cells": cells, "mismatches": bad}, separators=(",", ":")), file=out)
        for mm in report.mismatches:
            print(
                json.dumps(
                    {"check": mm.check, "r": mm.r, "s": mm.s, "p": mm.p, "left": mm.left, "right": mm.right},
                    separators=(",", ":"),
                ),
                file=out,
            )
        print(
            json.dumps(
                {"cells": report.cells, "mismatches": len(report.mismatches), "ok": report.ok},
                separators=(",", ":"),
            ),
            file=out,
        )
    elif fmt == "csv":
        print(_csv_line(["check", "cells", "mismatches"]), file=out)
        for name, cells in report.checks:
            bad = sum(1 for mm in report.mismatches if mm.check.startswith(name))
            print(_csv_line([name, cells, bad]), file=out)
    else:
        for name, cells in report.checks:
            bad = sum(1 for mm in report.mismatches if mm.check.startswith(name))
            print(f"check={name} cells={cells} mismatches={bad}", file=out)
        for mm in report.mismatches:
            print(f"FAIL {mm.check} r={mm.r} s={mm.s} p={mm.p} expected={mm.left} got={mm.right}", file=out)
        print(f"verify: {'PASS' if report.ok else 'FAIL'} ({report.cells} cells)", file=out)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(x) for x in text.split(",") if x)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc
    if not primes:
        raise argparse.ArgumentTypeError("prime list is empty")
    return primes


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanpart",
        description="Exact Jordan partitions of tensor products of unipotent Jordan blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--threads", type=_positive, default=_default_threads())
        sp.add_argument("--oracle-ceiling", type=_positive, default=DEFAULT_ORACLE_CEILING)

    sp = sub.add_parser("compute", help="one Jordan partition")
    sp.add_argument("r", type=_positive)
    sp.add_argument("s", type=_positive)
    sp.add_argument("p", type=_nonnegative, help="prime characteristic, or 0")
    sp.add_argument("--method", choices=("auto", "oracle", "recurrence", "closed"), default="auto")
    add_common(sp)

    sp = sub.add_parser("table", help="deviation vectors by prime and residue class")
    sp.add_argument("r", type=_positive)
    add_common(sp)

    sp = sub.add_parser("count", help="census of deviation vectors for fixed r")
    sp.add_argument("r", type=_positive)
    sp.add_argument("--prime-bound", type=_positive, default=None)
    sp.add_argument("--vectors", action="store_true", help="list the vectors with witnesses")
    add_common(sp)

    sp = sub.add_parser("verify", help="cross-validate engines and symmetries on a grid")
    sp.add_argument("r_max", type=_positive)
    sp.add_argument("s_max", type=_positive)
    sp.add_argument("primes", type=_prime_list, help="comma-separated primes")
    add_common(sp)

    sp = sub.add_parser("report", help="write survey CSVs and figures to a directory")
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--table-max", type=_positive, default=5)
    sp.add_argument("--census-max", type=_positive, default=12)
    add_common(sp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "compute":
            rec = jordan_partition(
                args.r, args.s, args.p, method=args.method, oracle_ceiling=args.oracle_ceiling
            )
            _emit_compute(rec, args.format, out)
        elif args.command == "table":
            _emit_table(deviation_table(args.r), args.format, out)
        elif args.command == "count":
            census = enumerate_deviation_vectors(args.r, args.prime_bound)
            if not check_bound(census):
                raise AssertionError(f"census for r={args.r} exceeds the 2^(r-1) bound")
            _emit_count(census, args.vectors, args.format, out)
        elif args.command == "verify":
            report = verify_grid(
                args.r_max,
                args.s_max,
                args.primes,
                ceiling=args.oracle_ceiling,
                threads=args.threads,
            )
            _emit_verify(report, args.format, out)
            if not report.ok:
                return EXIT_MISMATCH
        elif args.command == "report":
            from .report import write_report

            paths = write_report(args.out, table_max=args.table_max, census_max=args.census_max)
            for path in paths:
                print(path, file=out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InapplicableMethodError as exc:
        print(f"inapplicable method: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    return EXIT_OK
