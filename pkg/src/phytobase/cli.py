"""Operator command line.

Subcommands: import, export, validate, query, search, report, narrate,
serve. Exit codes: 0 success, 1 domain error (including any rejected
import rows), 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .errors import PhytobaseError
from .narration import build_narration, render_narration_plaintext
from .pql import ResultSet, evaluate_query, parse_query, structured_search
from .serialize import ImportReport, export_records, import_records
from .service import ServiceConfig, serve
from .status import PaperStatus, status_report
from .store import RecordStore
from .vocab import CodeTable

DEFAULT_DATA = "phytobase-data"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phytobase",
        description="Medicinal-plant knowledge base: import, search, query, narrate, serve.",
    )
    parser.add_argument(
        "--data",
        default=os.environ.get("PHYTOBASE_DATA", DEFAULT_DATA),
        help=f"store directory (default: $PHYTOBASE_DATA or ./{DEFAULT_DATA})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import", help="import records from a CSV or JSON file")
    p.add_argument("file")
    p.add_argument("--format", choices=("csv", "json"), help="default: by file extension")

    p = sub.add_parser("export", help="export records (optionally one ailment's sub-database)")
    p.add_argument("--ailment", help="restrict to records treating this ailment code")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")

    p = sub.add_parser("validate", help="dry-run validate a CSV or JSON file")
    p.add_argument("file")
    p.add_argument("--format", choices=("csv", "json"))

    p = sub.add_parser("query", help="run a PQL SELECT statement")
    p.add_argument("pql")
    p.add_argument("--format", choices=("json",), help="emit the raw result set as JSON")

    p = sub.add_parser("search", help="structured search: field=value pairs, ANDed")
    p.add_argument("criteria", nargs="+", metavar="field=value")
    p.add_argument("--format", choices=("json",))

    p = sub.add_parser("report", help="conservation status report for the corpus")
    p.add_argument("--format", choices=("json",))

    p = sub.add_parser("narrate", help="print a record's narration script")
    p.add_argument("id")
    p.add_argument("--lang", default="en")
    p.add_argument("--output", "-o")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--bind", default="127.0.0.1:8000", metavar="host:port")
    p.add_argument("--read-only", action="store_true")
    p.add_argument("--lang", default="en", help="default narration language")

    return parser


class SystemExit2(Exception):
    """Usage-level problem discovered after argparse (exit code 2)."""


def _open_store(args, read_only: bool = False) -> RecordStore:
    return RecordStore.open(args.data, read_only=read_only)


def _guess_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    suffix = Path(path).suffix.casefold()
    if suffix == ".csv":
        return "csv"
    if suffix == ".json":
        return "json"
    raise SystemExit2(f"cannot infer format of {path!r}; pass --format")


def _print_import_report(report: ImportReport) -> None:
    print(
        f"imported {report.imported} record(s), "
        f"rejected {len(report.rejected)}, {report.warnings} warning(s)"
    )
    for locator, validation in report.rejected:
        for field, message in validation.errors:
            print(f"  {locator}: {field}: {message}", file=sys.stderr)


def _result_table(result: ResultSet) -> str:
    if not result.rows:
        return "no matches"
    columns = ["id", *result.rows[0].values.keys()]

    def cell(row, column):
        if column == "id":
            return row.id
        value = row.values.get(column)
        if isinstance(value, list):
            return "; ".join(str(v) for v in value)
        return "" if value is None else str(value)

    widths = {
        c: max(len(c), *(len(cell(r, c)) for r in result.rows)) for c in columns
    }
    lines = [
        "  ".join(c.ljust(widths[c]) for c in columns),
        "  ".join("-" * widths[c] for c in columns),
    ]
    for row in result.rows:
        lines.append("  ".join(cell(row, c).ljust(widths[c]) for c in columns))
    lines.append(f"{len(result.rows)} of {result.total} match(es)")
    return "\n".join(lines)


def _emit_result(result: ResultSet, args) -> None:
    if getattr(args, "format", None) == "json":
        import json

        print(json.dumps(result.to_json_dict(), indent=2, ensure_ascii=False))
    else:
        print(_result_table(result))


def _cmd_import(args) -> int:
    fmt = _guess_format(args.file, args.format)
    store = _open_store(args)
    with open(args.file, "rb") as fh:
        report = import_records(store, fh, format=fmt)
    _print_import_report(report)
    return 1 if report.rejected else 0


def _cmd_export(args) -> int:
    store = _open_store(args)
    data = export_records(store, selection=args.ailment, format=args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def _cmd_validate(args) -> int:
    fmt = _guess_format(args.file, args.format)
    scratch = RecordStore(code_table=CodeTable())
    with open(args.file, "rb") as fh:
        report = import_records(scratch, fh, format=fmt)
    _print_import_report(report)
    return 1 if report.rejected else 0


def _cmd_query(args) -> int:
    store = _open_store(args, read_only=False)
    result = evaluate_query(parse_query(args.pql), store)
    _emit_result(result, args)
    return 0


def _cmd_search(args) -> int:
    criteria: dict[str, str] = {}
    for pair in args.criteria:
        field, sep, value = pair.partition("=")
        if not sep or not field:
            raise SystemExit2(f"criteria must look like field=value, got {pair!r}")
        criteria[field.strip()] = value.strip()
    store = _open_store(args)
    _emit_result(structured_search(criteria, store), args)
    return 0


def _cmd_report(args) -> int:
    store = _open_store(args)
    report = status_report(store)
    if args.format == "json":
        import json

        print(json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False))
        return 0
    width = max(len(m.value) for m in PaperStatus)
    for member in PaperStatus:
        print(f"{member.value.ljust(width)}  {report.counts.get(member, 0):>5}")
    print(f"{'Assessed'.ljust(width)}  {report.total_assessed:>5}")
    print(f"{'Unassessed'.ljust(width)}  {report.unassessed:>5}")
    return 0


def _cmd_narrate(args) -> int:
    store = _open_store(args)
    record = store.get(args.id)
    script = build_narration(
        record, args.lang, revision=store.revision, registry=store.language_registry
    )
    text = render_narration_plaintext(script)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_serve(args) -> int:
    host, sep, port = args.bind.rpartition(":")
    if not sep or not port.isdigit():
        raise SystemExit2(f"--bind must look like host:port, got {args.bind!r}")
    serve(
        ServiceConfig(
            host=host or "127.0.0.1",
            port=int(port),
            data_path=args.data,
            read_only=args.read_only,
            default_language=args.lang,
        )
    )
    return 0


_COMMANDS = {
    "import": _cmd_import,
    "export": _cmd_export,
    "validate": _cmd_validate,
    "query": _cmd_query,
    "search": _cmd_search,
    "report": _cmd_report,
    "narrate": _cmd_narrate,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PhytobaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
