"""Command surface: analyze, verify, corpus, version.

Exit codes: 0 success, 1 check failure or expectation mismatch, 2 usage or
parse error, 3 internal invariant violation (two exact routes disagreed).
The default Ext window can be set through HABW_DEFAULT_BOUND.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .dsl import ParseError, parse
from .errors import InternalCheckError, MalformedInputError
from .fields import PrimeField, RationalField


def parse_field_spec(spec: str):
    """'GF:32003' or 'QQ' -> a coefficient field."""
    if spec == "QQ":
        return RationalField()
    if spec.startswith("GF:"):
        try:
            return PrimeField(int(spec[3:]))
        except ValueError as exc:
            raise MalformedInputError(str(exc)) from None
    raise MalformedInputError(f"bad field spec {spec!r}; use GF:<p> or QQ")


def _default_bound_arg():
    env = os.environ.get("HABW_DEFAULT_BOUND")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise MalformedInputError(f"HABW_DEFAULT_BOUND must be an integer, got {env!r}")


def _report_out(report: dict, fmt: str, stream=None):
    from .report import render_text, to_stable_json

    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(to_stable_json(report))
    else:
        stream.write(render_text(report))


def schema_path() -> Path:
    """Location of the shipped JSON schema for reports."""
    return Path(__file__).parent / "schema" / "report.schema.json"


def shipped_corpus_path() -> Path:
    return Path(__file__).parent / "corpus"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="habw",
        description="exact homological invariants over graded quotient rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--bound", type=int, default=None, help="Ext-vanishing window")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized samples")
        p.add_argument("--field", default=None, help="override coefficient field: GF:<p> or QQ")

    p_an = sub.add_parser("analyze", help="invariants of the modules in one file")
    p_an.add_argument("file")
    p_an.add_argument("--module", default=None, help="restrict to one module")
    common(p_an)

    p_ve = sub.add_parser("verify", help="run a file's expectations and checks")
    p_ve.add_argument("file")
    common(p_ve)

    p_co = sub.add_parser("corpus", help="run every .hab file in a directory")
    p_co.add_argument("directory", nargs="?", default=None, help="default: the shipped corpus")
    p_co.add_argument("--jobs", type=int, default=1)
    common(p_co)

    sub.add_parser("version", help="print the tool version")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "version":
        print(f"habw {__version__}")
        return 0

    try:
        bound = args.bound if args.bound is not None else _default_bound_arg()
        override = parse_field_spec(args.field) if args.field else None
        from .report import run_corpus, run_file, run_source

        if args.command == "analyze":
            t0 = time.time()
            text = Path(args.file).read_text(encoding="utf-8")
            source = parse(text, override)
            if args.module is not None and args.module not in source.module_names():
                print(f"error: unknown module {args.module!r}", file=sys.stderr)
                return 2
            record = run_source(source, bound, override)
            record["path"] = args.file
            if args.module is not None:
                record["modules"] = {args.module: record["modules"][args.module]}
            report = {
                "tool": "habw",
                "version": __version__,
                "bound": bound,
                "files": [record],
                "wall_time_s": round(time.time() - t0, 3),
            }
            _report_out(report, args.format)
            return 0
        if args.command == "verify":
            t0 = time.time()
            record = run_file(args.file, bound, override)
            report = {
                "tool": "habw",
                "version": __version__,
                "bound": bound,
                "files": [record],
                "wall_time_s": round(time.time() - t0, 3),
            }
            _report_out(report, args.format)
            return 0 if record["ok"] else 1
        if args.command == "corpus":
            directory = args.directory or str(shipped_corpus_path())
            report = run_corpus(directory, bound, jobs=args.jobs, field_spec=args.field)
            _report_out(report, args.format)
            return 0 if report["summary"]["ok"] else 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
