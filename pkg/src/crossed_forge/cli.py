"""Command line: ``crossed-forge run | verify | catalog list``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .catalog import catalog_listing
from .errors import CrossedForgeError
from .limits import ENV_VAR
from .scenario import FORMATS, Check, emit_report, parse_scenario, run_scenario


def _load(path):
    try:
        return parse_scenario(Path(path).read_bytes())
    except OSError as exc:
        raise CrossedForgeError(f"cannot read {path}: {exc.strerror}") from None


def _write(data, out):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_run(args):
    scenario = _load(args.scenario)
    fmt = args.format or scenario.output.get("format", "json")
    report = run_scenario(scenario, timings=args.timings or None)
    _write(emit_report(report, fmt), args.out)
    return 0


def cmd_verify(args):
    scenario = _load(args.scenario)
    scenario.checks = [Check("verify")]
    fmt = args.format or scenario.output.get("format", "json")
    _write(emit_report(run_scenario(scenario, timings=False), fmt), args.out)
    return 0


def cmd_catalog(args):
    if args.action != "list":
        raise CrossedForgeError(f"unknown catalog action {args.action!r}")
    width = max(len(name) for name, _ in catalog_listing())
    for name, desc in catalog_listing():
        print(f"{name.ljust(width)}  {desc}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crossed-forge",
        description="Exact crossed-product computations driven by JSON scenario files.",
        epilog=f"{ENV_VAR} overrides the enumeration size limits.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run every check in a scenario")
    run.add_argument("scenario")
    run.add_argument("--format", choices=FORMATS)
    run.add_argument("--out", metavar="PATH")
    run.add_argument("--timings", action="store_true", help="add per-check wall time (breaks byte-identical reports)")
    run.set_defaults(func=cmd_run)

    verify = sub.add_parser("verify", help="check the crossed-system axioms only")
    verify.add_argument("scenario")
    verify.add_argument("--format", choices=FORMATS)
    verify.add_argument("--out", metavar="PATH")
    verify.set_defaults(func=cmd_verify)

    cat = sub.add_parser("catalog", help="list the example constructors")
    cat.add_argument("action", choices=["list"])
    cat.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CrossedForgeError as exc:
        print(f"crossed-forge: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
