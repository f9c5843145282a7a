"""Command-line front end: ``wbroadcast {analyze,sweep,thresholds,table2}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .separability import THRESHOLD_TOL


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics instead of usage dumps
    def error(self, message):
        raise SystemExit(_fail(message))


def _fail(message: str) -> int:
    print(f"wbroadcast: error: {message}".replace("\n", " "), file=sys.stderr)
    return 2


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wbroadcast", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyse the four output pairs at one parameter point")
    a.add_argument("--alpha2", type=float, required=True)
    a.add_argument("--beta2", type=float, default=None, help="default: (1 - alpha2) / 2")
    a.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("sweep", help="analyse an evenly spaced alpha2 grid (beta = gamma)")
    s.add_argument("--from", dest="start", type=float, required=True)
    s.add_argument("--to", dest="stop", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--out", default="-", help="output file (default: stdout)")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--svg", default=None, help="also write a line chart of C and S_L")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")

    t = sub.add_parser("thresholds", help="locate the separability thresholds in alpha2")
    t.add_argument("--tol", type=float, default=THRESHOLD_TOL)
    t.add_argument("--format", choices=("text", "json"), default="text")

    tb = sub.add_parser(
        "table2",
        help="reproduce and audit the mixedness/concurrence table",
        description="Named after the source's only table, which is labelled 'Table 2' "
        "(no Table 1 exists).",
    )
    lo, hi, n = analysis.TABLE_GRID
    tb.add_argument("--from", dest="start", type=float, default=lo)
    tb.add_argument("--to", dest="stop", type=float, default=hi)
    tb.add_argument("--steps", type=int, default=n)
    tb.add_argument("--format", choices=("text", "json"), default="text")
    tb.add_argument("--svg", default=None)
    tb.add_argument("--jobs", type=int, default=1)
    return p


def _run(args) -> None:
    if args.command == "analyze":
        rec = analysis.analyze(args.alpha2, args.beta2)
        if args.format == "json":
            _write(json.dumps(rec.to_dict(), indent=2) + "\n", None)
        else:
            _write(analysis.record_to_text(rec), None)
    elif args.command == "sweep":
        records = analysis.sweep(args.start, args.stop, args.steps, jobs=args.jobs)
        text = (
            analysis.records_to_csv(records)
            if args.format == "csv"
            else analysis.records_to_json(records)
        )
        _write(text, args.out)
        if args.svg:
            _write(analysis.render_svg(records), args.svg)
    elif args.command == "thresholds":
        if args.tol <= 0:
            raise ValueError("--tol must be positive")
        rep = analysis.thresholds(args.tol)
        _write(json.dumps(rep.to_dict(), indent=2) + "\n" if args.format == "json" else rep.to_text(), None)
    elif args.command == "table2":
        records = analysis.sweep(args.start, args.stop, args.steps, jobs=args.jobs)
        rep = analysis.table2(records=records)
        _write(json.dumps(rep.to_dict(), indent=2) + "\n" if args.format == "json" else rep.to_text(), None)
        if args.svg:
            _write(analysis.render_svg(records), args.svg)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _run(args)
    except (ValueError, KeyError, OSError) as exc:
        return _fail(str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
