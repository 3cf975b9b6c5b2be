"""Command-line front end.

    weightedrank compare LIST_A LIST_B [--weights W.json] [--signed] [--explain] [--format json|csv]
    weightedrank dist {ratio,footrule,kendall} --n N [--out freq.csv] [--jobs J]

Exit status: 0 success, 2 invalid input, 1 internal error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from .analysis import dg_report, inversion_types
from .core import ValidationError, align, complete_pair, parse_ranked_list, parse_weight_table
from .experiments import MAX_N, fmt, normalized_distribution, ratio_distribution, stats_json
from .measures import report_for_pair, signed_scale

log = logging.getLogger("weightedrank")

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ValidationError(f"{path} is not valid UTF-8") from None


def _num(x):
    if x is None or isinstance(x, (bool, int)):
        return x
    return fmt(x)


def build_compare_record(a_text: str, b_text: str, w_text: str | None = None,
                         signed: bool = False, explain: bool = False) -> dict:
    a = parse_ranked_list(a_text)
    b = parse_ranked_list(b_text)
    w = parse_weight_table(w_text) if w_text is not None else None
    a_full, b_full = complete_pair(a, b)
    pair = align(a_full, b_full)
    report = report_for_pair(pair, w)
    record = {k: _num(v) for k, v in report.to_dict().items()}
    if report.footrule_overflow:
        log.warning("normalized footrule %.6g exceeds 1 under these weights", report.footrule_norm)
    if signed:
        record["footrule_signed"] = None
        record["kendall_signed"] = None
        if report.footrule_norm is not None:
            if report.footrule_overflow:
                log.warning("footrule_norm > 1; signed footrule reported as null")
            else:
                record["footrule_signed"] = _num(signed_scale(min(report.footrule_norm, 1.0)))
        if report.kendall_norm is not None:
            record["kendall_signed"] = _num(signed_scale(report.kendall_norm))
    if explain:
        dg = dg_report(pair, w)
        record["explain"] = {
            "universe": list(pair.universe),
            "pi_ranks": list(pair.pi_ranks),
            "dg_report": {k: _num(v) for k, v in asdict(dg).items()},
            "inversions": asdict(inversion_types(pair)),
        }
    return record


def _to_csv(record: dict) -> str:
    flat = {k: v for k, v in record.items() if k != "explain"}
    for section, values in record.get("explain", {}).items():
        if isinstance(values, dict):
            flat.update({f"{section}.{k}": v for k, v in values.items()})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(flat.keys())
    writer.writerow(_csv_cell(v) for v in flat.values())
    return buf.getvalue()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return v


def cmd_compare(args) -> int:
    w_text = _read(args.weights) if args.weights else None
    record = build_compare_record(_read(args.list_a), _read(args.list_b), w_text,
                                  signed=args.signed, explain=args.explain)
    if args.format == "csv":
        out = _to_csv(record)
    else:
        out = json.dumps(record, indent=2) + "\n"
    _emit(out, args.out)
    return EXIT_OK


def cmd_dist(args) -> int:
    if not 2 <= args.n <= MAX_N:
        raise ValidationError(f"--n must be in [2, {MAX_N}], got {args.n}")
    if args.jobs < 1:
        raise ValidationError("--jobs must be at least 1")
    if args.kind == "ratio":
        table, stats = ratio_distribution(args.n, jobs=args.jobs)
    else:
        table, stats = normalized_distribution(args.n, args.kind, jobs=args.jobs)
    if args.out:
        Path(args.out).write_text(table.to_csv(), encoding="utf-8")
    sys.stdout.write(stats_json(args.kind, args.n, table, stats) + "\n")
    return EXIT_OK


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weightedrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", help="compare two ranked list files")
    p.add_argument("list_a", help="reference list (plain lines or JSON array)")
    p.add_argument("list_b")
    p.add_argument("--weights", help="JSON object {token: weight}, optional \"__default__\"")
    p.add_argument("--signed", action="store_true", help="also report 1 - 2v on [-1, 1]")
    p.add_argument("--explain", action="store_true", help="include inequality and inversion diagnostics")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dist", help="exhaustive distribution over all n! permutations")
    p.add_argument("kind", choices=("ratio", "footrule", "kendall"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="frequency table CSV (value,count)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_dist)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="%(name)s: %(levelname)s: %(message)s", level=logging.WARNING)
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, ValidationError) as exc:
        print(f"weightedrank: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"weightedrank: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
