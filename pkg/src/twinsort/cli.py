"""Command line interface: ``twinsort sort|table|verify|bench``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 unreadable input or parse failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from twinsort import bench, efficiency, oracle
from twinsort.core import Element, make_less, sort_in_place, PassTrace

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

INT64_MIN, INT64_MAX = -(1 << 63), (1 << 63) - 1
TABLE_MAX = 10**6
DEFAULT_GOLDEN = Path("goldens") / "empirical_avg.json"

STATS_FIELDS = ("n", "comparisons", "swaps", "passes", "terminated_early")
BENCH_HEADER = ("algo", "generator", "n", "seed", "trial", "comparisons", "swaps", "elapsed_ns")


class InputError(Exception):
    pass


class UsageError(Exception):
    pass


# -- sort ---------------------------------------------------------------------


def _parse_int(text: str) -> int:
    if "_" in text:
        raise ValueError(text)
    value = int(text)
    if not INT64_MIN <= value <= INT64_MAX:
        raise ValueError(f"{text} is outside the signed 64-bit range")
    return value


def _parse_float(text: str) -> float:
    if "_" in text:
        raise ValueError(text)
    return float(text)


def float_key(x: float) -> tuple:
    # NaNs compare equal to each other and after every number
    return (1, 0.0) if math.isnan(x) else (0, x)


def split_lines(data: bytes) -> list[bytes]:
    if not data:
        return []
    lines = data.split(b"\n")
    if lines[-1] == b"":
        lines.pop()
    return lines


def parse_records(lines: list[bytes], key_type: str) -> list[Element]:
    """Pair each raw line with its sort key; raises InputError naming the first bad line."""
    records = []
    for lineno, raw in enumerate(lines, start=1):
        if key_type == "text":
            key = raw
        else:
            try:
                text = raw.decode("ascii").strip()
                key = _parse_int(text) if key_type == "int" else float_key(_parse_float(text))
            except (UnicodeDecodeError, ValueError):
                raise InputError(f"line {lineno}: cannot parse {raw!r} as {key_type}") from None
        records.append(Element(key, raw))
    return records


def _trace_value(record: Element, key_type: str):
    if key_type == "int":
        return record.key
    if key_type == "float":
        value = float(record.payload.decode("ascii"))
        return value if math.isfinite(value) else str(value)
    return record.payload.decode("utf-8", "replace")


def cmd_sort(args) -> int:
    try:
        if args.input in (None, "-"):
            data = sys.stdin.buffer.read()
        else:
            data = Path(args.input).read_bytes()
    except OSError as exc:
        print(f"twinsort: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        records = parse_records(split_lines(data), args.type)
    except InputError as exc:
        print(f"twinsort: {exc}", file=sys.stderr)
        return EXIT_IO

    trace = PassTrace(initial=tuple(records)) if args.trace else None
    stats = sort_in_place(records, make_less(reverse=args.order == "desc"), trace)

    out = sys.stdout.buffer
    for record in records:
        out.write(record.payload + b"\n")
    out.flush()

    if args.stats or args.stats_out:
        stats_json = json.dumps(stats.as_dict(), separators=(",", ":"))
        if args.stats_out:
            try:
                Path(args.stats_out).write_text(stats_json + "\n")
            except OSError as exc:
                print(f"twinsort: cannot write stats: {exc}", file=sys.stderr)
                return EXIT_IO
        else:
            print(stats_json, file=sys.stderr)
    if trace is not None:
        snapshots = [[_trace_value(r, args.type) for r in s.elements] for s in trace.snapshots]
        print(json.dumps({"trace": snapshots}, separators=(",", ":")), file=sys.stderr)
    return EXIT_OK


# -- table --------------------------------------------------------------------


def table_csv(rows: Sequence[efficiency.EfficiencyRow]) -> str:
    lines = ["n,best,worst,avg"]
    lines += [f"{r.n},{r.best},{r.worst},{efficiency.format_decimal(r.average)}" for r in rows]
    return "\n".join(lines) + "\n"


def table_json(rows: Sequence[efficiency.EfficiencyRow]) -> str:
    def avg(value):
        return int(value) if value == value.to_integral_value() else float(value)

    payload = [{"n": r.n, "best": r.best, "worst": r.worst, "avg": avg(r.average)} for r in rows]
    return json.dumps(payload) + "\n"


def cmd_table(args) -> int:
    if not 0 <= args.min <= args.max <= TABLE_MAX:
        raise UsageError(f"need 0 <= --min <= --max <= {TABLE_MAX}")
    rows = efficiency.efficiency_table(args.min, args.max)
    sys.stdout.write(table_csv(rows) if args.format == "csv" else table_json(rows))
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    if not 1 <= args.max_n <= oracle.MAX_N:
        raise UsageError(f"--max-n must be in 1..{oracle.MAX_N}")
    golden_path = Path(args.golden)
    golden = {}
    if not args.bless and golden_path.exists():
        golden = oracle.load_golden(golden_path)

    measured = {}
    first_failure = None
    for n in range(1, args.max_n + 1):
        report = oracle.verify_permutations(n, workers=args.workers)
        stable = oracle.stability_sweep(n, cases=50, seed=n)
        mean = report.mean_comparisons
        measured[n] = mean
        ok = report.passed and stable
        golden_note = ""
        if n in golden:
            if golden[n] == mean:
                golden_note = " golden=ok"
            else:
                ok = False
                golden_note = f" golden=MISMATCH(expected {golden[n]})"
        print(
            f"n={n}: {report.permutations_checked} checked, max {report.max_comparisons}, "
            f"mean {mean.numerator}/{mean.denominator} (~{float(mean):.4f}), "
            f"model avg {efficiency.format_decimal(efficiency.average_case(n))}"
            f"{golden_note} {'PASS' if ok else 'FAIL'}"
        )
        if not ok and first_failure is None:
            if report.failures:
                perm, kind = report.failures[0]
                first_failure = f"n={n}: {kind} on permutation {list(perm)}"
            elif not stable:
                first_failure = f"n={n}: {oracle.UNSTABLE} on duplicate-keyed input"
            else:
                first_failure = f"n={n}: mean comparisons differ from golden file"

    if args.bless:
        merged = oracle.load_golden(golden_path) if golden_path.exists() else {}
        merged.update(measured)
        oracle.save_golden(golden_path, merged)
        print(f"wrote {golden_path}")

    if first_failure is not None:
        print(f"FAILED: {first_failure}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# -- bench --------------------------------------------------------------------


def _split(value: str) -> list[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


def bench_csv(records: Sequence[bench.BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for r in records:
        writer.writerow(
            [r.algo, r.generator, r.n, r.seed, r.trial, r.comparisons, r.swaps,
             "" if r.elapsed_ns is None else r.elapsed_ns]
        )
    return buf.getvalue()


def bench_json(records: Sequence[bench.BenchRecord]) -> str:
    return json.dumps([r.as_dict() for r in records]) + "\n"


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in _split(args.sizes)]
        config = bench.BenchConfig(
            algorithms=_split(args.algos),
            generators=_split(args.gens),
            sizes=sizes,
            seed=args.seed,
            trials=args.trials,
            measure_time=not args.no_time,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = bench.run_bench(config, workers=args.workers)
    sys.stdout.write(bench_csv(records) if args.format == "csv" else bench_json(records))
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinsort", description="Twin sort with instrumentation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="sort newline-delimited values")
    p.add_argument("input", nargs="?", help="input file (default: standard input)")
    p.add_argument("--type", choices=("int", "float", "text"), default="int")
    p.add_argument("--order", choices=("asc", "desc"), default="asc")
    p.add_argument("--stats", action="store_true", help="print stats JSON on stderr")
    p.add_argument("--stats-out", metavar="PATH", help="write stats JSON to PATH")
    p.add_argument("--trace", action="store_true", help="print per-pass snapshots on stderr")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("table", help="print the best/worst/average comparison table")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=13)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="exhaustively check every permutation up to --max-n")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--bless", action="store_true", help="rewrite the empirical-average golden file")
    p.add_argument("--golden", default=str(DEFAULT_GOLDEN), metavar="PATH")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="count and time sorts on generated inputs")
    p.add_argument("--algos", default="twin,insertion,merge,quick")
    p.add_argument("--gens", default="random")
    p.add_argument("--sizes", default="100")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--no-time", action="store_true", help="leave elapsed_ns empty")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"twinsort {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
