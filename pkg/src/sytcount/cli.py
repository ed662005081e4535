"""Command-line front end.

Exit codes: 0 success, 2 shape parse/validation error, 3 method does not
apply to the shape, 4 oracle memo limit exceeded, 5 methods disagree (or a
published value is not reproduced), 6 Monte Carlo estimate outside the 4-sigma
gate.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from itertools import product as cartesian
from typing import Iterator, Sequence

from . import methods, montecarlo, oracle, products
from .exact import as_integer, stirling2
from .polyint import stirling2_by_chain, stirling2_by_simplex
from .shapes import Partition, ShapeError, ShapeSpec, parse_shape, partitions

EXIT_OK, EXIT_PARSE, EXIT_MISMATCH_METHOD, EXIT_MEMO, EXIT_DISAGREE, EXIT_MC = 0, 2, 3, 4, 5, 6

FAMILY_PARAMS = {
    "staircase": ("m", "k"),
    "psyt": ("m", "r", "k"),
    "necorner": ("m", "k"),
    "secondrow": ("m", "k"),
    "hole": ("m",),
    "partitions": ("n",),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse(text: str) -> ShapeSpec:
    try:
        return parse_shape(text)
    except ShapeError as exc:
        raise CliError(EXIT_PARSE, f"error: {exc}") from exc


def _timed_count(shape: ShapeSpec, method: str, memo_limit: int) -> tuple[int, int]:
    start = time.perf_counter()
    try:
        if method == "oracle":
            value = oracle.count_linear_extensions(shape.poset(), limit=memo_limit)
        else:
            value = methods.count_with(shape, method)
    except methods.MethodMismatch as exc:
        raise CliError(EXIT_MISMATCH_METHOD, f"error: {exc}") from exc
    except oracle.OracleLimitError as exc:
        raise CliError(EXIT_MEMO, f"error: {exc}") from exc
    return value, int((time.perf_counter() - start) * 1000)


def count_result(shape: ShapeSpec, method: str, count: int, elapsed_ms: int) -> dict:
    return {"shape": str(shape), "method": method, "count": str(count), "elapsedMs": elapsed_ms}


def cmd_count(args: argparse.Namespace) -> int:
    shape = _parse(args.shape)
    method = methods.auto_method(shape) if args.method == "auto" else args.method
    value, ms = _timed_count(shape, method, args.memo_limit)
    result = count_result(shape, method, value, ms)
    if args.json:
        print(json.dumps(result, separators=(",", ":")))
    else:
        print(f"{'shape':<24} {'method':<10} {'count':>20} {'ms':>8}")
        print(f"{result['shape']:<24} {method:<10} {result['count']:>20} {ms:>8}")
    return EXIT_OK


# --- verify


def parse_range(text: str, names: Sequence[str]) -> dict[str, list[int]]:
    """``m=0..3,k=1..4`` -> {"m": [0, 1, 2, 3], "k": [1, 2, 3, 4]}."""
    out: dict[str, list[int]] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        m = re.fullmatch(r"(\w+)\s*=\s*(\d+)(?:\s*\.\.\s*(\d+))?", item)
        if not m:
            raise CliError(EXIT_PARSE, f"error: bad range item {item!r} (expected NAME=LO..HI or NAME=V)")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) is not None else lo
        out[m.group(1)] = list(range(lo, hi + 1))
    missing = [n for n in names if n not in out]
    extra = [n for n in out if n not in names]
    if missing or extra:
        raise CliError(EXIT_PARSE, f"error: range must give exactly {', '.join(names)} (got {', '.join(out) or 'nothing'})")
    return out


def family_shapes(name: str, grid: dict[str, list[int]]) -> Iterator[ShapeSpec]:
    if name == "partitions":
        for n in grid["n"]:
            for p in partitions(n):
                yield Partition(p)
        return
    build = products.FAMILY_SHAPES[name]
    keys = FAMILY_PARAMS[name]
    for values in cartesian(*(grid[k] for k in keys)):
        try:
            products.FAMILY_COUNTS[name](*values)
        except ValueError:
            _err(f"skipping {name}{values}: outside the formula's range")
            continue
        yield build(*values)


def verify_shape(shape: ShapeSpec, memo_limit: int, seed: int | None) -> tuple[dict[str, int], list[str]]:
    """Run every applicable method; return the counts and any failure notes."""
    counts: dict[str, int] = {}
    notes: list[str] = []
    for name in methods.applicable(shape):
        try:
            if name == "oracle":
                poset = shape.poset()
                if seed is not None:
                    perm = list(range(poset.n))
                    random.Random(seed).shuffle(perm)
                    poset = poset.relabeled(perm)
                counts[name] = oracle.count_linear_extensions(poset, limit=memo_limit)
            else:
                counts[name] = methods.count_with(shape, name)
        except oracle.OracleLimitError as exc:
            notes.append(f"{name}: {exc}")
        except ArithmeticError as exc:
            notes.append(f"{name}: {exc}")
    if len(set(counts.values())) > 1:
        notes.append("disagreement: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return counts, notes


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.shape is None) == (args.family is None):
        raise CliError(EXIT_PARSE, "error: give either a shape or --family NAME --range PARAMS")
    if args.family is not None:
        if args.range is None:
            raise CliError(EXIT_PARSE, "error: --family needs --range")
        grid = parse_range(args.range, FAMILY_PARAMS[args.family])
        shapes = list(family_shapes(args.family, grid))
    else:
        shapes = [_parse(args.shape)]

    failures = 0
    for shape in shapes:
        counts, notes = verify_shape(shape, args.memo_limit, args.seed)
        summary = " ".join(f"{k}={v}" for k, v in counts.items())
        status = "OK" if not notes else "MISMATCH"
        print(f"{str(shape):<28} {summary}  {status}")
        for note in notes:
            _err(f"  {shape}: {note}")
        failures += bool(notes)
    print(f"{len(shapes)} shape(s) checked, {failures} failure(s)")
    return EXIT_DISAGREE if failures else EXIT_OK


# --- worked examples

SKEW_EXAMPLE_COUNT = 346632  # oracle-derived, checked against Aitken and the volume determinant


def worked_examples() -> list[tuple[str, int, dict[str, int]]]:
    """(label, stated value, {method: computed value}) for every numeric example."""
    rows = []

    def add(label: str, expected: int, spec: str, names: Sequence[str]) -> None:
        shape = parse_shape(spec)
        rows.append((label, expected, {n: methods.count_with(shape, n) for n in names}))

    add("f^{(4,2,1)}", 35, "4,2,1", ["hook", "aitken", "volume", "integrate", "oracle", "brute"])
    add("f^{(5,4,2)/(3,1)}", 169, "5,4,2/3,1", ["aitken", "volume", "oracle", "brute"])
    add("g^{(4,2,1)}", 7, "shifted:4,2,1", ["oracle", "brute"])
    add("f_{(2,3,4)}", 12, "rows:2,3,4", ["product", "oracle", "brute"])
    add("f_{(1,2,3)<(2,3,4)}", 72, "psyt:1,2,3<2,3,4", ["product", "oracle", "brute"])
    add("f^{(6,5,4,4,1)/(3,2,2)}", SKEW_EXAMPLE_COUNT, "6,5,4,4,1/3,2,2", ["aitken", "volume", "oracle"])
    add("f_{3,2,3(-1)}", 18, "rows:3,3,3 hole:2,2", ["product", "oracle", "brute"])
    for n, k in [(3, 2), (4, 2), (5, 3), (8, 4)]:
        m = max(k, 2)
        rows.append((
            f"S({n},{k})",
            stirling2(n, k),
            {
                "chain": as_integer(stirling2_by_chain(n, k, m)),
                "simplex": as_integer(stirling2_by_simplex(n, k, m)),
            },
        ))
    return rows


def cmd_paper_examples(args: argparse.Namespace) -> int:
    bad = 0
    for label, expected, got in worked_examples():
        ok = all(v == expected for v in got.values())
        bad += not ok
        via = ", ".join(f"{k}={v}" for k, v in got.items())
        print(f"{label} = {expected} {'OK' if ok else 'MISMATCH'}  [{via}]")
    return EXIT_DISAGREE if bad else EXIT_OK


# --- Monte Carlo


def cmd_mc(args: argparse.Namespace) -> int:
    shape = _parse(args.shape)
    if args.trials < 1:
        raise CliError(EXIT_PARSE, "error: --trials must be positive")
    try:
        report = montecarlo.estimate(shape, args.trials, args.seed)
    except oracle.OracleLimitError as exc:
        raise CliError(EXIT_MEMO, f"error: {exc}") from exc
    if args.json:
        print(json.dumps({"shape": str(shape), **report.as_dict()}, separators=(",", ":")))
    else:
        for key, value in [("shape", str(shape)), *report.as_dict().items()]:
            print(f"{key:<8} {value}")
    if not report.passed:
        _err(f"|z| = {abs(report.z_score):.3f} >= {montecarlo.Z_GATE}")
        return EXIT_MC
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sytcount", description="Exact counts of standard Young tableaux and variants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tableaux of one shape")
    p.add_argument("shape")
    p.add_argument("--method", default="auto", choices=("auto",) + methods.METHOD_NAMES)
    p.add_argument("--json", action="store_true")
    p.add_argument("--memo-limit", type=int, default=oracle.DEFAULT_MEMO_LIMIT)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check every applicable method")
    p.add_argument("shape", nargs="?")
    p.add_argument("--family", choices=tuple(FAMILY_PARAMS))
    p.add_argument("--range", help="e.g. m=0..3,k=1..4 or n=6")
    p.add_argument("--seed", type=int, default=None, help="relabel poset elements before running the oracle")
    p.add_argument("--memo-limit", type=int, default=oracle.DEFAULT_MEMO_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-examples", help="recompute the published numeric examples")
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("mc", help="Monte Carlo estimate of the order-statistics event")
    p.add_argument("shape")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _err(str(exc))
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
