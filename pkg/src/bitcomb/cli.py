"""``bitcomb`` command line: generate, verify and benchmark popcount classes.

Exit codes: 0 success, 1 verify mismatch, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Sequence, TextIO

import numpy as np

from .combcore import check_capacity, combination_sequence, difference_sequence
from .oracle import (
    FILTER_MAX_WIDTH,
    EngineKind,
    binomial,
    filter_by_popcount,
    gosper_sequence,
    iter_gosper,
)
from .params import DEFAULT_MAX_ELEMENTS, CapacityError, InvalidParams, Params

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

FORMATS = ("dec", "bin", "hex")
MODES = ("seq", "diff")
BENCH_HEADER = ["engine", "n", "k", "cardinality", "elapsed_ns_median", "throughput_elems_per_s"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class BenchRecord:
    engine: EngineKind
    n: int
    k: int
    cardinality: int
    elapsed_ns: int
    throughput_elems_per_s: Fraction

    def row(self) -> list:
        return [
            self.engine.value,
            self.n,
            self.k,
            self.cardinality,
            self.elapsed_ns,
            f"{float(self.throughput_elems_per_s):.1f}",
        ]


def _check_engine(params: Params, engine: EngineKind) -> None:
    if engine is EngineKind.FILTER and params.n > FILTER_MAX_WIDTH:
        raise CapacityError(f"filter engine limited to n <= {FILTER_MAX_WIDTH}, got n={params.n}")


def generate(params: Params, engine: EngineKind, max_elements: int = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """Materialize the class with the chosen engine, as a uint64 array."""
    _check_engine(params, engine)
    if engine is EngineKind.DIFF:
        return combination_sequence(params, max_elements).values
    check_capacity(params, max_elements)
    if engine is EngineKind.GOSPER:
        return gosper_sequence(params).values
    return filter_by_popcount(params).values


def generate_values(
    params: Params,
    engine: EngineKind,
    mode: str = "seq",
    limit: int | None = None,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> list[int]:
    """Values that ``bitcomb gen`` prints, before formatting.

    The gosper engine streams and stops after ``limit`` values; the other
    engines build the whole class first and cut afterwards.
    """
    if engine is EngineKind.GOSPER and limit is not None:
        wanted = limit if mode == "seq" else limit + 1
        members = list(islice(iter_gosper(params), wanted))
        if mode == "seq":
            return members
        return [b - a for a, b in zip(members, members[1:])]
    if mode == "diff" and engine is EngineKind.DIFF:
        values = difference_sequence(params, max_elements).values
    else:
        values = generate(params, engine, max_elements)
        if mode == "diff":
            values = np.diff(values)
    if limit is not None:
        values = values[:limit]
    return values.tolist()


def format_values(values: Iterable[int], fmt: str, width: int) -> str:
    if fmt == "dec":
        lines = map(str, values)
    elif fmt == "hex":
        lines = (format(v, "x") for v in values)
    elif fmt == "bin":
        spec = f"0{width}b"
        lines = (format(v, spec) for v in values)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    text = "\n".join(lines)
    return text + "\n" if text else ""


def run_generate(
    n: int,
    k: int,
    engine: EngineKind | str = EngineKind.DIFF,
    fmt: str = "dec",
    mode: str = "seq",
    limit: int | None = None,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    out: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    engine = EngineKind(engine)
    if mode not in MODES:
        raise UsageError(f"unknown mode {mode!r}")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if limit is not None and limit < 0:
        raise UsageError("--limit must be >= 0")
    params = Params(n, k)
    values = generate_values(params, engine, mode, limit, max_elements)
    out.write(format_values(values, fmt, n))
    return EXIT_OK


def _first_mismatch(expected: np.ndarray, actual: np.ndarray) -> tuple[int, object, object] | None:
    size = min(len(expected), len(actual))
    bad = np.flatnonzero(expected[:size] != actual[:size])
    if bad.size:
        i = int(bad[0])
        return i, int(expected[i]), int(actual[i])
    if len(expected) != len(actual):
        exp = int(expected[size]) if size < len(expected) else "<end>"
        act = int(actual[size]) if size < len(actual) else "<end>"
        return size, exp, act
    return None


def run_verify(n_max: int = 16, out: TextIO | None = None) -> int:
    """Check that all three engines agree on every class with n <= n_max."""
    out = out or sys.stdout
    if not 1 <= n_max <= 16:
        raise UsageError(f"--n-max must satisfy 1 <= n-max <= 16, got {n_max}")
    checked = 0
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            params = Params(n, k)
            expected = filter_by_popcount(params).values
            for engine in (EngineKind.DIFF, EngineKind.GOSPER):
                found = _first_mismatch(expected, generate(params, engine))
                if found is not None:
                    index, exp, act = found
                    out.write(
                        f"mismatch: engine={engine.value} n={n} k={k} index={index} "
                        f"expected={exp} actual={act}\n"
                    )
                    return EXIT_MISMATCH
            checked += 1
    out.write(f"checked {checked} classes: OK\n")
    return EXIT_OK


def time_engine(params: Params, engine: EngineKind, repetitions: int, max_elements: int) -> int:
    """Median wall time in ns over ``repetitions`` generations."""
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        generate(params, engine, max_elements)
        samples.append(max(time.perf_counter_ns() - start, 1))
    return int(statistics.median(samples))


def bench_records(
    pairs: Sequence[tuple[int, int]],
    engines: Sequence[EngineKind],
    repetitions: int = 5,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> Iterable[BenchRecord]:
    for n, k in pairs:
        params = Params(n, k)
        cardinality = binomial(n, k)
        for engine in engines:
            elapsed = time_engine(params, engine, repetitions, max_elements)
            yield BenchRecord(engine, n, k, cardinality, elapsed, Fraction(cardinality * 10**9, elapsed))


def run_bench(
    pairs: Sequence[tuple[int, int]],
    engines: Sequence[EngineKind | str] = (EngineKind.DIFF, EngineKind.GOSPER),
    repetitions: int = 5,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    out: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    engines = [EngineKind(e) for e in engines]
    if repetitions < 3:
        raise UsageError(f"--reps must be >= 3, got {repetitions}")
    # Validate everything up front so a bad pair never leaves a half-written CSV.
    for n, k in pairs:
        params = Params(n, k)
        for engine in engines:
            _check_engine(params, engine)
        check_capacity(params, max_elements)
    writer = csv.writer(out)
    writer.writerow(BENCH_HEADER)
    for record in bench_records(pairs, engines, repetitions, max_elements):
        writer.writerow(record.row())
    return EXIT_OK


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        try:
            n, k = item.split(":")
            pairs.append((int(n), int(k)))
        except ValueError:
            raise UsageError(f"bad pair {item!r}, expected n:k") from None
    return pairs


def parse_engines(text: str) -> list[EngineKind]:
    try:
        return [EngineKind(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitcomb", description="Enumerate n-bit integers with exactly k bits set."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print one popcount class")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--engine", choices=[e.value for e in EngineKind], default="diff")
    gen.add_argument("--format", choices=FORMATS, default="dec")
    gen.add_argument("--mode", choices=MODES, default="seq")
    gen.add_argument("--limit", type=int)
    gen.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)

    verify = sub.add_parser("verify", help="cross-check the three engines")
    verify.add_argument("--n-max", type=int, default=16)

    bench = sub.add_parser("bench", help="time engines, CSV on stdout")
    bench.add_argument("--pairs", default="", help="comma separated n:k list")
    bench.add_argument("--engines", default="diff,gosper")
    bench.add_argument("--reps", type=int, default=5)
    bench.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return run_generate(
                args.n, args.k, args.engine, args.format, args.mode, args.limit, args.max_elements
            )
        if args.command == "verify":
            return run_verify(args.n_max)
        return run_bench(
            parse_pairs(args.pairs), parse_engines(args.engines), args.reps, args.max_elements
        )
    except (UsageError, InvalidParams) as exc:
        print(f"bitcomb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"bitcomb: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK


def run() -> None:
    sys.exit(main())
