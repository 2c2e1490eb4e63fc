"""Command-line interface.

Subcommands: find (locate occurrences), witness (emit a lower-bound
witness string), verify (cross-check the search against the brute-force
reference), bench (timing harness). Exit codes: 0 success, 1 verification
mismatch, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import oracle, witness
from .search import (
    ENGINES,
    CountingSink,
    CollectingSink,
    HitSink,
    SearchOptions,
    _fast_available,
    find_all,
)
from .text import Text, from_bytes, from_symbols


@dataclass(frozen=True, slots=True)
class OutputRecord:
    """One reported hit in the selected coordinate convention: 0-based
    half-open by default, 1-based inclusive with --one-based."""

    start: int
    end: int
    anti_period: int
    order: int

    @classmethod
    def for_hit(cls, start: int, anti_period: int, order: int, one_based: bool) -> "OutputRecord":
        span = order * anti_period
        if one_based:
            return cls(start + 1, start + span, anti_period, order)
        return cls(start, start + span, anti_period, order)

    def as_tsv(self) -> str:
        return f"{self.start}\t{self.end}\t{self.anti_period}\t{self.order}"

    def as_json(self) -> str:
        return json.dumps(
            {
                "start": self.start,
                "end": self.end,
                "anti_period": self.anti_period,
                "order": self.order,
            }
        )


class _StreamSink(HitSink):
    """Formats hits as TSV or JSON lines while the search runs."""

    def __init__(self, out: TextIO, order: int, one_based: bool, as_json: bool) -> None:
        self.out = out
        self.order = order
        self.one_based = one_based
        self.as_json = as_json

    def on_hits(self, anti_period: int, starts) -> None:
        lines = []
        for s in starts:
            record = OutputRecord.for_hit(int(s), anti_period, self.order, self.one_based)
            lines.append(record.as_json() if self.as_json else record.as_tsv())
        self.out.write("\n".join(lines))
        self.out.write("\n")


def _read_input(path: str, strip_newline: bool) -> bytes:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if strip_newline:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_find(args: argparse.Namespace) -> int:
    if args.order < 2:
        return _fail(f"order must be at least 2, got {args.order}")
    try:
        data = _read_input(args.input, args.strip_newline)
    except OSError as exc:
        return _fail(str(exc))
    text = from_bytes(data)
    try:
        options = SearchOptions(
            min_anti_period=args.min_anti_period,
            max_anti_period=args.max_anti_period,
            engine=args.engine,
        )
    except ValueError as exc:
        return _fail(str(exc))
    if args.count_only:
        count = find_all(text, args.order, options)
        print(count)
    else:
        sink = _StreamSink(sys.stdout, args.order, args.one_based, args.json)
        find_all(text, args.order, options, sink)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    if args.m < 0:
        return _fail("m must be >= 0")
    text = witness.generate(args.m)
    print(text.to_bytes().decode("ascii"))
    if args.bound is not None:
        if args.bound < 2:
            return _fail("--bound order must be at least 2")
        params = witness.witness_params(args.m)
        value = witness.lower_bound_value(params.n, args.bound, max(1, args.m))
        print(f"n={params.n} k={args.bound} bound={value}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 2:
        return _fail(f"order must be at least 2, got {args.order}")
    try:
        data = _read_input(args.input, args.strip_newline)
    except OSError as exc:
        return _fail(str(exc))
    if len(data) > args.limit:
        return _fail(f"input length {len(data)} exceeds verification limit {args.limit}")
    text = from_bytes(data)
    collector = CollectingSink()
    find_all(text, args.order, SearchOptions(engine=args.engine), collector)
    found = set(collector.pairs)
    expected = {(h.start, h.anti_period) for h in oracle.enumerate_all(text, args.order)}
    if found == expected:
        print(f"verified: {len(found)} hits agree (n={text.n}, k={args.order})")
        return 0
    missing = sorted(expected - found)
    extra = sorted(found - expected)
    print(f"MISMATCH: search found {len(found)} hits, reference found {len(expected)}")
    for start, p in missing[:20]:
        print(f"missing\tstart={start}\tanti_period={p}")
    for start, p in extra[:20]:
        print(f"extra\tstart={start}\tanti_period={p}")
    return 1


def _bench_text(kind: str, size: int, rng: random.Random) -> Text:
    if kind == "random":
        return from_bytes(bytes(rng.choice(b"ab") for _ in range(size)))
    if kind == "distinct":
        return from_symbols(range(size))
    # witness: smallest parameter whose string reaches the requested size
    m = 1
    while witness.witness_params(m).n < size:
        m *= 2
    lo, hi = m // 2, m
    while lo < hi:
        mid = (lo + hi) // 2
        if witness.witness_params(mid).n < size:
            lo = mid + 1
        else:
            hi = mid
    return witness.generate(lo)


def cmd_bench(args: argparse.Namespace) -> int:
    if args.order < 2:
        return _fail(f"order must be at least 2, got {args.order}")
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        return _fail(f"bad --sizes value: {args.sizes!r}")
    if not sizes or any(s < 1 for s in sizes):
        return _fail("--sizes must be positive integers")
    rng = random.Random(args.seed)
    # a throwaway run compiles and caches the fast engine so the first
    # timed row is not charged for JIT work
    if args.engine != "python" and _fast_available():
        find_all(_bench_text("random", 64, random.Random(0)), 2, SearchOptions(engine="fast"))
    print("n,k,seconds,hits")
    for size in sizes:
        text = _bench_text(args.kind, size, rng)
        sink = CountingSink()
        started = time.perf_counter()
        hits = find_all(text, args.order, SearchOptions(engine=args.engine), sink)
        elapsed = time.perf_counter() - started
        print(f"{text.n},{args.order},{elapsed:.6f},{hits}", flush=True)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antipower",
        description="Find substrings made of k consecutive pairwise-distinct equal-length blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    find_p = sub.add_parser("find", help="locate all anti-power occurrences of a given order")
    find_p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin (default)")
    find_p.add_argument("-k", "--order", type=int, required=True, help="number of blocks (>= 2)")
    find_p.add_argument("--min-anti-period", type=int, default=1, metavar="P")
    find_p.add_argument("--max-anti-period", type=int, default=None, metavar="P")
    find_p.add_argument(
        "--one-based",
        action="store_true",
        help="report 1-based inclusive coordinates instead of 0-based half-open",
    )
    find_p.add_argument("--json", action="store_true", help="one JSON object per hit instead of TSV")
    find_p.add_argument("--count-only", action="store_true", help="print only the number of hits")
    find_p.add_argument("--engine", choices=ENGINES, default="auto")
    find_p.add_argument(
        "--strip-newline",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="drop one trailing newline from the input (default: on)",
    )
    find_p.set_defaults(func=cmd_find)

    wit_p = sub.add_parser("witness", help="print a dense-with-occurrences witness string")
    wit_p.add_argument("m", type=int, help="witness parameter (>= 0)")
    wit_p.add_argument(
        "--bound",
        type=int,
        default=None,
        metavar="K",
        help="also print the certified occurrence lower bound for order K",
    )
    wit_p.set_defaults(func=cmd_witness)

    ver_p = sub.add_parser("verify", help="cross-check the search against the brute-force reference")
    ver_p.add_argument("input", nargs="?", default="-")
    ver_p.add_argument("-k", "--order", type=int, required=True)
    ver_p.add_argument("--limit", type=int, default=1000, help="refuse inputs longer than this")
    ver_p.add_argument("--engine", choices=ENGINES, default="auto")
    ver_p.add_argument(
        "--strip-newline", action=argparse.BooleanOptionalAction, default=True
    )
    ver_p.set_defaults(func=cmd_verify)

    bench_p = sub.add_parser("bench", help="time the search over generated inputs, CSV output")
    bench_p.add_argument("-k", "--order", type=int, required=True)
    bench_p.add_argument("--sizes", default="50000,100000", help="comma-separated input lengths")
    bench_p.add_argument(
        "--kind", choices=("random", "distinct", "witness"), default="random",
        help="input family: random binary, all-distinct symbols, or witness strings",
    )
    bench_p.add_argument("--seed", type=int, default=1)
    bench_p.add_argument("--engine", choices=ENGINES, default="auto")
    bench_p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
