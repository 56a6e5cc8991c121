"""Command-line front end.

    rookpoly compute BOARD [--strategy NAME] [--stats] [--oracle-check]
                           [--no-rect] [--no-split] [--no-cache]
    rookpoly generate KIND PARAMS... [--seed N]
    rookpoly bench DIR [--strategies a,b,c] [--no-rect] [--no-split] [--no-cache] [--jobs N]

Exit status: 0 ok, 2 usage or parse error, 3 integrity failure (oracle
mismatch, strategies disagreeing).
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .blocks import STRATEGIES, Strategy
from .board import Board, ParseError, parse_board
from .decomposition import rook_polynomial
from .generators import KINDS, generate
from .oracle import OracleTooLarge, oracle_counts

EXIT_OK, EXIT_USAGE, EXIT_INTEGRITY = 0, 2, 3

TSV_COLUMNS = ("board_id", "strategy", "poly", "nodes", "base_hits", "cache_hits", "depth", "micros")


class CliError(Exception):
    def __init__(self, message: str, status: int = EXIT_USAGE):
        super().__init__(message)
        self.status = status


def _strategy(name: str, args) -> Strategy:
    return Strategy(name,
                    use_rectangle_closed_form=not args.no_rect,
                    use_disjoint_split=not args.no_split,
                    use_cache=not args.no_cache)


def _read_board(path: str) -> Board:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_board(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def cmd_compute(args, out=None) -> int:
    out = out or sys.stdout
    board = _read_board(args.file)
    poly, stats = rook_polynomial(board, _strategy(args.strategy, args))
    if args.oracle_check:
        try:
            expected = oracle_counts(board)
        except OracleTooLarge:
            print("oracle check skipped: board too large for oracle", file=sys.stderr)
        else:
            if list(poly.coeffs) != expected:
                raise CliError(f"oracle mismatch: engine {poly.to_csv()} vs oracle "
                               f"{','.join(map(str, expected))}", EXIT_INTEGRITY)
    print(poly, file=out)
    if args.stats:
        print(stats.to_text(), file=out)
    return EXIT_OK


def cmd_generate(args, out=None) -> int:
    out = out or sys.stdout
    params = list(args.params)
    if args.kind == "random":
        if args.seed is not None:
            if len(params) == 4:
                params[3] = str(args.seed)
            else:
                params.append(str(args.seed))
        elif len(params) == 3:
            raise CliError("random needs a seed: give it as the 4th parameter or with --seed")
    elif args.seed is not None:
        raise CliError(f"--seed does not apply to {args.kind}")
    try:
        board = generate(args.kind, params)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(board.render(), file=out)
    return EXIT_OK


@dataclass(frozen=True)
class BenchRow:
    board_id: str
    strategy: str
    poly: str
    nodes: int
    base_hits: int
    cache_hits: int
    depth: int
    micros: int

    def tsv(self) -> str:
        return "\t".join(str(getattr(self, c)) for c in TSV_COLUMNS)


def _bench_one(task) -> BenchRow:
    board_id, board, strategy = task
    t0 = time.perf_counter_ns()
    poly, stats = rook_polynomial(board, strategy)
    micros = (time.perf_counter_ns() - t0) // 1000
    return BenchRow(board_id, strategy.name, poly.to_csv(), stats.nodes_expanded,
                    stats.base_hits_total, stats.cache_hits, stats.max_depth, micros)


def load_corpus(directory: str) -> list[tuple[str, Board]]:
    root = Path(directory)
    if not root.is_dir():
        raise CliError(f"{directory} is not a directory")
    corpus = []
    for path in sorted(p for p in root.iterdir() if p.is_file() and not p.name.startswith(".")):
        corpus.append((path.stem, _read_board(str(path))))
    return corpus


def run_bench(corpus, strategies: list[Strategy], jobs: int = 1) -> list[BenchRow]:
    tasks = [(bid, board, s) for bid, board in corpus for s in strategies]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_one, tasks))
    else:
        rows = [_bench_one(t) for t in tasks]
    return sorted(rows, key=lambda r: (r.board_id, r.strategy))


def disagreements(rows: list[BenchRow]) -> list[str]:
    by_board: dict[str, set[str]] = {}
    for r in rows:
        by_board.setdefault(r.board_id, set()).add(r.poly)
    return [bid for bid, polys in by_board.items() if len(polys) > 1]


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    for name in names:
        if name not in STRATEGIES:
            raise CliError(f"unknown strategy {name!r}")
    corpus = load_corpus(args.dir)
    rows = run_bench(corpus, [_strategy(n, args) for n in names], args.jobs)
    print("\t".join(TSV_COLUMNS), file=out)
    for r in rows:
        print(r.tsv(), file=out)
    bad = disagreements(rows)
    if bad:
        raise CliError(f"strategies disagree on: {', '.join(bad)}", EXIT_INTEGRITY)
    return EXIT_OK


def _add_shortcut_flags(p):
    p.add_argument("--no-rect", action="store_true", help="disable the full-rectangle closed form")
    p.add_argument("--no-split", action="store_true", help="disable splitting into disjoint pieces")
    p.add_argument("--no-cache", action="store_true", help="disable memoization")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rookpoly", description="Rook polynomials by block decomposition.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print the rook polynomial of a board file")
    p.add_argument("file")
    p.add_argument("--strategy", default="greedy-block", choices=STRATEGIES)
    p.add_argument("--stats", action="store_true", help="also print decomposition counters")
    p.add_argument("--oracle-check", action="store_true",
                   help="verify against brute-force enumeration (exit 3 on mismatch)")
    _add_shortcut_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="print a generated board")
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("params", nargs="*",
                   help="rectangle M N | staircase N | random M N DENSITY [SEED] | bridged M1 N1 M2 N2 BS BT")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run strategies over a directory of boards, TSV to stdout")
    p.add_argument("dir")
    p.add_argument("--strategies", default=",".join(STRATEGIES))
    p.add_argument("--jobs", type=int, default=1)
    _add_shortcut_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"rookpoly: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
