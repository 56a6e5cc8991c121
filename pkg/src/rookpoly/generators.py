"""Deterministic board families for corpora and benchmarks."""

from __future__ import annotations

from .board import Board

LCG_MUL = 6364136223846793005
LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1

KINDS = {"rectangle": 2, "staircase": 1, "random": 4, "bridged": 6}


def rectangle(m: int, n: int) -> Board:
    _nonneg(m=m, n=n)
    return Board.full(m, n)


def staircase(n: int) -> Board:
    """Row ``i`` holds columns ``0..i``."""
    _nonneg(n=n)
    return Board(n, n, tuple((1 << (i + 1)) - 1 for i in range(n)))


def lcg_stream(seed: int):
    """Uniform floats in [0, 1) from the top 53 bits of a 64-bit LCG."""
    x = seed & _MASK64
    while True:
        x = (LCG_MUL * x + LCG_INC) & _MASK64
        yield (x >> 11) / (1 << 53)


def random_board(m: int, n: int, density: float, seed: int) -> Board:
    """Each cell, in row-major order, is present iff the next draw is below ``density``."""
    _nonneg(m=m, n=n)
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    draws = lcg_stream(seed)
    rows = []
    for _ in range(m):
        r = 0
        for j in range(n):
            if next(draws) < density:
                r |= 1 << j
        rows.append(r)
    return Board(m, n, tuple(rows))


def bridged(m1: int, n1: int, m2: int, n2: int, bs: int, bt: int) -> Board:
    """Two full rectangles on disjoint rows and columns, joined by a small full block.

    The first rectangle is rows ``0..m1-1`` x cols ``0..n1-1``, the second
    rows ``m1..m1+m2-1`` x cols ``n1..n1+n2-1``.  The bridge fills rows
    ``0..bs-1`` (of the first) x cols ``n1..n1+bt-1`` (of the second).
    """
    _nonneg(m1=m1, n1=n1, m2=m2, n2=n2, bs=bs, bt=bt)
    if bs > m1 or bt > n2:
        raise ValueError("bridge must fit inside the first rectangle's rows and the second's columns")
    first = (1 << n1) - 1
    second = ((1 << n2) - 1) << n1
    bridge = ((1 << bt) - 1) << n1
    rows = [first | (bridge if i < bs else 0) for i in range(m1)]
    rows += [second] * m2
    return Board(m1 + m2, n1 + n2, tuple(rows))


def generate(kind: str, params: list[str]) -> Board:
    """Build a board from CLI-style string parameters."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    if len(params) != KINDS[kind]:
        raise ValueError(f"{kind} takes {KINDS[kind]} parameters, got {len(params)}")
    try:
        if kind == "random":
            return random_board(int(params[0]), int(params[1]), float(params[2]), int(params[3]))
        ints = [int(p) for p in params]
    except ValueError as exc:
        raise ValueError(f"bad parameter: {exc}") from None
    return {"rectangle": rectangle, "staircase": staircase, "bridged": bridged}[kind](*ints)


def _nonneg(**kw):
    for k, v in kw.items():
        if v < 0:
            raise ValueError(f"{k} must be nonnegative")
