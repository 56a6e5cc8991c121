"""Brute-force rook placement counts.

Ground truth for the decomposition engine.  Deliberately self-contained:
nothing here touches the polynomial or decomposition code, only the raw
row bitsets of a :class:`~rookpoly.board.Board`.
"""

from __future__ import annotations

from functools import lru_cache

from .board import Board

MAX_CELLS = 64
MAX_SIDE = 12


class OracleTooLarge(ValueError):
    pass


def oracle_counts(b: Board) -> list[int]:
    """Number of k-rook placements on ``b`` for k = 0, 1, ...

    Rows are visited in order; each is either left empty or given one of its
    cells whose column is still unused.  Partial results are memoized on
    (row index, used-column set).  Trailing zeros are dropped, so the result
    has length ``max_k + 1`` where ``max_k`` is the largest placeable count.
    """
    if b.cell_count() > MAX_CELLS or min(b.num_rows, b.num_cols) > MAX_SIDE:
        raise OracleTooLarge("board too large for oracle")
    rows = b.rows
    m = len(rows)

    @lru_cache(maxsize=None)
    def count(i: int, used: int) -> tuple[int, ...]:
        if i == m:
            return (1,)
        # skip row i
        total = list(count(i + 1, used))
        free = rows[i] & ~used
        while free:
            bit = free & -free
            free ^= bit
            sub = count(i + 1, used | bit)
            if len(total) < len(sub) + 1:
                total.extend([0] * (len(sub) + 1 - len(total)))
            for k, c in enumerate(sub):
                total[k + 1] += c
        return tuple(total)

    out = list(count(0, 0))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def enumerate_placements(b: Board, k: int) -> list[tuple[tuple[int, int], ...]]:
    """Every placement of exactly ``k`` rooks, as sorted cell tuples.  Small boards only."""
    cells = b.cells()
    found = []

    def walk(start, chosen, used_rows, used_cols):
        if len(chosen) == k:
            found.append(tuple(chosen))
            return
        for idx in range(start, len(cells)):
            i, j = cells[idx]
            if used_rows >> i & 1 or used_cols >> j & 1:
                continue
            chosen.append((i, j))
            walk(idx + 1, chosen, used_rows | 1 << i, used_cols | 1 << j)
            chosen.pop()

    walk(0, [], 0, 0)
    return found
