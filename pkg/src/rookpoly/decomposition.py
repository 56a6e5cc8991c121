"""Recursive rook polynomial engine.

Every invocation first tries the cheap exits (empty board, single cell,
disjoint split, full rectangle, cache) and otherwise expands one node:
a pivot block ``S`` is chosen and

    R(B) = sum_j r_j(S) x^j R(B_{S,j})

is assembled, where ``B_{S,j}`` clears every cell of ``S`` and deletes the
first ``j`` rows and first ``j`` columns of ``S``.  A 1x1 pivot is the
classical cell recursion ``R(B) = R(B_e) + x R(B_i)``.
"""

from __future__ import annotations

import sys
import threading
from collections import Counter
from dataclasses import dataclass, field, replace

from .blocks import EXHAUSTIVE_MAX_CELLS, BlockRef, Strategy, choose_pivot, is_block
from .board import Board, CellRef, SubboardRef, clear_cells, delete_rows_cols, split_disjoint
from .cache import PolyCache
from .polynomial import RookPolynomial, poly_mul, poly_shift_add, rectangular_poly

BASE_KINDS = ("empty", "single-cell", "rectangle", "disjoint-split")

ONE = RookPolynomial((1,))
ZERO = RookPolynomial((0,))
ONE_PLUS_X = RookPolynomial((1, 1))

# above this many cells the engine runs on a thread with a large stack
_DEEP_CELLS = 300
_DEEP_STACK_BYTES = 512 * 1024 * 1024


@dataclass
class DecompositionStats:
    nodes_expanded: int = 0
    base_case_hits: Counter = field(default_factory=Counter)
    cache_hits: int = 0
    max_depth: int = 0

    @property
    def base_hits_total(self) -> int:
        return sum(self.base_case_hits.values())

    def to_text(self) -> str:
        lines = [f"nodes_expanded={self.nodes_expanded}"]
        for kind in BASE_KINDS:
            lines.append(f"base_{kind.replace('-', '_')}={self.base_case_hits[kind]}")
        lines.append(f"cache_hits={self.cache_hits}")
        lines.append(f"max_depth={self.max_depth}")
        return "\n".join(lines)


def inclusion_board(b: Board, s: BlockRef, j: int) -> Board:
    """The j-th inclusion board of ``b`` relative to block ``s``."""
    if not is_block(b, s):
        raise ValueError(f"{s} is not a block of this board")
    if not 0 <= j <= min(len(s.rows), len(s.cols)):
        raise ValueError(f"j={j} outside 0..{min(len(s.rows), len(s.cols))}")
    return delete_rows_cols(clear_cells(b, s), s.rows[:j], s.cols[:j])


def decompose_cell(b: Board, c: CellRef) -> tuple[Board, Board]:
    """(board without the cell, board without the cell's row and column)."""
    i, j = c
    if (i, j) not in b:
        raise ValueError(f"({i}, {j}) is not a cell of the board")
    excluded = clear_cells(b, SubboardRef((i,), (j,)))
    return excluded, delete_rows_cols(b, (i,), (j,))


class _Engine:
    def __init__(self, strategy: Strategy, cache: PolyCache | None):
        self.strategy = strategy
        self.cache = cache
        self.stats = DecompositionStats()

    def _base(self, kind: str, p: RookPolynomial) -> RookPolynomial:
        self.stats.base_case_hits[kind] += 1
        return p

    def solve(self, b: Board, depth: int = 1) -> RookPolynomial:
        st = self.stats
        if depth > st.max_depth:
            st.max_depth = depth
        b = b.compact()
        cells = b.cell_count()
        if cells == 0:
            return self._base("empty", ONE)
        if cells == 1:
            return self._base("single-cell", ONE_PLUS_X)
        strat = self.strategy
        if strat.use_disjoint_split:
            parts = split_disjoint(b)
            if len(parts) > 1:
                st.base_case_hits["disjoint-split"] += 1
                p = ONE
                for part in parts:
                    p = poly_mul(p, self.solve(part, depth + 1))
                return p
        if strat.use_rectangle_closed_form and b.is_full_rectangle():
            return self._base("rectangle", rectangular_poly(b.num_rows, b.num_cols))
        if self.cache is not None:
            hit = self.cache.get(b)
            if hit is not None:
                st.cache_hits += 1
                return hit

        st.nodes_expanded += 1
        pivot = choose_pivot(b, strat)
        result = self._expand(b, pivot, depth)
        if self.cache is not None:
            self.cache.put(b, result)
        return result

    def _expand(self, b: Board, s: BlockRef, depth: int, cell_rule: bool = True) -> RookPolynomial:
        if cell_rule and len(s.rows) == 1 and len(s.cols) == 1:
            excluded, included = decompose_cell(b, CellRef(s.rows[0], s.cols[0]))
            return poly_shift_add(self.solve(excluded, depth + 1),
                                  self.solve(included, depth + 1), 1, 1)
        sb = b.subboard(s)
        if sb.cell_count() == s.area:
            block_poly = rectangular_poly(*s.shape)
        else:
            block_poly = self.solve(sb, depth + 1)
        cleared = clear_cells(b, s)
        total = ZERO
        for j, r in enumerate(block_poly.coeffs):
            if r:
                sub = delete_rows_cols(cleared, s.rows[:j], s.cols[:j])
                total = poly_shift_add(total, self.solve(sub, depth + 1), r, j)
        return total


def rook_polynomial(b: Board, strategy: Strategy | None = None,
                    cache: PolyCache | None = None) -> tuple[RookPolynomial, DecompositionStats]:
    """Exact rook polynomial of ``b`` plus instrumentation.

    ``cache`` lets several calls share one memo table; by default each call
    with ``use_cache`` gets a private one.
    """
    if strategy is None:
        strategy = Strategy()
    cells = b.cell_count()
    if strategy.name == "exhaustive-best" and cells > EXHAUSTIVE_MAX_CELLS:
        # the search is only affordable on small boards
        strategy = replace(strategy, name="greedy-block")
    if cache is None and strategy.use_cache:
        cache = PolyCache()
    elif not strategy.use_cache:
        cache = None
    engine = _Engine(strategy, cache)
    if cells <= _DEEP_CELLS:
        return engine.solve(b), engine.stats
    return _run_deep(lambda: engine.solve(b), 4 * cells + 1000), engine.stats


def decompose_by(b: Board, s: BlockRef, strategy: Strategy | None = None
                 ) -> tuple[RookPolynomial, DecompositionStats]:
    """Rook polynomial with the root pivot forced to block ``s``.

    The block sum is used even for a 1x1 block, so the result can be compared
    with the cell recursion.  Sub-boards are solved by ``strategy``.
    """
    if not is_block(b, s):
        raise ValueError(f"{s} is not a block of this board")
    if strategy is None:
        strategy = Strategy()
    engine = _Engine(strategy, PolyCache() if strategy.use_cache else None)
    engine.stats.nodes_expanded += 1
    engine.stats.max_depth = 1
    return engine._expand(b, s, 1, cell_rule=False), engine.stats


def _run_deep(fn, frames: int):
    """Call ``fn`` on a fresh thread with room for ``frames`` nested calls."""
    if sys.getrecursionlimit() < frames:
        sys.setrecursionlimit(frames)
    box: dict = {}

    def target():
        try:
            box["value"] = fn()
        except BaseException as exc:  # re-raised on the caller's thread
            box["error"] = exc

    old = threading.stack_size()
    threading.stack_size(_DEEP_STACK_BYTES)
    try:
        t = threading.Thread(target=target)
        t.start()
    finally:
        threading.stack_size(old)
    t.join()
    if "error" in box:
        raise box["error"]
    return box["value"]
