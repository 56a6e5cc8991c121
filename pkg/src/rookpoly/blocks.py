"""Block detection and pivot-selection strategies.

A block is a set of rows ``R`` and columns ``C`` such that the rows of
``R`` are identical outside ``C`` and the columns of ``C`` are identical
outside ``R``.  Any single cell is a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .board import Board, SubboardRef, _check_indices, clear_cells, delete_rows_cols, \
    normalize, split_disjoint

BlockRef = SubboardRef

STRATEGIES = ("cell-first", "cell-last", "largest-block", "greedy-block", "exhaustive-best")
DEFAULT_MAX_CANDIDATES = 64
EXHAUSTIVE_MAX_CELLS = 16


class NoCellsError(ValueError):
    pass


class StrategyError(ValueError):
    pass


@dataclass(frozen=True)
class Strategy:
    name: str = "greedy-block"
    use_rectangle_closed_form: bool = True
    use_disjoint_split: bool = True
    use_cache: bool = True
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        if self.name not in STRATEGIES:
            raise StrategyError(f"unknown strategy {self.name!r}; choose from {', '.join(STRATEGIES)}")

    @classmethod
    def bare(cls, name: str, **kw) -> "Strategy":
        """All shortcuts off."""
        kw.setdefault("use_rectangle_closed_form", False)
        kw.setdefault("use_disjoint_split", False)
        kw.setdefault("use_cache", False)
        return cls(name, **kw)


def is_block(b: Board, sub: SubboardRef) -> bool:
    _check_indices(b, sub.rows, sub.cols)
    cmask = sub.col_mask
    outside = ((1 << b.num_cols) - 1) & ~cmask
    if sub.rows:
        ref = b.rows[sub.rows[0]] & outside
        if any(b.rows[i] & outside != ref for i in sub.rows):
            return False
    row_set = set(sub.rows)
    for i, r in enumerate(b.rows):
        if i not in row_set:
            v = r & cmask
            if v and v != cmask:
                return False
    return True


def block_cell_count(b: Board, sub: SubboardRef) -> int:
    cmask = sub.col_mask
    return sum(bin(b.rows[i] & cmask).count("1") for i in sub.rows)


def _closure(rows: tuple[int, ...], rmask: int, cmask: int) -> tuple[int, int]:
    m = len(rows)
    while True:
        members = [i for i in range(m) if rmask >> i & 1]
        if members:
            ref = rows[members[0]]
            dis = 0
            for i in members:
                dis |= rows[i] ^ ref
            new_c = cmask | dis
        else:
            new_c = cmask
        new_r = rmask
        for i in range(m):
            if not rmask >> i & 1:
                v = rows[i] & new_c
                if v and v != new_c:
                    new_r |= 1 << i
        if new_r == rmask and new_c == cmask:
            return rmask, cmask
        rmask, cmask = new_r, new_c


def _twin_masks(lines: tuple[int, ...]) -> dict[int, int]:
    """Bitset value -> mask of every line holding exactly that value."""
    out: dict[int, int] = {}
    for i, v in enumerate(lines):
        out[v] = out.get(v, 0) | 1 << i
    return out


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def find_blocks(b: Board, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> list[BlockRef]:
    """Blocks grown from single cells, row pairs and column pairs.

    Besides the bare cell, every cell also seeds the block spanned by all
    rows equal to its row and all columns equal to its column.

    Each seed is closed under two rules until nothing changes: columns on
    which the chosen rows disagree join the block, and outside rows that
    are partly (not wholly) inside the chosen columns join too.  A pair of
    identical rows would never gain a column that way, so it starts instead
    from every row equal to it together with their common support (and
    likewise for identical columns).

    Sorted by area descending, then by (rows, cols); truncated to
    ``max_candidates``.
    """
    cells = b.cells()
    if not cells:
        raise NoCellsError("no cells")
    rows = b.rows
    cols = b.columns()
    m, n = b.num_rows, b.num_cols

    row_twins = _twin_masks(rows)
    col_twins = _twin_masks(cols)
    seeds: list[tuple[int, int]] = [(1 << i, 1 << j) for i, j in cells]
    seeds += [(row_twins[rows[i]], col_twins[cols[j]]) for i, j in cells]
    for i in range(m):
        for k in range(i + 1, m):
            if rows[i] != rows[k]:
                seeds.append((1 << i | 1 << k, 0))
            elif rows[i]:
                seeds.append((row_twins[rows[i]], rows[i]))
    for j in range(n):
        for k in range(j + 1, n):
            if cols[j] != cols[k]:
                seeds.append((0, 1 << j | 1 << k))
            elif cols[j]:
                seeds.append((cols[j], col_twins[cols[j]]))

    found: set[tuple[int, int]] = set()
    for rm, cm in seeds:
        rm, cm = _closure(rows, rm, cm)
        if rm and cm:
            found.add((rm, cm))

    blocks = [SubboardRef(_indices(rm), _indices(cm)) for rm, cm in found]
    blocks.sort(key=SubboardRef.sort_key)
    return blocks[:max_candidates]


def is_productive(b: Board, sub: SubboardRef, total_cells: int | None = None) -> bool:
    """A pivot that strictly shrinks the problem.

    The block must hold a cell, and must not hold every cell unless it is a
    full rectangle (whose polynomial is known in closed form).
    """
    k = block_cell_count(b, sub)
    if k == 0:
        return False
    if total_cells is None:
        total_cells = b.cell_count()
    return k < total_cells or k == sub.area


def matching_number(b: Board) -> int:
    """Size of a maximum rook placement (augmenting paths)."""
    match_col: dict[int, int] = {}

    def augment(i, seen):
        r = b.rows[i]
        while r:
            bit = r & -r
            r ^= bit
            j = bit.bit_length() - 1
            if j in seen:
                continue
            seen.add(j)
            if j not in match_col or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    return sum(1 for i in range(b.num_rows) if augment(i, set()))


def inclusion_boards(b: Board, sub: SubboardRef) -> list[Board]:
    """``B_{S,j}`` for j = 0 .. matching number of the block; no validity check."""
    cleared = clear_cells(b, sub)
    top = matching_number(b.subboard(sub))
    return [delete_rows_cols(cleared, sub.rows[:j], sub.cols[:j]) for j in range(top + 1)]


def remaining_work(b: Board, strategy: Strategy) -> int:
    """Cells still needing decomposition once the engine's cheap exits are taken."""
    b = b.compact()
    cells = b.cell_count()
    if cells <= 1:
        return 0
    if strategy.use_disjoint_split:
        parts = split_disjoint(b)
        if len(parts) > 1:
            return sum(remaining_work(p, strategy) for p in parts)
    if strategy.use_rectangle_closed_form and b.is_full_rectangle():
        return 0
    return cells


def lookahead_score(b: Board, sub: SubboardRef, strategy: Strategy | None = None) -> int:
    """Remaining work summed over the inclusion boards (and the block itself
    when its polynomial is not a closed form)."""
    if strategy is None:
        strategy = Strategy()
    parts = inclusion_boards(b, sub)
    sb = b.subboard(sub)
    if sb.cell_count() != sub.area:
        parts.append(sb)
    return sum(remaining_work(x, strategy) for x in parts)


def _candidates(b: Board, strategy: Strategy) -> list[BlockRef]:
    total = b.cell_count()
    cands = [s for s in find_blocks(b, strategy.max_candidates) if is_productive(b, s, total)]
    if not cands:
        i, j = b.cells()[0]
        cands = [SubboardRef((i,), (j,))]
    return cands


def choose_pivot(b: Board, strategy: Strategy) -> BlockRef:
    first = b.first_cell()
    if first is None:
        raise NoCellsError("no cells")
    name = strategy.name
    if name == "cell-first":
        return SubboardRef((first.row,), (first.col,))
    if name == "cell-last":
        i, j = b.last_cell()
        return SubboardRef((i,), (j,))
    if name == "largest-block":
        return _candidates(b, strategy)[0]
    if name == "greedy-block":
        return min(_candidates(b, strategy), key=lambda s: lookahead_score(b, s, strategy))
    if b.cell_count() > EXHAUSTIVE_MAX_CELLS:
        raise StrategyError("too large for exhaustive strategy")
    return _best_pivot(b, strategy)


# exhaustive search over pivots

def _best_pivot(b: Board, strategy: Strategy) -> BlockRef:
    """Every candidate is tried; each is scored by the nodes the engine then
    expands finishing the sub-boards with greedy-block (cache off).  Ties go
    to the earlier candidate.
    """
    flags = (strategy.use_rectangle_closed_form, strategy.use_disjoint_split,
             strategy.max_candidates)
    best_cost, best = None, None
    for s in _candidates(b, strategy):
        cost = pivot_cost(b, s, flags, best_cost)
        if best_cost is None or cost < best_cost:
            best_cost, best = cost, s
            if cost == 0:
                break
    return best


def pivot_cost(b: Board, s: SubboardRef, flags, bound: int | None = None) -> int:
    """Nodes below a node expanded on ``s``; stops adding once ``bound`` is reached."""
    sb = b.subboard(s)
    parts = inclusion_boards(b, s)
    if sb.cell_count() != s.area:
        parts.insert(0, sb)
    cost = 0
    for x in parts:
        if bound is not None and cost >= bound:
            break
        cost += completion_nodes(normalize(x.compact()), flags)
    return cost


@lru_cache(maxsize=1 << 16)
def completion_nodes(b: Board, flags) -> int:
    from .decomposition import rook_polynomial

    use_rect, use_split, max_candidates = flags
    strat = Strategy("greedy-block", use_rect, use_split, False, max_candidates)
    return rook_polynomial(b, strat)[1].nodes_expanded
