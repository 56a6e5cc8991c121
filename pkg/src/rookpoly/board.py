"""Boards as immutable per-row bitsets.

A board with ``m`` rows and ``n`` columns stores row ``i`` as a Python int
whose bit ``j`` is set iff cell ``(i, j)`` belongs to the board.  Python
ints grow as needed, so there is no ceiling on the column count.

Text format::

    [m n]          optional header, two integers separated by one space
    ##.#           m lines of exactly n characters, '#' = cell, '.' = hole
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class ParseError(ValueError):
    """Malformed board text.  ``line`` and ``col`` are 1-based."""

    def __init__(self, message: str, line: int, col: int = 0):
        self.line = line
        self.col = col
        where = f"line {line}" + (f", column {col}" if col else "")
        super().__init__(f"{where}: {message}")


class CellRef(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class SubboardRef:
    """The rows and columns of a host board covered by a subboard.

    Both tuples are sorted; position ``a`` in ``rows`` maps row ``a`` of the
    subboard to row ``rows[a]`` of the host, and likewise for columns.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(sorted(set(self.rows))))
        object.__setattr__(self, "cols", tuple(sorted(set(self.cols))))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def area(self) -> int:
        return len(self.rows) * len(self.cols)

    @property
    def col_mask(self) -> int:
        return _mask_of(self.cols)

    def sort_key(self):
        return (-self.area, self.rows, self.cols)


def _select(rows: Sequence[int], row_idx: Sequence[int], col_idx: Sequence[int]) -> tuple[int, ...]:
    """Rows ``row_idx`` restricted to columns ``col_idx``, renumbered in the given order."""
    col_idx = list(col_idx)
    if col_idx == list(range(len(col_idx))):
        keep = (1 << len(col_idx)) - 1
        return tuple(rows[i] & keep for i in row_idx)
    out = []
    for i in row_idx:
        r = rows[i]
        v = 0
        for a, j in enumerate(col_idx):
            if r >> j & 1:
                v |= 1 << a
        out.append(v)
    return tuple(out)


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for j in indices:
        mask |= 1 << j
    return mask


@dataclass(frozen=True)
class Board:
    num_rows: int
    num_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.num_rows < 0 or self.num_cols < 0:
            raise ValueError("board dimensions must be nonnegative")
        rows = tuple(self.rows)
        if len(rows) != self.num_rows:
            raise ValueError(f"expected {self.num_rows} rows, got {len(rows)}")
        limit = 1 << self.num_cols
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} has bits outside {self.num_cols} columns")
        object.__setattr__(self, "rows", rows)

    # construction

    @classmethod
    def empty(cls, m: int = 0, n: int = 0) -> "Board":
        return cls(m, n, (0,) * m)

    @classmethod
    def full(cls, m: int, n: int) -> "Board":
        return cls(m, n, ((1 << n) - 1,) * m)

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]],
                   m: int | None = None, n: int | None = None) -> "Board":
        cells = list(cells)
        if m is None:
            m = max((i for i, _ in cells), default=-1) + 1
        if n is None:
            n = max((j for _, j in cells), default=-1) + 1
        rows = [0] * m
        for i, j in cells:
            if not (0 <= i < m and 0 <= j < n):
                raise IndexError(f"cell ({i}, {j}) outside {m}x{n} board")
            rows[i] |= 1 << j
        return cls(m, n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Board":
        m = len(matrix)
        n = len(matrix[0]) if m else 0
        rows = []
        for line in matrix:
            if len(line) != n:
                raise ValueError("ragged matrix")
            rows.append(_mask_of(j for j, v in enumerate(line) if v))
        return cls(m, n, tuple(rows))

    # queries

    @property
    def shape(self) -> tuple[int, int]:
        return self.num_rows, self.num_cols

    def cell_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __len__(self) -> int:
        return self.cell_count()

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 0 <= i < self.num_rows and 0 <= j < self.num_cols and bool(self.rows[i] >> j & 1)

    def cells(self) -> list[CellRef]:
        """All cells in row-major order."""
        out = []
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                out.append(CellRef(i, low.bit_length() - 1))
                r ^= low
        return out

    def first_cell(self) -> CellRef | None:
        for i, r in enumerate(self.rows):
            if r:
                return CellRef(i, (r & -r).bit_length() - 1)
        return None

    def last_cell(self) -> CellRef | None:
        for i in range(self.num_rows - 1, -1, -1):
            r = self.rows[i]
            if r:
                return CellRef(i, r.bit_length() - 1)
        return None

    def columns(self) -> tuple[int, ...]:
        """Column bitsets: bit ``i`` of entry ``j`` is cell ``(i, j)``."""
        cols = [0] * self.num_cols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    cols[j] |= 1 << i
                r >>= 1
                j += 1
        return tuple(cols)

    def to_matrix(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.num_cols)] for r in self.rows]

    def transpose(self) -> "Board":
        return _make(self.num_cols, self.num_rows, self.columns())

    def is_full_rectangle(self) -> bool:
        """True iff the cells, ignoring empty rows and columns, fill a rectangle."""
        support = 0
        for r in self.rows:
            support |= r
        return all(r == 0 or r == support for r in self.rows)

    def subboard(self, sub: SubboardRef) -> "Board":
        """The cells of ``sub`` as a standalone ``s x t`` board."""
        _check_indices(self, sub.rows, sub.cols)
        return _make(len(sub.rows), len(sub.cols), _select(self.rows, sub.rows, sub.cols))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "Board":
        """Board whose row ``a`` is old row ``row_perm[a]``, column ``b`` old column ``col_perm[b]``."""
        if sorted(row_perm) != list(range(self.num_rows)) or \
                sorted(col_perm) != list(range(self.num_cols)):
            raise ValueError("not a permutation")
        return _make(self.num_rows, self.num_cols, _select(self.rows, row_perm, col_perm))

    def compact(self) -> "Board":
        """Drop rows and columns containing no cells."""
        support = 0
        for r in self.rows:
            support |= r
        n = support.bit_length()
        gaps = ~support & ((1 << n) - 1)
        drop = []
        while gaps:
            low = gaps & -gaps
            drop.append(low.bit_length() - 1)
            gaps ^= low
        drop.reverse()
        kept = tuple(_drop_bits(r, drop) for r in self.rows if r)
        if len(kept) == self.num_rows and n == self.num_cols and not drop:
            return self
        return _make(len(kept), n - len(drop), kept)

    def render(self, header: bool = False) -> str:
        """Text form, one line per row, no trailing newline."""
        lines = ["".join("#" if r >> j & 1 else "." for j in range(self.num_cols))
                 for r in self.rows] if self.num_cols else []
        # a header is the only way to carry a zero dimension
        if header or (self.num_rows == 0) != (self.num_cols == 0):
            lines.insert(0, f"{self.num_rows} {self.num_cols}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def _make(m: int, n: int, rows: tuple[int, ...]) -> Board:
    # trusted internal constructor; skips validation
    b = object.__new__(Board)
    object.__setattr__(b, "num_rows", m)
    object.__setattr__(b, "num_cols", n)
    object.__setattr__(b, "rows", rows)
    return b


def _check_indices(b: Board, rows: Iterable[int], cols: Iterable[int]) -> None:
    for i in rows:
        if not 0 <= i < b.num_rows:
            raise IndexError(f"row index {i} out of range for {b.num_rows} rows")
    for j in cols:
        if not 0 <= j < b.num_cols:
            raise IndexError(f"column index {j} out of range for {b.num_cols} columns")


def parse_board(text: str) -> Board:
    if text.endswith("\n"):
        text = text[:-1]
    if text == "":
        return Board.empty()
    lines = text.split("\n")
    for ln, line in enumerate(lines, 1):
        pos = line.find("\r")
        if pos >= 0:
            raise ParseError("carriage return not allowed", ln, pos + 1)

    header = None
    first = lines[0]
    if first and first[0].isdigit():
        parts = first.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("header must be two integers separated by one space", 1)
        header = (int(parts[0]), int(parts[1]))
        lines = lines[1:]
        offset = 2
    else:
        offset = 1

    if header is not None:
        m, n = header
        if n == 0 and all(line == "" for line in lines):
            # zero-width rows carry no characters; only the header matters
            return Board.empty(m, 0)
        if len(lines) != m:
            raise ParseError(f"header declares {m} rows, found {len(lines)}",
                             offset + min(m, len(lines)))
    else:
        m, n = len(lines), len(lines[0])

    rows = []
    for k, line in enumerate(lines):
        ln = k + offset
        if len(line) != n:
            raise ParseError(f"expected {n} characters, found {len(line)}", ln,
                             min(len(line), n) + 1)
        r = 0
        for j, ch in enumerate(line):
            if ch == "#":
                r |= 1 << j
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r}", ln, j + 1)
        rows.append(r)
    return Board(m, n, tuple(rows))


def _drop_bits(r: int, cols_desc: Sequence[int]) -> int:
    for j in cols_desc:
        low = (1 << j) - 1
        r = (r & low) | (r >> (j + 1) << j)
    return r


def delete_rows_cols(b: Board, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> Board:
    rows, cols = set(rows), set(cols)
    _check_indices(b, rows, cols)
    order = sorted(cols, reverse=True)
    kept = tuple(_drop_bits(r, order) for i, r in enumerate(b.rows) if i not in rows)
    return _make(len(kept), b.num_cols - len(cols), kept)


def clear_cells(b: Board, cells: SubboardRef) -> Board:
    _check_indices(b, cells.rows, cells.cols)
    keep = ~cells.col_mask
    row_set = set(cells.rows)
    return _make(b.num_rows, b.num_cols,
                 tuple(r & keep if i in row_set else r for i, r in enumerate(b.rows)))


def split_disjoint(b: Board) -> list[Board]:
    """Connected components of the row/column incidence structure.

    Rows are vertices ``0..m-1`` and columns ``m..m+n-1``; every cell joins
    its row and column.  Components come back as compact boards, ordered by
    their smallest original row, then smallest original column.
    """
    m = b.num_rows
    parent = list(range(m + b.num_cols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in b.cells():
        ri, rj = find(i), find(m + j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, tuple[list[int], list[int]]] = {}
    for i, r in enumerate(b.rows):
        if r:
            groups.setdefault(find(i), ([], []))[0].append(i)
    for i, j in b.cells():
        g = groups[find(i)][1]
        if j not in g:
            g.append(j)
    comps = sorted(((rs, sorted(cs)) for rs, cs in groups.values()),
                   key=lambda rc: (rc[0][0], rc[1][0]))
    return [b.subboard(SubboardRef(tuple(rs), tuple(cs))) for rs, cs in comps]


def normalize(b: Board) -> Board:
    """Permutation normal form used as a cache key.

    Alternately sorts rows and columns by descending bitset value until
    nothing moves.  Equal outputs imply the inputs differ by a row and
    column permutation; the converse does not always hold.
    """
    cur = b
    for _ in range(b.num_rows * b.num_cols + 2):
        rows = tuple(sorted(cur.rows, reverse=True))
        by_rows = _make(cur.num_rows, cur.num_cols, rows)
        cols = by_rows.columns()
        order = sorted(range(cur.num_cols), key=lambda j: cols[j], reverse=True)
        nxt = by_rows.permute(range(cur.num_rows), order)
        if nxt == cur:
            break
        cur = nxt
    return cur
