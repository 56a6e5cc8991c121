"""Rook polynomials of arbitrary boards by block decomposition."""

from .blocks import STRATEGIES, BlockRef, Strategy, choose_pivot, find_blocks, is_block
from .board import (Board, CellRef, ParseError, SubboardRef, clear_cells, delete_rows_cols,
                    normalize, parse_board, split_disjoint)
from .cache import CacheIntegrityError, PolyCache, cache_get, cache_put
from .decomposition import (DecompositionStats, decompose_by, decompose_cell,
                            inclusion_board, rook_polynomial)
from .oracle import OracleTooLarge, oracle_counts
from .polynomial import RookPolynomial, poly_mul, poly_shift_add, rectangular_poly

__all__ = [
    "Board", "CellRef", "SubboardRef", "BlockRef", "ParseError", "parse_board",
    "delete_rows_cols", "clear_cells", "split_disjoint", "normalize",
    "RookPolynomial", "poly_mul", "poly_shift_add", "rectangular_poly",
    "Strategy", "STRATEGIES", "is_block", "find_blocks", "choose_pivot",
    "DecompositionStats", "inclusion_board", "decompose_cell", "decompose_by", "rook_polynomial",
    "oracle_counts", "OracleTooLarge",
    "PolyCache", "cache_get", "cache_put", "CacheIntegrityError",
]
