# Decomposing by a block
#
# The classical way to compute a rook polynomial picks one cell c and uses
#
#     R(B) = R(B without c) + x R(B without c's row and column).
#
# A block generalizes the cell.  Take a set R of rows and a set C of columns
# such that rows in R agree on every column outside C, and columns in C
# agree on every row outside R.  Then with S the cells of B inside R x C,
#
#     R(B) = sum_j r_j(S) x^j R(B_{S,j})
#
# where B_{S,j} clears S and deletes j rows of R and j columns of C.

# %%

from rookpoly import (Board, SubboardRef, decompose_by, inclusion_board, is_block,
                      parse_board, rook_polynomial)
from rookpoly.oracle import oracle_counts

board = parse_board("##..\n##..\n####\n..##")
print(board.render())

# Rows 0 and 1 are identical, and row 2 is full on columns 0 and 1 while
# row 3 is empty there, so rows {0,1} x columns {0,1} is a block.

s = SubboardRef((0, 1), (0, 1))
print(is_block(board, s))
print(is_block(board, SubboardRef((0, 2), (0, 1))))

# %%
# The inclusion boards.  B_{S,0} just loses the cells of S.

for j in range(3):
    print(f"B_S,{j}:")
    print(inclusion_board(board, s, j).render() or "(no rows)")

# %%
# Assemble the sum.  Forcing the first step to use S gives the same answer
# as the oracle, and as any other block.

p, stats = decompose_by(board, s)
print(p, oracle_counts(board))
print(rook_polynomial(board)[0])

# %%
# A 1x1 block is a single cell, and the formula collapses to the cell rule:
# B_{S,0} is the board without the cell, B_{S,1} the board without its row
# and column.

cell = SubboardRef((2,), (3,))
print(decompose_by(board, cell)[0])

# %%
# Which choice of j rows to delete does not matter.  Rows of R are
# identical once S is cleared, so deleting row 0 or row 1 leaves the same
# board.

from rookpoly import clear_cells, delete_rows_cols

cleared = clear_cells(board, s)
print(delete_rows_cols(cleared, [0], [0]) == delete_rows_cols(cleared, [1], [1]))

# %%
# A full 3x4 board is one block containing everything.  Every inclusion
# board is empty, so the whole computation is one step.

from rookpoly import Strategy

p, stats = rook_polynomial(Board.full(3, 4), Strategy.bare("largest-block"))
print(p, "nodes:", stats.nodes_expanded)
p, stats = rook_polynomial(Board.full(3, 4), Strategy.bare("cell-first"))
print(p, "nodes:", stats.nodes_expanded)
