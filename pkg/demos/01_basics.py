# Rook polynomials: the basics
#
# A board is a set of cells in an m x n grid.  r_k counts the ways to place
# k rooks on cells so that no two share a row or a column, and the rook
# polynomial collects them as R(B; x) = r_0 + r_1 x + r_2 x^2 + ...

# %%

from rookpoly import Board, parse_board, rectangular_poly, rook_polynomial
from rookpoly.oracle import enumerate_placements, oracle_counts

# Boards are written one row per line, '#' for a cell and '.' for a hole.

board = parse_board("##\n##")
print(board.render())
print(board.shape, board.cell_count(), "cells")

# %%
# Four cells, so four ways to place one rook.  Two rooks must sit on a
# diagonal, and a 2x2 square has two of those.

print(rook_polynomial(board)[0])
print(enumerate_placements(board, 2))

# %%
# Full rectangles have a closed form: r_k = C(m,k) C(n,k) k!.

for m, n in [(1, 1), (2, 2), (3, 4), (8, 8)]:
    print(f"R_{m},{n} =", rectangular_poly(m, n))

# %%
# Holes change everything.  Here is the staircase whose rows have lengths
# 1, 2 and 3.

stairs = parse_board("#..\n##.\n###")
print(rook_polynomial(stairs)[0])

# The brute-force counter in rookpoly.oracle knows nothing about the
# recursive engine.  It walks rows and remembers used columns, which makes
# it a handy referee on small boards.

print(oracle_counts(stairs))

# %%
# Boards that fall apart into pieces sharing no row or column multiply.

apart = parse_board("##..\n##..\n..#.\n...#")
p, stats = rook_polynomial(apart)
print(p)
one = rook_polynomial(Board.full(1, 1))[0]
print(rook_polynomial(Board.full(2, 2))[0] * one * one)
print(stats.to_text())
