# Choosing which block to use
#
# Every block gives the right answer; they differ in how much work follows.
# Five pivot strategies ship with the library:
#
#   cell-first, cell-last   the classical cell recursion
#   largest-block           the block with the most positions
#   greedy-block            the block leaving the least unfinished work
#   exhaustive-best         try every block, finish each greedily, keep the
#                           cheapest (boards of at most 16 cells)

# %%

from rookpoly import Board, Strategy, choose_pivot, rook_polynomial
from rookpoly.blocks import STRATEGIES
from rookpoly.generators import bridged

# Two full rectangles that would be independent except for a small bridge:
# a 5x6 and a 4x8, with a 1x2 patch joining row 0 to two columns of the
# second rectangle.

board = bridged(5, 6, 4, 8, 1, 2)
print(board.render())

# %%
# The largest block is a 4x6 chunk of a rectangle.  Taking it leaves a
# board that is still tangled through the bridge.  The greedy choice is a
# small block around the bridge; once it is cleared the rest splits into
# rectangles.

for name in ("largest-block", "greedy-block"):
    print(name, choose_pivot(board, Strategy(name)))

# %%
# Node counts: one node is one step that is not answered by a base case
# (empty board, single cell, disjoint pieces, full rectangle) or the cache.

print(f"{'strategy':16} nodes  polynomial")
for name in STRATEGIES:
    p, stats = rook_polynomial(board, Strategy(name))
    print(f"{name:16} {stats.nodes_expanded:5}  {p.to_csv()}")

# %%
# The cell recursion without shortcuts explodes even on plain rectangles,
# while the whole-board block finishes in one step.

for n in range(2, 7):
    full = Board.full(n, n)
    cell = rook_polynomial(full, Strategy.bare("cell-first"))[1].nodes_expanded
    big = rook_polynomial(full, Strategy.bare("largest-block"))[1].nodes_expanded
    print(f"{n}x{n}: cell-first {cell:6} nodes, largest-block {big} node")
