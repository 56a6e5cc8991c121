# Permutations, normal forms and the cache
#
# Permuting rows or columns never changes which rook placements exist, only
# where they are.  The engine exploits this by caching polynomials under a
# normal form: rows and then columns are sorted repeatedly until nothing
# moves.

# %%

import random

from rookpoly import PolyCache, Strategy, normalize, rook_polynomial
from rookpoly.generators import random_board

board = random_board(5, 6, 0.5, 17)
print(board.render(), end="\n\n")
print(normalize(board).render())

# %%
# Shuffling rows gives back exactly the same normal form.

rng = random.Random(1)
shuffled = board.permute(rng.sample(range(5), 5), range(6))
print(normalize(shuffled) == normalize(board))

# Columns are a different story.  Sorting can stop at different fixed
# points, so two column orders of one board may normalize differently.  The
# cache then just misses; it never returns a wrong answer.

forms = {normalize(board.permute(range(5), rng.sample(range(6), 6))) for _ in range(50)}
print(len(forms), "distinct normal forms over 50 column shuffles")

# %%
# One cache can serve many calls.  The second call finds the whole board
# already known.

cache = PolyCache()
p1, s1 = rook_polynomial(board, Strategy("cell-first"), cache)
p2, s2 = rook_polynomial(shuffled, Strategy("cell-first"), cache)
print(p1 == p2, s1.nodes_expanded, s2.nodes_expanded, s2.cache_hits)
print(len(cache), "entries,", cache.hits, "hits,", cache.misses, "misses")

# %%
# Turning the cache off changes the work, never the answer.

off = rook_polynomial(board, Strategy("cell-first", use_cache=False))
print(off[0] == p1, off[1].nodes_expanded, "nodes without cache")
