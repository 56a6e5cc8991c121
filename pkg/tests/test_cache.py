import pytest

from rookpoly import Board, PolyCache, RookPolynomial, Strategy, normalize, rook_polynomial
from rookpoly.cache import CacheIntegrityError, board_key, cache_get, cache_put
from rookpoly.generators import random_board

from conftest import boards_up_to

L_SHAPE = Board.from_cells([(0, 0), (0, 1), (1, 0)])
L_POLY = RookPolynomial((1, 3, 1))


def test_empty_cache_misses():
    c = PolyCache()
    assert cache_get(c, Board.full(2, 2)) is None
    assert (c.hits, c.misses) == (0, 1)


def test_hit_after_permutation():
    c = PolyCache()
    cache_put(c, L_SHAPE, L_POLY)
    flipped = L_SHAPE.permute([1, 0], [1, 0])
    assert cache_get(c, flipped) == L_POLY
    assert c.hits == 1


def test_permuted_put_is_one_entry():
    c = PolyCache()
    cache_put(c, L_SHAPE, L_POLY)
    cache_put(c, L_SHAPE.permute([1, 0], [0, 1]), L_POLY)
    assert len(c) == 1


def test_conflicting_put_raises():
    c = PolyCache()
    cache_put(c, L_SHAPE, L_POLY)
    with pytest.raises(CacheIntegrityError):
        cache_put(c, L_SHAPE, RookPolynomial((1, 4, 2)))


def test_capacity_stops_inserting():
    c = PolyCache(capacity=2)
    for n in range(1, 5):
        c.put(Board.full(1, n), RookPolynomial((1, n)))
    assert len(c) == 2
    assert c.get(Board.full(1, 4)) is None


def test_keys_are_normal_forms():
    c = PolyCache()
    for b in boards_up_to(2, 3):
        p = rook_polynomial(b, Strategy(use_cache=False))[0]
        c.put(b, p)
    for m, n, rows in c.entries:
        nf = Board(m, n, rows)
        assert normalize(nf) == nf


def test_distinct_normal_forms_do_not_collide():
    forms = {}
    for b in boards_up_to(3, 3):
        forms.setdefault(board_key(b), normalize(b))
    assert len({f for f in forms.values()}) == len(forms)


def test_cache_on_equals_cache_off(corpus_3x3, corpus_random):
    for b in corpus_3x3 + corpus_random[:150]:
        on = rook_polynomial(b, Strategy("cell-first"))[0]
        off = rook_polynomial(b, Strategy("cell-first", use_cache=False))[0]
        assert on == off


def test_cache_saves_work():
    b = random_board(7, 7, 0.6, 4)
    cached = Strategy("cell-first", use_rectangle_closed_form=False, use_disjoint_split=False)
    on = rook_polynomial(b, cached)[1]
    off = rook_polynomial(b, Strategy.bare("cell-first"))[1]
    assert on.cache_hits > 0
    assert on.nodes_expanded < off.nodes_expanded
