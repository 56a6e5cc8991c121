import itertools
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rookpoly import (Board, RookPolynomial, Strategy, SubboardRef, decompose_by, decompose_cell,
                      inclusion_board, normalize, parse_board, poly_mul, poly_shift_add,
                      rectangular_poly, rook_polynomial)
from rookpoly.blocks import STRATEGIES
from rookpoly.generators import bridged, random_board, staircase
from rookpoly.oracle import oracle_counts

from conftest import boards_up_to

SHORTCUT_SETTINGS = list(itertools.product([True, False], repeat=3))


def strategy(name, rect=True, split=True, cache=True):
    return Strategy(name, use_rectangle_closed_form=rect, use_disjoint_split=split, use_cache=cache)


# examples

def test_inclusion_board_examples():
    full = Board.full(2, 2)
    assert inclusion_board(full, SubboardRef((0, 1), (0, 1)), 0) == Board.empty(2, 2)
    assert inclusion_board(full, SubboardRef((0,), (0,)), 1) == Board.full(1, 1)


def test_inclusion_board_errors():
    full = Board.full(2, 2)
    with pytest.raises(ValueError):
        inclusion_board(full, SubboardRef((0,), (0,)), 2)
    with pytest.raises(ValueError):
        inclusion_board(parse_board("##.\n###"), SubboardRef((0, 1), (0, 1)), 0)


def test_decompose_cell_examples():
    e, i = decompose_cell(Board.full(1, 1), (0, 0))
    assert e == Board.empty(1, 1) and i == Board.empty(0, 0)
    e, i = decompose_cell(Board.full(2, 2), (0, 0))
    assert e == parse_board(".#\n##") and i == Board.full(1, 1)
    assembled = poly_shift_add(RookPolynomial(tuple(oracle_counts(e))),
                               RookPolynomial(tuple(oracle_counts(i))), 1, 1)
    assert assembled == RookPolynomial((1, 4, 2))
    with pytest.raises(ValueError):
        decompose_cell(parse_board("#.\n.#"), (0, 1))


def test_rook_polynomial_examples():
    # the whole 3x4 board as one block: every inclusion board is empty
    b = Board.full(3, 4)
    p, stats = rook_polynomial(b, Strategy.bare("largest-block"))
    assert p == RookPolynomial((1, 12, 36, 24))
    assert stats.nodes_expanded == 1
    assert stats.base_case_hits["empty"] == 4
    assert rook_polynomial(staircase(3))[0] == RookPolynomial((1, 6, 7, 1))
    assert rook_polynomial(Board.empty(0, 0))[0] == RookPolynomial.one()
    assert rook_polynomial(Board.full(1, 1))[0] == RookPolynomial((1, 1))


def test_whole_board_pivot_equals_block_polynomial():
    for b in (parse_board("#.\n.#"), Board.full(2, 3), parse_board("##.\n.##")):
        whole = SubboardRef(range(b.num_rows), range(b.num_cols))
        assert decompose_by(b, whole)[0].coeffs == tuple(oracle_counts(b))


def test_bridged_three_ways():
    b = bridged(5, 6, 4, 8, 1, 2)
    by_parts = poly_shift_add(poly_mul(rectangular_poly(5, 6), rectangular_poly(4, 8)),
                              poly_mul(rectangular_poly(4, 6), rectangular_poly(4, 7)), 2, 1)
    expected = tuple(oracle_counts(b))
    assert by_parts.coeffs == expected
    for name in STRATEGIES:
        assert rook_polynomial(b, Strategy(name))[0].coeffs == expected
    bridge = SubboardRef((0,), (6, 7))
    assert decompose_by(b, bridge)[0].coeffs == expected


# invariants

def test_strategy_and_shortcut_independence_small():
    for b in boards_up_to(3, 3):
        expected = tuple(oracle_counts(b))
        for name in STRATEGIES:
            for rect, split, cache in SHORTCUT_SETTINGS:
                p, stats = rook_polynomial(b, strategy(name, rect, split, cache))
                assert p.coeffs == expected, (b, name, rect, split, cache)


def test_strategy_independence_random(corpus_random):
    for b in corpus_random[:120]:
        polys = {rook_polynomial(b, Strategy(name))[0] for name in STRATEGIES}
        assert len(polys) == 1
        assert polys.pop().coeffs == tuple(oracle_counts(b))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.sampled_from([0.3, 0.6, 0.9]),
       st.integers(0, 10**6), st.sampled_from(STRATEGIES),
       st.tuples(st.booleans(), st.booleans(), st.booleans()))
def test_shortcut_independence_property(m, n, density, seed, name, flags):
    b = random_board(m, n, density, seed)
    assert rook_polynomial(b, strategy(name, *flags))[0] == rook_polynomial(b, Strategy(name))[0]


def test_one_by_one_block_matches_cell_rule():
    for b in boards_up_to(3, 3):
        for i, j in b.cells():
            s = SubboardRef((i,), (j,))
            e, inc = decompose_cell(b, (i, j))
            assert inclusion_board(b, s, 0) == e
            assert inclusion_board(b, s, 1) == inc
            cell = poly_shift_add(rook_polynomial(e)[0], rook_polynomial(inc)[0], 1, 1)
            assert decompose_by(b, s)[0] == cell


def test_node_dominance_on_rectangles():
    for m in range(2, 7):
        for n in range(2, 7):
            for cache in (True, False):
                if not cache and m * n > 20:
                    continue   # uncached cell recursion grows too fast to be worth it
                flags = dict(rect=False, split=False, cache=cache)
                big = rook_polynomial(Board.full(m, n), strategy("largest-block", **flags))[1]
                cell = rook_polynomial(Board.full(m, n), strategy("cell-first", **flags))[1]
                assert big.nodes_expanded < cell.nodes_expanded, (m, n, cache)


def test_nodes_counted_for_nontrivial_boards():
    for b in boards_up_to(3, 3):
        for name in STRATEGIES:
            stats = rook_polynomial(b, Strategy.bare(name))[1]
            if b.cell_count() >= 2:
                assert stats.nodes_expanded >= 1
            else:
                assert stats.nodes_expanded == 0
            assert stats.max_depth >= 1


def test_cache_soundness():
    seen = {}
    for b in boards_up_to(3, 3):
        key = normalize(b)
        p = rook_polynomial(b, Strategy("cell-first", use_cache=False))[0]
        assert seen.setdefault(key, p) == p


def test_deep_recursion():
    # one long row, peeled a cell at a time: depth equals the cell count
    n = 12_000
    b = Board(1, n, ((1 << n) - 1,))
    p, stats = rook_polynomial(b, Strategy.bare("cell-first"))
    assert p == RookPolynomial((1, n))
    assert stats.max_depth == n
    assert stats.nodes_expanded == n - 1


def test_stats_text():
    _, stats = rook_polynomial(parse_board("#.\n.#"))
    text = stats.to_text()
    fields = dict(line.split("=") for line in text.splitlines())
    assert list(fields) == ["nodes_expanded", "base_empty", "base_single_cell", "base_rectangle",
                            "base_disjoint_split", "cache_hits", "max_depth"]
    assert fields["base_disjoint_split"] == "1"
    assert fields["base_single_cell"] == "2"
    assert fields["nodes_expanded"] == "0"


def test_exhaustive_falls_back_on_large_boards():
    b = random_board(6, 6, 0.8, 1)
    assert b.cell_count() > 16
    p = rook_polynomial(b, Strategy("exhaustive-best"))[0]
    assert p == rook_polynomial(b, Strategy("greedy-block"))[0]


def test_decompose_by_rejects_non_blocks():
    with pytest.raises(ValueError):
        decompose_by(parse_board("##.\n###"), SubboardRef((0, 1), (0, 1)))


def test_shared_cache_across_calls():
    from rookpoly import PolyCache
    cache = PolyCache()
    b = random_board(5, 5, 0.6, 9)
    first = rook_polynomial(b, Strategy("cell-first"), cache)
    again = rook_polynomial(b.permute([4, 3, 2, 1, 0], range(5)), Strategy("cell-first"), cache)
    assert first[0] == again[0]
    assert again[1].nodes_expanded == 0 and again[1].cache_hits >= 1
    # a strategy without caching ignores the cache it is handed
    bare = rook_polynomial(b, replace(Strategy("cell-first"), use_cache=False), cache)
    assert bare[1].cache_hits == 0


def test_rook_equivalent_pair_not_related_by_permutation():
    # equal polynomials do not need a shared shape up to permutation
    square = Board.full(2, 2)
    hook = Board.from_cells([(0, 0), (0, 1), (0, 2), (1, 0)])
    assert normalize(square) != normalize(hook)
    assert hook.cell_count() == square.cell_count() == 4
    for b in (square, hook):
        assert rook_polynomial(b)[0] == RookPolynomial((1, 4, 2))
        assert oracle_counts(b) == [1, 4, 2]
