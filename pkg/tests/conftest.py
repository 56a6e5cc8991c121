import itertools
import random

import pytest

from rookpoly import Board
from rookpoly.generators import random_board

ACCEPTANCE_LINES = []


def all_boards(m, n):
    """Every board with exactly m rows and n columns."""
    for mask in range(1 << (m * n)):
        rows = tuple((mask >> (i * n)) & ((1 << n) - 1) for i in range(m))
        yield Board(m, n, rows)


def boards_up_to(max_m, max_n):
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            yield from all_boards(m, n)


def sorted_row_boards(max_m, max_n):
    """One board per row-permutation class: rows in non-increasing order."""
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            for rows in itertools.combinations_with_replacement(range((1 << n) - 1, -1, -1), m):
                yield Board(m, n, rows)


def random_corpus(count=500, max_side=7, seed=2024):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        m, n = rng.randint(1, max_side), rng.randint(1, max_side)
        out.append(random_board(m, n, (0.2, 0.5, 0.8)[k % 3], k))
    return out


@pytest.fixture(scope="session")
def corpus_3x3():
    return list(all_boards(3, 3))


@pytest.fixture(scope="session")
def corpus_random():
    return random_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def permutation_classes(max_m, max_n):
    """One board per orbit under row and column permutations.

    Blocks, inclusion boards and rook numbers all transform along with a
    permutation of rows and columns, so checking one board per orbit covers
    every board of the same dimensions.
    """
    seen = set()
    for b in sorted_row_boards(max_m, max_n):
        key = min(tuple(sorted(b.permute(range(b.num_rows), cp).rows))
                  for cp in itertools.permutations(range(b.num_cols)))
        if (b.shape, key) not in seen:
            seen.add((b.shape, key))
            yield b
