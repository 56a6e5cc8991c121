"""Memoization of rook polynomials keyed on the permutation normal form."""

from __future__ import annotations

import threading

from .board import Board, normalize
from .polynomial import RookPolynomial

DEFAULT_CAPACITY = 1_000_000


class CacheIntegrityError(RuntimeError):
    """Two different polynomials were stored under one normal form."""


def board_key(b: Board) -> tuple:
    nf = normalize(b)
    return (nf.num_rows, nf.num_cols, nf.rows)


class PolyCache:
    """Board -> polynomial map.

    Boards with the same normal form differ only by a permutation of rows
    and columns, hence share a rook polynomial.  The converse is not
    guaranteed, so some equivalent boards miss; that only costs time.

    Past ``capacity`` entries new results are silently not stored.  All
    operations take an internal lock so one cache can be shared between
    threads.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        self.capacity = capacity
        self.entries: dict[tuple, RookPolynomial] = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, b: Board) -> RookPolynomial | None:
        key = board_key(b)
        with self._lock:
            p = self.entries.get(key)
            if p is None:
                self.misses += 1
            else:
                self.hits += 1
            return p

    def put(self, b: Board, p: RookPolynomial) -> None:
        key = board_key(b)
        with self._lock:
            old = self.entries.get(key)
            if old is not None:
                if old != p:
                    raise CacheIntegrityError(
                        f"conflicting polynomials for key {key}: {old} vs {p}")
                return
            if len(self.entries) < self.capacity:
                self.entries[key] = p


def cache_get(c: PolyCache, b: Board) -> RookPolynomial | None:
    return c.get(b)


def cache_put(c: PolyCache, b: Board, p: RookPolynomial) -> None:
    c.put(b, p)
