"""Row spaces over GF(2) for vectors packed into Python integers."""

from __future__ import annotations

from typing import Iterable

import numpy as np


class RowSpace:
    """Echelon basis of the span of some packed GF(2) vectors.

    The basis is keyed by leading (highest) set bit, so reducing a vector
    costs at most ``rank`` XORs.
    """

    __slots__ = ("_basis", "_dependent")

    def __init__(self, vectors: Iterable[int] = ()):
        self._basis: dict[int, int] = {}
        self._dependent = 0
        for v in vectors:
            if not self.add(v):
                self._dependent += 1

    def reduce(self, v: int) -> int:
        basis = self._basis
        while v:
            top = v.bit_length() - 1
            row = basis.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        r = self.reduce(v)
        if r == 0:
            return False
        self._basis[r.bit_length() - 1] = r
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def dependent_inputs(self) -> int:
        """How many constructor inputs were linear combinations of earlier ones."""
        return self._dependent

    def basis(self) -> list[int]:
        return [self._basis[k] for k in sorted(self._basis, reverse=True)]


def rank(vectors: Iterable[int]) -> int:
    return RowSpace(vectors).rank


def rows_to_array(rows: Iterable[int], width: int) -> np.ndarray:
    """Unpack integer rows into a (len(rows), width) uint8 matrix, bit 0 first."""
    rows = list(rows)
    out = np.zeros((len(rows), width), dtype=np.uint8)
    for r, v in enumerate(rows):
        for i in range(width):
            if (v >> i) & 1:
                out[r, i] = 1
    return out


def array_to_rows(a: np.ndarray) -> list[int]:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-d 0/1 matrix")
    weights = [1 << i for i in range(a.shape[1])]
    return [sum(w for w, b in zip(weights, row) if int(b) & 1) for row in a]
