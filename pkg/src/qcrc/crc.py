"""Classical CRC(g) codes and their burst-correcting properties."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AmbiguousSyndromeError, InfeasibleError, InvalidCodeError, UncorrectableError
from .gf2linalg import rows_to_array
from .gf2poly import BinPoly, bits_to_int, divides_xn_minus_1, int_to_bits, iter_cyclic_bursts, rem_int

__all__ = [
    "CrcCode",
    "build_crc",
    "check_columns",
    "classical_syndrome",
    "has_c_property",
    "classical_burst_decode",
    "DEFAULT_PAIR_CAP",
]

DEFAULT_PAIR_CAP = 1 << 26


def check_columns(g: BinPoly, n: int) -> list[int]:
    """Columns of the CRC check matrix as packed (n-k)-bit integers.

    The first n-k columns are the unit vectors; column n-k+i holds the
    remainder of X^(i-1+n-k) modulo g.
    """
    r = g.value.bit_length() - 1
    cols = [1 << j for j in range(r)]
    cols.extend(rem_int(1 << e, g.value) for e in range(r, n))
    return cols


def _validate(g: BinPoly, n: int) -> None:
    if n <= 0:
        raise InvalidCodeError(f"block length must be positive, got {n}")
    if not g or g.degree < 1:
        raise InvalidCodeError("g must have positive degree")
    if g.degree >= n:
        raise InvalidCodeError(f"deg g = {g.degree} must be smaller than n = {n}")
    if g[0] == 0:
        raise InvalidCodeError("g(0) must be nonzero")


@dataclass(frozen=True)
class CrcCode:
    n: int
    k: int
    g: BinPoly
    h_rows: tuple[int, ...] = field(repr=False)

    @cached_property
    def H(self) -> np.ndarray:
        """The (n-k) x n check matrix ``[I | r_1 ... r_k]``."""
        return rows_to_array(self.h_rows, self.n)

    @property
    def cyclic(self) -> bool:
        """True when g divides X^n - 1."""
        return divides_xn_minus_1(self.g, self.n)

    @property
    def burst_radius(self) -> int:
        return (self.n - self.k) // 2

    @cached_property
    def burst_table(self) -> dict[int, int]:
        """Syndrome -> burst for every cyclic burst of length <= (n-k)//2.

        Raises :class:`AmbiguousSyndromeError` when two bursts collide,
        which refutes the c-property.
        """
        table: dict[int, int] = {}
        for e in iter_cyclic_bursts(self.n, self.burst_radius):
            s = rem_int(e, self.g.value)
            prev = table.setdefault(s, e)
            if prev != e:
                raise AmbiguousSyndromeError(
                    f"bursts {int_to_bits(prev, self.n)} and {int_to_bits(e, self.n)} "
                    f"share syndrome {s:b}",
                    first=prev,
                    second=e,
                )
        return table


def build_crc(g: BinPoly, n: int) -> CrcCode:
    _validate(g, n)
    r = g.degree
    cols = check_columns(g, n)
    rows = tuple(
        sum(1 << i for i, col in enumerate(cols) if (col >> j) & 1) for j in range(r)
    )
    return CrcCode(n=n, k=n - r, g=g, h_rows=rows)


def classical_syndrome(code: CrcCode, e: Sequence[int]) -> BinPoly:
    """``e H^t`` computed with the check matrix, read as a polynomial."""
    e = np.asarray(e, dtype=np.uint8)
    if e.shape != (code.n,):
        raise ValueError(f"error vector must have length {code.n}")
    s = (code.H.astype(np.int64) @ e) % 2
    return BinPoly.from_coeffs([int(b) for b in s])


def has_c_property(g: BinPoly, n: int, cap: int = DEFAULT_PAIR_CAP) -> bool:
    """No nonzero multiple of g in the ring is a sum of two short bursts.

    "Short" means cyclic burst length at most floor(deg g / 2).  The search
    covers all ordered burst pairs; ``cap`` bounds that pair count and
    :class:`InfeasibleError` is raised rather than answering on a partial
    search.
    """
    if not g or g.degree < 1:
        raise InvalidCodeError("g must have positive degree (k = n is not a code)")
    if g.degree >= n:
        raise InvalidCodeError(f"deg g = {g.degree} must be smaller than n = {n}")
    if not divides_xn_minus_1(g, n):
        raise InvalidCodeError(f"g = {g} does not divide X^{n} - 1")
    t = g.degree // 2
    bursts = list(iter_cyclic_bursts(n, t))
    if len(bursts) ** 2 > cap:
        raise InfeasibleError(
            f"{len(bursts) ** 2} burst pairs exceed the enumeration cap {cap}"
        )
    # b1 + b2 is a multiple of g exactly when both leave the same remainder
    seen: dict[int, int] = {}
    for b in bursts:
        s = rem_int(b, g.value)
        if seen.setdefault(s, b) != b:
            return False
    return True


def classical_burst_decode(code: CrcCode, s: BinPoly) -> np.ndarray:
    """The unique burst of length <= (n-k)//2 with syndrome ``s``."""
    try:
        e = code.burst_table[s.value]
    except KeyError:
        raise UncorrectableError(f"syndrome {s} matches no short burst") from None
    return np.array(int_to_bits(e, code.n), dtype=np.uint8)


def vector_to_poly(e: Sequence[int]) -> BinPoly:
    """e(X) = sum e_i X^(i-1)."""
    return BinPoly(bits_to_int(int(b) for b in e))
