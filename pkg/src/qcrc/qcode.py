"""Quantum CRC stabilizer codes ``G = [H | H_{+l} + H_{-l}]``.

Column i of ``H_{+l}`` is column i-l (mod n) of H, so for a single row this
is a cyclic rotation of the row bitmask by +l.  The same convention makes
the X part of an error enter the syndrome as ``X^{-l} e_1 + X^{l} e_1``.

Syndromes are n-k bits, bit i for generator i (top row first); bit value 1
means a "-" measurement outcome.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .crc import CrcCode, build_crc
from .errors import AmbiguousSyndromeError, InvalidCodeError, QcrcWarning, UncorrectableError
from .gf2linalg import RowSpace
from .gf2poly import BinPoly, RingElem, bits_to_int, rem_int, rotate_int
from .pauli import GenMatrix, PauliString, SympVec, check_genmatrix, iter_pauli_bursts, tau, tau_inv

__all__ = [
    "Syndrome",
    "QcrcCode",
    "build_qcrc",
    "stabilizer_generators",
    "quantum_syndrome",
    "syndrome_poly",
    "generic_decode",
    "detects",
    "is_stabilizer_equivalent",
]


@dataclass(frozen=True)
class Syndrome:
    """Measurement outcomes of the generators, packed LSB = generator 1."""

    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"syndrome does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> Syndrome:
        """Parse ``"++--+"``; commas, spaces, parentheses and U+2212 are allowed."""
        s = text.replace("−", "-")
        for junk in ",() \t":
            s = s.replace(junk, "")
        if set(s) - {"+", "-"}:
            raise ValueError(f"syndrome must be a +/- string, got {text!r}")
        return cls(sum(1 << i for i, ch in enumerate(s) if ch == "-"), len(s))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> Syndrome:
        return cls(bits_to_int(bits), len(bits))

    @classmethod
    def from_poly(cls, p: BinPoly, length: int) -> Syndrome:
        return cls(p.value, length)

    def to_signs(self, sep: str = "") -> str:
        return sep.join("-" if (self.bits >> i) & 1 else "+" for i in range(self.length))

    def to_poly(self) -> BinPoly:
        return BinPoly(self.bits)

    @property
    def flags(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return self.to_signs()


@dataclass(frozen=True)
class QcrcCode:
    n: int
    k: int
    l: int
    g: BinPoly
    crc: CrcCode = field(repr=False)
    G: GenMatrix = field(repr=False)
    rowspace: RowSpace = field(repr=False, compare=False)

    @property
    def H(self) -> np.ndarray:
        return self.crc.H

    @property
    def r(self) -> int:
        """Number of generators, n - k."""
        return self.n - self.k

    def syndrome_bits(self, x: int, z: int) -> int:
        """Packed syndrome of the error with halves ``(x, z)``, via the ring."""
        n, l = self.n, self.l
        v = rotate_int(x, -l, n) ^ rotate_int(x, l, n) ^ z
        return rem_int(v, self.g.value)

    def in_stabilizer(self, x: int, z: int) -> bool:
        return (x | (z << self.n)) in self.rowspace

    @cached_property
    def decode_table(self) -> dict[int, tuple[int, int]]:
        """Syndrome -> ``(x, z)`` for every Pauli error of cbl <= l.

        Stabilizer-equivalent errors sharing a slot keep the first one seen;
        an inequivalent pair aborts with :class:`AmbiguousSyndromeError`.
        """
        table: dict[int, tuple[int, int]] = {}
        for x, z in iter_pauli_bursts(self.n, self.l):
            s = self.syndrome_bits(x, z)
            prev = table.setdefault(s, (x, z))
            if prev != (x, z) and not self.in_stabilizer(prev[0] ^ x, prev[1] ^ z):
                a = tau_inv(SympVec(self.n, *prev))
                b = tau_inv(SympVec(self.n, x, z))
                raise AmbiguousSyndromeError(
                    f"{a} and {b} share a syndrome but differ by a logical operator",
                    first=a,
                    second=b,
                )
        return table


def _g_rows(h_rows: Sequence[int], n: int, l: int) -> tuple[SympVec, ...]:
    return tuple(
        SympVec(n, h, rotate_int(h, l, n) ^ rotate_int(h, -l, n)) for h in h_rows
    )


def build_qcrc(g: BinPoly, n: int, l: int | None = None) -> QcrcCode:
    crc = build_crc(g, n)
    default_l = (n - crc.k) // 4
    if l is None:
        l = default_l
        if l == 0:
            warnings.warn(f"deg g = {g.degree} < 4: the code corrects no bursts", QcrcWarning, stacklevel=2)
    else:
        if not 0 < l < n:
            raise InvalidCodeError(f"shift l must satisfy 0 < l < n, got l = {l}")
        if l != default_l:
            warnings.warn(
                f"l = {l} differs from floor((n-k)/4) = {default_l}; the burst "
                "correction guarantee is only established for the latter",
                QcrcWarning,
                stacklevel=2,
            )
    G = GenMatrix(n, crc.k, _g_rows(crc.h_rows, n, l))
    if not check_genmatrix(G):
        raise InvalidCodeError("constructed generators fail the symplectic check")
    rowspace = RowSpace(G.packed_rows())
    return QcrcCode(n=n, k=crc.k, l=l, g=g, crc=crc, G=G, rowspace=rowspace)


def stabilizer_generators(code: QcrcCode) -> list[PauliString]:
    return [tau_inv(row) for row in code.G.rows]


def quantum_syndrome(code: QcrcCode, e: SympVec) -> Syndrome:
    """Syndrome from the generator matrix: bit i is ``(row_i, e)_a``."""
    if e.n != code.n:
        raise ValueError(f"error must act on {code.n} qubits, got {e.n}")
    bits = 0
    for i, row in enumerate(code.G.rows):
        if ((row.x & e.z) ^ (row.z & e.x)).bit_count() & 1:
            bits |= 1 << i
    return Syndrome(bits, code.r)


def syndrome_poly(code: QcrcCode, e1: RingElem, e2: RingElem) -> BinPoly:
    """``X^{-l} e1 + X^{l} e1 + e2 (mod g)``."""
    if e1.n != code.n or e2.n != code.n:
        raise ValueError(f"both halves must have length {code.n}")
    return BinPoly(code.syndrome_bits(e1.value, e2.value))


def generic_decode(code: QcrcCode, s: Syndrome) -> SympVec:
    """Table decoder over all errors of cyclic burst length <= l."""
    if s.length != code.r:
        raise ValueError(f"syndrome must have {code.r} bits, got {s.length}")
    try:
        x, z = code.decode_table[s.bits]
    except KeyError:
        raise UncorrectableError(f"syndrome {s} matches no burst of length <= {code.l}") from None
    return SympVec(code.n, x, z)


def detects(code: QcrcCode, e: SympVec) -> bool:
    return bool(quantum_syndrome(code, e))


def is_stabilizer_equivalent(code: QcrcCode, a: SympVec | PauliString, b: SympVec | PauliString) -> bool:
    """True when ``a + b`` lies in the row space of G."""
    if isinstance(a, PauliString):
        a = tau(a)
    if isinstance(b, PauliString):
        b = tau(b)
    return code.in_stabilizer(a.x ^ b.x, a.z ^ b.z)
