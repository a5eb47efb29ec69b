"""Pauli strings and their binary symplectic images.

A Pauli string on n qubits maps to a 2n-bit vector ``(x_1..x_n | z_1..z_n)``
with I -> (0|0), X -> (1|0), Z -> (0|1), Y -> (1|1).  Phases are dropped on
parse, so a :class:`PauliString` is really a coset of the Pauli group
modulo {+-1, +-i}.  Products of strings then correspond to XOR of images
and commutation to the vanishing of the alternating form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf2linalg import RowSpace, rows_to_array
from .gf2poly import cbl_int, rotate_int

__all__ = [
    "PauliString",
    "SympVec",
    "GenMatrix",
    "tau",
    "tau_inv",
    "symp_form",
    "symp_weight",
    "pauli_cbl",
    "check_genmatrix",
    "iter_pauli_bursts",
]

LETTERS = "IXZY"  # index = x_bit + 2 * z_bit
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
# a sign, optionally with i, or a bare lowercase i ahead of an uppercase letter
_PHASE = re.compile(r"^(?:[+-]i?|i(?=[IXYZ]))")


@dataclass(frozen=True)
class PauliString:
    """A word over {I, X, Y, Z}; phase is not represented."""

    letters: str

    def __post_init__(self):
        bad = set(self.letters) - set(LETTERS)
        if bad:
            raise ValueError(f"not a Pauli string: {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> PauliString:
        """Accepts ``"XYIXZ"``, ``"X, Y, I"``, ``"X⊗Y"`` and drops a leading phase."""
        s = _PHASE.sub("", text.strip())
        for sep in (",", " ", "\t", "⊗", "*"):
            s = s.replace(sep, "")
        return cls(s.upper())

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls("I" * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def __getitem__(self, i):
        return self.letters[i]

    def __mul__(self, other: PauliString) -> PauliString:
        """Letter-wise product, phase discarded."""
        if len(other) != len(self):
            raise ValueError("Pauli strings of different length")
        out = []
        for a, b in zip(self.letters, other.letters):
            xa, za = _LETTER_BITS[a]
            xb, zb = _LETTER_BITS[b]
            out.append(LETTERS[(xa ^ xb) + 2 * (za ^ zb)])
        return PauliString("".join(out))

    @property
    def weight(self) -> int:
        return len(self.letters) - self.letters.count("I")

    def rotate(self, s: int) -> PauliString:
        """Cyclic rotation: letter i moves to position (i + s) mod n."""
        n = len(self.letters)
        if n == 0:
            return self
        s %= n
        return PauliString(self.letters[n - s:] + self.letters[: n - s])


@dataclass(frozen=True)
class SympVec:
    """A vector of F_2^{2n} stored as its two n-bit halves."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative length")
        if self.x < 0 or self.z < 0 or self.x >> self.n or self.z >> self.n:
            raise ValueError(f"halves do not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> SympVec:
        if len(bits) % 2:
            raise ValueError("symplectic vector needs an even number of bits")
        n = len(bits) // 2
        x = sum(1 << i for i in range(n) if bits[i])
        z = sum(1 << i for i in range(n) if bits[n + i])
        return cls(n, x, z)

    @classmethod
    def parse(cls, text: str) -> SympVec:
        """Parse ``"11010|01001"``; the bar is optional."""
        s = text.strip().replace(" ", "")
        if "|" in s:
            left, right = s.split("|")
            if len(left) != len(right):
                raise ValueError(f"halves differ in length: {text!r}")
            s = left + right
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary vector: {text!r}")
        return cls.from_bits([int(ch) for ch in s])

    @classmethod
    def from_packed(cls, n: int, v: int) -> SympVec:
        mask = (1 << n) - 1
        return cls(n, v & mask, v >> n)

    @property
    def packed(self) -> int:
        """Single integer with the x-half in the low bits."""
        return self.x | (self.z << self.n)

    @property
    def bits(self) -> tuple[int, ...]:
        n = self.n
        return tuple((self.x >> i) & 1 for i in range(n)) + tuple((self.z >> i) & 1 for i in range(n))

    def __add__(self, other: SympVec) -> SympVec:
        if other.n != self.n:
            raise ValueError("symplectic vectors of different length")
        return SympVec(self.n, self.x ^ other.x, self.z ^ other.z)

    def __bool__(self) -> bool:
        return bool(self.x or self.z)

    def __str__(self) -> str:
        b = self.bits
        return "".join(map(str, b[: self.n])) + "|" + "".join(map(str, b[self.n:]))


def tau(P: PauliString) -> SympVec:
    x = z = 0
    for i, ch in enumerate(P.letters):
        xb, zb = _LETTER_BITS[ch]
        x |= xb << i
        z |= zb << i
    return SympVec(len(P), x, z)


def tau_inv(v: SympVec) -> PauliString:
    return PauliString(
        "".join(LETTERS[((v.x >> i) & 1) + 2 * ((v.z >> i) & 1)] for i in range(v.n))
    )


def symp_form(u: SympVec, w: SympVec) -> int:
    """The alternating form; 0 iff the corresponding Paulis commute."""
    if u.n != w.n:
        raise ValueError(f"length mismatch: {2 * u.n} vs {2 * w.n}")
    return ((u.x & w.z) ^ (u.z & w.x)).bit_count() & 1


def symp_weight(v: SympVec) -> int:
    return (v.x | v.z).bit_count()


def pauli_cbl(P: PauliString) -> int:
    v = tau(P)
    return cbl_int(v.x | v.z, v.n)


@dataclass(frozen=True)
class GenMatrix:
    """An (n-k) x 2n binary matrix whose rows are meant to generate a stabilizer."""

    n: int
    k: int
    rows: tuple[SympVec, ...]

    def __post_init__(self):
        if any(r.n != self.n for r in self.rows):
            raise ValueError("row length does not match n")

    @classmethod
    def from_array(cls, a: np.ndarray, k: int | None = None) -> GenMatrix:
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[1] % 2:
            raise ValueError("generator matrix must be (r, 2n)")
        n = a.shape[1] // 2
        rows = tuple(SympVec.from_bits([int(b) for b in row]) for row in a)
        return cls(n, n - len(rows) if k is None else k, rows)

    @classmethod
    def from_paulis(cls, paulis: Iterable[PauliString]) -> GenMatrix:
        rows = tuple(tau(P) for P in paulis)
        if not rows:
            raise ValueError("need at least one generator")
        n = rows[0].n
        return cls(n, n - len(rows), rows)

    def to_array(self) -> np.ndarray:
        return rows_to_array((r.packed for r in self.rows), 2 * self.n)

    def packed_rows(self) -> list[int]:
        return [r.packed for r in self.rows]

    def to_text(self) -> list[str]:
        return [str(r) for r in self.rows]


def is_self_orthogonal(G: GenMatrix) -> bool:
    return all(symp_form(u, w) == 0 for u, w in combinations(G.rows, 2))


def check_genmatrix(G: GenMatrix) -> bool:
    """Rows pairwise commute and are linearly independent."""
    if not is_self_orthogonal(G):
        return False
    return RowSpace(G.packed_rows()).rank == len(G.rows)


def iter_pauli_bursts(n: int, t: int, include_identity: bool = True) -> Iterator[tuple[int, int]]:
    """Packed ``(x, z)`` halves of every Pauli error with cbl <= t, each once."""
    if include_identity:
        yield 0, 0
    t = min(t, n)
    if t <= 0:
        return
    seen: set[tuple[int, int]] | None = set() if n < 2 * t - 1 else None
    free = t - 1
    for start in range(n):
        for head in (1, 2, 3):  # X, Z, Y in the first window slot
            hx, hz = head & 1, head >> 1
            for xt in range(1 << free):
                for zt in range(1 << free):
                    x = rotate_int(hx | (xt << 1), start, n)
                    z = rotate_int(hz | (zt << 1), start, n)
                    if seen is not None:
                        if (x, z) in seen:
                            continue
                        seen.add((x, z))
                    yield x, z
