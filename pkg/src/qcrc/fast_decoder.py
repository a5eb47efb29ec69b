"""Linear-time decoder for ``g = 1 + X^k + X^{2k} + ... + X^{(m-1)k}``.

With n = mk and shift l = ck, the generator matrix is k interleaved copies
of an [[m,1]] base code built from the all-ones polynomial with shift c:
qubit k(p-1)+j and generator k(t-1)+j both belong to copy j.  Each copy is
decoded on its own from the syndrome bits of its class:

1. a table handles the errors touching the three columns where the base
   matrix is irregular (X or Y at c and m-c, Z or Y at m);
2. otherwise an X at p shows up as the fork of flags at p-c and p+c,
   which the scan clears left to right;
3. flags that remain are Z errors, and X plus Z at one position is Y.

When step 2 explains the flags with a burst longer than c, the scan is
repeated inside each window of c positions, which cannot mistake the flags
of two adjacent X errors for a fork.

The table size depends only on c, so decoding costs O(n).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import AmbiguousSyndromeError, InvalidCodeError, QcrcWarning, UncorrectableError
from .gf2poly import BinPoly, cbl_int
from .pauli import LETTERS, PauliString, SympVec, tau, tau_inv
from .qcode import QcrcCode, Syndrome, build_qcrc

__all__ = [
    "StructuredCode",
    "LookupTable",
    "build_structured",
    "build_lookup_table",
    "structured_poly",
    "split_subsyndromes",
    "decode_subcode",
    "interleave_error",
    "deinterleave_error",
    "fast_decode",
    "structured_syndrome",
]

def structured_poly(m: int, k: int) -> BinPoly:
    """sum_{j<m} X^{jk}, which times (X^k + 1) is X^{mk} + 1."""
    return BinPoly(sum(1 << (j * k) for j in range(m)))


def _require_reiger(m: int, c: int) -> None:
    if c < 1:
        raise InvalidCodeError(f"c must be at least 1, got {c}")
    if m < 4 * c + 1:
        raise InvalidCodeError(
            f"m = {m} < 4c + 1 = {4 * c + 1}: a burst length of c per subcode "
            "would violate the quantum Reiger bound n - k >= 4l"
        )


def _build_base(m: int, c: int) -> QcrcCode:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QcrcWarning)
        return build_qcrc(structured_poly(m, 1), m, c)


@dataclass(frozen=True)
class LookupTable:
    """Sub-syndrome table for the irregular columns of the [[m,1]] base code.

    ``rows`` keeps every generated (error, sub-syndrome) pair in generation
    order, duplicates included; ``entries`` is the deduplicated map.
    """

    m: int
    c: int
    cyclic: bool
    rows: tuple[tuple[PauliString, Syndrome], ...] = field(repr=False)
    entries: dict[int, PauliString] = field(repr=False, compare=False)
    x_cols: tuple[int, ...] = field(repr=False)
    z_cols: tuple[int, ...] = field(repr=False)
    _halves: dict[int, tuple[int, int]] = field(repr=False, compare=False)
    _letter_cache: dict[tuple[int, int], str] = field(default_factory=dict, repr=False, compare=False)
    _decoded: dict[int, tuple[int, int]] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, s: Syndrome) -> PauliString | None:
        return self.entries.get(s.bits)

    def letters(self, x: int, z: int) -> str:
        """Pauli text of a base-code error given by its packed halves."""
        key = (x, z)
        text = self._letter_cache.get(key)
        if text is None:
            text = "".join(LETTERS[((x >> i) & 1) + 2 * ((z >> i) & 1)] for i in range(self.m))
            self._letter_cache[key] = text
        return text

    def syndrome_of(self, x: int, z: int) -> int:
        """Sub-syndrome of a base-code error given by its packed halves."""
        s = 0
        p = 0
        while x or z:
            if x & 1:
                s ^= self.x_cols[p]
            if z & 1:
                s ^= self.z_cols[p]
            x >>= 1
            z >>= 1
            p += 1
        return s


def _special_events(m: int, c: int) -> list[tuple[int, tuple[str, ...]]]:
    # (1-based position, letters flagged there)
    return [(c, ("X", "Y")), (m - c, ("X", "Y")), (m, ("Z", "Y"))]


def build_lookup_table(m: int, c: int, cyclic: bool = True) -> LookupTable:
    """Enumerate bursts of length c through each irregular letter event.

    In cyclic mode there are 6 c 4^(c-1) generated rows; without wrap-around
    the windows through position m that cross the end are dropped, leaving
    4c 4^(c-1) + 2 4^(c-1).
    """
    _require_reiger(m, c)
    base = _build_base(m, c)
    x_cols = tuple(base.syndrome_bits(1 << p, 0) for p in range(m))
    z_cols = tuple(base.syndrome_bits(0, 1 << p) for p in range(m))

    rows: list[tuple[PauliString, Syndrome]] = []
    entries: dict[int, PauliString] = {}
    halves: dict[int, tuple[int, int]] = {}
    for q, special in _special_events(m, c):
        for start in range(q - c + 1, q + 1):
            if not cyclic and (start < 1 or start + c - 1 > m):
                continue
            window = [(start - 1 + i) % m for i in range(c)]
            free = [p for p in window if p != q - 1]
            for letter in special:
                for fill in product("IXZY", repeat=c - 1):
                    letters = ["I"] * m
                    letters[q - 1] = letter
                    for p, ch in zip(free, fill):
                        letters[p] = ch
                    E = PauliString("".join(letters))
                    v = tau(E)
                    s = base.syndrome_bits(v.x, v.z)
                    rows.append((E, Syndrome(s, m - 1)))
                    prev = entries.get(s)
                    if prev is None:
                        entries[s] = E
                        halves[s] = (v.x, v.z)
                    elif prev != E:
                        w = tau(prev)
                        if not base.in_stabilizer(w.x ^ v.x, w.z ^ v.z):
                            raise AmbiguousSyndromeError(
                                f"table errors {prev} and {E} share sub-syndrome "
                                f"{Syndrome(s, m - 1)}",
                                first=prev,
                                second=E,
                            )
    return LookupTable(m, c, cyclic, tuple(rows), entries, x_cols, z_cols, halves)


@dataclass(frozen=True)
class StructuredCode:
    """The [[mk, k]] quantum CRC code of the structured family, l = ck."""

    m: int
    c: int
    k: int
    base: QcrcCode = field(repr=False, compare=False)
    table: LookupTable = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.m * self.k

    @property
    def l(self) -> int:
        return self.c * self.k

    @property
    def r(self) -> int:
        return (self.m - 1) * self.k

    @property
    def g(self) -> BinPoly:
        return structured_poly(self.m, self.k)

    @cached_property
    def inner(self) -> QcrcCode:
        """The full [[n,k]] code; built on first use (dense in n)."""
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", QcrcWarning)
            return build_qcrc(self.g, self.n, self.l)


def build_structured(m: int, c: int, k: int) -> StructuredCode:
    _require_reiger(m, c)
    if k < 1:
        raise InvalidCodeError(f"k must be at least 1, got {k}")
    if m > 4 * c + 1:
        warnings.warn(
            f"m = {m} > 4c + 1: using l = ck = {c * k} rather than "
            f"floor((n-k)/4) = {(m - 1) * k // 4}",
            QcrcWarning,
            stacklevel=2,
        )
    base = _build_base(m, c)
    try:
        base.decode_table
    except AmbiguousSyndromeError as exc:
        # happens for some m > 4c + 1, e.g. (m, c) = (6, 1) or (12, 2)
        raise InvalidCodeError(
            f"the [[{m},1]] base code with shift {c} does not correct bursts of "
            f"length {c}: {exc.first} and {exc.second} share a sub-syndrome"
        ) from exc
    table = build_lookup_table(m, c, cyclic=True)
    return StructuredCode(m, c, k, base=base, table=table)


def split_subsyndromes(s: Syndrome, k: int) -> list[Syndrome]:
    """Sub-syndrome j collects syndrome bits j, j+k, j+2k, ... (1-based)."""
    if k < 1 or s.length % k:
        raise ValueError(f"syndrome length {s.length} is not a multiple of k = {k}")
    width = s.length // k
    chars = format(s.bits, f"0{s.length}b")[::-1] if s.length else ""
    return [Syndrome(int(chars[j::k][::-1] or "0", 2), width) for j in range(k)]


def _fork_scan(flags: int, m: int, c: int, positions, trace: list | None) -> tuple[int, int]:
    x = 0
    for p in positions:
        a = (p - c) % m
        b = (p + c) % m
        if (flags >> a) & 1 and (flags >> b) & 1:
            x |= 1 << p
            flags &= ~((1 << a) | (1 << b))
            if trace is not None:
                trace.append(("fork", p + 1, (x, 0), flags))
    return x, flags


def _decode_sub_halves(bits: int, table: LookupTable, trace: list | None = None) -> tuple[int, int]:
    if trace is None:
        hit = table._decoded.get(bits)
        if hit is not None:
            return hit
    hit = table._halves.get(bits)
    if hit is not None:
        if trace is not None:
            trace.append(("table", None, hit))
        return hit
    m, c = table.m, table.c
    # flags only exist at positions 1..m-1, so a fork reaching position m
    # (p = c or p = m - c, the tabled cases) is never taken here
    steps: list | None = [] if trace is not None else None
    x, z = _fork_scan(bits, m, c, range(m), steps)
    if cbl_int(x | z, m) > c:
        # the full scan can pair flags of two neighbouring X errors into a
        # phantom fork; inside a window of c positions every fork lies
        # outside the window and every Z flag inside it, so rescan per window
        for w in range(m):
            window = [(w + i) % m for i in range(c)]
            mask = sum(1 << p for p in window)
            steps_w: list | None = [] if trace is not None else None
            wx, wz = _fork_scan(bits, m, c, window, steps_w)
            if (wx | wz) & ~mask == 0:
                x, z, steps = wx, wz, steps_w
                break
    if table.syndrome_of(x, z) != bits:
        raise UncorrectableError(f"sub-syndrome {Syndrome(bits, m - 1)} left unexplained flags")
    if trace is not None:
        trace.extend(steps)
        trace.append(("z", None, (x, z)))
    else:
        table._decoded[bits] = (x, z)
    return x, z


def decode_subcode(
    s_j: Syndrome,
    table: LookupTable,
    m: int | None = None,
    c: int | None = None,
    trace: list | None = None,
) -> PauliString:
    """Decode one interleaved [[m,1]] copy from its sub-syndrome.

    If ``trace`` is a list, it receives one ``(step, position, error,
    remaining flags)`` tuple per fork found, as Pauli text and a +/-
    string, followed by ``("z", None, final error, None)`` (or a single
    ``("table", ...)`` entry on a table hit).
    """
    if m is not None and m != table.m or c is not None and c != table.c:
        raise ValueError("table was built for different (m, c)")
    if s_j.length != table.m - 1:
        raise ValueError(f"sub-syndrome must have {table.m - 1} bits, got {s_j.length}")
    raw: list | None = [] if trace is not None else None
    x, z = _decode_sub_halves(s_j.bits, table, raw)
    if trace is not None:
        for step in raw:
            kind, pos, (ex, ez) = step[:3]
            flags = Syndrome(step[3], table.m - 1).to_signs() if kind == "fork" else None
            trace.append((kind, pos, table.letters(ex, ez), flags))
    return tau_inv(SympVec(table.m, x, z))


def interleave_error(sub_errors: Sequence[PauliString]) -> PauliString:
    """Letter p of sub-error j lands on global position k(p-1)+j."""
    k = len(sub_errors)
    if k == 0:
        raise ValueError("need at least one sub-error")
    m = len(sub_errors[0])
    if any(len(E) != m for E in sub_errors):
        raise ValueError("sub-errors must share one length")
    letters = [""] * (m * k)
    for j, E in enumerate(sub_errors):
        letters[j::k] = E.letters
    return PauliString("".join(letters))


def deinterleave_error(E: PauliString, k: int) -> list[PauliString]:
    if len(E) % k:
        raise ValueError(f"length {len(E)} is not a multiple of k = {k}")
    return [PauliString(E.letters[j::k]) for j in range(k)]


def fast_decode(code: StructuredCode, s: Syndrome) -> PauliString:
    """Split, decode every copy, interleave; O(n) for fixed c."""
    if s.length != code.r:
        raise ValueError(f"syndrome must have {code.r} bits, got {s.length}")
    k, table = code.k, code.table
    chars = format(s.bits, f"0{s.length}b")[::-1]
    letters = [""] * code.n
    for j in range(k):
        sub = int(chars[j::k][::-1], 2)
        try:
            x, z = _decode_sub_halves(sub, table)
        except UncorrectableError as exc:
            raise UncorrectableError(f"subcode {j + 1}: {exc}") from None
        letters[j::k] = table.letters(x, z)
    return PauliString("".join(letters))


def structured_syndrome(code: StructuredCode, E: PauliString) -> Syndrome:
    """Syndrome assembled copy by copy from the base-code columns."""
    if len(E) != code.n:
        raise ValueError(f"error must act on {code.n} qubits, got {len(E)}")
    k, width = code.k, code.m - 1
    chars = [""] * code.r
    for j in range(k):
        v = tau(PauliString(E.letters[j::k]))
        bits = code.table.syndrome_of(v.x, v.z)
        chars[j::k] = format(bits, f"0{width}b")[::-1]
    s = "".join(chars)
    return Syndrome(int(s[::-1], 2), code.r)
