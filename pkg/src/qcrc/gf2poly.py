"""Polynomials over GF(2) and the cyclic ring GF(2)[X]/(X^n - 1).

Polynomials are carried as nonnegative Python integers: bit i of the
integer is the coefficient of X^i.  Integers have no trailing zeros, so
every value is canonical by construction.  The same packing is used for
ring elements and binary vectors, where bit i is coordinate i+1.

The integer-level helpers (``mul_int``, ``rem_int``, ``rotate_int``, ...)
are what the decoders call in their inner loops; :class:`BinPoly` and
:class:`RingElem` wrap them for the public API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BinPoly",
    "RingElem",
    "poly_add",
    "poly_mul",
    "poly_divmod",
    "poly_rem",
    "cyclic_shift",
    "cyclic_burst_length",
    "divides_xn_minus_1",
    "parse_poly",
    "format_poly",
    "mul_int",
    "divmod_int",
    "rem_int",
    "rotate_int",
    "cbl_int",
    "bits_to_int",
    "int_to_bits",
    "iter_cyclic_bursts",
]


# -- integer kernels ------------------------------------------------------


def mul_int(a: int, b: int) -> int:
    """Carry-less product of two packed polynomials."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def divmod_int(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def rem_int(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def rotate_int(v: int, s: int, n: int) -> int:
    """Multiply ``v`` by X^s in GF(2)[X]/(X^n - 1)."""
    s %= n
    if s == 0:
        return v
    mask = (1 << n) - 1
    return ((v << s) | (v >> (n - s))) & mask


def cbl_int(v: int, n: int) -> int:
    """Cyclic burst length of an n-bit vector; 0 for the zero vector."""
    if v == 0:
        return 0
    support = [i for i in range(n) if (v >> i) & 1]
    # the burst is the complement of the longest cyclic run of zeros
    widest_gap = support[0] + n - support[-1]
    for a, b in zip(support, support[1:]):
        widest_gap = max(widest_gap, b - a)
    return n - widest_gap + 1


def iter_cyclic_bursts(n: int, t: int, include_zero: bool = True) -> Iterator[int]:
    """Every n-bit vector of cyclic burst length at most ``t``, each once."""
    if include_zero:
        yield 0
    t = min(t, n)
    if t <= 0:
        return
    # burst starts at its first set bit; only when n < 2t - 1 can two such
    # starts cover the same support
    seen: set[int] | None = set() if n < 2 * t - 1 else None
    for start in range(n):
        for tail in range(1 << (t - 1)):
            v = rotate_int(1 | (tail << 1), start, n)
            if seen is not None:
                if v in seen:
                    continue
                seen.add(v)
            yield v


def bits_to_int(bits: Iterable[int]) -> int:
    """Pack a coordinate sequence (coordinate 1 first) into an integer."""
    v = 0
    for i, b in enumerate(bits):
        if b & 1:
            v |= 1 << i
        elif b not in (0, False):
            raise ValueError(f"bit values must be 0 or 1, got {b!r}")
    return v


def int_to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(n))


# -- value types ----------------------------------------------------------


@dataclass(frozen=True)
class BinPoly:
    """A polynomial over GF(2)."""

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("packed polynomial must be nonnegative")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> BinPoly:
        """``coeffs[i]`` is the coefficient of X^i."""
        return cls(bits_to_int(coeffs))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> BinPoly:
        v = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            v ^= 1 << e
        return cls(v)

    @classmethod
    def monomial(cls, e: int) -> BinPoly:
        return cls(1 << e)

    @property
    def degree(self) -> int | float:
        """Degree; ``-math.inf`` for the zero polynomial."""
        return self.value.bit_length() - 1 if self.value else -math.inf

    @property
    def coeffs(self) -> tuple[int, ...]:
        return int_to_bits(self.value, self.value.bit_length())

    def exponents(self) -> list[int]:
        return [i for i in range(self.value.bit_length() - 1, -1, -1) if (self.value >> i) & 1]

    def __getitem__(self, i: int) -> int:
        return (self.value >> i) & 1

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: BinPoly) -> BinPoly:
        return BinPoly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: BinPoly) -> BinPoly:
        return BinPoly(mul_int(self.value, other.value))

    def __mod__(self, other: BinPoly) -> BinPoly:
        return BinPoly(rem_int(self.value, other.value))

    def __floordiv__(self, other: BinPoly) -> BinPoly:
        return BinPoly(divmod_int(self.value, other.value)[0])

    def __divmod__(self, other: BinPoly) -> tuple[BinPoly, BinPoly]:
        q, r = divmod_int(self.value, other.value)
        return BinPoly(q), BinPoly(r)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BinPoly({format_poly(self)!r})"


@dataclass(frozen=True)
class RingElem:
    """An element of GF(2)[X]/(X^n - 1), i.e. an n-bit cyclic word."""

    n: int
    value: int = 0

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("ring length must be positive")
        if self.value < 0 or self.value >> self.n:
            raise ValueError(f"value does not fit in {self.n} coordinates")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> RingElem:
        return cls(len(bits), bits_to_int(bits))

    @classmethod
    def from_poly(cls, p: BinPoly, n: int) -> RingElem:
        """Reduce ``p`` modulo X^n - 1."""
        v, out = p.value, 0
        mask = (1 << n) - 1
        while v:
            out ^= v & mask
            v >>= n
        return cls(n, out)

    @property
    def bits(self) -> tuple[int, ...]:
        return int_to_bits(self.value, self.n)

    def to_poly(self) -> BinPoly:
        return BinPoly(self.value)

    def __add__(self, other: RingElem) -> RingElem:
        if other.n != self.n:
            raise ValueError("ring lengths differ")
        return RingElem(self.n, self.value ^ other.value)

    def __mul__(self, other: RingElem) -> RingElem:
        if other.n != self.n:
            raise ValueError("ring lengths differ")
        return RingElem.from_poly(BinPoly(mul_int(self.value, other.value)), self.n)

    def __bool__(self) -> bool:
        return self.value != 0


# -- operations -----------------------------------------------------------


def poly_add(a: BinPoly, b: BinPoly) -> BinPoly:
    return a + b


def poly_mul(a: BinPoly, b: BinPoly) -> BinPoly:
    return a * b


def poly_divmod(a: BinPoly, g: BinPoly) -> tuple[BinPoly, BinPoly]:
    return divmod(a, g)


def poly_rem(a: BinPoly, g: BinPoly) -> BinPoly:
    """``a mod g``; raises ``ZeroDivisionError`` for ``g = 0``."""
    return a % g


def cyclic_shift(v: RingElem, s: int) -> RingElem:
    """Multiply by X^s: coordinate i moves to (i + s) mod n."""
    return RingElem(v.n, rotate_int(v.value, s, v.n))


def cyclic_burst_length(v: RingElem) -> int:
    return cbl_int(v.value, v.n)


def divides_xn_minus_1(g: BinPoly, n: int) -> bool:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    return rem_int((1 << n) | 1, g.value) == 0


# -- text format ----------------------------------------------------------


def parse_poly(text: str) -> BinPoly:
    """Parse ``"10011"`` (highest degree first) or ``"4,1,0"`` (exponents)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if "," in s or set(s) - {"0", "1"}:
        try:
            exps = [int(tok) for tok in s.split(",") if tok]
        except ValueError:
            raise ValueError(f"cannot parse polynomial {text!r}") from None
        if len(set(exps)) != len(exps):
            raise ValueError(f"repeated exponent in {text!r}")
        return BinPoly.from_exponents(exps)
    return BinPoly(int(s, 2))


def format_poly(p: BinPoly) -> str:
    """Big-endian bit string; the zero polynomial is ``"0"``."""
    return format(p.value, "b")
