"""Markovian correlated depolarizing channel and Monte Carlo decoding runs.

The channel is a two-state chain along the qubits: state 1 means the qubit
suffers an error, drawn uniformly from X, Y, Z.  The first qubit is in
state 1 with probability p; afterwards

    p00 = (1 - mu)(1 - p) + mu      p10 = (1 - mu) p
    p11 = (1 - mu) p + mu           p01 = (1 - mu)(1 - p)

where p10 is the chance of an error following an error-free qubit and p01
the chance of a clean qubit following an error.

The reported figure of merit is an EF-proxy: the probability that decoding
leaves a residual inside the stabilizer group.  Errors are generated in
fixed-size blocks, each seeded from ``(seed, block index)``, so trial i
always sees the same error whatever N or the worker count.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .errors import UncorrectableError
from .fast_decoder import StructuredCode, fast_decode
from .pauli import PauliString, SympVec, tau
from .qcode import QcrcCode, Syndrome

__all__ = [
    "ChannelParams",
    "SimStats",
    "sample_error",
    "sample_block",
    "run_trials",
    "sweep",
    "to_csv",
    "BLOCK_SIZE",
]

BLOCK_SIZE = 4096
Z95 = 1.959963984540054

Decoder = Union[str, Callable[[Syndrome], Union[PauliString, SympVec, None]]]


@dataclass(frozen=True)
class ChannelParams:
    p: float
    mu: float

    def __post_init__(self):
        for name in ("p", "mu"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0 or math.isnan(v):
                raise ValueError(f"{name} must lie in [0, 1], got {v}")

    @property
    def p00(self) -> float:
        return (1 - self.mu) * (1 - self.p) + self.mu

    @property
    def p11(self) -> float:
        return (1 - self.mu) * self.p + self.mu

    @property
    def p01(self) -> float:
        return (1 - self.mu) * (1 - self.p)

    @property
    def p10(self) -> float:
        return self.p * (1 - self.mu)


@dataclass(frozen=True)
class SimStats:
    trials: int
    successes: int
    seed: int
    p: float | None = None
    mu: float | None = None

    @property
    def ef_estimate(self) -> float:
        return self.successes / self.trials

    @property
    def ci_halfwidth(self) -> float:
        """95% normal-approximation half-width of the EF-proxy."""
        ef = self.ef_estimate
        return Z95 * math.sqrt(ef * (1 - ef) / self.trials)


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def sample_block(params: ChannelParams, n: int, count: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Draw ``count`` errors on n qubits as packed ``(x, z)`` halves."""
    u = rng.random((count, n))
    kinds = rng.integers(1, 4, size=(count, n), dtype=np.uint8)  # 1 X, 2 Z, 3 Y
    state = np.empty((count, n), dtype=bool)
    state[:, 0] = u[:, 0] < params.p
    p11, p10 = params.p11, params.p10
    for i in range(1, n):
        state[:, i] = np.where(state[:, i - 1], u[:, i] < p11, u[:, i] < p10)
    kinds = np.where(state, kinds, 0)
    xs = np.packbits((kinds & 1).astype(bool), axis=1, bitorder="little")
    zs = np.packbits((kinds >> 1).astype(bool), axis=1, bitorder="little")
    return [
        (int.from_bytes(x.tobytes(), "little"), int.from_bytes(z.tobytes(), "little"))
        for x, z in zip(xs, zs)
    ]


def sample_error(params: ChannelParams, n: int, rng: np.random.Generator) -> PauliString:
    x, z = sample_block(params, n, 1, rng)[0]
    return PauliString("".join("IXZY"[((x >> i) & 1) + 2 * ((z >> i) & 1)] for i in range(n)))


def _resolve(code: QcrcCode | StructuredCode, decoder: Decoder):
    """Return (stabilizer code, syndrome-bits -> (x, z) or None)."""
    stab = code.inner if isinstance(code, StructuredCode) else code
    n, r = stab.n, stab.r

    def unwrap(out):
        if out is None:
            return None
        if isinstance(out, PauliString):
            out = tau(out)
        return out.x, out.z

    if decoder == "fast":
        if not isinstance(code, StructuredCode):
            raise ValueError("the fast decoder needs a StructuredCode")

        def decode(bits):
            return unwrap(fast_decode(code, Syndrome(bits, r)))

    elif decoder == "generic":
        table = stab.decode_table

        def decode(bits):
            return table.get(bits)

    elif callable(decoder):

        def decode(bits):
            return unwrap(decoder(Syndrome(bits, r)))

    else:
        raise ValueError(f"unknown decoder {decoder!r}")
    return stab, n, decode


def _count_block(code, decoder, params: ChannelParams, seed: int, block: int, count: int) -> int:
    stab, n, decode = _resolve(code, decoder)
    errors = sample_block(params, n, BLOCK_SIZE, _block_rng(seed, block))[:count]
    ok = 0
    for x, z in errors:
        if not (x or z):
            ok += 1
            continue
        try:
            guess = decode(stab.syndrome_bits(x, z))
        except UncorrectableError:
            continue
        if guess is not None and stab.in_stabilizer(x ^ guess[0], z ^ guess[1]):
            ok += 1
    return ok


def run_trials(
    code: QcrcCode | StructuredCode,
    decoder: Decoder,
    params: ChannelParams,
    N: int,
    seed: int,
    workers: int = 1,
) -> SimStats:
    """Estimate the EF-proxy from N channel uses.

    Uncorrectable syndromes count as failures.  ``workers > 1`` spreads
    blocks over processes (named decoders only); the tally is the same.
    """
    if N < 1:
        raise ValueError("need at least one trial")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    _resolve(code, decoder)  # fail fast on bad combinations
    blocks = [(b, min(BLOCK_SIZE, N - b * BLOCK_SIZE)) for b in range(-(-N // BLOCK_SIZE))]
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_count_block, code, decoder, params, seed, b, c) for b, c in blocks]
            successes = sum(f.result() for f in futures)
    else:
        successes = sum(_count_block(code, decoder, params, seed, b, c) for b, c in blocks)
    return SimStats(N, successes, seed, params.p, params.mu)


def sweep(
    code: QcrcCode | StructuredCode,
    decoder: Decoder,
    grid: Sequence[tuple[float, float]],
    N: int,
    seed: int,
    workers: int = 1,
) -> list[SimStats]:
    """One :class:`SimStats` per (p, mu) grid point, in grid order.

    Every point reuses ``seed`` so neighbouring points share their random
    draws, which keeps trends in the curves free of seed-to-seed jitter.
    """
    if not grid:
        raise ValueError("empty grid")
    return [run_trials(code, decoder, ChannelParams(p, mu), N, seed, workers) for p, mu in grid]


def _g6(v: float) -> str:
    return format(v, ".6g")


def to_csv(rows: Iterable[SimStats], seed: int) -> str:
    buf = io.StringIO()
    buf.write(f"# seed={seed}\n")
    buf.write("# ef=EF-proxy (probability the decoding residual is a stabilizer)\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "mu", "trials", "successes", "ef", "ci95"])
    for s in rows:
        w.writerow([_g6(s.p), _g6(s.mu), s.trials, s.successes, _g6(s.ef_estimate), _g6(s.ci_halfwidth)])
    return buf.getvalue()
