"""Wall-clock scaling of :func:`fast_decode` over [[mk, k]] codes."""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fast_decoder import build_structured, fast_decode, interleave_error, structured_syndrome
from .pauli import PauliString
from .qcode import Syndrome


@dataclass(frozen=True)
class BenchPoint:
    k: int
    n: int
    seconds: float  # best per-call time


def random_subburst_error(m: int, c: int, k: int, rng: np.random.Generator) -> PauliString:
    """Independent burst of length <= c on every interleaved copy."""
    subs = []
    for _ in range(k):
        letters = ["I"] * m
        start = int(rng.integers(m))
        for i in range(c):
            letters[(start + i) % m] = "IXZY"[int(rng.integers(4))]
        subs.append(PauliString("".join(letters)))
    return interleave_error(subs)


def _time_once(code, syndromes: Sequence[Syndrome]) -> float:
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        for s in syndromes:
            fast_decode(code, s)
        return (time.perf_counter() - t0) / len(syndromes)
    finally:
        if was_enabled:
            gc.enable()


def measure_scaling(
    m: int,
    c: int,
    ks: Sequence[int],
    seed: int = 0,
    samples: int = 8,
    repeats: int = 7,
) -> list[BenchPoint]:
    rng = np.random.default_rng(seed)
    cases = []
    for k in ks:
        code = build_structured(m, c, k)
        syndromes = [structured_syndrome(code, random_subburst_error(m, c, k, rng)) for _ in range(samples)]
        fast_decode(code, syndromes[0])  # warm the letter cache
        cases.append((code, syndromes))
    # round-robin over k so a slow spell on the host hits every size alike
    best = [float("inf")] * len(cases)
    for _ in range(repeats):
        for i, (code, syndromes) in enumerate(cases):
            best[i] = min(best[i], _time_once(code, syndromes))
    return [BenchPoint(k, code.n, t) for k, (code, _), t in zip(ks, cases, best)]


def doubling_ratios(points: Sequence[BenchPoint]) -> list[float]:
    return [b.seconds / a.seconds for a, b in zip(points, points[1:])]
