"""Deterministic 64-bit RNG shared by both engine backends.

splitmix64 is counter-based: the state advances by a fixed increment per
draw, so the n-th output is a pure function of (seed, n). The compiled
kernel implements the same recurrence in C; streams must match draw for
draw or replay and backend-equivalence guarantees break.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TO_DOUBLE = 1.0 / 9007199254740992.0  # 2^-53


def mix64(*parts: int) -> int:
    """Stable 64-bit hash of a tuple of integers.

    Used to derive per-run and per-record seeds; adding new grid points to a
    sweep must not perturb seeds of existing points, so this depends only on
    the values passed in.
    """
    h = 0x80AB1AEE9C1E30A3
    for p in parts:
        h = (h ^ (p & _MASK)) & _MASK
        h = (h + _GOLDEN) & _MASK
        h = (h ^ (h >> 30)) * _MIX1 & _MASK
        h = (h ^ (h >> 27)) * _MIX2 & _MASK
        h = h ^ (h >> 31)
    return h


class SplitMix64:
    """Scalar splitmix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = (z ^ (z >> 30)) * _MIX1 & _MASK
        z = (z ^ (z >> 27)) * _MIX2 & _MASK
        return z ^ (z >> 31)

    def next_double(self) -> float:
        return (self.next_u64() >> 11) * _TO_DOUBLE

    def next_below(self, n: int) -> int:
        """Uniform integer in {0, ..., n-1} (n small, <= 2**20)."""
        return int(self.next_double() * n)


def doubles_from(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized splitmix64 doubles: outputs start..start+count-1 of the stream.

    Bit-identical to `count` successive SplitMix64.next_double() calls after
    `start` draws have been consumed.
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + idx * np.uint64(_GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * _TO_DOUBLE
