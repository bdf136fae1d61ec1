"""Seedable, portable random number generation.

Every randomized procedure in this package (training splits, page holdouts,
synthetic graph generation) draws from SplitMix64, chosen because its state
transition and output mix are fully specified by five constants, so streams
can be replayed bit-for-bit in any language:

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z xor (z >> 31)

Derived draws are likewise fixed conventions of this package:

* ``random()``       -- top 53 bits scaled by 2**-53, uniform in [0, 1).
* ``below(n)``       -- multiply-shift bounded integer, (x * n) >> 64.
* ``sample(n, k)``   -- partial Fisher-Yates over [0, n), first k entries.
* ``shuffle(arr)``   -- full Fisher-Yates, front to back.

``raw(n)`` vectorizes n consecutive outputs; it consumes exactly the same
stream positions as n scalar ``next_u64()`` calls.
"""

from __future__ import annotations

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK64 = 0xFFFFFFFFFFFFFFFF

PRNG_NAME = "splitmix64"


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def raw(self, n: int) -> np.ndarray:
        """The next n outputs as a uint64 array, advancing the state by n."""
        with np.errstate(over="ignore"):
            steps = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(GOLDEN)
            z = np.uint64(self._state) + steps
            z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
            z = z ^ (z >> np.uint64(31))
        self._state = (self._state + GOLDEN * n) & MASK64
        return z

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def uniforms(self, n: int) -> np.ndarray:
        """n doubles in [0, 1), one stream position each."""
        return (self.raw(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via the multiply-shift reduction."""
        if n <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * n) >> 64

    def sample(self, n: int, k: int) -> np.ndarray:
        """k distinct integers from [0, n), partial Fisher-Yates order."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        arr = np.arange(n, dtype=np.int64)
        for j in range(k):
            r = j + self.below(n - j)
            arr[j], arr[r] = arr[r], arr[j]
        return arr[:k].copy()

    def shuffle(self, arr: np.ndarray) -> None:
        n = len(arr)
        for j in range(n - 1):
            r = j + self.below(n - j)
            arr[j], arr[r] = arr[r], arr[j]

    def geometric(self, mean: float, n: int) -> np.ndarray:
        """n draws from the geometric distribution on {1, 2, ...} with the
        given mean (success probability 1/mean), by CDF inversion."""
        if mean < 1.0:
            raise ValueError("geometric mean must be >= 1")
        if mean == 1.0:
            self.raw(n)  # keep stream consumption independent of the mean
            return np.ones(n, dtype=np.int64)
        p = 1.0 / mean
        u = self.uniforms(n)
        draws = np.ceil(np.log1p(-u) / np.log1p(-p))
        return np.maximum(draws, 1.0).astype(np.int64)
