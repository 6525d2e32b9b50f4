"""Deterministic pseudo-random numbers for reproducible experiments.

All randomized code in this package draws from SplitMix64 (Steele, Lea &
Flood 2014; the constants below are the published ones used in
``java.util.SplittableRandom`` and the xoshiro reference seeders).  The
point of hand-rolling a 20-line generator instead of using a platform RNG
is that any reimplementation of this tool, in any language, can reproduce
our experiment reports bit for bit from the seed alone.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream seeded by a 64-bit integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        """Next 64-bit output word."""
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            w = self.next_u64()
            if w < limit:
                return w % bound

    def derive(self, index: int) -> "SplitMix64":
        """Child stream for trial `index`, independent of draws made so far."""
        probe = SplitMix64((self._state ^ (index * _GAMMA)) & _MASK64)
        return SplitMix64(probe.next_u64())
