"""Project random number generator: SplitMix64.

All randomized components (tree generation, pair modes, test sweeps) draw
from this generator so that a seed reproduces the same trees on any
platform or implementation. The algorithm is the public-domain SplitMix64
step (Steele, Lea & Flood's mixer, as used by java.util.SplittableRandom):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64. Bounded draws use the plain modulo reduction
``next_u64() % bound`` (the tiny modulo bias is irrelevant here and keeps
the reduction trivially portable). ``split()`` derives an independent
stream by seeding a fresh generator from the parent's output.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; see module docstring for the algorithm."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def split(self) -> "SplitMix64":
        """Return a new generator on an independent stream."""
        return SplitMix64(self.next_u64())

    def shuffle(self, items: list) -> None:
        """Fisher-Yates shuffle in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
