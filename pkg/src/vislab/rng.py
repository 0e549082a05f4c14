"""Deterministic pseudo-randomness shared by every randomized routine.

Reproducibility contract: all random draws in this package come from the
SplitMix64 generator below, seeded directly with the user-supplied integer.
The update is the 64-bit multiplicative finalizer

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z <- ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output <- z xor (z >> 31)

Bounded draws use plain modulo reduction and unit-interval draws use the top
53 bits, so any implementation of this scheme replays identical streams,
permutations, and generated graphs for a given seed.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny deterministic stream of 64-bit words."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Draw from range(bound) by modulo reduction (bias is irrelevant here:
        determinism, not statistical quality, is the contract)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def unit(self) -> float:
        """Draw a float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def permutation(n: int, seed: int) -> list[int]:
    """Seed-derived permutation of range(n): Fisher-Yates driven by SplitMix64,
    swapping from the top index downward."""
    rng = SplitMix64(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm
