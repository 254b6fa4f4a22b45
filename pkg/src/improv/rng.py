"""Deterministic random number generation.

Every probabilistic choice in the engine draws from a SplitMix64 stream so
that a (seed, input stream) pair fully determines the improvised output on
any platform.
"""

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator with 53-bit uniform doubles in [0, 1)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        # top 53 bits -> exact dyadic rational in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53


def rng_new(seed: int) -> SplitMix64:
    """Create a fresh generator. Same seed, same stream, everywhere."""
    return SplitMix64(seed)
