"""SplitMix64, a small seedable generator with a fixed, portable output stream.

Each step adds the golden-ratio increment ``0x9E3779B97F4A7C15`` to the
64-bit state and returns the state passed through the finalizer::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all arithmetic modulo 2**64.  ``below(k)`` rejects draws from the
incomplete top block so every residue is equally likely.
"""

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % k

    def bits(self, n: int) -> int:
        """Uniform mask over ``n <= 64`` bits."""
        return self.next_u64() & ((1 << n) - 1)

    def chance(self, numerator: int, denominator: int) -> bool:
        return self.below(denominator) < numerator
