"""Subsets of an indexed finite universe, stored as integer bit vectors.

Element ``i`` of a universe of size ``n`` is bit ``1 << i``.  Internally the
package passes raw ``int`` masks around; :class:`Subset` is the public,
size-checked wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .caps import MAX_UNIVERSE


def full_mask(n: int) -> int:
    return (1 << n) - 1


def check_universe(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"universe size must be a nonnegative int, got {n!r}")
    if n > MAX_UNIVERSE:
        raise ValueError(f"universe size {n} exceeds the supported maximum {MAX_UNIVERSE}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key for closed sets: popcount first, then numeric value."""
    return (popcount(mask), mask)


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, order=False)
class Subset:
    """A subset of ``{0, ..., n-1}``."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        check_universe(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit a universe of size {self.n}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> Subset:
        indices = list(indices)
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"element {i} outside universe of size {n}")
        return cls(mask_of(indices), n)

    @classmethod
    def empty(cls, n: int) -> Subset:
        return cls(0, n)

    @classmethod
    def universe(cls, n: int) -> Subset:
        return cls(full_mask(n), n)

    def _same(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __and__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.bits & other.bits, self.n)

    def __or__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.bits | other.bits, self.n)

    def __sub__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.bits & ~other.bits, self.n)

    def complement(self) -> Subset:
        return Subset(full_mask(self.n) & ~self.bits, self.n)

    def __le__(self, other: Subset) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def issubset(self, other: Subset) -> bool:
        return self <= other

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __repr__(self) -> str:
        return f"Subset({{{', '.join(map(str, self))}}}, n={self.n})"
