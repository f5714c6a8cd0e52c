"""Exhaustive and seeded random generators for spaces, quasiorders and maps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import caps
from .bits import canonical_key, check_universe, full_mask, iter_bits
from .connections import (
    PointMap,
    continuity_witness,
    is_closure_galois_direct,
    is_qoset_galois,
)
from .errors import CapExceededError, InternalConsistencyError
from .rng import SplitMix64
from .spaces import ClosureSpace, MooreFamily, Qoset, closure_of_sets, specialization_order

__all__ = [
    "GeneratorConfig",
    "all_maps",
    "enumerate_galois_connections",
    "enumerate_moore_families",
    "enumerate_qosets",
    "enumerate_spaces",
    "family_key",
    "random_closure_space",
    "random_map",
    "random_qoset",
]


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    n_prime: int = 0
    seed: int = 0
    sample_count: int = 1
    mode: str = "exhaustive"
    map_budget: int = caps.CONNECTION_BUDGET

    def __post_init__(self) -> None:
        check_universe(self.n)
        check_universe(self.n_prime)
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {self.mode!r}")
        if self.sample_count <= 0:
            raise ValueError("sample_count must be positive")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.mode == "exhaustive":
            if max(self.n, self.n_prime) > caps.EXHAUSTIVE_ENUM_CAP:
                raise CapExceededError(
                    f"exhaustive enumeration is limited to n <= {caps.EXHAUSTIVE_ENUM_CAP}"
                )
            if map_pair_count(self.n, self.n_prime) > self.map_budget:
                raise CapExceededError("map pairs exceed the configured budget")


def map_pair_count(n: int, n_prime: int) -> int:
    return n_prime**n * n**n_prime


def family_key(f: MooreFamily) -> tuple:
    """Canonical order on families: size, then members in canonical order."""
    return (len(f.closed), tuple(canonical_key(m) for m in f.closed))


def _check_enum_cap(n: int) -> None:
    check_universe(n)
    if n > caps.EXHAUSTIVE_ENUM_CAP:
        raise CapExceededError(
            f"exhaustive enumeration is limited to n <= {caps.EXHAUSTIVE_ENUM_CAP} (got {n})"
        )


def enumerate_moore_families(n: int) -> Iterator[MooreFamily]:
    """Every Moore family on ``n`` points, once each, in canonical order.

    Backtracking over the proper subsets by decreasing size: including a set
    forces all its intersections with earlier members, and those always have
    fewer elements, so they are decided later.
    """
    _check_enum_cap(n)
    full = full_mask(n)
    cands = sorted(range(full), key=canonical_key, reverse=True)
    found = []

    def walk(idx: int, members: list[int], must: frozenset) -> None:
        if idx == len(cands):
            found.append(MooreFamily(n, members, check=False))
            return
        c = cands[idx]
        if c not in must:
            walk(idx + 1, members, must)
        members.append(c)
        walk(idx + 1, members, must | {c & m for m in members})
        members.pop()

    walk(0, [full], frozenset())
    found.sort(key=family_key)
    yield from found


def enumerate_qosets(n: int) -> Iterator[Qoset]:
    """Every quasiorder on ``n`` points, ordered lexicographically by down-set rows."""
    _check_enum_cap(n)
    rows: list[int] = []

    def compatible(y: int, d: int) -> bool:
        for x, dx in enumerate(rows):
            if d >> x & 1 and dx & ~d:
                return False
            if dx >> y & 1 and d & ~dx:
                return False
        return True

    def walk() -> Iterator[tuple[int, ...]]:
        y = len(rows)
        if y == n:
            yield tuple(rows)
            return
        for d in range(1 << n):
            if d >> y & 1 and compatible(y, d):
                rows.append(d)
                yield from walk()
                rows.pop()

    for down in walk():
        yield Qoset(n, down)


def enumerate_spaces(max_n: int) -> Iterator[ClosureSpace]:
    """All closure spaces with ``0 <= n <= max_n``, by size then canonical family order."""
    for n in range(max_n + 1):
        for fam in enumerate_moore_families(n):
            yield ClosureSpace(fam)


def all_maps(n: int, n_prime: int) -> Iterator[PointMap]:
    """Every map ``{0..n-1} -> {0..n_prime-1}`` in lexicographic image order."""
    for image in itertools.product(range(n_prime), repeat=n):
        yield PointMap(n, n_prime, image)


def enumerate_galois_connections(
    e: ClosureSpace,
    e_prime: ClosureSpace,
    *,
    budget: int = caps.CONNECTION_BUDGET,
    verify: bool = False,
) -> Iterator[tuple[PointMap, PointMap]]:
    """Every pair ``(phi, psi)`` that is a Galois connection between the spaces.

    Pairs come in lexicographic order of ``phi`` then ``psi``.  For each
    continuous ``phi`` only the ``psi`` whose values are greatest elements of
    ``{x : phi(x) <= x'}`` are tried; every right adjoint has that form.  With
    ``verify`` each pair is re-checked against the direct definition.
    """
    n, n_prime = e.n, e_prime.n
    if map_pair_count(n, n_prime) > budget:
        raise CapExceededError(
            f"{map_pair_count(n, n_prime)} map pairs exceed the budget of {budget}"
        )
    p, pp = specialization_order(e), specialization_order(e_prime)
    for phi in all_maps(n, n_prime):
        if continuity_witness(phi, e, e_prime) is not None:
            continue
        choices = []
        for xp in range(n_prime):
            s = phi.preimage_of(pp.down[xp])
            tops = [m for m in iter_bits(s) if s & ~p.down[m] == 0]
            if not tops:
                break
            choices.append(tops)
        else:
            for image in itertools.product(*choices):
                psi = PointMap(n_prime, n, image)
                if continuity_witness(psi, e_prime, e) is not None:
                    continue
                if not is_qoset_galois(phi, psi, p, pp):
                    continue
                if verify and e_prime.n <= caps.direct_cap():
                    if not is_closure_galois_direct(phi, psi, e, e_prime):
                        raise InternalConsistencyError(
                            f"connection {phi!r}, {psi!r} fails the direct definition"
                        )
                yield phi, psi


# --------------------------------------------------------------------------
# seeded random generators


def random_closure_space(n: int, seed: int, k: int | None = None) -> ClosureSpace:
    """Intersection closure of ``k`` random subsets plus the universe.

    ``k`` defaults to a draw from ``[0, 2n]``.
    """
    check_universe(n)
    rng = SplitMix64(seed)
    if k is None:
        k = rng.below(2 * n + 1)
    sets = [rng.bits(n) for _ in range(k)]
    return ClosureSpace(closure_of_sets(n, sets))


def random_qoset(n: int, seed: int, density: tuple[int, int] = (1, 3)) -> Qoset:
    """Reflexive-transitive closure of a random relation.

    Each ordered pair ``x != y`` is related with probability
    ``density[0] / density[1]``.
    """
    check_universe(n)
    rng = SplitMix64(seed)
    num, den = density
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and rng.chance(num, den)]
    return Qoset.from_relation(n, pairs)


def random_map(n: int, n_prime: int, seed: int) -> PointMap:
    check_universe(n)
    check_universe(n_prime)
    if n > 0 and n_prime == 0:
        raise ValueError("no map from a nonempty universe into the empty one")
    rng = SplitMix64(seed)
    return PointMap(n, n_prime, [rng.below(n_prime) for _ in range(n)])
