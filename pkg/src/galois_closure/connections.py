"""Continuity, Galois connections between quasiorders and between closure spaces.

A pair ``(phi, psi)`` with ``phi: E -> E'`` and ``psi: E' -> E`` can be
checked three ways, which agree on every input:

* ``is_closure_galois_direct``: ``phi^-1([A']) == [psi(A')]`` for every
  subset ``A'`` of ``E'`` (exponential in ``|E'|``, kept as an oracle);
* ``is_closure_galois_via_qoset``: both maps continuous and an adjunction
  between the specialization orders (polynomial, the default check);
* ``induced_preimage_connection``: both maps continuous and the preimage maps
  form an adjunction between the lattices of closed sets.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import caps
from ._backend import kernels
from .bits import check_universe, iter_bits
from .errors import (
    ArityMismatchError,
    CapExceededError,
    InternalConsistencyError,
    NotAnAdjunctionError,
    PreconditionError,
)
from .spaces import ClosureSpace, Qoset, is_poset, specialization_order

__all__ = [
    "AdjointReport",
    "ConnectionVerdict",
    "PointMap",
    "Witness",
    "adjoint_properties_report",
    "check_t1_corollary",
    "continuity_witness",
    "induced_preimage_connection",
    "is_closure_galois_direct",
    "is_closure_galois_via_qoset",
    "is_continuous",
    "is_qoset_galois",
    "is_t1",
    "left_adjoint",
    "qoset_galois_witness",
    "right_adjoint",
    "verify_theorem",
]


class PointMap:
    """A total function ``{0..from_n-1} -> {0..to_n-1}``."""

    __slots__ = ("from_n", "to_n", "image", "_arr")

    def __init__(self, from_n: int, to_n: int, image: Sequence[int]) -> None:
        check_universe(from_n)
        check_universe(to_n)
        image = tuple(image)
        if len(image) != from_n:
            raise ArityMismatchError(f"map from {from_n} points has {len(image)} images")
        for x, y in enumerate(image):
            if not isinstance(y, int) or not 0 <= y < to_n:
                raise ArityMismatchError(f"image of {x} is {y!r}, outside a codomain of size {to_n}")
        self.from_n = from_n
        self.to_n = to_n
        self.image = image
        self._arr = array("Q", image)

    @classmethod
    def identity(cls, n: int) -> PointMap:
        return cls(n, n, range(n))

    @classmethod
    def constant(cls, from_n: int, to_n: int, value: int) -> PointMap:
        return cls(from_n, to_n, [value] * from_n)

    @property
    def array(self) -> array:
        return self._arr

    def __call__(self, x: int) -> int:
        return self.image[x]

    def image_of(self, a: int) -> int:
        return kernels.image_mask(self._arr, a)

    def preimage_of(self, b: int) -> int:
        return kernels.preimage_mask(self._arr, b)

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.from_n

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.to_n

    def then(self, other: PointMap) -> PointMap:
        """Composite ``other o self``."""
        if other.from_n != self.to_n:
            raise ArityMismatchError("maps do not compose")
        return PointMap(self.from_n, other.to_n, [other.image[y] for y in self.image])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointMap):
            return NotImplemented
        return (self.from_n, self.to_n, self.image) == (other.from_n, other.to_n, other.image)

    def __hash__(self) -> int:
        return hash((self.from_n, self.to_n, self.image))

    def __repr__(self) -> str:
        return f"PointMap({self.from_n}->{self.to_n}, {list(self.image)})"


class Witness(NamedTuple):
    """Counterexample attached to a false verdict.

    ``kind`` is one of ``"continuity"`` (``detail = (map_name, F')`` with the
    closed set whose preimage is not closed), ``"image"`` (``detail = (A,)``
    with ``f([A])`` not inside ``[f(A)]``), ``"pair"`` (``detail = (x, x')``),
    ``"subset"`` (``detail = (A',)``) or ``"closed_pair"``
    (``detail = (F, F')``).  Sets are masks.
    """

    kind: str
    detail: tuple


def _check_map(f: PointMap, src_n: int, dst_n: int, name: str) -> None:
    if not isinstance(f, PointMap):
        raise TypeError(f"{name} must be a PointMap, got {type(f).__name__}")
    if f.from_n != src_n or f.to_n != dst_n:
        raise ArityMismatchError(
            f"{name} maps {f.from_n} -> {f.to_n} points, expected {src_n} -> {dst_n}"
        )


def _check_pair(phi, psi, n: int, n_prime: int) -> None:
    _check_map(phi, n, n_prime, "phi")
    _check_map(psi, n_prime, n, "psi")


# --------------------------------------------------------------------------
# continuity


def continuity_witness(f: PointMap, src: ClosureSpace, dst: ClosureSpace) -> int | None:
    """First closed set of ``dst`` (canonical order) whose preimage is not closed."""
    _check_map(f, src.n, dst.n, "f")
    j = kernels.continuity_scan(f.array, src.family.array, dst.family.array)
    return None if j < 0 else dst.closed[j]


def image_continuity_witness(f: PointMap, src: ClosureSpace, dst: ClosureSpace) -> int | None:
    """First subset ``A`` (numeric order) with ``f([A])`` not inside ``[f(A)]``."""
    _check_map(f, src.n, dst.n, "f")
    if src.n > caps.table_cap():
        raise CapExceededError(
            f"image-form continuity sweeps 2**{src.n} subsets; cap is n <= {caps.table_cap()}"
        )
    a = kernels.continuity_image_scan(f.array, src.family.array, dst.family.array, src.n)
    return None if a < 0 else a


def is_continuous(f: PointMap, src: ClosureSpace, dst: ClosureSpace, *, exhaustive: bool = False) -> bool:
    """Preimage of every closed set is closed.

    With ``exhaustive=True`` (and ``2**src.n`` within the table cap) the
    image form ``f([A]) <= [f(A)]`` is swept as well and the two must agree.
    """
    by_preimage = continuity_witness(f, src, dst) is None
    if exhaustive and src.n <= caps.table_cap():
        by_image = image_continuity_witness(f, src, dst) is None
        if by_image != by_preimage:
            raise InternalConsistencyError(
                f"continuity criteria disagree for {f!r}: preimage={by_preimage}, image={by_image}"
            )
    return by_preimage


# --------------------------------------------------------------------------
# quasiorder adjunctions


def qoset_galois_witness(phi: PointMap, psi: PointMap, p: Qoset, p_prime: Qoset) -> tuple[int, int] | None:
    """First ``(x, x')`` where ``phi(x) <= x'`` and ``x <= psi(x')`` disagree."""
    _check_pair(phi, psi, p.n, p_prime.n)
    x, xp = kernels.qoset_galois_scan(phi.array, psi.array, p.up_array, p_prime.up_array)
    return None if x < 0 else (x, xp)


def is_qoset_galois(phi: PointMap, psi: PointMap, p: Qoset, p_prime: Qoset) -> bool:
    return qoset_galois_witness(phi, psi, p, p_prime) is None


# --------------------------------------------------------------------------
# closure-space connections


def _direct_witness(phi, psi, e: ClosureSpace, e_prime: ClosureSpace, cap: int | None):
    _check_pair(phi, psi, e.n, e_prime.n)
    cap = caps.direct_cap() if cap is None else cap
    if e_prime.n > cap:
        raise CapExceededError(
            f"direct check sweeps 2**{e_prime.n} subsets (cap n' <= {cap}); "
            "use is_closure_galois_via_qoset instead"
        )
    ap = kernels.direct_scan(phi.array, psi.array, e.family.array, e_prime.family.array, e_prime.n)
    return None if ap < 0 else Witness("subset", (ap,))


def is_closure_galois_direct(
    phi: PointMap, psi: PointMap, e: ClosureSpace, e_prime: ClosureSpace, *, cap: int | None = None
) -> bool:
    """``phi^-1([A']) == [psi(A')]`` for every subset ``A'`` of ``e_prime``."""
    return _direct_witness(phi, psi, e, e_prime, cap) is None


def _continuity_pair_witness(phi, psi, e, e_prime) -> Witness | None:
    bad = continuity_witness(phi, e, e_prime)
    if bad is not None:
        return Witness("continuity", ("phi", bad))
    bad = continuity_witness(psi, e_prime, e)
    if bad is not None:
        return Witness("continuity", ("psi", bad))
    return None


def _via_qoset_witness(phi, psi, e, e_prime) -> Witness | None:
    _check_pair(phi, psi, e.n, e_prime.n)
    w = _continuity_pair_witness(phi, psi, e, e_prime)
    if w is not None:
        return w
    pair = qoset_galois_witness(phi, psi, specialization_order(e), specialization_order(e_prime))
    return None if pair is None else Witness("pair", pair)


def is_closure_galois_via_qoset(phi: PointMap, psi: PointMap, e: ClosureSpace, e_prime: ClosureSpace) -> bool:
    """Both maps continuous and adjoint for the specialization orders."""
    return _via_qoset_witness(phi, psi, e, e_prime) is None


def _induced_witness(phi, psi, e, e_prime) -> Witness | None:
    _check_pair(phi, psi, e.n, e_prime.n)
    w = _continuity_pair_witness(phi, psi, e, e_prime)
    if w is not None:
        return w
    i, j = kernels.induced_scan(phi.array, psi.array, e.family.array, e_prime.family.array)
    return None if i < 0 else Witness("closed_pair", (e.closed[i], e_prime.closed[j]))


def induced_preimage_connection(phi: PointMap, psi: PointMap, e: ClosureSpace, e_prime: ClosureSpace) -> bool:
    """Both maps continuous and ``phi^-1(F') <= F  <=>  F' <= psi^-1(F)`` on closed sets."""
    return _induced_witness(phi, psi, e, e_prime) is None


@dataclass(frozen=True)
class ConnectionVerdict:
    """The three equivalent conditions evaluated on one pair of maps.

    ``cond_direct`` is ``None`` when the direct sweep was skipped for size.
    """

    cond_direct: bool | None
    cond_qoset_plus_continuity: bool
    cond_induced_on_closed_sets: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self) -> dict:
        return {
            "direct": self.cond_direct,
            "qoset": self.cond_qoset_plus_continuity,
            "induced": self.cond_induced_on_closed_sets,
        }

    @property
    def agree(self) -> bool:
        values = {v for v in self.flags().values() if v is not None}
        return len(values) <= 1

    @property
    def holds(self) -> bool:
        return self.cond_qoset_plus_continuity


def verify_theorem(
    phi: PointMap, psi: PointMap, e: ClosureSpace, e_prime: ClosureSpace, *, cap: int | None = None
) -> ConnectionVerdict:
    """Evaluate all three characterizations, attaching a witness to each false one."""
    _check_pair(phi, psi, e.n, e_prime.n)
    witnesses = {}
    cap = caps.direct_cap() if cap is None else cap
    direct = None
    if e_prime.n <= cap:
        w = _direct_witness(phi, psi, e, e_prime, cap)
        direct = w is None
        if w is not None:
            witnesses["direct"] = w
    w = _via_qoset_witness(phi, psi, e, e_prime)
    if w is not None:
        witnesses["qoset"] = w
    qoset = w is None
    w = _induced_witness(phi, psi, e, e_prime)
    if w is not None:
        witnesses["induced"] = w
    return ConnectionVerdict(direct, qoset, w is None, witnesses)


# --------------------------------------------------------------------------
# adjunction properties and synthesis


@dataclass(frozen=True)
class AdjointReport:
    """The standard consequences of ``(phi, psi)`` being an adjunction.

    ``left_retract`` is the three-way equivalence "x == psi(phi(x)) for all x
    iff phi injective iff psi surjective", ``right_retract`` its dual.  On
    quasiorders equality, injectivity and surjectivity are all taken up to
    order-equivalence; on posets they are exact.  ``details`` holds the
    individual sides.
    """

    order_preserving: bool
    unit: bool
    counit: bool
    left_retract: bool
    right_retract: bool
    details: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return (
            self.order_preserving and self.unit and self.counit
            and self.left_retract and self.right_retract
        )


def _monotone(f: PointMap, p: Qoset, q: Qoset) -> bool:
    return all(
        q.leq(f.image[x], f.image[y]) for y in range(p.n) for x in iter_bits(p.down[y])
    )


def _injective_mod(f: PointMap, p: Qoset, q: Qoset) -> bool:
    n = p.n
    return all(
        p.equivalent(x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if q.equivalent(f.image[x], f.image[y])
    )


def _surjective_mod(f: PointMap, q: Qoset) -> bool:
    return all(any(q.equivalent(f.image[s], y) for s in range(f.from_n)) for y in range(q.n))


def adjoint_properties_report(phi: PointMap, psi: PointMap, p: Qoset, p_prime: Qoset) -> AdjointReport:
    w = qoset_galois_witness(phi, psi, p, p_prime)
    if w is not None:
        raise NotAnAdjunctionError(f"(phi, psi) is not a Galois connection; fails at (x, x')={w}")
    order_preserving = _monotone(phi, p, p_prime) and _monotone(psi, p_prime, p)
    unit = all(p.leq(x, psi.image[phi.image[x]]) for x in range(p.n))
    counit = all(p_prime.leq(phi.image[psi.image[xp]], xp) for xp in range(p_prime.n))
    details = {
        "unit_identity": all(p.equivalent(x, psi.image[phi.image[x]]) for x in range(p.n)),
        "phi_injective": _injective_mod(phi, p, p_prime),
        "psi_surjective": _surjective_mod(psi, p),
        "counit_identity": all(
            p_prime.equivalent(xp, phi.image[psi.image[xp]]) for xp in range(p_prime.n)
        ),
        "psi_injective": _injective_mod(psi, p_prime, p),
        "phi_surjective": _surjective_mod(phi, p_prime),
    }
    left = details["unit_identity"] == details["phi_injective"] == details["psi_surjective"]
    right = details["counit_identity"] == details["psi_injective"] == details["phi_surjective"]
    report = AdjointReport(order_preserving, unit, counit, left, right, details)
    if is_poset(p) and is_poset(p_prime) and not report.all_hold:
        raise InternalConsistencyError(f"adjunction on posets violates a standard property: {report}")
    return report


def right_adjoint(phi: PointMap, p: Qoset, p_prime: Qoset) -> PointMap | None:
    """A ``psi`` making ``(phi, psi)`` a Galois connection, or ``None``.

    ``psi(x')`` is the smallest-index greatest element of
    ``{x : phi(x) <= x'}``.
    """
    _check_map(phi, p.n, p_prime.n, "phi")
    image = []
    for xp in range(p_prime.n):
        s = phi.preimage_of(p_prime.down[xp])
        top = next((m for m in iter_bits(s) if s & ~p.down[m] == 0), None)
        if top is None:
            return None
        image.append(top)
    psi = PointMap(p_prime.n, p.n, image)
    return psi if is_qoset_galois(phi, psi, p, p_prime) else None


def left_adjoint(psi: PointMap, p: Qoset, p_prime: Qoset) -> PointMap | None:
    """A ``phi`` making ``(phi, psi)`` a Galois connection, or ``None``.

    ``phi(x)`` is the smallest-index least element of ``{x' : x <= psi(x')}``.
    """
    _check_map(psi, p_prime.n, p.n, "psi")
    image = []
    for x in range(p.n):
        t = psi.preimage_of(p.up[x])
        bottom = next((m for m in iter_bits(t) if t & ~p_prime.up[m] == 0), None)
        if bottom is None:
            return None
        image.append(bottom)
    phi = PointMap(p.n, p_prime.n, image)
    return phi if is_qoset_galois(phi, psi, p, p_prime) else None


# --------------------------------------------------------------------------
# T1 spaces


def is_t1(e: ClosureSpace) -> bool:
    """Every singleton is closed."""
    return all(e.closure_mask(1 << x) == 1 << x for x in range(e.n))


def check_t1_corollary(phi: PointMap, psi: PointMap, e: ClosureSpace, e_prime: ClosureSpace) -> bool:
    """Galois connection iff mutually inverse homeomorphisms, on T1 spaces.

    Always ``True`` for correct code; ``False`` marks a counterexample.
    """
    if not is_t1(e) or not is_t1(e_prime):
        raise PreconditionError("both spaces must have every singleton closed")
    galois = is_closure_galois_via_qoset(phi, psi, e, e_prime)
    inverse = (
        phi.then(psi) == PointMap.identity(e.n)
        and psi.then(phi) == PointMap.identity(e_prime.n)
    )
    homeo = (
        inverse
        and is_continuous(phi, e, e_prime)
        and is_continuous(psi, e_prime, e)
    )
    return galois == homeo
