"""Closure spaces, Moore families, quasiorders and closed-set lattices.

A closure space on ``{0, ..., n-1}`` is represented by its Moore family of
closed sets.  Closed sets are kept in canonical order (popcount, then numeric
value), which makes the first member containing a set its closure.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import caps
from ._backend import kernels
from .bits import Subset, canonical_key, check_universe, full_mask, iter_bits
from .errors import (
    CapExceededError,
    InvalidClosureError,
    InvalidFamilyError,
    MalformedTableError,
    RelationInvariantError,
)

__all__ = [
    "ClosedSetPoset",
    "ClosureSpace",
    "ClosureTable",
    "MooreFamily",
    "MooreViolation",
    "Qoset",
    "ValidationReport",
    "alexandrov_closure",
    "closed_set_lattice",
    "closure",
    "closure_of_sets",
    "closure_table",
    "find_moore_violation",
    "is_poset",
    "lower_set",
    "moore_family_from_table",
    "specialization_order",
    "validate_closure_operator",
    "validate_moore_family",
]


def _as_mask(a, n: int) -> int:
    if isinstance(a, Subset):
        if a.n != n:
            raise ValueError(f"subset over {a.n} points used with a universe of {n}")
        return a.bits
    if isinstance(a, int):
        if a < 0 or a >> n:
            raise ValueError(f"mask {a:#x} does not fit a universe of size {n}")
        return a
    raise TypeError(f"expected Subset or int mask, got {type(a).__name__}")


# --------------------------------------------------------------------------
# closure tables


@dataclass(frozen=True)
class ClosureTable:
    """Extensional closure operator: ``entries[A]`` is the closure of mask ``A``."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        check_universe(self.n)
        if self.n > caps.table_cap():
            raise CapExceededError(
                f"closure tables are limited to n <= {caps.table_cap()} (got {self.n})"
            )
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != 1 << self.n:
            raise MalformedTableError(
                f"table over n={self.n} needs {1 << self.n} entries, got {len(entries)}"
            )
        limit = 1 << self.n
        for a, c in enumerate(entries):
            if not isinstance(c, int) or not 0 <= c < limit:
                raise MalformedTableError(f"entry for {a:#x} is not a subset over n={self.n}: {c!r}")

    @classmethod
    def from_function(cls, n: int, fn) -> ClosureTable:
        return cls(n, tuple(fn(a) for a in range(1 << n)))

    def __getitem__(self, a: int) -> int:
        return self.entries[a]

    def as_array(self) -> array:
        return array("Q", self.entries)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a table against the closure axioms.

    ``witnesses`` maps each violated axiom to the first failing input in scan
    order: a single mask for ``extensive`` and ``idempotent``, a pair
    ``(A, B)`` with ``A <= B`` for ``monotone`` and ``compact``.
    """

    extensive: bool
    monotone: bool
    idempotent: bool
    compact: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.compact and self.extensive and self.monotone and self.idempotent

    def violations(self) -> list[str]:
        lines = []
        for axiom in ("extensive", "monotone", "idempotent", "compact"):
            if axiom in self.witnesses:
                lines.append(f"{axiom}: witness {self.witnesses[axiom]}")
        return lines


def validate_closure_operator(t: ClosureTable) -> ValidationReport:
    """Check extensivity, monotonicity, idempotence and the compact axiom.

    The compact axiom ``A <= [[A]] <= [B]`` for ``A <= B`` is scanned on its
    own over all ``3**n`` comparable pairs, not derived from the other three.
    """
    if not isinstance(t, ClosureTable):
        raise MalformedTableError(f"expected ClosureTable, got {type(t).__name__}")
    ext, mono_a, mono_b, idem, comp_a, comp_b = kernels.table_scan(t.as_array(), t.n)
    witnesses = {}
    if ext >= 0:
        witnesses["extensive"] = ext
    if mono_a >= 0:
        witnesses["monotone"] = (mono_a, mono_b)
    if idem >= 0:
        witnesses["idempotent"] = idem
    if comp_a >= 0:
        witnesses["compact"] = (comp_a, comp_b)
    return ValidationReport(
        extensive=ext < 0,
        monotone=mono_a < 0,
        idempotent=idem < 0,
        compact=comp_a < 0,
        witnesses=witnesses,
    )


# --------------------------------------------------------------------------
# Moore families


class MooreViolation(NamedTuple):
    """Why a candidate family is not a Moore family.

    ``kind`` is ``"range"`` (a set does not fit the universe), ``"universe"``
    (the universe is absent) or ``"intersection"`` (``a & b`` is absent).
    """

    kind: str
    a: int = -1
    b: int = -1

    @property
    def missing(self) -> int:
        return self.a & self.b


def find_moore_violation(n: int, sets: Iterable) -> MooreViolation | None:
    check_universe(n)
    masks = sorted({_mask_or_raw(s) for s in sets}, key=canonical_key)
    for m in masks:
        if m < 0 or m >> n:
            return MooreViolation("range", m)
    full = full_mask(n)
    if full not in masks:
        return MooreViolation("universe", full)
    i, j = kernels.intersection_scan(array("Q", masks))
    if i >= 0:
        return MooreViolation("intersection", masks[i], masks[j])
    return None


def _mask_or_raw(s) -> int:
    if isinstance(s, Subset):
        return s.bits
    if isinstance(s, int):
        return s
    raise TypeError(f"expected Subset or int mask, got {type(s).__name__}")


def validate_moore_family(n: int, sets: Iterable) -> bool:
    """True iff ``sets`` contains the universe and is closed under pairwise intersection."""
    return find_moore_violation(n, sets) is None


class MooreFamily:
    """The closed sets of a closure space on ``n`` points, canonically sorted."""

    __slots__ = ("n", "closed", "_arr", "_members")

    def __init__(self, n: int, closed: Iterable, *, check: bool = True) -> None:
        check_universe(n)
        if n > caps.FAMILY_CAP:
            raise CapExceededError(f"families are limited to n <= {caps.FAMILY_CAP} (got {n})")
        masks = tuple(sorted({_mask_or_raw(s) for s in closed}, key=canonical_key))
        if check:
            violation = find_moore_violation(n, masks)
            if violation is not None:
                raise InvalidFamilyError(_describe_violation(violation), report=violation)
        self.n = n
        self.closed = masks
        self._arr = array("Q", masks)
        self._members = frozenset(masks)

    @property
    def array(self) -> array:
        """Members as an unsigned 64-bit array, the form the kernels consume."""
        return self._arr

    def __contains__(self, s) -> bool:
        return _mask_or_raw(s) in self._members

    def __iter__(self):
        return iter(self.closed)

    def __len__(self) -> int:
        return len(self.closed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MooreFamily):
            return NotImplemented
        return self.n == other.n and self.closed == other.closed

    def __hash__(self) -> int:
        return hash((self.n, self.closed))

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(map(str, iter_bits(m))) + "}" for m in self.closed)
        return f"MooreFamily(n={self.n}, [{sets}])"

    def subsets(self) -> list[Subset]:
        return [Subset(m, self.n) for m in self.closed]


def _describe_violation(v: MooreViolation) -> str:
    if v.kind == "range":
        return f"set {v.a:#x} does not fit the universe"
    if v.kind == "universe":
        return "the universe is not a member"
    return f"intersection of {v.a:#x} and {v.b:#x} ({v.missing:#x}) is not a member"


# --------------------------------------------------------------------------
# closure spaces


class ClosureSpace:
    """A finite closure space, carried by its Moore family."""

    __slots__ = ("family",)

    def __init__(self, family: MooreFamily) -> None:
        if not isinstance(family, MooreFamily):
            raise TypeError(f"expected MooreFamily, got {type(family).__name__}")
        self.family = family

    @classmethod
    def from_sets(cls, n: int, sets: Iterable) -> ClosureSpace:
        return cls(MooreFamily(n, sets))

    @classmethod
    def discrete(cls, n: int) -> ClosureSpace:
        return cls(MooreFamily(n, range(1 << n), check=False))

    @classmethod
    def indiscrete(cls, n: int) -> ClosureSpace:
        return cls(MooreFamily(n, [full_mask(n)], check=False))

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def closed(self) -> tuple[int, ...]:
        return self.family.closed

    @property
    def universe(self) -> int:
        return full_mask(self.family.n)

    def closure_mask(self, a: int) -> int:
        return kernels.closure_mask(self.family.array, a)

    def is_closed(self, a) -> bool:
        return a in self.family

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosureSpace):
            return NotImplemented
        return self.family == other.family

    def __hash__(self) -> int:
        return hash(self.family)

    def __repr__(self) -> str:
        return f"ClosureSpace({self.family!r})"


def closure(s: ClosureSpace, a: Subset) -> Subset:
    """Smallest closed set of ``s`` containing ``a``."""
    return Subset(s.closure_mask(_as_mask(a, s.n)), s.n)


def closure_table(s: ClosureSpace) -> ClosureTable:
    """Tabulate the closure of every subset (``n`` must be within the table cap)."""
    if s.n > caps.table_cap():
        raise CapExceededError(f"closure tables are limited to n <= {caps.table_cap()} (got {s.n})")
    return ClosureTable(s.n, tuple(kernels.closure_table(s.family.array, s.n)))


def moore_family_from_table(t: ClosureTable) -> MooreFamily:
    """Fixed points of a valid closure table."""
    report = validate_closure_operator(t)
    if not report.ok:
        raise InvalidClosureError(
            "table is not a closure operator: " + "; ".join(report.violations()), report=report
        )
    return MooreFamily(t.n, kernels.fixed_points(t.as_array()), check=False)


# --------------------------------------------------------------------------
# quasiorders


@dataclass(frozen=True)
class Qoset:
    """A quasiorder on ``{0, ..., n-1}``.

    ``down[y]`` is the mask of all ``x`` with ``x <= y``.  Construction checks
    reflexivity and transitivity.
    """

    n: int
    down: tuple[int, ...]
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)
    up_array: array = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_universe(self.n)
        down = tuple(self.down)
        object.__setattr__(self, "down", down)
        if len(down) != self.n:
            raise RelationInvariantError(f"expected {self.n} rows, got {len(down)}")
        for y, d in enumerate(down):
            if d < 0 or d >> self.n:
                raise RelationInvariantError(f"row {y} does not fit the universe")
            if not d >> y & 1:
                raise RelationInvariantError(f"not reflexive at {y}")
        for y, d in enumerate(down):
            for x in iter_bits(d):
                if down[x] & ~d:
                    z = next(iter_bits(down[x] & ~d))
                    raise RelationInvariantError(
                        f"not transitive: {z} <= {x} <= {y} but not {z} <= {y}"
                    )
        up = [0] * self.n
        for y, d in enumerate(down):
            for x in iter_bits(d):
                up[x] |= 1 << y
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "up_array", array("Q", up))

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]) -> Qoset:
        n = len(leq)
        down = [0] * n
        for x, row in enumerate(leq):
            if len(row) != n:
                raise RelationInvariantError("relation matrix must be square")
            for y, v in enumerate(row):
                if v:
                    down[y] |= 1 << x
        return cls(n, tuple(down))

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Qoset:
        """Reflexive-transitive closure of the pairs ``(x, y)`` meaning ``x <= y``."""
        check_universe(n)
        down = [1 << y for y in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise RelationInvariantError(f"pair {(x, y)} outside universe of size {n}")
            down[y] |= 1 << x
        # Warshall on masks
        for k in range(n):
            dk = down[k]
            for y in range(n):
                if down[y] >> k & 1:
                    down[y] |= dk
        return cls(n, tuple(down))

    @classmethod
    def equality(cls, n: int) -> Qoset:
        return cls(n, tuple(1 << y for y in range(n)))

    @classmethod
    def chain(cls, n: int) -> Qoset:
        return cls(n, tuple((1 << (y + 1)) - 1 for y in range(n)))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def equivalent(self, x: int, y: int) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    @property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.leq(x, y) for y in range(self.n)) for x in range(self.n))

    def pairs(self) -> list[tuple[int, int]]:
        """All ``(x, y)`` with ``x <= y``, sorted."""
        return [(x, y) for x in range(self.n) for y in range(self.n) if self.leq(x, y)]


def is_poset(q: Qoset) -> bool:
    """True iff the quasiorder is antisymmetric."""
    return all(q.down[x] & q.up[x] == 1 << x for x in range(q.n))


def specialization_order(s: ClosureSpace) -> Qoset:
    """``x <= y`` iff ``x`` lies in the closure of ``{y}``."""
    return Qoset(s.n, tuple(s.closure_mask(1 << y) for y in range(s.n)))


def lower_set(q: Qoset, a) -> int:
    """Mask of the lower set generated by ``a``."""
    a = _as_mask(a, q.n)
    out = 0
    for y in iter_bits(a):
        out |= q.down[y]
    return out


def alexandrov_closure(q: Qoset) -> ClosureSpace:
    """Closure space whose closed sets are the lower sets of ``q``."""
    if not isinstance(q, Qoset):
        raise RelationInvariantError(f"expected Qoset, got {type(q).__name__}")
    if q.n > caps.FAMILY_CAP:
        raise CapExceededError(f"families are limited to n <= {caps.FAMILY_CAP} (got {q.n})")
    lowers = {0}
    for d in set(q.down):
        lowers |= {low | d for low in lowers}
    return ClosureSpace(MooreFamily(q.n, lowers, check=False))


# --------------------------------------------------------------------------
# lattice of closed sets


@dataclass(frozen=True)
class ClosedSetPoset:
    """Closed sets of a space ordered by inclusion, with their Hasse diagram.

    ``hasse`` lists covering pairs ``(i, j)``: ``elements[i]`` is a maximal
    proper closed subset of ``elements[j]``.
    """

    n: int
    elements: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]
    space: ClosureSpace = field(repr=False, compare=False)

    def index(self, mask: int) -> int:
        return self.elements.index(mask)

    def leq(self, i: int, j: int) -> bool:
        return self.elements[i] & ~self.elements[j] == 0

    def meet(self, i: int, j: int) -> int:
        return self.index(self.elements[i] & self.elements[j])

    def join(self, i: int, j: int) -> int:
        return self.index(self.space.closure_mask(self.elements[i] | self.elements[j]))

    def to_dot(self, names: Sequence[str] | None = None, graph_name: str = "lattice") -> str:
        if names is None:
            names = [str(i) for i in range(self.n)]

        def label(mask: int) -> str:
            return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"

        lines = [f"digraph {graph_name} {{", "  rankdir=BT;"]
        for i, m in enumerate(self.elements):
            text = label(m).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{i} [label="{text}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def closed_set_lattice(s: ClosureSpace) -> ClosedSetPoset:
    """Closed sets in canonical order plus the transitive reduction of inclusion."""
    elements = s.closed
    edges = []
    for i, f in enumerate(elements):
        covers: list[int] = []
        # canonical order puts smaller supersets first, so any non-cover
        # already has one of the accepted covers inside it
        for j in range(i + 1, len(elements)):
            g = elements[j]
            if g == f or f & ~g:
                continue
            if any(elements[c] & ~g == 0 for c in covers):
                continue
            covers.append(j)
        edges.extend((i, j) for j in covers)
    edges.sort()
    return ClosedSetPoset(s.n, elements, tuple(edges), s)


def closure_of_sets(n: int, sets: Iterable[int]) -> MooreFamily:
    """Smallest Moore family containing ``sets`` (intersection closure plus universe)."""
    members = {full_mask(n)}
    for s in sets:
        members |= {s & m for m in members} | {s}
    return MooreFamily(n, members, check=False)

