"""JSON space and map documents.

A space document names the points and lists the closed sets::

    {"universe": ["a", "b"], "closed": [["a"], ["a", "b"]]}

A map document gives the image of every source point::

    {"from": "E", "to": "F", "pairs": {"a": "x", "b": "x"}}

The position of a name in ``universe`` is its bit index.  Unknown fields are
rejected.  ``dump_*`` produce the canonical form: closed sets sorted by
(size, bit value) and listed in universe order, pairs in source order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .bits import canonical_key, full_mask, iter_bits
from .connections import PointMap
from .errors import ArityMismatchError, DocumentError
from .spaces import ClosureSpace, MooreFamily, find_moore_violation

SPACE_FIELDS = {"universe", "closed"}
MAP_FIELDS = {"from", "to", "pairs"}


def _load_json(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{what}: invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DocumentError(f"{what}: top level must be an object")
    return obj


def _check_fields(obj: dict, expected: set, what: str) -> None:
    extra = sorted(set(obj) - expected)
    if extra:
        raise DocumentError(f"{what}: unknown field(s): {', '.join(extra)}")
    missing = sorted(expected - set(obj))
    if missing:
        raise DocumentError(f"{what}: missing field(s): {', '.join(missing)}")


@dataclass(frozen=True)
class SpaceDocument:
    universe: tuple[str, ...]
    closed: tuple[tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.universe)

    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.universe)}

    def masks(self) -> list[int]:
        idx = self.index()
        return [sum(1 << idx[name] for name in s) for s in self.closed]

    def has_universe(self) -> bool:
        return full_mask(self.n) in self.masks()

    def violation(self, *, strict: bool = False):
        """First Moore-family violation, after universe insertion unless ``strict``."""
        masks = self.masks()
        if not strict:
            masks.append(full_mask(self.n))
        return find_moore_violation(self.n, masks)

    def to_space(self, *, strict: bool = False) -> ClosureSpace:
        masks = self.masks()
        if not strict:
            masks.append(full_mask(self.n))
        return ClosureSpace(MooreFamily(self.n, masks))

    def format_set(self, mask: int) -> str:
        return format_set(self.universe, mask)


def format_set(names: Sequence[str], mask: int) -> str:
    return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"


def parse_space(text: str, what: str = "space") -> SpaceDocument:
    obj = _load_json(text, what)
    _check_fields(obj, SPACE_FIELDS, what)
    universe = obj["universe"]
    if not isinstance(universe, list) or not all(isinstance(x, str) for x in universe):
        raise DocumentError(f"{what}: 'universe' must be a list of strings")
    if len(set(universe)) != len(universe):
        dup = next(x for x in universe if universe.count(x) > 1)
        raise DocumentError(f"{what}: duplicate element name {dup!r}")
    if len(universe) > 64:
        raise DocumentError(f"{what}: at most 64 elements are supported")
    closed = obj["closed"]
    if not isinstance(closed, list):
        raise DocumentError(f"{what}: 'closed' must be a list of lists")
    known = set(universe)
    sets = []
    for k, s in enumerate(closed):
        if not isinstance(s, list) or not all(isinstance(x, str) for x in s):
            raise DocumentError(f"{what}: closed set #{k} must be a list of strings")
        unknown = [x for x in s if x not in known]
        if unknown:
            raise DocumentError(f"{what}: closed set #{k} names unknown element {unknown[0]!r}")
        if len(set(s)) != len(s):
            raise DocumentError(f"{what}: closed set #{k} repeats an element")
        sets.append(tuple(s))
    return SpaceDocument(tuple(universe), tuple(sets))


def dump_space(doc: SpaceDocument, *, insert_universe: bool = True) -> str:
    masks = set(doc.masks())
    if insert_universe:
        masks.add(full_mask(doc.n))
    ordered = sorted(masks, key=canonical_key)
    obj = {
        "universe": list(doc.universe),
        "closed": [[doc.universe[i] for i in iter_bits(m)] for m in ordered],
    }
    return json.dumps(obj, ensure_ascii=False) + "\n"


def space_document(names: Sequence[str], space: ClosureSpace) -> SpaceDocument:
    return SpaceDocument(
        tuple(names), tuple(tuple(names[i] for i in iter_bits(m)) for m in space.closed)
    )


@dataclass(frozen=True)
class MapDocument:
    source: str
    target: str
    pairs: tuple[tuple[str, str], ...]

    def to_point_map(self, src: SpaceDocument, dst: SpaceDocument) -> PointMap:
        """Bind to concrete universes; requires totality and known targets."""
        mapping = dict(self.pairs)
        missing = [x for x in src.universe if x not in mapping]
        if missing:
            raise ArityMismatchError(
                f"map {self.source}->{self.target} has no image for {missing[0]!r}"
            )
        extra = [x for x in mapping if x not in src.index()]
        if extra:
            raise ArityMismatchError(
                f"map {self.source}->{self.target} maps {extra[0]!r}, not in the source universe"
            )
        dst_idx = dst.index()
        image = []
        for x in src.universe:
            y = mapping[x]
            if y not in dst_idx:
                raise ArityMismatchError(
                    f"map {self.source}->{self.target} sends {x!r} to {y!r}, not in the target universe"
                )
            image.append(dst_idx[y])
        return PointMap(src.n, dst.n, image)


def parse_map(text: str, what: str = "map") -> MapDocument:
    obj = _load_json(text, what)
    _check_fields(obj, MAP_FIELDS, what)
    if not isinstance(obj["from"], str) or not isinstance(obj["to"], str):
        raise DocumentError(f"{what}: 'from' and 'to' must be strings")
    pairs = obj["pairs"]
    if not isinstance(pairs, dict) or not all(isinstance(v, str) for v in pairs.values()):
        raise DocumentError(f"{what}: 'pairs' must map names to names")
    return MapDocument(obj["from"], obj["to"], tuple(pairs.items()))


def map_document(source: str, target: str, f: PointMap, src: SpaceDocument, dst: SpaceDocument) -> MapDocument:
    return MapDocument(
        source, target, tuple((src.universe[x], dst.universe[f.image[x]]) for x in range(f.from_n))
    )


def dump_map(doc: MapDocument, src: SpaceDocument | None = None) -> str:
    pairs = list(doc.pairs)
    if src is not None:
        order = src.index()
        pairs.sort(key=lambda kv: order.get(kv[0], len(order)))
    obj = {"from": doc.source, "to": doc.target, "pairs": dict(pairs)}
    return json.dumps(obj, ensure_ascii=False) + "\n"
