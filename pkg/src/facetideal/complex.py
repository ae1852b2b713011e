"""Simplicial complexes stored by their facets.

Facets are kept as integer bitmasks over an ordered vertex universe: bit
``i`` stands for ``universe[i]``.  Everything public speaks in vertex
labels; the masks are exposed for the algorithmic modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptyComplexError,
    EmptyFacet,
    EmptySelection,
    IndexOutOfRange,
    NotAFacet,
    UnknownVertex,
)

Face = tuple  # tuple of labels, in universe order


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_key(mask: int):
    """Canonical sort key: cardinality first, then lexicographic by index."""
    return (mask.bit_count(), tuple(iter_bits(mask)))


def normalize_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate, drop non-maximal sets, and sort canonically."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=mask_key))


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and drop every set containing another (minimal generators)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=mask_key):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class Complex:
    universe: tuple[str, ...]
    masks: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.universe)})

    # --- label <-> mask -------------------------------------------------
    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for v in labels:
            m |= 1 << self.index(v)
        return m

    def face(self, mask: int) -> Face:
        return tuple(self.universe[i] for i in iter_bits(mask))

    # --- views ----------------------------------------------------------
    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(self.face(m) for m in self.masks)

    @property
    def vertex_mask(self) -> int:
        out = 0
        for m in self.masks:
            out |= m
        return out

    @property
    def vertices(self) -> Face:
        """V(Δ): vertices lying in at least one facet."""
        return self.face(self.vertex_mask)

    @property
    def isolated(self) -> Face:
        full = (1 << len(self.universe)) - 1
        return self.face(full & ~self.vertex_mask)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def is_empty(self) -> bool:
        return not self.masks

    def __len__(self) -> int:
        return len(self.masks)

    def facet_index(self, facet: Iterable[str]) -> int:
        m = self.mask(facet)
        try:
            return self.masks.index(m)
        except ValueError:
            raise NotAFacet(f"{sorted(facet)} is not a facet") from None

    def with_masks(self, masks: Iterable[int], shrink: bool = True) -> "Complex":
        """Complex over this universe (or its used part) on the given masks."""
        masks = normalize_masks(masks)
        if not shrink:
            return Complex(self.universe, masks)
        used = 0
        for m in masks:
            used |= m
        labels = [v for i, v in enumerate(self.universe) if used >> i & 1]
        return new_complex(labels, [self.face(m) for m in masks])

    def to_dict(self) -> dict:
        return {"vertices": list(self.universe), "facets": [list(f) for f in self.facets]}

    def __str__(self) -> str:
        return "<" + ", ".join("".join(f) if all(len(v) == 1 for v in f) else "{" + ",".join(f) + "}"
                               for f in self.facets) + ">"


def new_complex(universe: Sequence[str], raw_facets: Iterable[Iterable[str]]) -> Complex:
    universe = tuple(universe)
    if len(set(universe)) != len(universe):
        raise ValueError("duplicate vertex labels in universe")
    c = Complex(universe, ())
    masks = []
    for i, raw in enumerate(raw_facets):
        m = c.mask(raw)
        if not m:
            raise EmptyFacet(i)
        masks.append(m)
    return Complex(universe, normalize_masks(masks))


def complex_from_facets(raw_facets: Iterable[Iterable[str]]) -> Complex:
    """Universe = labels in order of first appearance."""
    raw_facets = [list(f) for f in raw_facets]
    seen: dict[str, None] = {}
    for f in raw_facets:
        for v in f:
            seen.setdefault(v)
    return new_complex(list(seen), raw_facets)


def empty_complex(universe: Sequence[str] = ()) -> Complex:
    return Complex(tuple(universe), ())


def _require_nonempty(c: Complex, what: str):
    if c.is_empty():
        raise EmptyComplexError(what)


def dimension(c: Complex) -> int:
    _require_nonempty(c, "dimension")
    return max(m.bit_count() for m in c.masks) - 1


def remove_facet(c: Complex, facet: Iterable[str]) -> Complex:
    i = c.facet_index(facet)
    rest = c.masks[:i] + c.masks[i + 1:]
    if not rest:
        return empty_complex()
    return c.with_masks(rest)


def subcollection(c: Complex, facet_indices: Iterable[int]) -> Complex:
    idx = sorted(set(facet_indices))
    if not idx:
        raise EmptySelection("subcollection needs at least one facet")
    for i in idx:
        if not 0 <= i < len(c.masks):
            raise IndexOutOfRange(f"facet index {i} out of range 0..{len(c.masks) - 1}")
    return c.with_masks(c.masks[i] for i in idx)


def mask_components(masks: Sequence[int]) -> list[list[int]]:
    """Positions of ``masks`` grouped by connected component, in order of first member."""
    n = len(masks)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def is_connected(c: Complex) -> bool:
    _require_nonempty(c, "is_connected")
    return len(mask_components(c.masks)) == 1


def connected_components(c: Complex) -> list[Complex]:
    _require_nonempty(c, "connected_components")
    return [c.with_masks(c.masks[i] for i in group) for group in mask_components(c.masks)]


def relabel(c: Complex, rename) -> Complex:
    """Apply ``rename`` (a callable or a mapping) to every vertex label."""
    fn = rename if callable(rename) else rename.__getitem__
    return Complex(tuple(fn(v) for v in c.universe), c.masks)


def disjoint_union(*parts: Complex) -> Complex:
    """Union of complexes on pairwise disjoint vertex universes."""
    universe: list[str] = []
    facets: list[Face] = []
    for part in parts:
        if set(universe) & set(part.universe):
            raise ValueError("disjoint_union needs disjoint vertex labels")
        universe += part.universe
        facets += part.facets
    return new_complex(universe, facets)
