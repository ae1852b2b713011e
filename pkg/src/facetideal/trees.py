"""Leaves, joints, free vertices and tree/forest recognition.

Facets are addressed by position in the complex's canonical facet list.
The mask-level helpers take a plain list of facet masks so that callers
(grafting, generators) can work on subcollections without re-indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .complex import Complex, Face, iter_bits, mask_components
from .errors import EmptyComplexError


def leaf_universal(masks: Sequence[int], i: int) -> Optional[list[int]]:
    """Universal set of facet ``i`` (positions), or None if it is not a leaf.

    F is a leaf iff the union of its intersections with the other facets is
    itself one of those intersections; the universal set is every G
    realizing it.
    """
    f = masks[i]
    if len(masks) == 1:
        return []
    union = 0
    for j, g in enumerate(masks):
        if j != i:
            union |= f & g
    universal = [j for j, g in enumerate(masks) if j != i and f & g == union]
    return universal or None


def is_leaf_at(masks: Sequence[int], i: int) -> bool:
    return leaf_universal(masks, i) is not None


def leaf_positions(masks: Sequence[int]) -> list[int]:
    return [i for i in range(len(masks)) if is_leaf_at(masks, i)]


def has_leaf(masks: Sequence[int]) -> bool:
    return any(is_leaf_at(masks, i) for i in range(len(masks)))


def free_mask(masks: Sequence[int], i: int) -> int:
    rest = 0
    for j, g in enumerate(masks):
        if j != i:
            rest |= g
    return masks[i] & ~rest


@dataclass(frozen=True)
class LeafReport:
    facet: Face
    is_leaf: bool
    universal_set: tuple[Face, ...]
    joints: tuple[Face, ...]
    free_vertices: Face

    def to_dict(self) -> dict:
        return {
            "facet": list(self.facet),
            "is_leaf": self.is_leaf,
            "universal_set": [list(g) for g in self.universal_set],
            "joints": [list(g) for g in self.joints],
            "free_vertices": list(self.free_vertices),
        }


def leaf_report(c: Complex, facet: Iterable[str]) -> LeafReport:
    i = c.facet_index(facet)
    masks = c.masks
    universal = leaf_universal(masks, i)
    uni = universal or []
    return LeafReport(
        facet=c.face(masks[i]),
        is_leaf=universal is not None,
        universal_set=tuple(c.face(masks[j]) for j in uni),
        joints=tuple(c.face(masks[j]) for j in uni if masks[j] & masks[i]),
        free_vertices=c.face(free_mask(masks, i)),
    )


def leaves(c: Complex) -> list[Face]:
    if c.is_empty():
        raise EmptyComplexError("leaves")
    return [c.face(c.masks[i]) for i in leaf_positions(c.masks)]


def joints(c: Complex) -> list[Face]:
    """Every facet that is a joint of some leaf."""
    if c.is_empty():
        raise EmptyComplexError("joints")
    masks = c.masks
    found = set()
    for i in leaf_positions(masks):
        for j in leaf_universal(masks, i):
            if masks[j] & masks[i]:
                found.add(j)
    return [c.face(masks[j]) for j in sorted(found)]


def _positions(sel: int) -> tuple[int, ...]:
    return tuple(iter_bits(sel))


def find_leafless(masks: Sequence[int], connected_only: bool = True) -> Optional[tuple[int, ...]]:
    """Smallest leafless subcollection (lexicographically least among equals).

    With ``connected_only`` the search grows connected subcollections level
    by level along the facet-intersection graph; otherwise every subset is
    inspected (used to cross-check the two forms of the tree definition).
    """
    n = len(masks)
    if connected_only:
        adj = [sum(1 << j for j in range(n) if j != i and masks[i] & masks[j]) for i in range(n)]
        level = {1 << i for i in range(n)}
        while level:
            for sel in sorted(level, key=_positions):
                pos = _positions(sel)
                if not has_leaf([masks[p] for p in pos]):
                    return pos
            grown = set()
            for sel in level:
                nbrs = 0
                for p in iter_bits(sel):
                    nbrs |= adj[p]
                nbrs &= ~sel
                for q in iter_bits(nbrs):
                    grown.add(sel | 1 << q)
            level = grown
        return None
    by_size: dict[int, list[int]] = {}
    for sel in range(1, 1 << n):
        by_size.setdefault(sel.bit_count(), []).append(sel)
    for size in sorted(by_size):
        for sel in sorted(by_size[size], key=_positions):
            pos = _positions(sel)
            if not has_leaf([masks[p] for p in pos]):
                return pos
    return None


def masks_are_forest(masks: Sequence[int]) -> bool:
    return find_leafless(masks) is None


def masks_are_tree(masks: Sequence[int]) -> bool:
    return len(mask_components(masks)) == 1 and masks_are_forest(masks)


@dataclass(frozen=True)
class ForestCertificate:
    verdict: bool
    witness: Optional[tuple[int, ...]] = None
    reason: Optional[str] = None  # "leafless" or "disconnected" when verdict is false

    def to_dict(self, key: str = "tree") -> dict:
        return {
            key: self.verdict,
            "witness": list(self.witness) if self.witness is not None else None,
            "reason": self.reason,
        }


def is_forest(c: Complex) -> ForestCertificate:
    if c.is_empty():
        raise EmptyComplexError("is_forest")
    witness = find_leafless(c.masks)
    if witness is None:
        return ForestCertificate(True)
    return ForestCertificate(False, witness, "leafless")


def is_tree(c: Complex) -> ForestCertificate:
    if c.is_empty():
        raise EmptyComplexError("is_tree")
    cert = is_forest(c)
    if not cert.verdict:
        return cert
    if len(mask_components(c.masks)) != 1:
        return ForestCertificate(False, None, "disconnected")
    return cert
