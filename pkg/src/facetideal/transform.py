"""Localization at vertex-generated primes and grafting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .complex import Complex, Face, iter_bits, minimal_masks, new_complex
from .errors import BadPartition, EmptyComplexError, GraftVerificationFailed
from .trees import leaf_positions

COMPLEX = "complex"
UNIT_IDEAL = "unit"


@dataclass(frozen=True)
class LocalizationResult:
    kind: str
    kept_vertices: Face
    complex: Optional[Complex] = None

    @property
    def is_unit(self) -> bool:
        return self.kind == UNIT_IDEAL

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "kept": list(self.kept_vertices)}
        if self.complex is not None:
            out["complex"] = self.complex.to_dict()
        return out


def localize(c: Complex, kept: Iterable[str]) -> LocalizationResult:
    s = c.mask(kept)
    kept_face = c.face(s)
    restricted = [f & s for f in c.masks]
    if any(r == 0 for r in restricted):
        return LocalizationResult(UNIT_IDEAL, kept_face)
    # a restriction containing another one is a redundant generator
    minimal = minimal_masks(restricted)
    return LocalizationResult(COMPLEX, kept_face, new_complex(kept_face, [c.face(r) for r in minimal]))


@dataclass(frozen=True)
class GraftingDecomposition:
    leaves: tuple[Face, ...]
    deck: tuple[Face, ...]

    @property
    def r(self) -> int:
        return len(self.leaves)

    @property
    def s(self) -> int:
        return len(self.deck)

    def to_dict(self) -> dict:
        return {
            "leaves": [list(f) for f in self.leaves],
            "deck": [list(g) for g in self.deck],
            "r": self.r,
            "s": self.s,
        }


def split_leaves(masks: Sequence[int]) -> tuple[list[int], list[int]]:
    pos = set(leaf_positions(masks))
    return [m for i, m in enumerate(masks) if i in pos], [m for i, m in enumerate(masks) if i not in pos]


def grafting_failure(masks: Sequence[int], memo: Optional[dict] = None) -> Optional[str]:
    """None if the facet list is grafted, else a short note on the failed condition.

    Leaves of the complex are forced as the grafting simplices; the rest is
    the deck.  Removing any deck facet must again give a grafted complex,
    checked recursively with memoization on the facet set.
    """
    if memo is None:
        memo = {}
    key = frozenset(masks)
    if key in memo:
        return memo[key]
    leaves, deck = split_leaves(masks)
    reason = None
    covered = 0
    for f in leaves:
        if covered & f:
            reason = "leaves not pairwise disjoint"
            break
        covered |= f
    if reason is None and not leaves:
        reason = "no leaves"
    if reason is None:
        for g in deck:
            if g & ~covered:
                reason = "deck vertex outside the leaves"
                break
    if reason is None:
        for g in deck:
            sub = [m for m in masks if m != g]
            if grafting_failure(sub, memo) is not None:
                reason = "removing a deck facet breaks grafting"
                break
    memo[key] = reason
    return reason


def masks_are_grafted(masks: Sequence[int]) -> bool:
    return grafting_failure(list(masks)) is None


def is_grafted(c: Complex) -> Optional[GraftingDecomposition]:
    if c.is_empty():
        raise EmptyComplexError("is_grafted")
    if grafting_failure(list(c.masks)) is not None:
        return None
    leaves, deck = split_leaves(c.masks)
    return GraftingDecomposition(tuple(c.face(m) for m in leaves), tuple(c.face(m) for m in deck))


def fresh_label(base: str, taken) -> str:
    label = base + "'"
    while label in taken:
        label += "'"
    return label


def _parse_partition(c: Complex, partition) -> list[int]:
    if isinstance(partition, str):
        partition = [cls.split() for cls in partition.split("|")]
    classes = []
    seen = 0
    for cls in partition:
        m = c.mask(cls)
        if not m:
            raise BadPartition("empty class in partition")
        if m & seen:
            raise BadPartition(f"class {list(cls)} overlaps an earlier class")
        if not any(m & f == m for f in c.masks):
            raise BadPartition(f"class {list(cls)} is not contained in any facet")
        seen |= m
        classes.append(m)
    if seen != c.vertex_mask:
        missing = c.face(c.vertex_mask & ~seen)
        extra = c.face(seen & ~c.vertex_mask)
        raise BadPartition(f"partition must cover exactly V(Δ); missing {list(missing)}, extra {list(extra)}")
    return classes


def graft(c: Complex, partition=None) -> Complex:
    """Attach one new leaf ``class + fresh vertex`` per partition class.

    ``partition`` is a list of label lists or a string ``"x|y z|u"``; the
    default puts every vertex in its own class (a whisker on each vertex).
    The result is checked with the grafting recognizer.
    """
    if c.is_empty():
        raise EmptyComplexError("graft")
    if partition is None:
        classes = [1 << i for i in iter_bits(c.vertex_mask)]
    else:
        classes = _parse_partition(c, partition)
    taken = set(c.universe)
    universe = list(c.universe)
    facets = [list(f) for f in c.facets]
    for m in classes:
        face = c.face(m)
        label = fresh_label(face[0], taken)
        taken.add(label)
        universe.append(label)
        facets.append(list(face) + [label])
    out = new_complex(universe, facets)
    reason = grafting_failure(list(out.masks))
    if reason is not None:
        raise GraftVerificationFailed(reason, out)
    return out
