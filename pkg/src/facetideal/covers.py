"""Vertex covers, covering number, unmixedness and facet independence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx

from .complex import Complex, Face, iter_bits, mask_key
from .errors import EmptyComplexError


def _irredundant(chosen: int, masks: Sequence[int]) -> bool:
    # every chosen vertex must be the only chosen vertex of some facet
    need = chosen
    for f in masks:
        hit = f & chosen
        if hit and hit & (hit - 1) == 0:
            need &= ~hit
            if not need:
                return True
    return not need


def minimal_transversals(masks: Sequence[int]) -> list[int]:
    """All minimal vertex covers of the hypergraph ``masks``, canonically sorted.

    Branches on the uncovered facet with the fewest admissible vertices; in
    branch j the first j-1 vertices of that facet are forbidden, so each
    cover is produced once.  Partial covers with a redundant vertex are cut,
    since adding vertices never restores a lost private facet.
    """
    masks = list(masks)
    if not masks:
        return [0]
    found: list[int] = []

    def rec(chosen: int, forbidden: int):
        best = None
        for f in masks:
            if f & chosen:
                continue
            avail = f & ~forbidden
            if not avail:
                return
            if best is None or avail.bit_count() < best.bit_count():
                best = avail
        if best is None:
            found.append(chosen)
            return
        excluded = forbidden
        for v in iter_bits(best):
            bit = 1 << v
            nxt = chosen | bit
            if _irredundant(nxt, masks):
                rec(nxt, excluded)
            excluded |= bit

    rec(0, 0)
    return sorted(found, key=mask_key)


@dataclass(frozen=True)
class CoverReport:
    covers: tuple[Face, ...]
    alpha: int
    unmixed: bool
    cover_masks: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "unmixed": self.unmixed, "covers": [list(c) for c in self.covers]}


@dataclass(frozen=True)
class IndependenceReport:
    beta: int
    witnesses: tuple[tuple[int, ...], ...]
    maximal_sets: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "beta": self.beta,
            "independent_sets": [list(w) for w in self.witnesses],
            "maximal_sets": [list(s) for s in self.maximal_sets],
        }


def is_vertex_cover(c: Complex, candidate: Iterable[str]) -> bool:
    m = c.mask(candidate)
    return all(f & m for f in c.masks)


def minimal_vertex_covers(c: Complex) -> CoverReport:
    if c.is_empty():
        raise EmptyComplexError("minimal_vertex_covers")
    cov = minimal_transversals(c.masks)
    sizes = {m.bit_count() for m in cov}
    return CoverReport(
        covers=tuple(c.face(m) for m in cov),
        alpha=min(sizes),
        unmixed=len(sizes) == 1,
        cover_masks=tuple(cov),
    )


def alpha_of(masks: Sequence[int]) -> int:
    return min(m.bit_count() for m in minimal_transversals(masks))


def independent_sets(masks: Sequence[int]) -> list[tuple[int, ...]]:
    """Maximal sets of pairwise disjoint facets, as sorted position tuples."""
    g = nx.Graph()
    g.add_nodes_from(range(len(masks)))
    g.add_edges_from(
        (i, j) for i in range(len(masks)) for j in range(i + 1, len(masks)) if not masks[i] & masks[j]
    )
    return sorted((tuple(sorted(s)) for s in nx.find_cliques(g)), key=lambda s: (-len(s), s))


def independence(c: Complex, max_witnesses: Optional[int] = None) -> IndependenceReport:
    if c.is_empty():
        raise EmptyComplexError("independence")
    maximal = independent_sets(c.masks)
    beta = len(maximal[0])
    witnesses = tuple(s for s in maximal if len(s) == beta)
    if max_witnesses is not None:
        witnesses = witnesses[:max_witnesses]
    return IndependenceReport(beta=beta, witnesses=witnesses, maximal_sets=tuple(maximal))


def beta_of(masks: Sequence[int]) -> int:
    return len(independent_sets(masks)[0])
