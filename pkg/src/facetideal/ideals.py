"""Square-free monomial ideals and their two complexes.

A square-free monomial is stored as its support, a set of variables, so an
ideal is a vertex universe plus a list of supports.  ``facet_ideal`` and
``facet_complex`` are mutually inverse; ``nonface_ideal`` and
``nonface_complex`` give the Stanley-Reisner side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import Complex, Face, iter_bits, mask_key, minimal_masks, new_complex, normalize_masks
from .covers import minimal_transversals, minimal_vertex_covers
from .errors import EmptyComplexError, EmptyFacet, UniverseTooLarge

BRUTE_FORCE_BOUND = 20


@dataclass(frozen=True)
class MonomialIdeal:
    universe: tuple[str, ...]
    generators: tuple[Face, ...]
    minimized: bool = False  # set when the input generators were not minimal

    def masks(self) -> tuple[int, ...]:
        index = {v: i for i, v in enumerate(self.universe)}
        return tuple(sum(1 << index[v] for v in g) for g in self.generators)

    def to_dict(self) -> dict:
        return {"vertices": list(self.universe), "generators": [list(g) for g in self.generators]}


def monomial_ideal(universe: Sequence[str], generators: Iterable[Iterable[str]]) -> MonomialIdeal:
    """Build an ideal, reducing the generators to a minimal set."""
    probe = Complex(tuple(universe), ())
    raw = []
    for i, g in enumerate(generators):
        m = probe.mask(g)
        if not m:
            raise EmptyFacet(i)
        raw.append(m)
    minimal = minimal_masks(raw)
    return MonomialIdeal(
        probe.universe,
        tuple(probe.face(m) for m in minimal),
        minimized=len(minimal) != len(raw),
    )


def facet_ideal(c: Complex) -> MonomialIdeal:
    return MonomialIdeal(c.universe, c.facets)


def facet_complex(ideal: MonomialIdeal) -> Complex:
    return new_complex(ideal.universe, ideal.generators)


def minimal_nonfaces(c: Complex) -> list[int]:
    """Minimal non-faces over the full universe, ascending by cardinality."""
    n = len(c.universe)
    facets = c.masks

    def is_face(m):
        return any(m & f == m for f in facets)

    out = []
    level = {0}
    for _ in range(n):
        nxt = set()
        for face in level:
            top = face.bit_length()
            for v in range(top, n):
                cand = face | 1 << v
                # every maximal proper subset must already be a face
                if not all((cand & ~(1 << u)) in level for u in iter_bits(face)):
                    continue
                if is_face(cand):
                    nxt.add(cand)
                else:
                    out.append(cand)
        level = nxt
        if not level:
            break
    return sorted(out, key=mask_key)


def nonface_ideal(c: Complex) -> MonomialIdeal:
    if c.is_empty():
        raise EmptyComplexError("nonface_ideal")
    return MonomialIdeal(c.universe, tuple(c.face(m) for m in minimal_nonfaces(c)))


def nonface_facet_masks(universe_size: int, generator_masks: Sequence[int]) -> tuple[int, ...]:
    """Facets of the Stanley-Reisner complex: complements of minimal transversals.

    May contain 0 when the complex is {∅}; callers working with ``Complex``
    must handle that case.
    """
    full = (1 << universe_size) - 1
    if not generator_masks:
        return (full,)
    return normalize_masks(full & ~t for t in minimal_transversals(generator_masks))


def nonface_complex(ideal: MonomialIdeal) -> Complex:
    """Complex whose faces are the sets containing no generator support.

    The complex {∅} (every variable is itself a generator) has no nonempty
    facet and is returned as the zero-facet complex.
    """
    masks = nonface_facet_masks(len(ideal.universe), ideal.masks())
    return Complex(ideal.universe, tuple(m for m in masks if m))


@dataclass(frozen=True)
class DecompositionReport:
    primes: tuple[Face, ...]
    krull_dim: int
    height: int

    def to_dict(self) -> dict:
        return {"primes": [list(p) for p in self.primes], "krull_dim": self.krull_dim, "height": self.height}


def decompose(c: Complex) -> DecompositionReport:
    rep = minimal_vertex_covers(c)
    n = len(c.universe)
    krull = n - rep.alpha
    gamma = nonface_facet_masks(n, c.masks)
    dim_gamma = max(m.bit_count() for m in gamma) - 1
    if dim_gamma + 1 != krull:
        raise AssertionError(f"dim of non-face complex {dim_gamma} disagrees with krull dim {krull}")
    return DecompositionReport(primes=rep.covers, krull_dim=krull, height=rep.alpha)


def verify_intersection(c: Complex, bound: int = BRUTE_FORCE_BOUND) -> bool:
    """Brute-force check that the facet ideal is the intersection of its cover primes."""
    n = len(c.universe)
    if n > bound:
        raise UniverseTooLarge(n, bound)
    if c.is_empty():
        raise EmptyComplexError("verify_intersection")
    facets = c.masks
    covers = minimal_transversals(facets)
    for m in range(1 << n):
        in_ideal = any(f & m == f for f in facets)
        in_primes = all(m & cov for cov in covers)
        if in_ideal != in_primes:
            return False
    return True
