"""Cohen-Macaulay certification of facet ideals.

Two independent routes:

* ``cm_tree`` -- for trees, Cohen-Macaulay is the same as unmixed.
* ``cm_reisner`` -- Reisner's criterion on the Stanley-Reisner complex of
  the facet ideal, with link homology computed over the integers.

Plus the polarization check for grafted complexes: the facet ideal is the
polarization of an Artinian monomial ideal in one variable per leaf.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .complex import Complex, Face, iter_bits, mask_key, normalize_masks
from .covers import minimal_vertex_covers
from .errors import (
    ChainViolation,
    EmptyComplexError,
    NotATree,
    NotGrafted,
    UniverseTooLarge,
)
from .homology import all_faces, prime_factors, reduced_homology
from .ideals import nonface_facet_masks
from .transform import GraftingDecomposition, is_grafted
from .trees import free_mask, is_tree

DESK_BOUND = 16


def cm_tree(c: Complex) -> bool:
    if c.is_empty():
        raise EmptyComplexError("cm_tree")
    if not is_tree(c).verdict:
        raise NotATree("the tree criterion only applies to trees")
    return minimal_vertex_covers(c).unmixed


@dataclass(frozen=True)
class LinkRecord:
    face: Face
    link_dim: int
    reduced_betti: tuple[int, ...]  # degrees -1 .. link_dim
    torsion_primes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "face": list(self.face),
            "link_dim": self.link_dim,
            "reduced_betti": {str(d - 1): b for d, b in enumerate(self.reduced_betti)},
            "torsion_primes": list(self.torsion_primes),
        }


@dataclass(frozen=True)
class HomologyReport:
    characteristic: int
    links: tuple[LinkRecord, ...]
    cm: bool
    obstruction: Optional[tuple[Face, int]]
    nonface_dim: int

    def to_dict(self, with_links: bool = True) -> dict:
        out = {
            "characteristic": self.characteristic,
            "cm": self.cm,
            "obstruction": None if self.obstruction is None
            else {"face": list(self.obstruction[0]), "degree": self.obstruction[1]},
            "nonface_dim": self.nonface_dim,
        }
        if with_links:
            out["links"] = [rec.to_dict() for rec in self.links]
        return out


def _compress(masks: Sequence[int]) -> tuple[int, ...]:
    """Relabel the used vertices to 0..k-1 so isomorphic-by-order links share a cache entry."""
    used = 0
    for m in masks:
        used |= m
    pos = {v: i for i, v in enumerate(iter_bits(used))}
    return tuple(sorted(sum(1 << pos[v] for v in iter_bits(m)) for m in masks))


def _check_characteristic(p: int):
    if p < 0 or (p != 0 and prime_factors(p) != {p}):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")


def cm_reisner(c: Complex, characteristic: int = 0, bound: int = DESK_BOUND, jobs: int = 1) -> HomologyReport:
    """Reisner's criterion on the complex whose faces contain no facet of ``c``.

    Every face σ of that complex is visited; its link must have vanishing
    reduced homology (over the requested field) below its top dimension.
    """
    _check_characteristic(characteristic)
    if c.is_empty():
        raise EmptyComplexError("cm_reisner")
    n = len(c.universe)
    if n > bound:
        raise UniverseTooLarge(n, bound)
    gamma = nonface_facet_masks(n, c.masks)
    faces = [s for d in sorted(all_faces(gamma).items()) for s in d[1]]
    links = []
    for sigma in faces:
        links.append(normalize_masks(f & ~sigma for f in gamma if f & sigma == sigma))
    keys = sorted({_compress(l) for l in links})
    if jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            homs = dict(zip(keys, pool.map(reduced_homology, keys)))
    else:
        homs = {k: reduced_homology(k) for k in keys}

    records = []
    obstruction = None
    for sigma, link in zip(faces, links):
        h = homs[_compress(link)]
        records.append(LinkRecord(c.face(sigma), h.dim, h.betti, h.torsion_primes()))
        if obstruction is None:
            for deg in range(-1, h.dim):
                if h.dim_over(deg, characteristic):
                    obstruction = (c.face(sigma), deg)
                    break
    return HomologyReport(
        characteristic=characteristic,
        links=tuple(records),
        cm=obstruction is None,
        obstruction=obstruction,
        nonface_dim=max(m.bit_count() for m in gamma) - 1,
    )


# --- polarization ---------------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    generators: tuple[tuple[str, ...], ...]
    linear_sequence: tuple[tuple[str, str], ...]  # (fresh, base) meaning fresh - base
    copies: Mapping[str, tuple[str, ...]]  # base -> (base, 2nd copy, 3rd copy, ...)

    def to_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "linear_sequence": [f"{a} - {b}" for a, b in self.linear_sequence],
        }


def polarize(generators: Sequence[Mapping[str, int]]) -> Polarization:
    """Standard polarization, one variable and one power at a time.

    For a variable x of top exponent e, the generators still carrying x^e
    trade one factor x for a fresh variable (the e-th copy of x); e then
    drops by one until every exponent of x is at most 1.  A generator with
    x^a ends up with x and copies 2..a.
    """
    gens = [dict((v, e) for v, e in g.items() if e) for g in generators]
    order: list[str] = []
    for g in gens:
        for v in g:
            if v not in order:
                order.append(v)
    taken = set(order)
    copies: dict[str, list[str]] = {v: [v] for v in order}
    sequence = []
    for x in order:
        top = max(g.get(x, 0) for g in gens)
        names = {}
        for k in range(2, top + 1):
            name = x + "'" * (k - 1)
            while name in taken:
                name += "'"
            taken.add(name)
            names[k] = name
        copies[x] += [names[k] for k in range(2, top + 1)]
        for e in range(top, 1, -1):
            z = names[e]
            for g in gens:
                if g.get(x, 0) == e:
                    g[x] = e - 1
                    g[z] = 1
            sequence.append((z, x))
    rank = {}
    for x in order:
        for v in copies[x]:
            rank[v] = len(rank)
    out = tuple(tuple(sorted(g, key=rank.__getitem__)) for g in gens)
    return Polarization(out, tuple(sequence), {k: tuple(v) for k, v in copies.items()})


@dataclass(frozen=True)
class ArtinianReduction:
    leaf_vars: tuple[str, ...]  # designated free vertex of each leaf
    exponents: tuple[int, ...]  # |leaf|, i.e. u_i + 1
    deck_monomials: tuple[tuple[int, ...], ...]  # exponent vectors over leaf_vars
    leaf_orders: tuple[tuple[str, ...], ...]  # non-designated leaf vertices in chain order
    linear_sequence: tuple[tuple[str, str], ...]  # (y_i, x^i_k)

    def generators(self) -> list[dict[str, int]]:
        gens = [{y: e} for y, e in zip(self.leaf_vars, self.exponents)]
        for vec in self.deck_monomials:
            gens.append({y: e for y, e in zip(self.leaf_vars, vec) if e})
        return gens

    def to_dict(self) -> dict:
        def mono(vec):
            return "*".join(f"{y}^{e}" if e > 1 else y for y, e in zip(self.leaf_vars, vec) if e)

        r = len(self.leaf_vars)
        pure = [mono(tuple(e if j == i else 0 for j in range(r))) for i, e in enumerate(self.exponents)]
        return {
            "leaf_vars": list(self.leaf_vars),
            "exponents": list(self.exponents),
            "generators": pure + [mono(v) for v in self.deck_monomials],
            "linear_sequence": [f"{y} - {x}" for y, x in self.linear_sequence],
        }


def _leaf_chain_order(c: Complex, leaf: int, designated: int) -> list[int]:
    """Vertices of the leaf (designated free vertex excluded) in chain order.

    The facets meeting the leaf must cut it in a chain of nested sets; a
    vertex is placed by the smallest chain member containing it, ties by
    vertex index, vertices outside every member last.
    """
    cuts = sorted({h & leaf for h in c.masks if h != leaf and h & leaf}, key=mask_key)
    for small, big in zip(cuts, cuts[1:]):
        if small & big != small:
            raise ChainViolation(f"intersections with leaf {c.face(leaf)} are not nested")

    def rank(v):
        for pos, cut in enumerate(cuts):
            if cut >> v & 1:
                return (pos, v)
        return (len(cuts), v)

    return sorted((v for v in iter_bits(leaf) if v != designated), key=rank)


def artinian_reduction(c: Complex, decomposition: Optional[GraftingDecomposition] = None) -> ArtinianReduction:
    actual = is_grafted(c)
    if actual is None:
        raise NotGrafted("complex is not grafted")
    if decomposition is not None and (
        set(decomposition.leaves) != set(actual.leaves) or set(decomposition.deck) != set(actual.deck)
    ):
        raise NotGrafted("decomposition does not match the complex")
    leaves = [c.mask(f) for f in actual.leaves]
    deck = [c.mask(g) for g in actual.deck]
    positions = {m: i for i, m in enumerate(c.masks)}
    leaf_vars, exponents, orders, sequence = [], [], [], []
    for f in leaves:
        free = free_mask(c.masks, positions[f])
        y = next(iter_bits(free)) if free else None
        if y is None:
            raise NotGrafted(f"leaf {c.face(f)} has no free vertex")
        order = _leaf_chain_order(c, f, y)
        leaf_vars.append(c.universe[y])
        exponents.append(f.bit_count())
        orders.append(tuple(c.universe[v] for v in order))
        sequence += [(c.universe[y], c.universe[v]) for v in order]
    vectors = tuple(tuple((g & f).bit_count() for f in leaves) for g in deck)
    return ArtinianReduction(tuple(leaf_vars), tuple(exponents), vectors, tuple(orders), tuple(sequence))


def polarization_renaming(red: ArtinianReduction, pol: Polarization) -> dict[str, str]:
    """Copy k of y_i goes to the k-th leaf vertex in chain order; the last copy is y_i itself."""
    names = {}
    for y, order in zip(red.leaf_vars, red.leaf_orders):
        targets = list(order) + [y]
        for name, target in zip(pol.copies.get(y, (y,)), targets):
            names[name] = target
    return names


def verify_polarization_roundtrip(c: Complex) -> bool:
    if c.is_empty():
        raise EmptyComplexError("verify_polarization_roundtrip")
    red = artinian_reduction(c)
    pol = polarize(red.generators())
    names = polarization_renaming(red, pol)
    try:
        polarized = {frozenset(names[v] for v in g) for g in pol.generators}
    except KeyError:
        return False
    return polarized == {frozenset(f) for f in c.facets}
