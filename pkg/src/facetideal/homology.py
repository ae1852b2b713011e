"""Integer simplicial homology via Smith normal form.

Complexes here are bare lists of facet bitmasks.  A facet list of ``[0]``
is the complex {∅} (reduced homology Z in degree -1); an empty list is the
void complex and is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .complex import iter_bits


def smith_invariants(rows: Sequence[dict]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix.

    ``rows`` maps column -> entry.  Unit pivots are eliminated sparsely
    first; whatever has no unit entry left goes through a dense SNF.
    """
    rows = [dict(r) for r in rows if r]
    units = 0
    cols: dict[int, set[int]] = {}
    live = {}
    for rid, r in enumerate(rows):
        live[rid] = r
        for c in r:
            cols.setdefault(c, set()).add(rid)

    progress = True
    while progress:
        progress = False
        for rid in sorted(live, key=lambda k: len(live[k])):
            piv = live.get(rid)
            if piv is None:
                continue
            pc = next((c for c, v in piv.items() if v in (1, -1)), None)
            if pc is None:
                continue
            pv = piv[pc]
            for other in list(cols[pc]):
                if other == rid:
                    continue
                r = live[other]
                factor = r[pc] * pv
                for c, v in piv.items():
                    nv = r.get(c, 0) - factor * v
                    if nv:
                        if c not in r:
                            cols.setdefault(c, set()).add(other)
                        r[c] = nv
                    elif c in r:
                        del r[c]
                        cols[c].discard(other)
                if not r:
                    del live[other]
            for c in piv:
                cols[c].discard(rid)
            del live[rid]
            units += 1
            progress = True
    rest = [r for r in live.values() if r]
    if not rest:
        return [1] * units
    used = sorted({c for r in rest for c in r})
    pos = {c: i for i, c in enumerate(used)}
    dense = [[0] * len(used) for _ in rest]
    for i, r in enumerate(rest):
        for c, v in r.items():
            dense[i][pos[c]] = v
    return [1] * units + dense_smith_diagonal(dense)


def dense_smith_diagonal(a: list[list[int]]) -> list[int]:
    """Invariant factors (positive, each dividing the next) of a dense matrix."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                dirty = True
            # move the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def all_faces(facets: Sequence[int]) -> dict[int, list[int]]:
    """Faces grouped by dimension (-1 for the empty face), canonically ordered."""
    seen = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    by_dim: dict[int, list[int]] = {}
    for s in seen:
        by_dim.setdefault(s.bit_count() - 1, []).append(s)
    for d in by_dim:
        by_dim[d].sort(key=lambda s: tuple(iter_bits(s)))
    return by_dim


def boundary_rows(faces_k: list[int], faces_km1: list[int]) -> list[dict]:
    """Rows of the boundary map C_k -> C_{k-1}, one row per k-face."""
    index = {s: i for i, s in enumerate(faces_km1)}
    rows = []
    for s in faces_k:
        row = {}
        for j, v in enumerate(iter_bits(s)):
            row[index[s & ~(1 << v)]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ReducedHomology:
    dim: int
    betti: tuple[int, ...]  # betti[k] is the rank of H~_{k-1}; index 0 is degree -1
    torsion: tuple[tuple[int, ...], ...] = field(default=())  # same indexing

    def rank(self, degree: int) -> int:
        k = degree + 1
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def torsion_at(self, degree: int) -> tuple[int, ...]:
        k = degree + 1
        return self.torsion[k] if 0 <= k < len(self.torsion) else ()

    def dim_over(self, degree: int, characteristic: int = 0) -> int:
        """Dimension of reduced homology with field coefficients (universal coefficients)."""
        b = self.rank(degree)
        if characteristic == 0:
            return b
        p = characteristic
        return (b + sum(1 for d in self.torsion_at(degree) if d % p == 0)
                + sum(1 for d in self.torsion_at(degree - 1) if d % p == 0))

    def torsion_primes(self) -> tuple[int, ...]:
        primes = set()
        for group in self.torsion:
            for d in group:
                primes.update(prime_factors(d))
        return tuple(sorted(primes))


def prime_factors(n: int) -> set[int]:
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def reduced_homology(facets: Sequence[int]) -> ReducedHomology:
    if not facets:
        raise ValueError("void complex has no reduced homology")
    apex = facets[0]
    for f in facets:
        apex &= f
    if apex:
        # a cone is acyclic
        top = max(f.bit_count() for f in facets) - 1
        return ReducedHomology(top, (0,) * (top + 2), ((),) * (top + 2))
    by_dim = all_faces(facets)
    top = max(by_dim)
    ranks = {}
    invariants = {}
    for k in range(0, top + 1):
        inv = smith_invariants(boundary_rows(by_dim[k], by_dim[k - 1]))
        ranks[k] = len(inv)
        invariants[k] = inv
    betti = []
    torsion = []
    for d in range(-1, top + 1):
        c_d = len(by_dim[d])
        betti.append(c_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
        torsion.append(tuple(x for x in invariants.get(d + 1, []) if x > 1))
    return ReducedHomology(top, tuple(betti), tuple(torsion))


def simplex_boundary(n: int) -> list[int]:
    """Facets of the boundary of the simplex on n vertices."""
    full = (1 << n) - 1
    return [full & ~(1 << i) for i in range(n)]
