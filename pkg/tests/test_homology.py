import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facetideal.homology import (
    all_faces,
    boundary_rows,
    dense_smith_diagonal,
    prime_factors,
    reduced_homology,
    simplex_boundary,
    smith_invariants,
)

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import smith_normal_form  # noqa: E402


def _sympy_diagonal(a):
    if not a or not a[0]:
        return []
    snf = smith_normal_form(sympy.Matrix(a), domain=sympy.ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_dense_smith_matches_sympy(rows, cols, seed):
    rng = random.Random(seed)
    a = [[rng.choice([0, 0, 1, -1, 2, 3, -4]) for _ in range(cols)] for _ in range(rows)]
    mine = sorted(d for d in dense_smith_diagonal([r[:] for r in a]) if d)
    assert mine == _sympy_diagonal(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**31))
def test_sparse_smith_matches_sympy(rows, cols, seed):
    rng = random.Random(seed)
    a = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(cols)] for _ in range(rows)]
    sparse = [{j: v for j, v in enumerate(r) if v} for r in a]
    assert sorted(smith_invariants(sparse)) == _sympy_diagonal(a)


@pytest.mark.parametrize("n", range(2, 7))
def test_sphere(n):
    h = reduced_homology(simplex_boundary(n))
    assert h.rank(n - 2) == 1
    assert sum(h.betti) == 1
    assert h.torsion_primes() == ()


def test_point_and_empty_face():
    assert reduced_homology([1]).betti == (0, 0)
    assert reduced_homology([0]).betti == (1,)


def test_two_points():
    h = reduced_homology([1, 2])
    assert h.rank(0) == 1 and h.rank(-1) == 0


def test_projective_plane_torsion():
    tri = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
           (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)]
    facets = [sum(1 << v for v in t) for t in tri]
    h = reduced_homology(facets)
    assert h.torsion_at(1) == (2,)
    assert h.rank(1) == 0 and h.rank(2) == 0
    assert h.dim_over(1, 2) == 1 and h.dim_over(2, 2) == 1
    assert h.dim_over(1, 3) == 0
    assert h.torsion_primes() == (2,)


def test_boundary_squares_to_zero():
    by_dim = all_faces(simplex_boundary(5))
    for k in range(1, max(by_dim) + 1):
        d_k = boundary_rows(by_dim[k], by_dim[k - 1])
        d_km1 = boundary_rows(by_dim[k - 1], by_dim[k - 2])
        for row in d_k:
            total = {}
            for j, v in row.items():
                for t, w in d_km1[j].items():
                    total[t] = total.get(t, 0) + v * w
            assert all(x == 0 for x in total.values())


def test_cone_shortcut_is_acyclic():
    h = reduced_homology([0b0111, 0b1011])
    assert sum(h.betti) == 0


def test_prime_factors():
    assert prime_factors(12) == {2, 3}
    assert prime_factors(1) == set()
