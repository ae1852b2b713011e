from hypothesis import given, settings

from facetideal.complex import complex_from_facets
from facetideal.covers import (
    alpha_of,
    beta_of,
    independence,
    is_vertex_cover,
    minimal_transversals,
    minimal_vertex_covers,
)
from facetideal.trees import masks_are_forest

from conftest import as_sets, brute_beta, brute_minimal_covers, complexes, example1, example2, example11, random_forest


def test_example2_covers():
    rep = minimal_vertex_covers(example2())
    assert as_sets(rep.covers) == as_sets(["x", "yz"])
    assert rep.alpha == 1
    assert not rep.unmixed
    assert independence(example2()).beta == 1


def test_example11_covers():
    rep = minimal_vertex_covers(example11())
    assert as_sets(rep.covers) == as_sets(["xu", "yu", "yv", "zu", "zv"])
    assert all(len(x) == 2 for x in rep.covers)
    assert rep.unmixed and rep.alpha == 2


def test_example1_not_unmixed():
    rep = minimal_vertex_covers(example1())
    assert not rep.unmixed
    assert rep.alpha == 1  # {x}


def test_is_vertex_cover():
    c = example2()
    assert is_vertex_cover(c, "x")
    assert not is_vertex_cover(c, "y")
    assert is_vertex_cover(c, "yz")


def test_transversals_of_nothing():
    assert minimal_transversals([]) == [0]


def test_independence_witnesses_are_disjoint():
    c = complex_from_facets(["ab", "cd", "ef", "ace"])
    ind = independence(c)
    assert ind.beta == 3
    for w in ind.witnesses:
        ms = [c.masks[i] for i in w]
        assert all(not a & b for i, a in enumerate(ms) for b in ms[i + 1:])


@settings(max_examples=150)
@given(complexes())
def test_covers_match_brute_force(c):
    n = len(c.universe)
    assert minimal_transversals(c.masks) == sorted(
        brute_minimal_covers(c.masks, n), key=lambda m: (m.bit_count(), [i for i in range(n) if m >> i & 1])
    )


@settings(max_examples=150)
@given(complexes())
def test_beta_matches_brute_force(c):
    assert beta_of(c.masks) == brute_beta(c.masks)


@given(complexes())
def test_beta_at_most_alpha(c):
    # a cover must hit each of β disjoint facets in distinct vertices
    assert beta_of(c.masks) <= alpha_of(c.masks)


def test_forests_have_alpha_equal_beta_small_sample():
    for seed in range(40):
        f = random_forest(seed)
        assert masks_are_forest(f.masks)
        assert alpha_of(f.masks) == beta_of(f.masks)
