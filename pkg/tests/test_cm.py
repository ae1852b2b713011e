import pytest
from hypothesis import given, settings

from facetideal.cm import (
    artinian_reduction,
    cm_reisner,
    cm_tree,
    polarization_renaming,
    polarize,
    verify_polarization_roundtrip,
)
from facetideal.complex import Complex, complex_from_facets
from facetideal.covers import minimal_vertex_covers
from facetideal.errors import NotATree, NotGrafted, UniverseTooLarge
from facetideal.ideals import minimal_nonfaces
from facetideal.transform import graft

from conftest import as_sets, complexes, example1, example11, trees

RP2 = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
       (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)]


def rp2_facet_complex():
    """Complex whose facet ideal is the Stanley-Reisner ideal of a six-vertex RP^2."""
    universe = tuple("abcdef")
    sr = Complex(universe, tuple(sum(1 << v for v in t) for t in RP2))
    return Complex(universe, tuple(minimal_nonfaces(sr)))


def test_cm_tree_examples():
    assert cm_tree(example11())
    assert not cm_tree(example1())
    assert not cm_tree(complex_from_facets(["ab", "bc"]))
    with pytest.raises(NotATree):
        cm_tree(complex_from_facets(["abc", "acd", "bcde"]))


def test_cm_reisner_examples():
    assert cm_reisner(example11()).cm
    rep = cm_reisner(example1())
    assert not rep.cm and rep.obstruction is not None
    assert cm_reisner(complex_from_facets(["abcd"])).cm


def test_reisner_report_shape():
    rep = cm_reisner(example11())
    d = rep.to_dict()
    assert d["cm"] is True and d["characteristic"] == 0
    assert d["nonface_dim"] == 2
    assert len(d["links"]) == len(rep.links)
    assert d["links"][0]["face"] == []


def test_characteristic_dependence():
    c = rp2_facet_complex()
    assert cm_reisner(c, 0).cm
    assert cm_reisner(c, 3).cm
    rep = cm_reisner(c, 2)
    assert not rep.cm
    assert rep.obstruction == ((), 1)
    assert any(2 in rec.torsion_primes for rec in rep.links)


def test_bad_characteristic_and_bound():
    with pytest.raises(ValueError):
        cm_reisner(example11(), 4)
    with pytest.raises(UniverseTooLarge):
        cm_reisner(example11(), bound=3)


def test_parallel_matches_serial():
    c = graft(complex_from_facets(["abc", "cde"]))
    assert cm_reisner(c, jobs=2) == cm_reisner(c)


def test_polarize_examples():
    pol = polarize([{"y": 2}])
    assert as_sets(pol.generators) == as_sets([("y", "y'")])
    assert pol.linear_sequence == (("y'", "y"),)

    pol = polarize([{"a": 2}, {"b": 2}, {"a": 1, "b": 1}])
    assert as_sets(pol.generators) == as_sets([("a", "a'"), ("b", "b'"), ("a", "b")])
    assert len(pol.linear_sequence) == 2

    pol = polarize([{"a": 1, "b": 1}, {"c": 1}])
    assert pol.linear_sequence == ()
    assert as_sets(pol.generators) == as_sets(["ab", "c"])


def test_polarize_mixed_powers():
    # x^3 and x^2 y: copies 1..3 and 1..2
    pol = polarize([{"x": 3}, {"x": 2, "y": 1}])
    assert as_sets(pol.generators) == as_sets([("x", "x'", "x''"), ("x", "x'", "y")])


def test_artinian_reduction_whiskered_edge():
    c = graft(complex_from_facets(["xy"]))
    red = artinian_reduction(c)
    assert red.leaf_vars == ("x'", "y'")
    assert red.exponents == (2, 2)
    assert red.deck_monomials == ((1, 1),)
    assert verify_polarization_roundtrip(c)


def test_artinian_reduction_example11():
    red = artinian_reduction(example11())
    ys = dict(zip(red.leaf_vars, red.exponents))
    assert ys == {"x": 3, "v": 2}
    deck = dict(zip(red.leaf_vars, red.deck_monomials[0]))
    assert deck == {"x": 2, "v": 1}
    assert verify_polarization_roundtrip(example11())


def test_roundtrip_renaming_is_onto_vertices():
    c = example11()
    red = artinian_reduction(c)
    names = polarization_renaming(red, polarize(red.generators()))
    assert set(names.values()) == set(c.universe)


def test_simplex_and_disjoint_facets():
    red = artinian_reduction(complex_from_facets(["abc"]))
    assert red.exponents == (3,) and red.deck_monomials == ()
    assert verify_polarization_roundtrip(complex_from_facets(["ab", "cde"]))


def test_artinian_needs_grafted():
    with pytest.raises(NotGrafted):
        artinian_reduction(example1())


@settings(max_examples=40, deadline=None)
@given(trees())
def test_tree_criterion_matches_reisner(t):
    assert cm_tree(t) == cm_reisner(t).cm


@settings(max_examples=40, deadline=None)
@given(complexes(max_vertices=7, max_facets=5))
def test_cm_implies_unmixed(c):
    if cm_reisner(c).cm:
        assert minimal_vertex_covers(c).unmixed
