"""Facet ideals of simplicial complexes: trees, covers, grafting and Cohen-Macaulay tests."""

from .cm import (
    ArtinianReduction,
    HomologyReport,
    artinian_reduction,
    cm_reisner,
    cm_tree,
    polarize,
    verify_polarization_roundtrip,
)
from .complex import (
    Complex,
    complex_from_facets,
    connected_components,
    dimension,
    empty_complex,
    is_connected,
    new_complex,
    remove_facet,
    subcollection,
)
from .covers import CoverReport, IndependenceReport, independence, is_vertex_cover, minimal_vertex_covers
from .generate import GeneratorConfig, generate
from .ideals import (
    DecompositionReport,
    MonomialIdeal,
    decompose,
    facet_complex,
    facet_ideal,
    monomial_ideal,
    nonface_complex,
    nonface_ideal,
    verify_intersection,
)
from .transform import GraftingDecomposition, LocalizationResult, graft, is_grafted, localize
from .trees import ForestCertificate, LeafReport, is_forest, is_tree, leaf_report, leaves

__version__ = "0.1.0"
