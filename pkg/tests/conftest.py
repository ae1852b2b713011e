import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from facetideal.complex import complex_from_facets, disjoint_union, new_complex, relabel
from facetideal.generate import GeneratorConfig, generate

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


# --- worked complexes -------------------------------------------------------

def example1():
    return new_complex("xyzuv", ["xyu", "xyz", "xzv"])


def example2():
    return new_complex("xyz", ["xy", "xz"])


def example11():
    return complex_from_facets(["xyz", "yzu", "uv"])


def good_example():
    return complex_from_facets(["abc", "acd", "bcde"])


def bad4():
    return complex_from_facets(["xyu", "xvz", "yzw", "xyz"])


def not_leaf_or_joint():
    return complex_from_facets(["xu", "uvew", "zvew", "efw", "efg", "fgy"])


def as_sets(facet_list):
    return {frozenset(f) for f in facet_list}


# --- brute-force oracles ----------------------------------------------------

def brute_minimal_covers(masks, n):
    covers = [s for s in range(1 << n) if all(s & f for f in masks)]
    return sorted(s for s in covers if not any(t != s and t & s == t for t in covers))


def brute_beta(masks):
    best = 0
    for k in range(1, len(masks) + 1):
        for combo in combinations(masks, k):
            if all(not a & b for a, b in combinations(combo, 2)):
                best = k
    return best


# --- instance streams -------------------------------------------------------

def random_complexes(count, seed0=0, **kw):
    kw.setdefault("max_vertices", 9)
    kw.setdefault("max_facets", 7)
    kw.setdefault("min_facets", 2)
    return [generate(GeneratorConfig(seed=seed0 + s, mode="random", **kw)) for s in range(count)]


def random_trees(count, seed0=0, **kw):
    kw.setdefault("max_vertices", 11)
    kw.setdefault("max_facets", 8)
    kw.setdefault("min_facets", 2)
    return [generate(GeneratorConfig(seed=seed0 + s, mode="random_tree", **kw)) for s in range(count)]


def grafted_trees(count, seed0=0, **kw):
    kw.setdefault("max_vertices", 12)
    kw.setdefault("max_facets", 9)
    kw.setdefault("min_vertices", 4)
    kw.setdefault("min_facets", 2)
    return [
        generate(GeneratorConfig(seed=seed0 + s, mode="random_grafted", base_mode="random_tree", **kw))
        for s in range(count)
    ]


def grafted_complexes(count, seed0=0, **kw):
    kw.setdefault("max_vertices", 12)
    kw.setdefault("max_facets", 9)
    kw.setdefault("min_vertices", 4)
    kw.setdefault("min_facets", 2)
    return [generate(GeneratorConfig(seed=seed0 + s, mode="random_grafted", **kw)) for s in range(count)]


def random_forest(seed, **kw):
    """Disjoint union of one to three random trees."""
    rng = random.Random(seed)
    kw.setdefault("max_vertices", 6)
    kw.setdefault("max_facets", 4)
    parts = []
    for k in range(rng.randint(1, 3)):
        t = generate(GeneratorConfig(seed=rng.getrandbits(32), mode="random_tree", **kw))
        parts.append(relabel(t, lambda v, k=k: f"{v}{k}"))
    return disjoint_union(*parts)


def mixed_trees(count, seed0=0):
    """Half leaf-attachment trees (mostly mixed), half grafted trees (unmixed)."""
    half = count // 2
    return random_trees(count - half, seed0) + grafted_trees(half, seed0)


# --- hypothesis strategies --------------------------------------------------

@st.composite
def complexes(draw, max_vertices=7, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    labels = [chr(ord("a") + i) for i in range(n)]
    raw = draw(
        st.lists(st.sets(st.sampled_from(labels), min_size=1, max_size=min(n, 4)), min_size=1, max_size=max_facets)
    )
    return new_complex(labels, [sorted(f, key=labels.index) for f in raw])


@st.composite
def trees(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return generate(GeneratorConfig(seed=seed, mode="random_tree", max_vertices=9, max_facets=6))


# --- acceptance summary -----------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _CRITERIA.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid, text, outcome in _CRITERIA:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {cid:<5} {text}")
