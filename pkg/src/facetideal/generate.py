"""Seeded random complexes for the property harness and the ``random`` verb."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from typing import Optional

from .complex import Complex, new_complex, normalize_masks
from .errors import BoundsTooLarge, GraftVerificationFailed
from .transform import graft, masks_are_grafted
from .trees import masks_are_tree

MAX_VERTICES = 16
MAX_FACETS = 12
MODES = ("random", "random_tree", "random_grafted")
LABELS = string.ascii_lowercase


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    mode: str = "random"
    min_vertices: int = 2
    max_vertices: int = 8
    min_facets: int = 1
    max_facets: int = 6
    max_facet_size: int = 4
    base_mode: str = "random"  # what random_grafted grafts onto: "random" or "random_tree"

    def check(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.max_vertices > MAX_VERTICES or self.max_facets > MAX_FACETS:
            raise BoundsTooLarge(
                f"desk scale is at most {MAX_VERTICES} vertices and {MAX_FACETS} facets"
            )
        if not (1 <= self.min_vertices <= self.max_vertices and 1 <= self.min_facets <= self.max_facets):
            raise BoundsTooLarge("inconsistent bounds")


def _complex(n: int, masks) -> Complex:
    masks = normalize_masks(masks)
    used = 0
    for m in masks:
        used |= m
    labels = [LABELS[i] for i in range(n) if used >> i & 1]
    return new_complex(labels, [[LABELS[i] for i in range(n) if m >> i & 1] for m in masks])


def _random(rng: random.Random, cfg: GeneratorConfig) -> Complex:
    n = rng.randint(cfg.min_vertices, cfg.max_vertices)
    q = rng.randint(cfg.min_facets, cfg.max_facets)
    top = max(1, min(cfg.max_facet_size, n))
    masks: list[int] = []
    for _ in range(50 * q):
        if len(masks) == q:
            break
        size = rng.randint(1, top)
        cand = sum(1 << v for v in rng.sample(range(n), size))
        # rejection keeps the facet list an antichain
        if any((cand & m) in (cand, m) for m in masks):
            continue
        masks.append(cand)
    return _complex(n, masks)


def _random_tree(rng: random.Random, cfg: GeneratorConfig) -> Complex:
    """Leaf-attachment growth, retried until the tree test passes."""
    for _ in range(200):
        q = rng.randint(cfg.min_facets, cfg.max_facets)
        first = rng.randint(1, max(1, min(cfg.max_facet_size, cfg.max_vertices)))
        masks = [(1 << first) - 1]
        n = first
        while len(masks) < q and n < cfg.max_vertices:
            host = rng.choice(masks)
            verts = [v for v in range(n) if host >> v & 1]
            if len(verts) < 2:
                break
            shared = rng.sample(verts, rng.randint(1, len(verts) - 1))
            room = min(cfg.max_vertices - n, cfg.max_facet_size - len(shared))
            if room < 1:
                continue
            new = rng.randint(1, min(2, room))
            masks.append(sum(1 << v for v in shared) | (((1 << new) - 1) << n))
            n += new
        if n < cfg.min_vertices or len(masks) < cfg.min_facets:
            continue
        if masks_are_tree(normalize_masks(masks)):
            return _complex(n, masks)
    raise RuntimeError("tree growth kept failing verification; loosen the bounds")


def _random_partition(rng: random.Random, c: Complex) -> list[list[str]]:
    verts = list(c.vertices)
    rng.shuffle(verts)
    classes: list[list[str]] = []
    for v in verts:
        options = [cls for cls in classes if any(set(cls) | {v} <= set(f) for f in c.facets)]
        if options and rng.random() < 0.5:
            rng.choice(options).append(v)
        else:
            classes.append([v])
    return classes


def _random_grafted(rng: random.Random, cfg: GeneratorConfig) -> Complex:
    half = max(1, cfg.max_vertices // 2)
    base_cfg = GeneratorConfig(
        seed=cfg.seed,
        mode=cfg.base_mode,
        min_vertices=min(cfg.min_vertices, half),
        max_vertices=half,
        min_facets=1,
        max_facets=max(1, min(cfg.max_facets - 1, cfg.max_facets - half)),
        max_facet_size=cfg.max_facet_size,
    )
    for _ in range(200):
        base = _random_tree(rng, base_cfg) if cfg.base_mode == "random_tree" else _random(rng, base_cfg)
        out: Optional[Complex] = None
        for _ in range(5):
            try:
                out = graft(base, _random_partition(rng, base))
                break
            except GraftVerificationFailed:
                continue
        if out is None:
            out = graft(base)
        if len(out.universe) <= cfg.max_vertices and len(out) <= cfg.max_facets and masks_are_grafted(out.masks):
            return out
    raise RuntimeError("could not build a grafted complex within the bounds")


def generate(cfg: GeneratorConfig) -> Complex:
    cfg.check()
    rng = random.Random(cfg.seed)
    if cfg.mode == "random":
        return _random(rng, cfg)
    if cfg.mode == "random_tree":
        return _random_tree(rng, cfg)
    return _random_grafted(rng, cfg)
