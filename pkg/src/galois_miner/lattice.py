"""Concept enumeration (NextClosure) and the lattice order.

Attribute sets are bitmasks where bit ``j`` is the ``j``-th stored attribute.
Lectic order treats lower indices as more significant: of two sets, the one
containing the smallest element of their symmetric difference is larger.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator

from .context import BinaryContext, Concept, iter_bits, popcount
from .errors import GaloisMinerError, ResourceError

__all__ = [
    "DEFAULT_MAX_CONCEPTS",
    "ConceptLattice",
    "lectic_key",
    "next_closure",
    "lectic_closures",
    "enumerate_concepts",
    "build_order",
    "build_lattice",
    "concept_levels",
    "level_count",
    "max_concepts_default",
]

DEFAULT_MAX_CONCEPTS = 1_000_000
ENV_MAX_CONCEPTS = "GALOIS_MINER_MAX_CONCEPTS"


def max_concepts_default() -> int:
    value = os.environ.get(ENV_MAX_CONCEPTS)
    return int(value) if value else DEFAULT_MAX_CONCEPTS


def lectic_key(mask: int, n: int) -> int:
    """Integer whose natural order is the lectic order of ``mask`` over ``n`` items."""
    return int(format(mask, f"0{n}b")[::-1], 2) if n else 0


def next_closure(current: int, n: int, closure: Callable[[int], int]) -> int | None:
    """The lectically next closed set after ``current``, or None after the last."""
    for i in range(n - 1, -1, -1):
        bit = 1 << i
        if current & bit:
            continue
        below = bit - 1
        candidate = closure((current & below) | bit)
        if (candidate ^ current) & below == 0:
            return candidate
    return None


def lectic_closures(n: int, closure: Callable[[int], int]) -> Iterator[int]:
    """All sets closed under ``closure`` in lectic order."""
    current = closure(0)
    while current is not None:
        yield current
        current = next_closure(current, n, closure)


def enumerate_concepts(ctx: BinaryContext, max_concepts: int | None = None) -> list[Concept]:
    """All formal concepts, in lectic order of intents.

    Raises
    ------
    ResourceError
        More than ``max_concepts`` concepts (default from
        ``GALOIS_MINER_MAX_CONCEPTS`` or 1,000,000).
    """
    if max_concepts is None:
        max_concepts = max_concepts_default()
    concepts = []
    for intent in lectic_closures(len(ctx.attributes), ctx.attribute_closure):
        if len(concepts) >= max_concepts:
            raise ResourceError(f"concept enumeration exceeded the guard of {max_concepts}")
        concepts.append(Concept.from_masks(ctx, ctx.extent_of(intent), intent))
    return concepts


@dataclass(frozen=True)
class ConceptLattice:
    """Concepts with their cover relation.

    ``covers`` holds ``(lower, upper)`` index pairs: ``upper`` covers
    ``lower`` when its extent is a minimal strict superset.
    """

    context: BinaryContext
    concepts: tuple[Concept, ...]
    covers: tuple[tuple[int, int], ...]
    top_index: int
    bottom_index: int

    def __len__(self):
        return len(self.concepts)

    def upper_covers(self, index: int) -> list[int]:
        return [u for lo, u in self.covers if lo == index]

    def lower_covers(self, index: int) -> list[int]:
        return [lo for lo, u in self.covers if u == index]

    def index_of_extent(self, objects) -> int:
        mask = self.context.object_mask(objects)
        for i, c in enumerate(self.concepts):
            if c.extent_mask == mask:
                return i
        raise KeyError(f"no concept with extent {sorted(objects)}")


def build_order(concepts: list[Concept], ctx: BinaryContext) -> ConceptLattice:
    """Cover relation of the extent-inclusion order.

    Upper covers of a concept are the minimal extents among the closures of
    ``extent + {o}`` for objects ``o`` outside the extent.
    """
    concepts = tuple(concepts)
    by_extent = {}
    for i, c in enumerate(concepts):
        if c.extent_mask in by_extent:
            raise GaloisMinerError(f"duplicate concept with extent {c.extent}")
        by_extent[c.extent_mask] = i
    if not concepts:
        raise GaloisMinerError("a lattice needs at least one concept")

    covers = []
    for i, c in enumerate(concepts):
        candidates = set()
        outside = ctx.all_objects & ~c.extent_mask
        for o in iter_bits(outside):
            candidates.add(ctx.object_closure(c.extent_mask | (1 << o)))
        minimal = [
            e for e in candidates
            if not any(f != e and f & e == f for f in candidates)
        ]
        for e in sorted(minimal, key=lambda e: by_extent[e]):
            covers.append((i, by_extent[e]))

    top = by_extent.get(ctx.all_objects)
    bottom = next(
        (i for i, c in enumerate(concepts) if c.intent_mask == ctx.all_attributes), None
    )
    if top is None or bottom is None:
        raise GaloisMinerError("concept list lacks a top or bottom element")
    return ConceptLattice(ctx, concepts, tuple(covers), top, bottom)


def build_lattice(ctx: BinaryContext, max_concepts: int | None = None) -> ConceptLattice:
    return build_order(enumerate_concepts(ctx, max_concepts), ctx)


def concept_levels(lat: ConceptLattice) -> list[int]:
    """Longest cover-path distance from the top, per concept index."""
    order = sorted(range(len(lat)), key=lambda i: -popcount(lat.concepts[i].extent_mask))
    uppers: dict[int, list[int]] = {i: [] for i in range(len(lat))}
    for lo, up in lat.covers:
        uppers[lo].append(up)
    level = [0] * len(lat)
    for i in order:
        if uppers[i]:
            level[i] = 1 + max(level[u] for u in uppers[i])
    return level


def level_count(lat: ConceptLattice) -> int:
    """Number of levels between top and bottom, both excluded."""
    levels = concept_levels(lat)
    inner = [lv for i, lv in enumerate(levels) if i not in (lat.top_index, lat.bottom_index)]
    return max(inner, default=0)
