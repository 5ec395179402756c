"""Union and intersection Galois connections over histogram-valued traits.

Each object carries, per trait, a histogram of affinities over the trait's
modalities. The union connection maps an object set to the componentwise
maximum of its histograms and a histogram ``h`` back to the objects lying
below ``h``; the intersection connection uses the minimum and objects lying
above ``h``. Intents of several traits are concatenated in trait order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .context import ManyValuedContext, iter_bits, popcount
from .errors import ConfigError, InputError, ResourceError
from .lattice import max_concepts_default

__all__ = [
    "HistogramVector",
    "HistogramConcept",
    "union_intent",
    "union_extent",
    "intersection_intent",
    "intersection_extent",
    "histogram_closure",
    "enumerate_histogram_concepts",
    "flip_affinities",
]

Mode = Literal["union", "intersection"]
MODES = ("union", "intersection")


@dataclass(frozen=True)
class HistogramVector:
    """Per-trait affinity tuples, flattened in trait order."""

    trait_codes: tuple[str, ...]
    shape: tuple[int, ...]
    values: tuple[int, ...]

    @classmethod
    def for_context(cls, mvc: ManyValuedContext, values) -> "HistogramVector":
        vals = tuple(int(v) for v in np.asarray(values).ravel())
        shape = tuple(len(t) for t in mvc.traits)
        if len(vals) != sum(shape):
            raise InputError(
                f"histogram has {len(vals)} entries, context expects {sum(shape)}"
            )
        return cls(tuple(t.code for t in mvc.traits), shape, vals)

    @classmethod
    def from_traits(cls, mvc: ManyValuedContext, per_trait: dict[str, Iterable[int]]):
        flat = []
        for t in mvc.traits:
            tup = list(per_trait[t.code])
            if len(tup) != len(t):
                raise InputError(f"trait {t.code!r} expects {len(t)} values, got {len(tup)}")
            flat.extend(tup)
        return cls.for_context(mvc, flat)

    def per_trait(self) -> dict[str, tuple[int, ...]]:
        out, start = {}, 0
        for code, width in zip(self.trait_codes, self.shape):
            out[code] = self.values[start:start + width]
            start += width
        return out

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def __str__(self):
        return " ".join(
            f"{code}:[{','.join(str(v) for v in vals)}]"
            for code, vals in self.per_trait().items()
        )


@dataclass(frozen=True)
class HistogramConcept:
    extent: tuple[str, ...]
    intent: HistogramVector
    mode: str


def _check_shape(h: HistogramVector, mvc: ManyValuedContext) -> np.ndarray:
    expected = (tuple(t.code for t in mvc.traits), tuple(len(t) for t in mvc.traits))
    if (h.trait_codes, h.shape) != expected:
        raise InputError(
            f"histogram shape {dict(zip(h.trait_codes, h.shape))} does not match the context"
        )
    return h.array()


def _rows(objects: Iterable[str], mvc: ManyValuedContext) -> np.ndarray:
    idx = [mvc.object_index(o) for o in objects]
    return mvc.values[idx]


def union_intent(objects: Iterable[str], mvc: ManyValuedContext) -> HistogramVector:
    """Componentwise maximum of the objects' histograms (all zeros for no objects)."""
    rows = _rows(objects, mvc)
    if len(rows) == 0:
        return HistogramVector.for_context(mvc, np.zeros(mvc.values.shape[1], dtype=np.int64))
    return HistogramVector.for_context(mvc, rows.max(axis=0))


def intersection_intent(objects: Iterable[str], mvc: ManyValuedContext) -> HistogramVector:
    """Componentwise minimum of the objects' histograms (all max for no objects)."""
    rows = _rows(objects, mvc)
    if len(rows) == 0:
        return HistogramVector.for_context(
            mvc, np.full(mvc.values.shape[1], mvc.max_affinity, dtype=np.int64)
        )
    return HistogramVector.for_context(mvc, rows.min(axis=0))


def union_extent(h: HistogramVector, mvc: ManyValuedContext) -> tuple[str, ...]:
    """Objects whose histogram is below ``h`` on every component."""
    arr = _check_shape(h, mvc)
    keep = (mvc.values <= arr).all(axis=1)
    return tuple(o for o, k in zip(mvc.objects, keep) if k)


def intersection_extent(h: HistogramVector, mvc: ManyValuedContext) -> tuple[str, ...]:
    """Objects whose histogram is above ``h`` on every component."""
    arr = _check_shape(h, mvc)
    keep = (mvc.values >= arr).all(axis=1)
    return tuple(o for o, k in zip(mvc.objects, keep) if k)


class _Closure:
    """Mask-level closure g(f(X)) for one mode."""

    def __init__(self, mvc: ManyValuedContext, mode: str):
        if mode not in MODES:
            raise ConfigError(f"mode must be 'union' or 'intersection', got {mode!r}")
        self.mvc = mvc
        self.union = mode == "union"
        width = mvc.values.shape[1]
        self.empty_intent = (
            np.zeros(width, dtype=np.int64)
            if self.union
            else np.full(width, mvc.max_affinity, dtype=np.int64)
        )

    def intent(self, mask: int) -> np.ndarray:
        idx = list(iter_bits(mask))
        if not idx:
            return self.empty_intent
        rows = self.mvc.values[idx]
        return rows.max(axis=0) if self.union else rows.min(axis=0)

    def extent(self, h: np.ndarray) -> int:
        vals = self.mvc.values
        keep = (vals <= h).all(axis=1) if self.union else (vals >= h).all(axis=1)
        mask = 0
        for i in np.flatnonzero(keep):
            mask |= 1 << int(i)
        return mask

    def __call__(self, mask: int) -> int:
        return self.extent(self.intent(mask))


def histogram_closure(objects: Iterable[str], mvc: ManyValuedContext, mode: Mode) -> tuple[str, ...]:
    """``g(f(X))`` for the chosen connection."""
    mask = 0
    for o in objects:
        mask |= 1 << mvc.object_index(o)
    closed = _Closure(mvc, mode)(mask)
    return tuple(mvc.objects[i] for i in iter_bits(closed))


def enumerate_histogram_concepts(
    mvc: ManyValuedContext, mode: Mode, max_concepts: int | None = None
) -> list[HistogramConcept]:
    """All concepts of the union or intersection connection (Close-by-One).

    Sorted by extent size descending, then by the extent's object indices.
    """
    closure = _Closure(mvc, mode)
    if max_concepts is None:
        max_concepts = max_concepts_default()
    n = len(mvc.objects)
    found: list[int] = []

    def visit(extent: int, start: int):
        found.append(extent)
        if len(found) > max_concepts:
            raise ResourceError(f"histogram concept enumeration exceeded the guard of {max_concepts}")
        for j in range(start, n):
            bit = 1 << j
            if extent & bit:
                continue
            closed = closure(extent | bit)
            # canonicity: nothing new below j
            if (closed ^ extent) & (bit - 1) == 0:
                visit(closed, j + 1)

    visit(closure(0), 0)

    found.sort(key=lambda m: (-popcount(m), list(iter_bits(m))))
    out = []
    for ext in found:
        names = tuple(mvc.objects[i] for i in iter_bits(ext))
        out.append(
            HistogramConcept(names, HistogramVector.for_context(mvc, closure.intent(ext)), mode)
        )
    return out


def flip_affinities(mvc: ManyValuedContext) -> ManyValuedContext:
    """Replace every affinity ``a`` by ``max_affinity - a``."""
    return mvc.with_values(mvc.max_affinity - mvc.values)
