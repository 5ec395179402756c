"""Many-valued and binary formal contexts with their derivation operators.

Binary incidence is kept as Python integers used as bitsets: one row mask per
object (bit ``j`` set when the object has attribute ``j``) plus a lazily built
column mask per attribute. Object and attribute order is always the stored
order; every set-valued result is reported as a tuple in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError

__all__ = [
    "Trait",
    "ManyValuedContext",
    "BinaryContext",
    "Concept",
    "derive_intent",
    "derive_extent",
    "close_objects",
    "close_attrs",
    "iter_bits",
    "popcount",
]


def iter_bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_unique(names: Sequence[str], what: str) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise InputError(f"duplicate {what} {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class Trait:
    """A many-valued attribute with its ordered modalities."""

    code: str
    modalities: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "modalities", tuple(self.modalities))
        if not self.code:
            raise InputError("trait code must be non-empty")
        if not self.modalities:
            raise InputError(f"trait {self.code!r} needs at least one modality")
        _check_unique(self.modalities, f"modality of trait {self.code!r}:")
        if not self.name:
            object.__setattr__(self, "name", self.code)

    def __len__(self) -> int:
        return len(self.modalities)


class ManyValuedContext:
    """Objects described by (trait, modality, affinity) triples.

    Affinities are stored as an ``(n_objects, n_modalities_total)`` integer
    array whose columns are the traits' modalities concatenated in trait order.

    Parameters
    ----------
    objects : sequence of str
        Object identifiers, in display order.
    traits : sequence of Trait
        Traits, in display order. Codes must be unique.
    values : array_like
        Affinity matrix, one row per object.
    max_affinity : int
        Upper bound of the affinity scale (3 for the 0..3 scale).
    """

    def __init__(
        self,
        objects: Sequence[str],
        traits: Sequence[Trait],
        values,
        max_affinity: int = 3,
    ):
        self.objects = tuple(objects)
        self.traits = tuple(traits)
        self.max_affinity = int(max_affinity)
        _check_unique(self.objects, "object")
        _check_unique([t.code for t in self.traits], "trait code")
        if self.max_affinity < 0:
            raise InputError("max_affinity must be non-negative")

        width = sum(len(t) for t in self.traits)
        arr = np.array(values, dtype=np.int64).reshape(len(self.objects), width)
        if arr.size and (arr.min() < 0 or arr.max() > self.max_affinity):
            bad = np.argwhere((arr < 0) | (arr > self.max_affinity))[0]
            raise InputError(
                f"affinity {arr[tuple(bad)]} of object {self.objects[bad[0]]!r} "
                f"outside 0..{self.max_affinity}"
            )
        arr.setflags(write=False)
        self.values = arr

        offsets = np.cumsum([0] + [len(t) for t in self.traits])
        self._slices = {
            t.code: slice(int(offsets[i]), int(offsets[i + 1]))
            for i, t in enumerate(self.traits)
        }
        self._object_index = {o: i for i, o in enumerate(self.objects)}

    @classmethod
    def from_rows(
        cls,
        traits: Sequence[Trait],
        rows: Mapping[str, Mapping[str, Sequence[int]]],
        max_affinity: int = 3,
    ) -> "ManyValuedContext":
        """Build from ``{object: {trait_code: affinity tuple}}``."""
        data = []
        for obj, per_trait in rows.items():
            line = []
            for t in traits:
                tup = tuple(per_trait[t.code])
                if len(tup) != len(t):
                    raise InputError(
                        f"object {obj!r}: trait {t.code!r} expects {len(t)} "
                        f"affinities, got {len(tup)}"
                    )
                line.extend(tup)
            data.append(line)
        return cls(list(rows), traits, data, max_affinity)

    def __repr__(self):
        return (
            f"ManyValuedContext({len(self.objects)} objects, "
            f"{len(self.traits)} traits, max_affinity={self.max_affinity})"
        )

    def __eq__(self, other):
        if not isinstance(other, ManyValuedContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.traits == other.traits
            and self.max_affinity == other.max_affinity
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def trait(self, code: str) -> Trait:
        for t in self.traits:
            if t.code == code:
                return t
        raise InputError(f"unknown trait {code!r}")

    def trait_slice(self, code: str) -> slice:
        try:
            return self._slices[code]
        except KeyError:
            raise InputError(f"unknown trait {code!r}") from None

    def object_index(self, obj: str) -> int:
        try:
            return self._object_index[obj]
        except KeyError:
            raise InputError(f"unknown object {obj!r}") from None

    def row(self, obj: str, trait_code: str) -> tuple[int, ...]:
        """The affinity tuple of ``obj`` on one trait."""
        vals = self.values[self.object_index(obj), self.trait_slice(trait_code)]
        return tuple(int(v) for v in vals)

    def affinity(self, obj: str, trait_code: str, modality: int) -> int:
        """Affinity for a 0-based modality index."""
        return self.row(obj, trait_code)[modality]

    def with_values(self, values, max_affinity: int | None = None) -> "ManyValuedContext":
        if max_affinity is None:
            max_affinity = self.max_affinity
        return ManyValuedContext(self.objects, self.traits, values, max_affinity)

    def restrict_objects(self, objects: Iterable[str]) -> "ManyValuedContext":
        objects = list(objects)
        idx = [self.object_index(o) for o in objects]
        return ManyValuedContext(objects, self.traits, self.values[idx], self.max_affinity)


class BinaryContext:
    """A formal context (objects E, attributes F, incidence R).

    Build with :meth:`from_rows` (boolean matrix) or :meth:`from_sets`.
    ``rows`` given directly to the constructor are integer bitmasks.
    """

    def __init__(
        self,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[int],
        name: str | None = "",
    ):
        self.objects = tuple(objects)
        self.attributes = tuple(attributes)
        self.name = name
        _check_unique(self.objects, "object")
        _check_unique(self.attributes, "attribute")
        if len(rows) != len(self.objects):
            raise InputError(f"expected {len(self.objects)} rows, got {len(rows)}")
        full = (1 << len(self.attributes)) - 1
        self.rows = tuple(int(r) for r in rows)
        for obj, r in zip(self.objects, self.rows):
            if r & ~full:
                raise InputError(f"row of {obj!r} references attributes out of range")
        self.all_objects = (1 << len(self.objects)) - 1
        self.all_attributes = full
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._attr_index = {a: i for i, a in enumerate(self.attributes)}

    @classmethod
    def from_rows(cls, objects, attributes, matrix, name: str | None = ""):
        masks = []
        for row in matrix:
            m = 0
            for j, v in enumerate(row):
                if v:
                    m |= 1 << j
            masks.append(m)
        return cls(objects, attributes, masks, name)

    @classmethod
    def from_sets(cls, objects, attributes, incidence: Mapping[str, Iterable[str]], name=""):
        index = {a: j for j, a in enumerate(attributes)}
        masks = []
        for obj in objects:
            m = 0
            for a in incidence.get(obj, ()):
                if a not in index:
                    raise InputError(f"unknown attribute {a!r} for object {obj!r}")
                m |= 1 << index[a]
            masks.append(m)
        return cls(objects, attributes, masks, name)

    def __repr__(self):
        return f"BinaryContext({len(self.objects)} objects, {len(self.attributes)} attributes)"

    def __eq__(self, other):
        if not isinstance(other, BinaryContext):
            return NotImplemented
        return (self.objects, self.attributes, self.rows) == (
            other.objects,
            other.attributes,
            other.rows,
        )

    __hash__ = None

    @cached_property
    def columns(self) -> tuple[int, ...]:
        cols = [0] * len(self.attributes)
        for i, r in enumerate(self.rows):
            bit = 1 << i
            for j in iter_bits(r):
                cols[j] |= bit
        return tuple(cols)

    def has(self, obj: str, attr: str) -> bool:
        return bool(self.rows[self._obj_index[obj]] >> self._attr_index[attr] & 1)

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((len(self.objects), len(self.attributes)), dtype=bool)
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                m[i, j] = True
        return m

    # -- name <-> mask conversion -------------------------------------------

    def object_mask(self, objects: Iterable[str]) -> int:
        mask = 0
        for o in objects:
            try:
                mask |= 1 << self._obj_index[o]
            except KeyError:
                raise InputError(f"unknown object {o!r}") from None
        return mask

    def attribute_mask(self, attributes: Iterable[str]) -> int:
        mask = 0
        for a in attributes:
            try:
                mask |= 1 << self._attr_index[a]
            except KeyError:
                raise InputError(f"unknown attribute {a!r}") from None
        return mask

    def object_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.objects[i] for i in iter_bits(mask))

    def attribute_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.attributes[j] for j in iter_bits(mask))

    # -- derivations on masks ------------------------------------------------

    def intent_of(self, objects: int) -> int:
        """Attributes shared by every object in the mask."""
        result = self.all_attributes
        rows = self.rows
        for i in iter_bits(objects):
            result &= rows[i]
            if not result:
                break
        return result

    def extent_of(self, attributes: int) -> int:
        """Objects owning every attribute in the mask."""
        result = self.all_objects
        cols = self.columns
        for j in iter_bits(attributes):
            result &= cols[j]
            if not result:
                break
        return result

    def attribute_closure(self, attributes: int) -> int:
        return self.intent_of(self.extent_of(attributes))

    def object_closure(self, objects: int) -> int:
        return self.extent_of(self.intent_of(objects))


@dataclass(frozen=True)
class Concept:
    """A formal concept; ``extent``/``intent`` are names in context order."""

    extent: tuple[str, ...]
    intent: tuple[str, ...]
    extent_mask: int = field(default=0, compare=False, repr=False)
    intent_mask: int = field(default=0, compare=False, repr=False)

    @classmethod
    def from_masks(cls, ctx: BinaryContext, extent: int, intent: int) -> "Concept":
        return cls(ctx.object_names(extent), ctx.attribute_names(intent), extent, intent)

    def is_valid_in(self, ctx: BinaryContext) -> bool:
        ext = ctx.object_mask(self.extent)
        itt = ctx.attribute_mask(self.intent)
        return ctx.intent_of(ext) == itt and ctx.extent_of(itt) == ext


def derive_intent(objects: Iterable[str], ctx: BinaryContext) -> tuple[str, ...]:
    """Attributes common to all given objects (all attributes for no objects)."""
    return ctx.attribute_names(ctx.intent_of(ctx.object_mask(objects)))


def derive_extent(attributes: Iterable[str], ctx: BinaryContext) -> tuple[str, ...]:
    """Objects having all given attributes (all objects for no attributes)."""
    return ctx.object_names(ctx.extent_of(ctx.attribute_mask(attributes)))


def close_objects(objects: Iterable[str], ctx: BinaryContext) -> tuple[str, ...]:
    return ctx.object_names(ctx.object_closure(ctx.object_mask(objects)))


def close_attrs(attributes: Iterable[str], ctx: BinaryContext) -> tuple[str, ...]:
    return ctx.attribute_names(ctx.attribute_closure(ctx.attribute_mask(attributes)))
