"""Conversion of many-valued trait data into binary contexts.

Two scalings are provided:

* disjunctive: one attribute per realized (trait, modality, affinity) value,
  rendered ``S21`` for "trait S, 2nd modality, affinity 1";
* pattern: one attribute per realized (trait, affinity tuple), rendered
  ``S0122`` for the tuple (0, 1, 2, 2).

Affinity groupings coarsen the affinity scale before scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .context import BinaryContext, ManyValuedContext, Trait
from .errors import ConfigError, InputError

__all__ = [
    "ScaledAttribute",
    "AffinityGrouping",
    "PRESENCE",
    "LOWHIGH",
    "identity_grouping",
    "parse_grouping",
    "get_grouping",
    "disjunctive_attributes",
    "pattern_attributes",
    "disjunctive_scale",
    "pattern_scale",
    "group_affinities",
    "decode_disjunctive",
]


def _compact(code: str) -> bool:
    return code.isalpha()


@dataclass(frozen=True)
class ScaledAttribute:
    """A binary attribute produced by scaling one trait.

    ``modality`` (1-based) and ``affinity`` are set for disjunctive
    attributes; ``pattern`` for pattern attributes.
    """

    trait_code: str
    modality: int | None = None
    affinity: int | None = None
    pattern: tuple[int, ...] | None = None

    @property
    def kind(self) -> str:
        return "pattern" if self.pattern is not None else "disjunctive"

    @property
    def name(self) -> str:
        code = self.trait_code
        if self.pattern is not None:
            if _compact(code) and all(0 <= v <= 9 for v in self.pattern):
                return code + "".join(str(v) for v in self.pattern)
            return f"{code}:" + "-".join(str(v) for v in self.pattern)
        if _compact(code) and self.modality <= 9 and self.affinity <= 9:
            return f"{code}{self.modality}{self.affinity}"
        return f"{code}.m{self.modality}.a{self.affinity}"


def disjunctive_attributes(
    mvc: ManyValuedContext, full_columns: bool = False
) -> list[ScaledAttribute]:
    """Attributes of the complete disjunctive table, in trait/modality/affinity order.

    Only realized (modality, affinity) pairs are kept unless ``full_columns``.
    """
    attrs = []
    for t in mvc.traits:
        block = mvc.values[:, mvc.trait_slice(t.code)]
        for m in range(len(t)):
            if full_columns:
                values = range(mvc.max_affinity + 1)
            else:
                values = sorted({int(v) for v in block[:, m]})
            attrs.extend(ScaledAttribute(t.code, m + 1, a) for a in values)
    return attrs


def pattern_attributes(mvc: ManyValuedContext) -> list[ScaledAttribute]:
    attrs = []
    for t in mvc.traits:
        block = mvc.values[:, mvc.trait_slice(t.code)]
        tuples = sorted({tuple(int(v) for v in row) for row in block})
        attrs.extend(ScaledAttribute(t.code, pattern=p) for p in tuples)
    return attrs


def _build(mvc, attrs, owns) -> BinaryContext:
    names = [a.name for a in attrs]
    if len(set(names)) != len(names):
        raise InputError("scaled attribute names collide; use distinct alphabetic trait codes")
    rows = []
    for i in range(len(mvc.objects)):
        mask = 0
        for j, a in enumerate(attrs):
            if owns(i, a):
                mask |= 1 << j
        rows.append(mask)
    return BinaryContext(mvc.objects, names, rows)


def disjunctive_scale(mvc: ManyValuedContext, full_columns: bool = False) -> BinaryContext:
    """Complete disjunctive table: ``x`` has ``(T, m, a)`` iff affinity(x, T, m) == a."""
    attrs = disjunctive_attributes(mvc, full_columns)
    offsets = {t.code: mvc.trait_slice(t.code).start for t in mvc.traits}
    values = mvc.values

    def owns(i, a):
        return values[i, offsets[a.trait_code] + a.modality - 1] == a.affinity

    return _build(mvc, attrs, owns)


def pattern_scale(mvc: ManyValuedContext) -> BinaryContext:
    """One attribute per trait carrying the object's whole affinity tuple."""
    attrs = pattern_attributes(mvc)
    rows = {
        (i, t.code): tuple(int(v) for v in mvc.values[i, mvc.trait_slice(t.code)])
        for i in range(len(mvc.objects))
        for t in mvc.traits
    }
    return _build(mvc, attrs, lambda i, a: rows[i, a.trait_code] == a.pattern)


def decode_disjunctive(
    ctx: BinaryContext, traits: list[Trait], max_affinity: int = 3
) -> ManyValuedContext:
    """Rebuild the many-valued context a disjunctive table was scaled from."""
    lookup = {}
    offset = 0
    for t in traits:
        for m in range(len(t)):
            for a in range(max_affinity + 1):
                lookup[ScaledAttribute(t.code, m + 1, a).name] = (offset + m, a)
        offset += len(t)
    values = np.full((len(ctx.objects), offset), -1, dtype=np.int64)
    for j, name in enumerate(ctx.attributes):
        if name not in lookup:
            raise InputError(f"attribute {name!r} is not a disjunctive attribute of these traits")
        col, a = lookup[name]
        for i in range(len(ctx.objects)):
            if ctx.rows[i] >> j & 1:
                if values[i, col] != -1:
                    raise InputError(f"object {ctx.objects[i]!r} has two values for one modality")
                values[i, col] = a
    if (values < 0).any():
        i = int(np.argwhere(values < 0)[0][0])
        raise InputError(f"object {ctx.objects[i]!r} lacks a value for some modality")
    return ManyValuedContext(ctx.objects, traits, values, max_affinity)


@dataclass(frozen=True)
class AffinityGrouping:
    """A named map from affinity values to grouped values."""

    name: str
    mapping: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, name: str, mapping: Mapping[int, int]) -> "AffinityGrouping":
        return cls(name, tuple(sorted((int(k), int(v)) for k, v in mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def __str__(self):
        return self.name + "=" + ",".join(f"{k}:{v}" for k, v in self.mapping)


PRESENCE = AffinityGrouping.from_dict("presence", {0: 0, 1: 1, 2: 1, 3: 1})
LOWHIGH = AffinityGrouping.from_dict("lowhigh", {0: 0, 1: 0, 2: 1, 3: 1})


def identity_grouping(max_affinity: int = 3) -> AffinityGrouping:
    return AffinityGrouping.from_dict("identity", {a: a for a in range(max_affinity + 1)})


def parse_grouping(text: str) -> AffinityGrouping:
    """Parse ``name=0:0,1:1,2:1,3:1``."""
    name, sep, body = text.partition("=")
    name = name.strip()
    if not sep or not name:
        raise ConfigError(f"grouping {text!r} must look like name=0:0,1:1,...")
    mapping = {}
    for item in body.split(","):
        src, colon, dst = item.partition(":")
        try:
            k, v = int(src), int(dst)
        except ValueError:
            raise ConfigError(f"bad grouping entry {item!r} in {text!r}") from None
        if not colon or k in mapping or k < 0 or v < 0:
            raise ConfigError(f"bad grouping entry {item!r} in {text!r}")
        mapping[k] = v
    return AffinityGrouping.from_dict(name, mapping)


def get_grouping(spec: str, max_affinity: int = 3) -> AffinityGrouping:
    """Resolve a built-in grouping name or parse a custom definition."""
    builtin = {"presence": PRESENCE, "lowhigh": LOWHIGH}
    if spec in builtin:
        return builtin[spec]
    if spec == "identity":
        return identity_grouping(max_affinity)
    return parse_grouping(spec)


def group_affinities(mvc: ManyValuedContext, grouping: AffinityGrouping) -> ManyValuedContext:
    """Apply ``grouping`` to every affinity; the new scale tops out at the image max."""
    mapping = grouping.as_dict()
    missing = [a for a in range(mvc.max_affinity + 1) if a not in mapping]
    if missing:
        raise ConfigError(
            f"grouping {grouping.name!r} does not map affinities {missing} "
            f"(scale is 0..{mvc.max_affinity})"
        )
    table = np.array([mapping[a] for a in range(mvc.max_affinity + 1)], dtype=np.int64)
    return mvc.with_values(table[mvc.values], max_affinity=int(table.max()))
