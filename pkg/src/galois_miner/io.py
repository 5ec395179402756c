"""Reading and writing: trait CSV, Burmeister contexts, DOT and JSON exports."""

from __future__ import annotations

import csv
import json
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from .context import BinaryContext, ManyValuedContext, Trait, popcount
from .errors import InputError
from .histogram import HistogramConcept
from .implications import AssociationRule, Implication
from .lattice import ConceptLattice

__all__ = [
    "MissingCellWarning",
    "TraitRecord",
    "ingest_csv",
    "parse_csv",
    "load_table1",
    "read_burmeister",
    "write_burmeister",
    "export_dot",
    "ExportDocument",
    "build_document",
    "export_json",
    "load_json",
    "SCHEMA_VERSION",
    "schema_path",
]

SCHEMA_VERSION = 1
HEADER = ["object", "trait", "modality", "affinity"]


class MissingCellWarning(UserWarning):
    """A (object, trait, modality) cell was absent from the CSV and set to 0."""


@dataclass(frozen=True)
class TraitRecord:
    object: str
    trait: str
    modality: str
    affinity: int
    line: int = 0


# -- CSV --------------------------------------------------------------------


def _records(text: str, max_affinity: int) -> list[TraitRecord]:
    lines = text.splitlines()
    numbered = [
        (n, line) for n, line in enumerate(lines, start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise InputError("CSV is empty: missing header object,trait,modality,affinity")
    header_no, header = numbered[0]
    fields = [f.strip() for f in next(csv.reader([header]))]
    if fields != HEADER:
        raise InputError(f"line {header_no}: header must be {','.join(HEADER)}, got {header!r}")

    records = []
    for n, line in numbered[1:]:
        row = [f.strip() for f in next(csv.reader([line]))]
        if len(row) != 4:
            raise InputError(f"line {n}: expected 4 columns, got {len(row)}")
        obj, trait, modality, aff = row
        if not obj or not trait or not modality:
            raise InputError(f"line {n}: empty object, trait or modality")
        try:
            value = int(aff)
        except ValueError:
            raise InputError(f"line {n}: affinity {aff!r} is not an integer") from None
        if not 0 <= value <= max_affinity:
            raise InputError(f"line {n}: affinity {value} outside 0..{max_affinity}")
        records.append(TraitRecord(obj, trait, modality, value, n))
    return records


def parse_csv(text: str, max_affinity: int = 3, strict: bool = False) -> ManyValuedContext:
    """Build a many-valued context from long-format CSV text.

    Objects and traits keep their first-appearance order. A trait whose
    modalities are all positive integers is read as 1-based indices (labels
    ``"1"``, ``"2"``, ...), otherwise modality labels keep first-appearance
    order. Missing cells become 0 with a :class:`MissingCellWarning`, or raise
    :class:`InputError` when ``strict``.
    """
    records = _records(text, max_affinity)

    objects: dict[str, None] = {}
    trait_mods: dict[str, dict[str, None]] = {}
    seen: dict[tuple[str, str, str], int] = {}
    for r in records:
        objects.setdefault(r.object)
        trait_mods.setdefault(r.trait, {}).setdefault(r.modality)

    traits = []
    canon: dict[tuple[str, str], str] = {}
    for code, mods in trait_mods.items():
        labels = list(mods)
        if all(m.isdigit() and int(m) > 0 for m in labels):
            top = max(int(m) for m in labels)
            ordered = [str(i) for i in range(1, top + 1)]
            canon.update({(code, m): str(int(m)) for m in labels})
        else:
            ordered = labels
            canon.update({(code, m): m for m in labels})
        traits.append(Trait(code, tuple(ordered)))

    offsets, start = {}, 0
    for t in traits:
        offsets[t.code] = {m: start + k for k, m in enumerate(t.modalities)}
        start += len(t)
    obj_index = {o: i for i, o in enumerate(objects)}
    values = np.zeros((len(objects), start), dtype=np.int64)
    filled = np.zeros_like(values, dtype=bool)

    for r in records:
        mod = canon[r.trait, r.modality]
        key = (r.object, r.trait, mod)
        if key in seen:
            raise InputError(
                f"line {r.line}: duplicate entry for {key}, first given on line {seen[key]}"
            )
        seen[key] = r.line
        i, j = obj_index[r.object], offsets[r.trait][mod]
        values[i, j] = r.affinity
        filled[i, j] = True

    missing = np.argwhere(~filled)
    if len(missing):
        col_names = [(t.code, m) for t in traits for m in t.modalities]
        first = missing[0]
        obj = list(objects)[first[0]]
        msg = (
            f"{len(missing)} missing cell(s) set to affinity 0, first: object {obj!r}, "
            f"trait {col_names[first[1]][0]!r}, modality {col_names[first[1]][1]!r}"
        )
        if strict:
            raise InputError(msg)
        warnings.warn(msg, MissingCellWarning, stacklevel=3)

    return ManyValuedContext(list(objects), traits, values, max_affinity)


def ingest_csv(path, max_affinity: int = 3, strict: bool = False) -> ManyValuedContext:
    text = Path(path).read_text(encoding="utf-8")
    return parse_csv(text, max_affinity=max_affinity, strict=strict)


def load_table1() -> ManyValuedContext:
    """The bundled potential-size data for 15 macrophytes."""
    text = resources.files("galois_miner").joinpath("data/table1.csv").read_text(encoding="utf-8")
    return parse_csv(text)


# -- Burmeister -------------------------------------------------------------


def write_burmeister(ctx: BinaryContext) -> str:
    lines = ["B"]
    if ctx.name is not None:
        lines.append(ctx.name)
    lines += [str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    lines += list(ctx.objects)
    lines += list(ctx.attributes)
    m = len(ctx.attributes)
    for r in ctx.rows:
        lines.append("".join("X" if r >> j & 1 else "." for j in range(m)))
    return "\n".join(lines) + "\n"


def _is_int(s: str) -> bool:
    return s.strip().isdigit()


def read_burmeister(text: str) -> BinaryContext:
    """Parse a Burmeister ``.cxt`` context.

    The name line after ``B`` is optional; when the file goes straight to
    the two counts followed by a blank line, the context gets ``name=None``
    so that writing it back reproduces the input.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != "B":
        raise InputError("line 1: Burmeister file must start with 'B'")

    def blank(k):
        return k < len(lines) and not lines[k].strip()

    def number(k):
        return k < len(lines) and _is_int(lines[k])

    if not (number(2) and number(3) and blank(4)) and number(1) and number(2) and blank(3):
        name, pos = None, 1
    else:
        name, pos = (lines[1] if len(lines) > 1 else ""), 2
    try:
        n_obj, n_att = int(lines[pos]), int(lines[pos + 1])
    except (IndexError, ValueError):
        raise InputError(f"line {pos + 1}: expected object and attribute counts") from None
    pos += 2
    if pos >= len(lines) or lines[pos].strip():
        raise InputError(f"line {pos + 1}: expected a blank line after the counts")
    pos += 1
    need = n_obj + n_att + n_obj
    body = lines[pos:pos + need]
    if len(body) < need:
        raise InputError(f"truncated context: expected {need} lines after header, got {len(body)}")
    objects = body[:n_obj]
    attributes = body[n_obj:n_obj + n_att]
    rows = []
    for k, line in enumerate(body[n_obj + n_att:]):
        line_no = pos + n_obj + n_att + k + 1
        line = line.rstrip()
        if len(line) != n_att:
            raise InputError(f"line {line_no}: expected {n_att} incidence marks, got {len(line)}")
        mask = 0
        for j, ch in enumerate(line):
            if ch in "Xx":
                mask |= 1 << j
            elif ch != ".":
                raise InputError(f"line {line_no}: unexpected character {ch!r}")
        rows.append(mask)
    return BinaryContext(objects, attributes, rows, name=name)


# -- DOT --------------------------------------------------------------------


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(lat: ConceptLattice, ctx: BinaryContext | None = None) -> str:
    """Hasse diagram in Graphviz DOT with reduced labelling.

    Each attribute labels the largest concept containing it in its intent,
    each object the smallest concept containing it in its extent. Edges go
    from a concept to its upper covers, drawn bottom-to-top.
    """
    ctx = ctx or lat.context
    by_extent = {c.extent_mask: i for i, c in enumerate(lat.concepts)}
    attr_at: dict[int, list[str]] = {i: [] for i in range(len(lat))}
    obj_at: dict[int, list[str]] = {i: [] for i in range(len(lat))}
    for j, a in enumerate(ctx.attributes):
        attr_at[by_extent[ctx.columns[j]]].append(a)
    for i, o in enumerate(ctx.objects):
        obj_at[by_extent[ctx.extent_of(ctx.rows[i])]].append(o)

    out = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(lat.concepts):
        label = _dot_escape(", ".join(attr_at[i])) + "\\n" + _dot_escape(", ".join(obj_at[i]))
        out.append(f'  c{i} [label="{label}"];')
    for lo, up in lat.covers:
        out.append(f"  c{lo} -> c{up};")
    out.append("}")
    return "\n".join(out) + "\n"


# -- JSON -------------------------------------------------------------------


def schema_path() -> Path:
    return Path(str(resources.files("galois_miner").joinpath("data/export.schema.json")))


@dataclass
class ExportDocument:
    """Plain-data export; absent sections are ``None`` and omitted from JSON."""

    context: dict
    concepts: list | None = None
    covers: list | None = None
    implications: list | None = None
    rules: list | None = None
    histogram_concepts: dict | None = None
    schema_version: int = SCHEMA_VERSION
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {"schema_version": self.schema_version, "context": self.context}
        for key in ("concepts", "covers", "implications", "rules", "histogram_concepts"):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        doc.update(self.extra)
        return doc

    @classmethod
    def from_dict(cls, data: dict) -> "ExportDocument":
        data = dict(data)
        known = {"schema_version", "context", "concepts", "covers", "implications",
                 "rules", "histogram_concepts"}
        extra = {k: data.pop(k) for k in list(data) if k not in known}
        return cls(extra=extra, **data)


def build_document(
    ctx: BinaryContext | None = None,
    lattice: ConceptLattice | None = None,
    implications: Sequence[Implication] | None = None,
    rules: Sequence[AssociationRule] | None = None,
    histogram: Sequence[HistogramConcept] | None = None,
    mvc: ManyValuedContext | None = None,
) -> ExportDocument:
    if ctx is None and lattice is not None:
        ctx = lattice.context
    context = {}
    if ctx is not None:
        context.update(
            objects=len(ctx.objects),
            attributes=len(ctx.attributes),
            object_names=list(ctx.objects),
            attribute_names=list(ctx.attributes),
        )
    elif mvc is not None:
        context.update(objects=len(mvc.objects), object_names=list(mvc.objects))
    if mvc is not None:
        context["traits"] = [
            {"code": t.code, "name": t.name, "modalities": list(t.modalities)}
            for t in mvc.traits
        ]
        context["max_affinity"] = mvc.max_affinity

    doc = ExportDocument(context=context)
    if lattice is not None:
        doc.concepts = [
            {"extent": list(c.extent), "intent": list(c.intent), "support": popcount(c.extent_mask)}
            for c in lattice.concepts
        ]
        doc.covers = [[lo, up] for lo, up in lattice.covers]
        doc.context["top"] = lattice.top_index
        doc.context["bottom"] = lattice.bottom_index
    if implications is not None:
        doc.implications = [
            {"premise": list(i.premise), "conclusion": list(i.conclusion), "support": i.support}
            for i in implications
        ]
    if rules is not None:
        doc.rules = [
            {
                "premise": list(r.premise),
                "conclusion": list(r.conclusion),
                "support": r.support,
                "confidence": {"num": r.support, "den": r.premise_support},
            }
            for r in rules
        ]
    if histogram is not None:
        mode = histogram[0].mode if histogram else None
        doc.histogram_concepts = {
            "mode": mode,
            "concepts": [
                {
                    "extent": list(h.extent),
                    "intent": [
                        {"trait": code, "values": list(vals)}
                        for code, vals in h.intent.per_trait().items()
                    ],
                }
                for h in histogram
            ],
        }
    return doc


def export_json(doc: ExportDocument) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_json(text: str) -> ExportDocument:
    return ExportDocument.from_dict(json.loads(text))
