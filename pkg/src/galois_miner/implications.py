"""Duquenne-Guigues basis, implication support and association rules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .context import BinaryContext, popcount
from .errors import ConfigError, ResourceError
from .lattice import (
    ConceptLattice,
    build_lattice,
    lectic_closures,
    lectic_key,
    max_concepts_default,
)

__all__ = [
    "Implication",
    "AssociationRule",
    "dg_basis",
    "implication_holds",
    "implication_support",
    "follows",
    "association_rules",
    "render_implication",
    "render_rule",
]


@dataclass(frozen=True)
class Implication:
    """``premise => conclusion``; the conclusion never repeats premise attributes."""

    premise: tuple[str, ...]
    conclusion: tuple[str, ...]
    support: int = 0

    def __post_init__(self):
        premise = tuple(self.premise)
        conclusion = tuple(a for a in self.conclusion if a not in premise)
        object.__setattr__(self, "premise", premise)
        object.__setattr__(self, "conclusion", conclusion)


@dataclass(frozen=True)
class AssociationRule:
    """A rule with exact confidence ``support / premise_support``."""

    premise: tuple[str, ...]
    conclusion: tuple[str, ...]
    support: int
    premise_support: int

    @property
    def confidence(self) -> Fraction:
        if self.premise_support == 0:
            return Fraction(1)
        return Fraction(self.support, self.premise_support)


def _masks(imp: Implication, ctx: BinaryContext) -> tuple[int, int]:
    return ctx.attribute_mask(imp.premise), ctx.attribute_mask(imp.conclusion)


def implication_holds(imp: Implication, ctx: BinaryContext) -> bool:
    """True iff every object having the premise also has the conclusion."""
    p, c = _masks(imp, ctx)
    ext = ctx.extent_of(p)
    return ext & ctx.extent_of(c) == ext


def implication_support(imp: Implication, ctx: BinaryContext) -> int:
    """Number of objects having premise and conclusion."""
    p, c = _masks(imp, ctx)
    return popcount(ctx.extent_of(p | c))


def _pseudo_closure(basis: list[tuple[int, int]], x: int) -> int:
    # closes under premises that are strict subsets of the growing set
    changed = True
    while changed:
        changed = False
        for p, c in basis:
            if p & x == p and p != x and c & ~x:
                x |= c
                changed = True
    return x


def dg_basis(ctx: BinaryContext, max_concepts: int | None = None) -> list[Implication]:
    """The Duquenne-Guigues (stem) basis, in lectic order of premises.

    Pseudo-intents are the non-closed sets produced by NextClosure run over
    the pseudo-closure of the basis found so far. ``max_concepts`` bounds the
    number of intents plus pseudo-intents visited.
    """
    if max_concepts is None:
        max_concepts = max_concepts_default()
    n = len(ctx.attributes)
    masks: list[tuple[int, int]] = []
    result = []
    for visited, a in enumerate(lectic_closures(n, lambda x: _pseudo_closure(masks, x))):
        if visited >= max_concepts:
            raise ResourceError(f"implication basis search exceeded the guard of {max_concepts}")
        closed = ctx.attribute_closure(a)
        if closed != a:
            masks.append((a, closed))
            result.append(
                Implication(
                    ctx.attribute_names(a),
                    ctx.attribute_names(closed & ~a),
                    popcount(ctx.extent_of(a)),
                )
            )
    return result


def follows(imp: Implication, basis: Sequence[Implication]) -> bool:
    """Whether ``imp`` is entailed by ``basis`` (forward chaining)."""
    closure = set(imp.premise)
    changed = True
    while changed:
        changed = False
        for b in basis:
            if closure.issuperset(b.premise) and not closure.issuperset(b.conclusion):
                closure.update(b.conclusion)
                changed = True
    return closure.issuperset(imp.conclusion)


def association_rules(
    ctx: BinaryContext,
    min_support: int = 0,
    min_confidence: Fraction | int | str = 1,
    lattice: ConceptLattice | None = None,
    basis: Sequence[Implication] | None = None,
) -> list[AssociationRule]:
    """Exact rules from the DG basis plus approximate rules along lattice covers.

    Approximate rules go from the intent of an upper concept to the extra
    attributes of each lower cover. Output is sorted by descending support,
    then descending confidence, then lectic premise order.
    """
    try:
        min_confidence = Fraction(min_confidence)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"invalid confidence threshold {min_confidence!r}") from None
    if not 0 < min_confidence <= 1:
        raise ConfigError(f"min_confidence must lie in (0, 1], got {min_confidence}")
    if min_support < 0:
        raise ConfigError(f"min_support must be non-negative, got {min_support}")

    if basis is None:
        basis = dg_basis(ctx)
    rules = [
        AssociationRule(imp.premise, imp.conclusion, imp.support, imp.support)
        for imp in basis
    ]
    if min_confidence < 1:
        if lattice is None:
            lattice = build_lattice(ctx)
        for lo, up in lattice.covers:
            lower, upper = lattice.concepts[lo], lattice.concepts[up]
            rules.append(
                AssociationRule(
                    upper.intent,
                    ctx.attribute_names(lower.intent_mask & ~upper.intent_mask),
                    popcount(lower.extent_mask),
                    popcount(upper.extent_mask),
                )
            )

    n = len(ctx.attributes)
    kept = [
        r for r in rules
        if r.support >= min_support and r.confidence >= min_confidence
    ]
    kept.sort(
        key=lambda r: (
            -r.support,
            -r.confidence,
            lectic_key(ctx.attribute_mask(r.premise), n),
            lectic_key(ctx.attribute_mask(r.conclusion), n),
        )
    )
    return kept


ARROW = "⇒"


def render_implication(imp: Implication) -> str:
    """``P13 => P30 (support 13)`` with a double arrow."""
    premise = " ".join(imp.premise) or "{}"
    return f"{premise} {ARROW} {' '.join(imp.conclusion) or '{}'} (support {imp.support})"


def render_rule(rule: AssociationRule) -> str:
    premise = " ".join(rule.premise) or "{}"
    return (
        f"{premise} {ARROW} {' '.join(rule.conclusion) or '{}'} "
        f"(support {rule.support}, confidence {rule.support}/{rule.premise_support})"
    )
