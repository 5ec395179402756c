"""Duquenne-Guigues basis and association rules on the size context."""

from fractions import Fraction

from galois_miner import (
    association_rules,
    dg_basis,
    disjunctive_scale,
    load_table1,
    render_implication,
    render_rule,
)

ctx = disjunctive_scale(load_table1())

basis = dg_basis(ctx)
print(f"{len(basis)} implications in the stem basis; the best supported:")
for imp in sorted(basis, key=lambda i: -i.support)[:8]:
    print("  " + render_implication(imp))

# Approximate rules follow lattice covers; confidences stay exact fractions.
rules = association_rules(ctx, min_support=4, min_confidence=Fraction(2, 3))
print(f"\n{len(rules)} rules with support >= 4 and confidence >= 2/3:")
for r in rules:
    print("  " + render_rule(r))
