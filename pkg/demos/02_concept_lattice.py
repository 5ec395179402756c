"""Concepts of the potential-size disjunctive context and their order."""

from galois_miner import (
    build_lattice,
    concept_levels,
    disjunctive_scale,
    export_dot,
    level_count,
    load_table1,
)

ctx = disjunctive_scale(load_table1())
lat = build_lattice(ctx)
print(f"{len(lat)} concepts, {len(lat.covers)} cover edges, {level_count(lat)} inner levels")

levels = concept_levels(lat)
for i, c in enumerate(lat.concepts):
    if len(c.extent) >= 3 and c.intent:
        print(f"  level {levels[i]}: ({' '.join(c.intent)}) shared by {', '.join(c.extent)}")

# The three Elodea species sit together in one concept.
elodea = lat.concepts[lat.index_of_extent(["ELOC", "ELOE", "ELON"])]
print("\nElodea concept intent:", elodea.intent)

# %% Hasse diagram; render with `dot -Tsvg size.dot -o size.svg`
with open("size.dot", "w") as fh:
    fh.write(export_dot(lat))
print("wrote size.dot")
