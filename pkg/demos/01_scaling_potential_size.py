"""Turning (trait, modality, affinity) data into binary contexts.

The bundled dataset gives, for 15 macrophytes, an affinity 0..3 towards
each of the four potential-size classes. We scale it two ways and look at
what each binary table says about the plants.
"""

from galois_miner import (
    LOWHIGH,
    PRESENCE,
    derive_intent,
    disjunctive_scale,
    group_affinities,
    load_table1,
    pattern_scale,
    write_burmeister,
)

mvc = load_table1()
print(mvc)
print("BERE size affinities:", mvc.row("BERE", "S"))

# %% Complete disjunctive table: one attribute per realized (modality, affinity).
# S21 reads "size class 2, affinity 1". Unrealized pairs such as S12 are dropped.
disj = disjunctive_scale(mvc)
print("\ndisjunctive attributes:", " ".join(disj.attributes))
for plant in ("BERE", "CALO", "ELOC"):
    print(f"  {plant}: {' '.join(derive_intent([plant], disj))}")

# %% Pattern table: the whole affinity tuple becomes one attribute.
pat = pattern_scale(mvc)
print(f"\n{len(pat.attributes)} distinct size patterns:", " ".join(pat.attributes))
print("ELOC/ELOE/ELON share", derive_intent(["ELOC", "ELOE", "ELON"], pat))

# %% Coarser patterns by grouping affinities.
for grouping in (PRESENCE, LOWHIGH):
    coarse = pattern_scale(group_affinities(mvc, grouping))
    print(f"{grouping.name:>8}: {len(coarse.attributes)} patterns ->", " ".join(coarse.attributes))

# %% Burmeister export for other FCA tools
print("\n" + write_burmeister(pat)[:60] + "...")
