"""Union and intersection lattices over histogram-valued size data.

With the ordinary scalings BERE (1,2,3,0) and CALO (0,1,2,2) share no size
attribute. The histogram connections still relate them: the union intent
bounds both from above, the intersection intent from below.
"""

from galois_miner import (
    enumerate_histogram_concepts,
    histogram_closure,
    intersection_intent,
    load_table1,
    union_intent,
)

mvc = load_table1()
pair = ["BERE", "CALO"]
print("union intent       ", union_intent(pair, mvc))
print("intersection intent", intersection_intent(pair, mvc))
print("union closure of the pair:", ", ".join(histogram_closure(pair, mvc, "union")))
print("intersection closure     :", ", ".join(histogram_closure(pair, mvc, "intersection")))

for mode in ("union", "intersection"):
    concepts = enumerate_histogram_concepts(mvc, mode)
    print(f"\n{len(concepts)} {mode} concepts; those with 2..4 plants:")
    for c in concepts:
        if 2 <= len(c.extent) <= 4:
            print(f"  {c.intent}  {', '.join(c.extent)}")
