"""Galois lattices for many-valued trait data.

Scale (trait, modality, affinity) data into binary contexts, enumerate
concepts, extract implication bases and association rules, and explore the
union/intersection connections on histogram-valued traits.
"""

from .context import (
    BinaryContext,
    Concept,
    ManyValuedContext,
    Trait,
    close_attrs,
    close_objects,
    derive_extent,
    derive_intent,
)
from .errors import ConfigError, GaloisMinerError, InputError, ResourceError
from .histogram import (
    HistogramConcept,
    HistogramVector,
    enumerate_histogram_concepts,
    flip_affinities,
    histogram_closure,
    intersection_extent,
    intersection_intent,
    union_extent,
    union_intent,
)
from .implications import (
    AssociationRule,
    Implication,
    association_rules,
    dg_basis,
    follows,
    implication_holds,
    implication_support,
    render_implication,
    render_rule,
)
from .io import (
    ExportDocument,
    build_document,
    export_dot,
    export_json,
    ingest_csv,
    load_json,
    load_table1,
    parse_csv,
    read_burmeister,
    write_burmeister,
)
from .lattice import (
    ConceptLattice,
    build_lattice,
    build_order,
    concept_levels,
    enumerate_concepts,
    level_count,
)
from .scaling import (
    LOWHIGH,
    PRESENCE,
    AffinityGrouping,
    ScaledAttribute,
    disjunctive_scale,
    group_affinities,
    identity_grouping,
    parse_grouping,
    pattern_scale,
)

__version__ = "0.1.0"
