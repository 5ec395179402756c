import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_miner import (
    LOWHIGH,
    PRESENCE,
    ConfigError,
    ManyValuedContext,
    Trait,
    close_objects,
    disjunctive_scale,
    group_affinities,
    identity_grouping,
    parse_grouping,
    pattern_scale,
)
from galois_miner.scaling import (
    AffinityGrouping,
    ScaledAttribute,
    decode_disjunctive,
    get_grouping,
)

from .conftest import TABLE1, random_mvc

# realized columns of the complete disjunctive table for potential size
TABLE2_COLUMNS = [
    "S10", "S11", "S13", "S20", "S21", "S22",
    "S30", "S31", "S32", "S33", "S40", "S41", "S42", "S43",
]


def expected_row(obj):
    return {f"S{m + 1}{a}" for m, a in enumerate(TABLE1[obj])}


def test_disjunctive_columns(size_ctx):
    assert list(size_ctx.attributes) == TABLE2_COLUMNS


@pytest.mark.parametrize("obj", list(TABLE1))
def test_disjunctive_rows(size_ctx, obj):
    owned = {a for a in size_ctx.attributes if size_ctx.has(obj, a)}
    assert owned == expected_row(obj)


def test_disjunctive_examples(size_ctx):
    assert expected_row("BERE") == {"S11", "S22", "S33", "S40"}
    assert expected_row("CALO") == {"S10", "S21", "S32", "S42"}


def test_full_columns(table1):
    full = disjunctive_scale(table1, full_columns=True)
    assert len(full.attributes) == 16
    assert "S12" in full.attributes and "S23" in full.attributes
    assert full.extent_of(full.attribute_mask(["S12"])) == 0


def test_constant_trait_in_every_intent():
    mvc = ManyValuedContext(
        ["a", "b", "c"],
        [Trait("S", ("m1", "m2")), Trait("C", ("k1",))],
        [[1, 0, 2], [0, 3, 2], [2, 2, 2]],
    )
    ctx = disjunctive_scale(mvc)
    from galois_miner import enumerate_concepts

    for c in enumerate_concepts(ctx):
        assert "C12" in c.intent


def test_pattern_scale(table1):
    ctx = pattern_scale(table1)
    assert ctx.has("BERE", "S1230")
    assert ctx.has("CALO", "S0122")
    for o in ("ELOC", "ELOE", "ELON"):
        assert ctx.has(o, "S0231")
    assert set(close_objects(["ELOC"], ctx)) >= {"ELOE", "ELON"}
    assert all(bin(r).count("1") == 1 for r in ctx.rows)
    assert list(ctx.attributes) == sorted(ctx.attributes)
    # 15 plants, with three shared tuples (ELO*, NUPL/PTPE, MENA/SEFC)
    assert len(ctx.attributes) == len(set(TABLE1.values())) == 11


def test_rendering_fallbacks():
    assert ScaledAttribute("S", 2, 1).name == "S21"
    assert ScaledAttribute("S", 12, 3).name == "S.m12.a3"
    assert ScaledAttribute("S", pattern=(0, 1, 2, 2)).name == "S0122"
    assert ScaledAttribute("S", pattern=(0, 10, 2)).name == "S:0-10-2"
    assert ScaledAttribute("S1", 2, 1).name == "S1.m2.a1"


def test_eight_modality_trait_stays_compact():
    trait = Trait("M", tuple(f"month{k}" for k in range(3, 11)))
    mvc = ManyValuedContext(["a"], [trait], [[0, 1, 2, 3, 3, 2, 1, 0]])
    ctx = disjunctive_scale(mvc)
    assert ctx.attributes[-1] == "M80"
    assert pattern_scale(mvc).attributes == ("M01233210",)


def test_groupings(table1):
    pres = group_affinities(table1, PRESENCE)
    low = group_affinities(table1, LOWHIGH)
    assert pres.row("BERE", "S") == (1, 1, 1, 0)
    assert low.row("BERE", "S") == (0, 1, 1, 0)
    assert pres.max_affinity == low.max_affinity == 1
    assert group_affinities(table1, identity_grouping()) == table1


def test_grouping_parsing():
    g = parse_grouping("coarse=0:0,1:1,2:1,3:2")
    assert g.name == "coarse" and g.as_dict() == {0: 0, 1: 1, 2: 1, 3: 2}
    assert str(g) == "coarse=0:0,1:1,2:1,3:2"
    assert get_grouping("presence") is PRESENCE
    for bad in ("nope", "x=0:0,0:1", "x=a:b", "=0:0"):
        with pytest.raises(ConfigError):
            parse_grouping(bad)


def test_partial_grouping_rejected(table1):
    with pytest.raises(ConfigError, match="does not map"):
        group_affinities(table1, AffinityGrouping.from_dict("half", {0: 0, 1: 1}))


mvcs = st.integers(0, 2**32).map(lambda s: random_mvc(random.Random(s)))


@settings(max_examples=80, deadline=None)
@given(mvcs)
def test_scaling_invariants(mvc):
    ctx = disjunctive_scale(mvc)
    total = sum(len(t) for t in mvc.traits)
    assert all(bin(r).count("1") == total for r in ctx.rows)
    pat = pattern_scale(mvc)
    assert all(bin(r).count("1") == len(mvc.traits) for r in pat.rows)
    for g in (PRESENCE, LOWHIGH):
        assert len(pattern_scale(group_affinities(mvc, g)).attributes) <= len(pat.attributes)
    assert decode_disjunctive(ctx, list(mvc.traits), mvc.max_affinity) == mvc
    names = [a for a in ctx.attributes]
    assert len(set(names)) == len(names)


def test_one_value_per_modality(table1, size_ctx):
    for obj in table1.objects:
        for m in range(4):
            owned = [a for a in size_ctx.attributes if a.startswith(f"S{m + 1}") and size_ctx.has(obj, a)]
            assert len(owned) == 1
