import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_miner import (
    ConfigError,
    HistogramVector,
    InputError,
    ManyValuedContext,
    ResourceError,
    Trait,
    enumerate_histogram_concepts,
    flip_affinities,
    histogram_closure,
    intersection_extent,
    intersection_intent,
    union_extent,
    union_intent,
)

from . import oracles
from .conftest import TABLE1, random_mvc

# brute force over all 2**15 object subsets of the potential-size data
K_UNION = 38
K_INTERSECTION = 25


def size(mvc, values):
    return HistogramVector.from_traits(mvc, {"S": values})


def test_worked_example(table1):
    assert union_intent(["BERE", "CALO"], table1).per_trait()["S"] == (1, 2, 3, 2)
    assert intersection_intent(["BERE", "CALO"], table1).per_trait()["S"] == (0, 1, 2, 0)
    assert str(union_intent(["BERE", "CALO"], table1)) == "S:[1,2,3,2]"


def test_intents(table1):
    assert union_intent(["BERE"], table1).values == (1, 2, 3, 0)
    assert intersection_intent(["BERE"], table1).values == (1, 2, 3, 0)
    assert union_intent(["LEMM", "NUPL"], table1).values == (3, 0, 1, 3)
    assert intersection_intent(["LEMM", "NUPL"], table1).values == (0, 0, 0, 0)
    assert union_intent([], table1).values == (0, 0, 0, 0)
    assert intersection_intent([], table1).values == (3, 3, 3, 3)
    with pytest.raises(InputError):
        union_intent(["NOPE"], table1)


def _scan(pred):
    return {o for o, row in TABLE1.items() if pred(row)}


def test_union_extent(table1):
    h = (1, 2, 3, 2)
    expected = _scan(lambda r: all(a <= b for a, b in zip(r, h)))
    got = set(union_extent(size(table1, h), table1))
    assert got == expected == {
        "BERE", "CALO", "ELOC", "ELOE", "ELON", "MENA", "MYRS", "NASO", "PTCO", "SEFC",
    }
    assert union_extent(size(table1, (3, 3, 3, 3)), table1) == table1.objects
    assert union_extent(size(table1, (0, 0, 0, 0)), table1) == ()


def test_intersection_extent(table1):
    h = (0, 1, 2, 0)
    expected = _scan(lambda r: all(a >= b for a, b in zip(r, h)))
    got = set(intersection_extent(size(table1, h), table1))
    assert got == expected == {
        "BERE", "CALO", "ELOC", "ELOE", "ELON", "MENA", "MYRS", "NASO", "RANU", "SEFC",
    }
    assert intersection_extent(size(table1, (0, 0, 0, 0)), table1) == table1.objects
    assert intersection_extent(size(table1, (3, 3, 3, 3)), table1) == ()


def test_shape_mismatch(table1):
    other = ManyValuedContext(["a"], [Trait("S", ("m1", "m2"))], [[1, 2]])
    with pytest.raises(InputError):
        union_extent(union_intent(["a"], other), table1)
    with pytest.raises(InputError):
        HistogramVector.for_context(table1, [1, 2])


@pytest.mark.parametrize("mode,expected", [("union", K_UNION), ("intersection", K_INTERSECTION)])
def test_concept_counts(table1, mode, expected):
    assert len(oracles.histogram_extents(TABLE1, mode, 3)) == expected
    concepts = enumerate_histogram_concepts(table1, mode)
    assert len(concepts) == expected
    extents = [frozenset(c.extent) for c in concepts]
    assert set(extents) == oracles.histogram_extents(TABLE1, mode, 3)
    for c in concepts:
        elodea = {"ELOC", "ELOE", "ELON"} & set(c.extent)
        assert len(elodea) in (0, 3)


def test_order_and_no_slack(table1):
    concepts = enumerate_histogram_concepts(table1, "union")
    sizes = [len(c.extent) for c in concepts]
    assert sizes == sorted(sizes, reverse=True)
    for c in concepts:
        assert c.mode == "union"
        if c.extent:
            rows = np.array([TABLE1[o] for o in c.extent])
            assert c.intent.values == tuple(rows.max(axis=0))
        assert union_extent(c.intent, table1) == c.extent


def test_extensive_on_example(table1):
    assert {"BERE", "CALO"} <= set(histogram_closure(["BERE", "CALO"], table1, "union"))


def test_bad_mode_and_guard(table1):
    with pytest.raises(ConfigError):
        enumerate_histogram_concepts(table1, "both")
    with pytest.raises(ResourceError):
        enumerate_histogram_concepts(table1, "union", max_concepts=5)


mvcs = st.integers(0, 2**32).map(lambda s: random_mvc(random.Random(s), max_objects=8))


@settings(max_examples=60, deadline=None)
@given(mvcs, st.integers(0, 2**32))
def test_adjunctions(mvc, seed):
    rng = random.Random(seed)
    for _ in range(10):
        xs = [o for o in mvc.objects if rng.random() < 0.5]
        h = HistogramVector.for_context(
            mvc, [rng.randint(0, mvc.max_affinity) for _ in range(mvc.values.shape[1])]
        )
        u = union_intent(xs, mvc).array()
        i = intersection_intent(xs, mvc).array()
        assert (set(xs) <= set(union_extent(h, mvc))) == bool((u <= h.array()).all())
        assert (set(xs) <= set(intersection_extent(h, mvc))) == bool((i >= h.array()).all())


@settings(max_examples=40, deadline=None)
@given(mvcs)
def test_duality(mvc):
    inter = {frozenset(c.extent) for c in enumerate_histogram_concepts(mvc, "intersection")}
    union = {frozenset(c.extent) for c in enumerate_histogram_concepts(flip_affinities(mvc), "union")}
    assert inter == union
