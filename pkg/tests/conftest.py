import random

import pytest

from galois_miner import BinaryContext, ManyValuedContext, Trait, disjunctive_scale, load_table1

TABLE1 = {
    "BERE": (1, 2, 3, 0), "CALO": (0, 1, 2, 2), "ELOC": (0, 2, 3, 1),
    "ELOE": (0, 2, 3, 1), "ELON": (0, 2, 3, 1), "LEMM": (3, 0, 0, 0),
    "MENA": (0, 1, 3, 1), "MYRS": (0, 2, 2, 2), "NASO": (0, 2, 2, 0),
    "NUPL": (0, 0, 1, 3), "PTCO": (0, 0, 3, 0), "PTNO": (0, 0, 2, 3),
    "PTPE": (0, 0, 1, 3), "RANU": (0, 1, 2, 3), "SEFC": (0, 1, 3, 1),
}


@pytest.fixture(scope="session")
def table1():
    return load_table1()


@pytest.fixture(scope="session")
def size_ctx(table1):
    return disjunctive_scale(table1)


def random_binary(rng: random.Random, max_objects=12, max_attrs=10, density=None):
    n = rng.randint(0, max_objects)
    m = rng.randint(0, max_attrs)
    p = density if density is not None else rng.uniform(0.15, 0.85)
    objects = [f"o{i}" for i in range(n)]
    attributes = [f"a{j}" for j in range(m)]
    incidence = {o: {a for a in attributes if rng.random() < p} for o in objects}
    return BinaryContext.from_sets(objects, attributes, incidence), incidence


def random_mvc(rng: random.Random, max_objects=10, max_traits=3, max_modalities=5, max_affinity=3):
    n = rng.randint(1, max_objects)
    traits = [
        Trait(chr(ord("A") + t), tuple(f"m{k}" for k in range(rng.randint(1, max_modalities))))
        for t in range(rng.randint(1, max_traits))
    ]
    width = sum(len(t) for t in traits)
    values = [[rng.randint(0, max_affinity) for _ in range(width)] for _ in range(n)]
    return ManyValuedContext([f"x{i}" for i in range(n)], traits, values, max_affinity)


# -- acceptance report --------------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
