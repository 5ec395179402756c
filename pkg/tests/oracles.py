"""Brute-force reference computations, deliberately naive and library-free.

Contexts here are plain ``{object: set(attributes)}`` dicts (binary) or
``{object: tuple(affinities)}`` dicts (histogram).
"""

from itertools import chain, combinations


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def common_attrs(objs, incidence, attributes):
    result = set(attributes)
    for o in objs:
        result &= incidence[o]
    return result


def common_objs(attrs, incidence):
    return {o for o, owned in incidence.items() if set(attrs) <= owned}


def all_concepts(incidence, attributes):
    """Every (extent, intent) pair, found by closing all object subsets."""
    found = set()
    for xs in subsets(incidence):
        intent = common_attrs(xs, incidence, attributes)
        extent = common_objs(intent, incidence)
        found.add((frozenset(extent), frozenset(intent)))
    return found


def valid_implications(incidence, attributes):
    """``P -> closure(P) - P`` for every premise subset ``P``."""
    out = []
    for ps in subsets(attributes):
        closure = common_attrs(common_objs(ps, incidence), incidence, attributes)
        out.append((set(ps), closure - set(ps)))
    return out


def histogram_extents(hist, mode, max_affinity):
    """All closed extents of the union/intersection connection over every subset."""
    objects = list(hist)
    width = len(next(iter(hist.values()))) if hist else 0
    found = set()
    for xs in subsets(objects):
        if mode == "union":
            h = [max((hist[o][k] for o in xs), default=0) for k in range(width)]
            ext = {o for o in objects if all(hist[o][k] <= h[k] for k in range(width))}
        else:
            h = [min((hist[o][k] for o in xs), default=max_affinity) for k in range(width)]
            ext = {o for o in objects if all(hist[o][k] >= h[k] for k in range(width))}
        found.add(frozenset(ext))
    return found
