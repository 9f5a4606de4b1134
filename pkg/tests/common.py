"""Shared generators and brute-force oracles for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from ordpref.orders import PartialOrder
from ordpref.relations import BinaryRelation, GroundSet


def ground(n: int) -> GroundSet:
    return GroundSet(tuple(f"y{i + 1}" for i in range(n)))


def relation_strategy(g: GroundSet):
    full = (1 << g.size) - 1
    rows = st.tuples(*([st.integers(0, full)] * g.size))
    return rows.map(lambda r: BinaryRelation(g, r))


def relations_on(sizes=(1, 2, 3)):
    return st.sampled_from([ground(n) for n in sizes]).flatmap(relation_strategy)


def random_partial_order(rng: random.Random, g: GroundSet, density: float = 0.4) -> PartialOrder:
    """Random order built on a shuffled index sequence, so it is always acyclic."""
    perm = list(range(g.size))
    rng.shuffle(perm)
    pairs = [(i, i) for i in range(g.size)]
    for a in range(g.size):
        for b in range(a + 1, g.size):
            if rng.random() < density:
                pairs.append((perm[a], perm[b]))
    rel = BinaryRelation.from_index_pairs(g, pairs).transitive_closure()
    return PartialOrder(g, rel)


# -- set-based oracles, independent of the bitmask implementation -------------


def pair_compose(first: set[tuple], then: set[tuple]) -> set[tuple]:
    """Plain-set relation chase: (a, c) iff some b links first and then."""
    return {(a, c) for a, b in first for b2, c in then if b == b2}


def pair_transitive_closure(pairs: set[tuple]) -> set[tuple]:
    out = set(pairs)
    while True:
        more = pair_compose(out, out) | out
        if more == out:
            return out
        out = more
