"""Enumeration of closed submonoids and the structure of their lattice.

Exhaustive enumeration is only done for two states: the 16 relations form a
boolean lattice whose up-sets can be sieved directly out of the 2^16 subsets.
For three states the generated mode takes closures of small generator sets
instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .dmp import DMP, Preference, derive
from .monoids import (
    ClosedMonoid,
    atom_monoid,
    beta_both_monoid,
    closure,
    dictator_monoid,
    reflexive_monoid,
    surjective_monoid,
    total_monoid,
    universal_monoid,
)
from .orders import OutcomeMap, PartialOrder
from .relations import (
    BinaryRelation,
    GroundSet,
    GroundSetMismatchError,
    all_relations,
    compose,
)


@dataclass(frozen=True)
class MonoidLattice:
    ground: GroundSet
    elements: tuple[ClosedMonoid, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    atoms: tuple[int, ...]
    dual_atoms: tuple[int, ...]
    least: int
    greatest: int


def _rel_from_id(ground: GroundSet, rel_id: int) -> BinaryRelation:
    # 2x2 relation encoded in 4 bits: bit (2*i + j) is cell (i, j)
    return BinaryRelation(ground, (rel_id & 3, (rel_id >> 2) & 3))


def enumerate_exhaustive(ground: GroundSet) -> MonoidLattice:
    """All closed submonoids on a two-element state set, with lattice data."""
    if ground.size != 2:
        raise ValueError(
            "exhaustive enumeration supports exactly 2 states; "
            "use enumerate_generated for larger sets"
        )
    rels = [_rel_from_id(ground, r) for r in range(16)]
    identity_id = rels.index(BinaryRelation.identity(ground))
    comp = [[rels.index(compose(a, b)) for b in rels] for a in rels]
    # supersets of each relation, as a 16-bit mask over relation ids
    sup_mask = [0] * 16
    for r in range(16):
        for s in range(16):
            if r & ~s == 0:
                sup_mask[r] |= 1 << s
    member_masks = []
    for family in range(1 << 16):
        if not family >> identity_id & 1:
            continue
        ok = True
        f = family
        while f:
            r = (f & -f).bit_length() - 1
            f &= f - 1
            if sup_mask[r] & ~family:
                ok = False
                break
        if not ok:
            continue
        ids = [r for r in range(16) if family >> r & 1]
        if all(family >> comp[a][b] & 1 for a in ids for b in ids):
            member_masks.append(family)
    member_masks.sort(key=lambda m: (m.bit_count(), m))
    elements = []
    for family in member_masks:
        members = [rels[r] for r in range(16) if family >> r & 1]
        elements.append(ClosedMonoid.from_antichain(ground, members))
    return _build_lattice(ground, tuple(elements), member_masks)


def _build_lattice(
    ground: GroundSet,
    elements: tuple[ClosedMonoid, ...],
    masks: Sequence[int],
) -> MonoidLattice:
    n = len(elements)
    below = [
        [i != j and masks[i] & ~masks[j] == 0 for j in range(n)] for i in range(n)
    ]
    edges = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(
                below[i][k] and below[k][j] for k in range(n)
            ):
                edges.append((i, j))
    least = min(range(n), key=lambda i: masks[i].bit_count())
    greatest = max(range(n), key=lambda i: masks[i].bit_count())
    atoms = tuple(sorted(j for i, j in edges if i == least))
    dual_atoms = tuple(sorted(i for i, j in edges if j == greatest))
    return MonoidLattice(
        ground, elements, tuple(sorted(edges)), atoms, dual_atoms, least, greatest
    )


def enumerate_generated(
    ground: GroundSet,
    pool: Iterable[BinaryRelation] | None = None,
    max_generators: int = 1,
    limit: int | None = 100_000,
) -> list[ClosedMonoid]:
    """Closures of all generator subsets up to `max_generators`, deduplicated."""
    pool_rels = list(pool) if pool is not None else list(all_relations(ground))
    seen: dict[tuple, ClosedMonoid] = {}
    base = reflexive_monoid(ground)
    seen[base.min_antichain] = base
    for k in range(1, max_generators + 1):
        for gens in itertools.combinations(pool_rels, k):
            monoid = closure(ground, gens)
            seen.setdefault(monoid.min_antichain, monoid)
            if limit is not None and len(seen) > limit:
                raise RuntimeError(f"generated more than {limit} distinct monoids")
    return sorted(
        seen.values(), key=lambda m: tuple(rel.rows for rel in m.min_antichain)
    )


def atoms(ground: GroundSet) -> list[ClosedMonoid]:
    """The minimal nontrivial closed submonoids, one per state."""
    if ground.size < 2:
        raise ValueError("atoms require at least two states")
    return [atom_monoid(ground, y) for y in ground.labels]


def preference_census(
    game: DMP, lattice: MonoidLattice
) -> list[tuple[Preference, tuple[int, ...]]]:
    """Distinct derived preferences over the lattice elements, each with the
    sorted indices of the monoids inducing it."""
    if lattice.ground != game.states:
        raise GroundSetMismatchError("lattice must live on the game's state set")
    groups: dict[tuple[int, ...], list[int]] = {}
    prefs: dict[tuple[int, ...], Preference] = {}
    for idx, monoid in enumerate(lattice.elements):
        pref = derive(game, monoid)
        groups.setdefault(pref.rel.rows, []).append(idx)
        prefs.setdefault(pref.rel.rows, pref)
    ordered = sorted(groups.items(), key=lambda kv: kv[1][0])
    return [(prefs[rows], tuple(idxs)) for rows, idxs in ordered]


def represent_relation(
    sigma: BinaryRelation,
) -> tuple[PartialOrder, OutcomeMap, OutcomeMap]:
    """Realize any relation on states as a pullback through a partial order.

    Two disjoint copies of the state set are ordered so that the only
    cross-copy comparabilities mirror `sigma`; the identification maps into
    the copies pull the order back to exactly `sigma`.
    """
    states = sigma.ground
    n = states.size
    labels = tuple(f"{y}.1" for y in states.labels) + tuple(
        f"{y}.2" for y in states.labels
    )
    outcome_set = GroundSet(labels)
    pairs = [(i, i) for i in range(2 * n)]
    for i, j in sigma.index_pairs():
        pairs.append((i, n + j))
    order = PartialOrder(
        outcome_set, BinaryRelation.from_index_pairs(outcome_set, pairs)
    )
    phi = OutcomeMap(states, outcome_set, tuple(range(n)))
    psi = OutcomeMap(states, outcome_set, tuple(range(n, 2 * n)))
    return order, phi, psi


def canonical_names(ground: GroundSet) -> list[tuple[str, ClosedMonoid]]:
    """Named monoids in display-precedence order."""
    named: list[tuple[str, ClosedMonoid]] = [
        ("pareto", reflexive_monoid(ground)),
        ("universal", universal_monoid(ground)),
    ]
    for y in ground.labels:
        named.append((f"dictator:{y}", dictator_monoid(ground, y)))
    named.append(("beta", surjective_monoid(ground)))
    named.append(("dual-beta", total_monoid(ground)))
    named.append(("beta-both", beta_both_monoid(ground)))
    if ground.size >= 2:
        for y in ground.labels:
            named.append((f"atom:{y}", atom_monoid(ground, y)))
    return named


def element_labels(lattice: MonoidLattice) -> list[str]:
    """A deterministic display name per lattice element."""
    named = canonical_names(lattice.ground)
    labels = []
    for monoid in lattice.elements:
        for name, candidate in named:
            if monoid == candidate:
                labels.append(name)
                break
        else:
            labels.append(monoid.signature())
    return labels


def export_dot(lattice: MonoidLattice, labels: Sequence[str] | None = None) -> str:
    """Deterministic DOT rendering of the Hasse diagram, edges upward."""
    if labels is None:
        labels = element_labels(lattice)
    lines = ["digraph closed_submonoids {", "  rankdir=BT;"]
    for name in sorted(labels):
        lines.append(f'  "{name}";')
    edge_names = sorted((labels[i], labels[j]) for i, j in lattice.hasse_edges)
    for lo, hi in edge_names:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
