#!/usr/bin/env python3
"""Enumerate the closed submonoids on two states and print the lattice.

Optionally writes a DOT rendering of the Hasse diagram and, given a game
file, a census of which monoids induce which derived preference.

Usage:
    python3 scripts/explore_lattice.py [--dot out.dot] [--dmp game.dmp]
"""

import argparse
from pathlib import Path

from ordpref.lattice import (
    element_labels,
    enumerate_exhaustive,
    export_dot,
    preference_census,
)
from ordpref.relations import GroundSet
from ordpref.textio import parse_dmp


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dot", help="write the Hasse diagram as DOT")
    parser.add_argument("--dmp", help="also run a derived-preference census on this game")
    args = parser.parse_args()

    lattice = enumerate_exhaustive(GroundSet(("y1", "y2")))
    labels = element_labels(lattice)
    print(f"{len(lattice.elements)} closed submonoids on 2 states")
    for idx, (monoid, label) in enumerate(zip(lattice.elements, labels)):
        members = sum(1 for _ in monoid.members())
        print(f"  {idx:2d}  {label:24s} {members:2d} members, "
              f"antichain size {len(monoid.min_antichain)}")
    print("atoms: " + " ".join(labels[i] for i in lattice.atoms))
    print("dual atoms: " + " ".join(sorted(labels[i] for i in lattice.dual_atoms)))

    if args.dot:
        Path(args.dot).write_text(export_dot(lattice, labels))
        print(f"wrote {args.dot}")

    if args.dmp:
        game = parse_dmp(Path(args.dmp).read_text())
        census = preference_census(game, lattice)
        print(f"\n{len(census)} distinct derived preferences on {args.dmp}:")
        for pref, idxs in census:
            names = ", ".join(labels[i] for i in idxs)
            pairs = " ".join(f"({u},{v})" for u, v in pref.rel.pairs())
            print(f"  {pairs or '(empty)'}\n      from: {names}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
