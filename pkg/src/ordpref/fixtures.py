"""Built-in anomaly corpus: four small games whose alpha-domination
behaviour motivates the whole derived-preference machinery.

The two games with vector payoffs are modeled on explicit finite sub-posets
of the plane containing every realized outcome plus the bound witnesses the
guaranteed-set comparisons need; the componentwise order restricted to those
points decides everything the scenarios assert.
"""

from __future__ import annotations

from .dmp import DMP
from .orders import PartialOrder, from_comparabilities
from .relations import BinaryRelation, GroundSet

FIVE_LATTICE_COMPARABILITIES = [
    ("0", "a"),
    ("0", "b"),
    ("0", "c"),
    ("a", "1"),
    ("b", "1"),
    ("c", "1"),
]


def five_lattice() -> PartialOrder:
    """The bounded 5-element lattice with three incomparable middle elements."""
    ground = GroundSet(("0", "a", "b", "c", "1"))
    return from_comparabilities(ground, FIVE_LATTICE_COMPARABILITIES)


def plane_poset(points: tuple[tuple[int, int], ...]) -> PartialOrder:
    """Componentwise order on a finite set of integer plane points."""
    labels = tuple(f"({p},{q})" for p, q in points)
    ground = GroundSet(labels)
    pairs = [
        (i, j)
        for i, (p1, q1) in enumerate(points)
        for j, (p2, q2) in enumerate(points)
        if p1 <= p2 and q1 <= q2
    ]
    return PartialOrder(ground, BinaryRelation.from_index_pairs(ground, pairs))


def example1() -> DMP:
    """Two strategies, three states over the 5-element lattice; has an
    alpha-greatest strategy and a generalized value but no saddle point."""
    return DMP.from_labels(
        GroundSet(("x1", "x2")),
        GroundSet(("y1", "y2", "y3")),
        five_lattice(),
        {"x1": ("b", "c", "0"), "x2": ("0", "a", "1")},
    )


EXAMPLE2_POINTS = ((0, 0), (1, 1), (2, 1), (1, 3), (4, 0), (0, 5))


def example2() -> DMP:
    """Vector-payoff game whose alpha-greatest strategy flips under the
    p+q convolution; (0,0) and (1,1) are the bound witnesses."""
    return DMP.from_labels(
        GroundSet(("x1", "x2")),
        GroundSet(("y1", "y2")),
        plane_poset(EXAMPLE2_POINTS),
        {"x1": ("(2,1)", "(1,3)"), "x2": ("(4,0)", "(0,5)")},
    )


def example2_morphism() -> tuple[dict[str, str], PartialOrder]:
    """Convolve the vector payoffs by summing the coordinates."""
    chain = GroundSet(("0", "1", "2", "3", "4", "5"))
    order = from_comparabilities(
        chain, [(str(i), str(i + 1)) for i in range(5)]
    )
    mapping = {f"({p},{q})": str(p + q) for p, q in EXAMPLE2_POINTS}
    return mapping, order


EXAMPLE3_POINTS = ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3))


def example3() -> DMP:
    """Two alpha-equivalent strategies, one strictly Pareto-dominating the
    other; (1,1) is the shared lower-bound witness."""
    return DMP.from_labels(
        GroundSet(("x1", "x2")),
        GroundSet(("y1", "y2")),
        plane_poset(EXAMPLE3_POINTS),
        {"x1": ("(2,1)", "(1,2)"), "x2": ("(3,1)", "(1,3)")},
    )


def example4() -> DMP:
    """Three strategies over the 5-element lattice; x1 is alpha-greatest."""
    return DMP.from_labels(
        GroundSet(("x1", "x2", "x3")),
        GroundSet(("y1", "y2")),
        five_lattice(),
        {"x1": ("b", "1"), "x2": ("c", "a"), "x3": ("1", "0")},
    )


def example4_extended() -> DMP:
    """The same game after adding the non-realized outcomes f, g, h below
    parts of the lattice; the alpha-greatest strategy disappears."""
    ground = GroundSet(("0", "a", "b", "c", "1", "f", "g", "h"))
    order = from_comparabilities(
        ground,
        FIVE_LATTICE_COMPARABILITIES
        + [
            ("0", "f"),
            ("0", "g"),
            ("0", "h"),
            ("g", "a"),
            ("g", "c"),
            ("h", "b"),
            ("h", "c"),
        ],
    )
    return DMP.from_labels(
        GroundSet(("x1", "x2", "x3")),
        GroundSet(("y1", "y2")),
        order,
        {"x1": ("b", "1"), "x2": ("c", "a"), "x3": ("1", "0")},
    )
