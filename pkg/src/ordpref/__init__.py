"""Derived preference relations for decision problems with partially
ordered outcomes, built from closed submonoids of relation monoids."""

from .relations import (
    BinaryRelation,
    GroundSet,
    GroundSetMismatchError,
    all_relations,
    compose,
    compose_power,
)
from .orders import (
    OrderValidationError,
    OutcomeMap,
    PartialOrder,
    down_set,
    from_comparabilities,
    has_strict_chain,
    longest_chain,
    pointwise_leq,
    product_order,
    pullback,
    strict_part,
    up_set,
)
from .monoids import (
    ClosedMonoid,
    MonoidConstructionError,
    atom_monoid,
    beta_both_monoid,
    closure,
    dictator_monoid,
    filter_monoid,
    idempotent_monoid,
    join,
    meet,
    minimize,
    reflexive_monoid,
    surjective_monoid,
    total_monoid,
    universal_monoid,
    validate_closed_antichain,
    validate_closed_predicate,
)
from .dmp import (
    DMP,
    Morphism,
    MorphismError,
    Preference,
    alpha,
    apply_morphism,
    beta_both_explicit,
    beta_explicit,
    characteristic_sets,
    check_functoriality,
    check_regularity,
    derive,
    dual_beta_explicit,
    dualize,
    is_suitable,
    pareto,
    saddle_points,
    state_preference,
    strict_pareto,
)
from .lattice import (
    MonoidLattice,
    atoms,
    enumerate_exhaustive,
    enumerate_generated,
    export_dot,
    preference_census,
    represent_relation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
