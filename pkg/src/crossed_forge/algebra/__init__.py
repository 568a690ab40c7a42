"""Coefficient rings, groups and ring automorphisms."""
from .groups import (
    CyclicGroup,
    DirectProduct,
    Group,
    GroupElem,
    IntegerGroup,
    QuotientGroup,
    SymmetricGroup,
    cyclic_subgroup,
    group_center,
    group_from_params,
    is_normal,
    is_subgroup,
    quotient_group,
)
from .rings import (
    FiniteField,
    FunctionRing,
    IdealQuotientRing,
    LaurentRing,
    MatrixRing,
    ModularRing,
    PolyQuotientRing,
    Ring,
    RingAutomorphism,
    RingElem,
    TruncatedPolyRing,
    annihilator,
    center_of_ring,
    is_ideal,
    is_prime,
    ring_from_params,
    ring_is_commutative,
    zero_divisor_set,
)

__all__ = [
    "CyclicGroup",
    "DirectProduct",
    "FiniteField",
    "FunctionRing",
    "Group",
    "GroupElem",
    "IdealQuotientRing",
    "IntegerGroup",
    "LaurentRing",
    "MatrixRing",
    "ModularRing",
    "PolyQuotientRing",
    "QuotientGroup",
    "Ring",
    "RingAutomorphism",
    "RingElem",
    "SymmetricGroup",
    "TruncatedPolyRing",
    "annihilator",
    "center_of_ring",
    "cyclic_subgroup",
    "group_center",
    "group_from_params",
    "is_ideal",
    "is_normal",
    "is_prime",
    "is_subgroup",
    "quotient_group",
    "ring_from_params",
    "ring_is_commutative",
    "zero_divisor_set",
]
