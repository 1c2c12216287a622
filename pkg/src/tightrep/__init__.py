"""Tight and cover-to-join representations of finite semilattices and
inverse semigroups: decision procedures, witnesses, and codomain
tightening.
"""

from .lattices import (
    FiniteGenBoolAlg,
    FiniteMeetSemilattice,
    IdealCheck,
    IdealView,
    ValidationError,
    ideal_generated_by,
    is_ideal,
    principal_ideal,
)
from .representations import (
    CoverToJoinWitness,
    NotCoverToJoinError,
    Representation,
    Tightening,
    TightnessReport,
    TightWitness,
    Verdict,
    antichains,
    constrained_interval,
    covers_of,
    is_cover,
    is_cover_to_join,
    is_nondegenerate,
    is_tight,
    restrict_to_generated_ideal,
    tighten,
    tightness_report,
)
from .inverse_semigroups import (
    FiniteInverseSemigroup,
    GbisCheck,
    HomomorphismTightening,
    ISHomomorphism,
    check_homomorphism_tightness,
    is_generalized_boolean_inverse_semigroup,
    tighten_homomorphism,
)
from .enumeration import (
    GapExample,
    UniverseSpec,
    VerificationSummary,
    canonical_meet_table,
    enumerate_representations,
    enumerate_semilattices,
    powerset_algebra,
    search_gap,
    verify_theorems,
)
from .structfile import ParseError, StructureFile, parse, render

__all__ = [
    "CoverToJoinWitness",
    "FiniteGenBoolAlg",
    "FiniteInverseSemigroup",
    "FiniteMeetSemilattice",
    "GapExample",
    "GbisCheck",
    "HomomorphismTightening",
    "IdealCheck",
    "IdealView",
    "ISHomomorphism",
    "NotCoverToJoinError",
    "ParseError",
    "Representation",
    "StructureFile",
    "Tightening",
    "TightnessReport",
    "TightWitness",
    "UniverseSpec",
    "ValidationError",
    "Verdict",
    "VerificationSummary",
    "antichains",
    "canonical_meet_table",
    "check_homomorphism_tightness",
    "constrained_interval",
    "covers_of",
    "enumerate_representations",
    "enumerate_semilattices",
    "ideal_generated_by",
    "is_cover",
    "is_cover_to_join",
    "is_generalized_boolean_inverse_semigroup",
    "is_ideal",
    "is_nondegenerate",
    "is_tight",
    "parse",
    "powerset_algebra",
    "principal_ideal",
    "render",
    "restrict_to_generated_ideal",
    "search_gap",
    "tighten",
    "tighten_homomorphism",
    "tightness_report",
    "verify_theorems",
]
