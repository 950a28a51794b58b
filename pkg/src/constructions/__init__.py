"""Transmutation, bosonisation, twisting, crossed modules and the automorphism braided group."""
from .automorphism import AutomorphismBraidedGroup, automorphism_braided_group
from .bosonisation import (
    CrossProductBuilder,
    bosonise_comodule,
    bosonise_left_comodule,
    bosonise_module,
    bosonise_right_module,
    cross_relation_table,
    merge_presentations,
)
from .crossed import (
    CrossedModule,
    ImageCheckResult,
    LedgerResult,
    associativity_ledger,
    biproduct,
    check_induced_image,
    compare_models,
    induce_crossed_module,
    regular_adjoint_module,
)
from .models import StructureConstantModel
from .transmutation import ReconciliationResult, TransmutationReconciler, TransmutedAlgebra, transmute
from .twisting import (
    ColourDecomposition,
    ColourTwistResult,
    NoDecomposition,
    TwistedBraidedModel,
    TwistedDQS,
    colour_enveloping_check,
    colour_sqrt_decompose,
    colour_twist,
    exponent_table,
    twist_braided,
    twisted_braiding,
)

__all__ = [
    "AutomorphismBraidedGroup",
    "ColourDecomposition",
    "ColourTwistResult",
    "CrossProductBuilder",
    "CrossedModule",
    "ImageCheckResult",
    "LedgerResult",
    "NoDecomposition",
    "ReconciliationResult",
    "StructureConstantModel",
    "TransmutationReconciler",
    "TransmutedAlgebra",
    "TwistedBraidedModel",
    "TwistedDQS",
    "associativity_ledger",
    "automorphism_braided_group",
    "biproduct",
    "bosonise_comodule",
    "bosonise_left_comodule",
    "bosonise_module",
    "bosonise_right_module",
    "check_induced_image",
    "colour_enveloping_check",
    "colour_sqrt_decompose",
    "colour_twist",
    "compare_models",
    "cross_relation_table",
    "exponent_table",
    "induce_crossed_module",
    "merge_presentations",
    "regular_adjoint_module",
    "transmute",
    "twist_braided",
    "twisted_braiding",
]
