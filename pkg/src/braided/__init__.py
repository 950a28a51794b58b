"""Comodules, modules, braidings and braided Hopf algebras."""
from .braided_hopf import BraidedHopfData, braided_antipode, braided_coproduct
from .braiding import (
    BraidingSource,
    CrossedModuleBraiding,
    ExplicitBraiding,
    LeftComoduleBraiding,
    LeftModuleBraiding,
    RightComoduleBraiding,
    RightModuleBraiding,
    braid,
    braided_mul,
)
from .coaction import (
    Action,
    AdjointAction,
    AdjointCoaction,
    Coaction,
    Direction,
    InducedAction,
    InducedCoaction,
    RegularCoaction,
    TrivialAction,
)

__all__ = [
    "Action",
    "AdjointAction",
    "AdjointCoaction",
    "BraidedHopfData",
    "BraidingSource",
    "Coaction",
    "CrossedModuleBraiding",
    "Direction",
    "ExplicitBraiding",
    "InducedAction",
    "InducedCoaction",
    "LeftComoduleBraiding",
    "LeftModuleBraiding",
    "RegularCoaction",
    "RightComoduleBraiding",
    "RightModuleBraiding",
    "TrivialAction",
    "braid",
    "braided_antipode",
    "braided_coproduct",
    "braided_mul",
]
