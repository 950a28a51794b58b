"""Ordinary Hopf algebra structure, tensors and bilinear functionals."""
from .functionals import (
    BilinearForm,
    Cocycle,
    Convolution,
    CounitForm,
    DQSFunctional,
    Functional,
    Law,
    check_convolution_inverse,
    complete_grouplike_entries,
    convolution_failures,
    convolve,
    eval_R,
)
from .hopf_data import HopfData, antipode, coproduct
from .linalg import LinearSolution, solve_linear_system
from .quasitriangular import QuasitriangularElement
from .tensor import TensorElem
from .twist import InnerCheckResult, TwistedAlgebraModel, antipode_square_inner_check, dual_twist_hopf

__all__ = [
    "BilinearForm",
    "Cocycle",
    "Convolution",
    "CounitForm",
    "DQSFunctional",
    "Functional",
    "HopfData",
    "InnerCheckResult",
    "Law",
    "LinearSolution",
    "QuasitriangularElement",
    "TensorElem",
    "TwistedAlgebraModel",
    "antipode",
    "antipode_square_inner_check",
    "check_convolution_inverse",
    "complete_grouplike_entries",
    "convolution_failures",
    "convolve",
    "coproduct",
    "dual_twist_hopf",
    "eval_R",
    "solve_linear_system",
]
