"""Axiom-checking suites and their reports."""
from .report import CheckRecord, VerifyReport, merge_reports
from .suites import (
    compare_braidings,
    cocycle_residual,
    quasi_commutativity_residual,
    verify_action,
    verify_braided_hopf,
    verify_braiding,
    verify_bundle,
    verify_coaction,
    verify_cocycle,
    verify_confluence,
    verify_crossed_module,
    verify_dqs,
    verify_hopf,
    verify_model,
    verify_quasitriangular,
    verify_reconciliation,
    verify_same_hopf,
    yang_baxter_residual,
)

__all__ = [
    "CheckRecord",
    "VerifyReport",
    "cocycle_residual",
    "compare_braidings",
    "merge_reports",
    "quasi_commutativity_residual",
    "verify_action",
    "verify_braided_hopf",
    "verify_braiding",
    "verify_bundle",
    "verify_coaction",
    "verify_cocycle",
    "verify_confluence",
    "verify_crossed_module",
    "verify_dqs",
    "verify_hopf",
    "verify_model",
    "verify_quasitriangular",
    "verify_reconciliation",
    "verify_same_hopf",
    "yang_baxter_residual",
]
