"""Built-in catalog: presentation files, parameterized families and derived data."""
from .builtin import (
    Bundle,
    Catalog,
    anyonic_text,
    bichar_parameters,
    derive_glq2_rmatrix,
    group_bichar_text,
    load_builtin,
    pair_braiding,
)
from .config import DEFAULT_CATALOG_DIR, SessionConfig
from .loader import PresFile, PresReader, parse_pres_text, read_pres_file
from .rmatrix import check_anchors, derive_rmatrix, solve_matrix_antipode

__all__ = [
    "Bundle",
    "Catalog",
    "DEFAULT_CATALOG_DIR",
    "PresFile",
    "PresReader",
    "SessionConfig",
    "anyonic_text",
    "bichar_parameters",
    "check_anchors",
    "derive_glq2_rmatrix",
    "derive_rmatrix",
    "group_bichar_text",
    "load_builtin",
    "pair_braiding",
    "parse_pres_text",
    "read_pres_file",
    "solve_matrix_antipode",
]
