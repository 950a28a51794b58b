"""Noncommutative polynomials, presentations and rewriting."""
from .confluence import ConfluenceReport, OverlapRecord, check_confluence, path_disagreements
from .expr import PolyEvaluator, parse_poly
from .ncpoly import NCPoly, nc_mul, normal_form
from .presentation import Presentation, free_presentation, unit_presentation
from .terms import Terms, Word

__all__ = [
    "ConfluenceReport",
    "NCPoly",
    "OverlapRecord",
    "PolyEvaluator",
    "Presentation",
    "Terms",
    "Word",
    "check_confluence",
    "free_presentation",
    "nc_mul",
    "normal_form",
    "parse_poly",
    "path_disagreements",
    "unit_presentation",
]
