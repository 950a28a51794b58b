"""Exact coefficient fields and the shared expression syntax."""
from .field import FieldContext, Scalar, cyclotomic_modulus
from .syntax import parse_expression, parse_scalar, split_identifier

__all__ = [
    "FieldContext",
    "Scalar",
    "cyclotomic_modulus",
    "parse_expression",
    "parse_scalar",
    "split_identifier",
]
