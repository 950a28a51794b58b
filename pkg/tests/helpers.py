"""Parsing shorthands for expected values."""
from src.freealg.expr import PolyEvaluator
from src.freealg.ncpoly import NCPoly


def poly(pres, text):
    return NCPoly.parse(pres, text)


def tensor(slots, text):
    """Normal-form tensor terms over the given slots, e.g. `x%a + y%c`."""
    return PolyEvaluator(slots[0].ctx, list(slots)).tensor_terms(text, len(slots))
