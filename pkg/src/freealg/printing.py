"""Text rendering of linear combinations, compatible with the expression parser."""
from typing import Callable, Hashable, Mapping, Tuple

from src.freealg.terms import word_key
from src.scalar.field import Scalar


def format_coefficient(coeff: Scalar) -> Tuple[bool, str]:
    """Split a coefficient into (negative, text); text is empty for +-1."""
    if coeff.is_one():
        return False, ""
    if (-coeff).is_one():
        return True, ""
    text = str(coeff)
    if coeff.is_atomic:
        if text.startswith("-"):
            return True, text[1:]
        return False, text
    return False, f"({text})"


def format_linear(
    terms: Mapping[Hashable, Scalar],
    render: Callable[[Hashable], str],
    key: Callable = word_key,
) -> str:
    """Render sum of coeff*basis in increasing monomial order.

    `render` returns "1" for the unit basis element.
    """
    if not terms:
        return "0"
    pieces = []
    for basis in sorted(terms, key=key):
        negative, coeff_text = format_coefficient(terms[basis])
        basis_text = render(basis)
        if basis_text == "1":
            body = coeff_text or "1"
        elif coeff_text:
            body = f"{coeff_text}*{basis_text}"
        else:
            body = basis_text
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
