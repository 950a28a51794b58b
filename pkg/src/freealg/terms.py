"""Sparse linear combinations keyed by words or tuples of words."""
from typing import Dict, Hashable, Iterable, Mapping, Tuple

from src.scalar.field import Scalar

Word = Tuple[int, ...]
Terms = Dict[Hashable, Scalar]


def accumulate(target: Terms, key: Hashable, coeff: Scalar) -> None:
    """Add coeff to target[key] in place, dropping the key when it cancels."""
    if not coeff:
        return
    current = target.get(key)
    if current is None:
        target[key] = coeff
        return
    total = current + coeff
    if total:
        target[key] = total
    else:
        del target[key]


def add_into(target: Terms, source: Mapping, factor: Scalar = None) -> None:
    for key, coeff in source.items():
        accumulate(target, key, coeff if factor is None else coeff * factor)


def scaled(source: Mapping, factor: Scalar) -> Terms:
    if not factor:
        return {}
    if factor.is_one():
        return dict(source)
    return {key: coeff * factor for key, coeff in source.items()}


def combine(parts: Iterable[Tuple[Mapping, Scalar]]) -> Terms:
    """Sum of factor * terms over (terms, factor) pairs."""
    result: Terms = {}
    for source, factor in parts:
        add_into(result, source, factor)
    return result


def word_key(word: Word) -> Tuple[int, Word]:
    """Degree-lexicographic sort key."""
    return (len(word), word)


def tuple_key(words: Tuple[Word, ...]) -> Tuple:
    return tuple(word_key(w) for w in words)
