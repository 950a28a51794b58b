"""Tensor elements: linear combinations of tuples of normal words."""
from typing import Callable, Dict, Iterator, Mapping, Sequence, Tuple

from src.errors import AlphabetMismatch
from src.freealg.ncpoly import NCPoly
from src.freealg.presentation import Presentation
from src.freealg.printing import format_linear
from src.freealg.terms import Word, accumulate, add_into, scaled, tuple_key
from src.scalar.field import Scalar

Key = Tuple[Word, ...]
TensorTerms = Dict[Key, Scalar]


def _expand(parts: Sequence[Mapping[Word, Scalar]], coeff: Scalar) -> TensorTerms:
    """Outer product of per-slot linear combinations."""
    result: TensorTerms = {(): coeff}
    for part in parts:
        following: TensorTerms = {}
        for prefix, c in result.items():
            for w, wc in part.items():
                accumulate(following, prefix + (w,), c * wc)
        result = following
    return result


class TensorElem:
    """An element of P1 ⊗ ... ⊗ Pn with every slot in normal form."""

    __slots__ = ("slots", "terms")

    def __init__(self, slots: Sequence[Presentation], terms: Mapping[Key, Scalar]):
        self.slots: Tuple[Presentation, ...] = tuple(slots)
        self.terms: TensorTerms = {k: c for k, c in terms.items() if c}

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def build(cls, slots: Sequence[Presentation], terms: Mapping[Key, Scalar]) -> "TensorElem":
        """Reduce each slot of possibly unreduced keys."""
        result: TensorTerms = {}
        for key, coeff in terms.items():
            parts = [pres.reduce_word(w) for pres, w in zip(slots, key)]
            add_into(result, _expand(parts, coeff))
        return cls(slots, result)

    @classmethod
    def pure(cls, slots: Sequence[Presentation], words: Key, coeff: Scalar = None) -> "TensorElem":
        coeff = slots[0].ctx.one if coeff is None else coeff
        return cls.build(slots, {tuple(words): coeff})

    @classmethod
    def zero(cls, slots: Sequence[Presentation]) -> "TensorElem":
        return cls(slots, {})

    @classmethod
    def unit(cls, slots: Sequence[Presentation]) -> "TensorElem":
        return cls(slots, {((),) * len(slots): slots[0].ctx.one})

    @classmethod
    def from_poly(cls, poly: NCPoly) -> "TensorElem":
        return cls((poly.pres,), {(w,): c for w, c in poly.terms.items()})

    # -- structure ------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.slots)

    @property
    def ctx(self):
        return self.slots[0].ctx

    def _check(self, other: "TensorElem") -> None:
        if len(self.slots) != len(other.slots) or not all(
            a.compatible(b) for a, b in zip(self.slots, other.slots)
        ):
            raise AlphabetMismatch(
                f"tensor slots differ: {[p.name for p in self.slots]} vs {[p.name for p in other.slots]}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Key, Scalar]]:
        for key in sorted(self.terms, key=tuple_key):
            yield key, self.terms[key]

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, *words: Word) -> Scalar:
        return self.terms.get(tuple(words), self.ctx.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElem):
            return NotImplemented
        return (
            len(self.slots) == len(other.slots)
            and all(a.compatible(b) for a, b in zip(self.slots, other.slots))
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((tuple(p.signature for p in self.slots), frozenset(self.terms.items())))

    # -- linear structure ---------------------------------------------------------------

    def __add__(self, other: "TensorElem") -> "TensorElem":
        self._check(other)
        result = dict(self.terms)
        add_into(result, other.terms)
        return TensorElem(self.slots, result)

    def __neg__(self) -> "TensorElem":
        return TensorElem(self.slots, scaled(self.terms, -self.ctx.one))

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        return self + (-other)

    def scale(self, factor) -> "TensorElem":
        return TensorElem(self.slots, scaled(self.terms, self.ctx.scalar(factor)))

    def __rmul__(self, factor) -> "TensorElem":
        if isinstance(factor, (int, Scalar)):
            return self.scale(factor)
        return NotImplemented

    # -- products ---------------------------------------------------------------------

    def __mul__(self, other):
        """Componentwise product (the algebra structure of P1 ⊗ ... ⊗ Pn)."""
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        self._check(other)
        result: TensorTerms = {}
        for lk, lc in self.terms.items():
            for rk, rc in other.terms.items():
                parts = [pres.multiply_words(a, b) for pres, a, b in zip(self.slots, lk, rk)]
                add_into(result, _expand(parts, lc * rc))
        return TensorElem(self.slots, result)

    def __matmul__(self, other: "TensorElem") -> "TensorElem":
        """Outer product, concatenating slots."""
        result: TensorTerms = {}
        for lk, lc in self.terms.items():
            for rk, rc in other.terms.items():
                accumulate(result, lk + rk, lc * rc)
        return TensorElem(self.slots + other.slots, result)

    # -- slot operations ---------------------------------------------------------------

    def map_slot(self, index: int, func: Callable[[Word], Mapping[Word, Scalar]], pres: Presentation = None) -> "TensorElem":
        """Apply a linear map to one slot; func returns normal-form terms."""
        slots = list(self.slots)
        if pres is not None:
            slots[index] = pres
        result: TensorTerms = {}
        for key, coeff in self.terms.items():
            for w, c in func(key[index]).items():
                accumulate(result, key[:index] + (w,) + key[index + 1:], coeff * c)
        return TensorElem(slots, result)

    def expand_slot(
        self,
        index: int,
        func: Callable[[Word], Mapping[Key, Scalar]],
        new_slots: Sequence[Presentation],
    ) -> "TensorElem":
        """Replace one slot by several, e.g. applying a coproduct to it."""
        slots = list(self.slots[:index]) + list(new_slots) + list(self.slots[index + 1:])
        result: TensorTerms = {}
        for key, coeff in self.terms.items():
            for sub, c in func(key[index]).items():
                accumulate(result, key[:index] + tuple(sub) + key[index + 1:], coeff * c)
        return TensorElem(slots, result)

    def contract_slots(self, indices: Sequence[int], func: Callable[..., Scalar]) -> "TensorElem":
        """Remove the given slots, multiplying by func(words at those slots)."""
        keep = [i for i in range(self.rank) if i not in indices]
        result: TensorTerms = {}
        for key, coeff in self.terms.items():
            value = func(*(key[i] for i in indices))
            if value:
                accumulate(result, tuple(key[i] for i in keep), coeff * value)
        return TensorElem([self.slots[i] for i in keep], result)

    def contract(self, i: int, j: int, func: Callable[[Word, Word], Scalar]) -> "TensorElem":
        return self.contract_slots((i, j), func)

    def permute(self, order: Sequence[int]) -> "TensorElem":
        """New slot k holds old slot order[k]."""
        result = {tuple(key[i] for i in order): c for key, c in self.terms.items()}
        return TensorElem([self.slots[i] for i in order], result)

    def swap(self) -> "TensorElem":
        return self.permute(list(range(self.rank))[::-1])

    def merge_slots(self, i: int, j: int, pres: Presentation = None) -> "TensorElem":
        """Multiply slot i by slot j (in that order) into slot min(i, j)."""
        target = pres or self.slots[i]
        low, high = min(i, j), max(i, j)
        slots = [s for k, s in enumerate(self.slots) if k != high]
        slots[low] = target
        result: TensorTerms = {}
        for key, coeff in self.terms.items():
            product = target.multiply(target.reduce_word(key[i]), {key[j]: target.ctx.one})
            rest = [w for k, w in enumerate(key) if k != high]
            for w, c in product.items():
                rest[low] = w
                accumulate(result, tuple(rest), coeff * c)
        return TensorElem(slots, result)

    def to_poly(self) -> NCPoly:
        if self.rank != 1:
            raise AlphabetMismatch(f"rank-{self.rank} tensor is not a polynomial")
        return NCPoly(self.slots[0], {k[0]: c for k, c in self.terms.items()}, reduced=True)

    def scalar_value(self) -> Scalar:
        """The coefficient of 1⊗...⊗1, for elements known to be scalar multiples of it."""
        return self.terms.get(((),) * self.rank, self.ctx.zero)

    # -- printing ---------------------------------------------------------------------

    def format(self, separator: str = "⊗") -> str:
        def render(key: Key) -> str:
            words = [pres.word_text(w) for pres, w in zip(self.slots, key)]
            if all(w == "1" for w in words) and self.rank == 1:
                return "1"
            return separator.join(words)

        return format_linear(self.terms, render, key=tuple_key)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"TensorElem[{'⊗'.join(p.name for p in self.slots)}]({self})"
