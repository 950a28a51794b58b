"""Structure-constant models: algebras known only through a product on basis keys."""
import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.freealg.presentation import Presentation
from src.freealg.printing import format_linear
from src.freealg.terms import add_into, tuple_key
from src.hopf.tensor import Key, TensorElem, TensorTerms
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)

KeyProduct = Callable[[Key, Key], TensorTerms]


class StructureConstantModel:
    """A product (and optionally coproduct and counit) tabulated on basis keys.

    Keys are tuples of normal words, one per slot, so a model can live on H
    (one slot) or on a tensor product such as B(H,H)⊗B (two slots). Products are
    computed lazily and memoized; `table()` materializes everything within the
    degree window.
    """

    def __init__(
        self,
        name: str,
        slots: Sequence[Presentation],
        basis: Iterable[Key],
        degree_bound: int,
        product: KeyProduct,
        coproduct: Optional[Callable[[Key], Dict[Tuple[Key, Key], Scalar]]] = None,
        counit: Optional[Callable[[Key], Scalar]] = None,
    ):
        self.name = name
        self.slots: Tuple[Presentation, ...] = tuple(slots)
        self.basis: List[Key] = sorted(basis, key=tuple_key)
        self.degree_bound = degree_bound
        self._product = product
        self._coproduct = coproduct
        self._counit = counit
        self._memo: Dict[Tuple[Key, Key], TensorTerms] = {}

    @property
    def ctx(self):
        return self.slots[0].ctx

    @staticmethod
    def degree(key: Key) -> int:
        return sum(len(w) for w in key)

    @property
    def unit(self) -> Key:
        return ((),) * len(self.slots)

    def mul_keys(self, left: Key, right: Key) -> TensorTerms:
        pair = (left, right)
        cached = self._memo.get(pair)
        if cached is None:
            cached = self._product(left, right)
            self._memo[pair] = cached
        return cached

    def mul(self, left: TensorTerms, right: TensorTerms) -> TensorTerms:
        result: TensorTerms = {}
        for lk, lc in left.items():
            for rk, rc in right.items():
                add_into(result, self.mul_keys(lk, rk), lc * rc)
        return result

    def product(self, *keys: Key) -> TensorTerms:
        """Left-nested product of several keys."""
        result: TensorTerms = {self.unit: self.ctx.one}
        for key in keys:
            result = self.mul(result, {key: self.ctx.one})
        return result

    def element(self, terms: TensorTerms) -> TensorElem:
        return TensorElem(self.slots, terms)

    def table(self) -> Dict[Tuple[Key, Key], TensorTerms]:
        entries = {}
        for left in self.basis:
            for right in self.basis:
                if self.degree(left) + self.degree(right) <= self.degree_bound:
                    entries[(left, right)] = self.mul_keys(left, right)
        logger.debug("%s: %d product entries", self.name, len(entries))
        return entries

    def coproduct_key(self, key: Key) -> Dict[Tuple[Key, Key], Scalar]:
        if self._coproduct is None:
            raise NotImplementedError(f"{self.name} carries no coproduct")
        return self._coproduct(key)

    def counit_key(self, key: Key) -> Scalar:
        if self._counit is None:
            raise NotImplementedError(f"{self.name} carries no counit")
        return self._counit(key)

    def associativity_failures(self, bound: Optional[int] = None) -> List[Tuple[Key, Key, Key]]:
        bound = self.degree_bound if bound is None else bound
        failures = []
        for a in self.basis:
            for b in self.basis:
                if self.degree(a) + self.degree(b) > bound:
                    continue
                ab = self.mul_keys(a, b)
                for c in self.basis:
                    if self.degree(a) + self.degree(b) + self.degree(c) > bound:
                        continue
                    left = self.mul(ab, {c: self.ctx.one})
                    right = self.mul({a: self.ctx.one}, self.mul_keys(b, c))
                    if left != right:
                        failures.append((a, b, c))
        return failures

    def format_key(self, key: Key, separator: str = "⊗") -> str:
        return separator.join(pres.word_text(w) for pres, w in zip(self.slots, key))

    def format(self, terms: TensorTerms) -> str:
        return format_linear(terms, self.format_key, key=tuple_key)

    def __repr__(self) -> str:
        return f"StructureConstantModel({self.name}, {len(self.basis)} keys, degree <= {self.degree_bound})"
