"""Hopf algebra structure given on generators and extended to words."""
from typing import Dict, List, Mapping, Optional, Union

from src.errors import AlphabetMismatch
from src.freealg.ncpoly import NCPoly
from src.freealg.presentation import Presentation, unit_presentation
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.tensor import Key, TensorElem, TensorTerms
from src.scalar.field import FieldContext, Scalar


class HopfData:
    """Coproduct, counit and antipode tables on the generators of a presentation.

    Δ and ε extend multiplicatively and S anti-multiplicatively to all words,
    reduced or not; whether the tables respect the relations is a verifier
    question, not an assumption made here.
    """

    def __init__(
        self,
        pres: Presentation,
        coproduct: Mapping[int, Mapping[Key, Scalar]],
        counit: Mapping[int, Scalar],
        antipode: Mapping[int, Terms],
        name: Optional[str] = None,
    ):
        self.pres = pres
        self.name = name or pres.name
        self.ctx: FieldContext = pres.ctx
        self.coproduct_table: Dict[int, TensorTerms] = {g: dict(t) for g, t in coproduct.items()}
        self.counit_table: Dict[int, Scalar] = dict(counit)
        self.antipode_table: Dict[int, Terms] = {g: dict(t) for g, t in antipode.items()}
        self._coproduct_memo: Dict[Word, TensorTerms] = {(): {((), ()): self.ctx.one}}
        self._free_memo: Dict[Word, TensorTerms] = {(): {((), ()): self.ctx.one}}
        self._antipode_memo: Dict[Word, Terms] = {(): {(): self.ctx.one}}
        self._iterated_memo: Dict[tuple, TensorTerms] = {}

    @classmethod
    def trivial(cls, ctx: FieldContext, name: str = "k") -> "HopfData":
        """The ground field k as a Hopf algebra."""
        return cls(unit_presentation(ctx, name), {}, {}, {})

    def _word_of(self, element: Union[NCPoly, Word]) -> Terms:
        if isinstance(element, NCPoly):
            if not self.pres.compatible(element.pres):
                raise AlphabetMismatch(f"{element.pres.name} element passed to {self.name}")
            return element.terms
        return {tuple(element): self.ctx.one}

    # -- coproduct ----------------------------------------------------------------------

    def coproduct_word(self, word: Word) -> TensorTerms:
        cached = self._coproduct_memo.get(word)
        if cached is not None:
            return cached
        head = self.coproduct_word(word[:-1])
        last = self.coproduct_table[word[-1]]
        result: TensorTerms = {}
        for (a1, a2), c1 in head.items():
            for (b1, b2), c2 in last.items():
                left = self.pres.multiply_words(a1, b1)
                right = self.pres.multiply_words(a2, b2)
                coeff = c1 * c2
                for w1, d1 in left.items():
                    for w2, d2 in right.items():
                        accumulate(result, (w1, w2), coeff * d1 * d2)
        self._coproduct_memo[word] = result
        return result

    def free_coproduct_word(self, word: Word) -> TensorTerms:
        """Δ of a word multiplied out in the free algebra; legs are never rewritten."""
        cached = self._free_memo.get(word)
        if cached is not None:
            return cached
        result: TensorTerms = {}
        for (a1, a2), c1 in self.free_coproduct_word(word[:-1]).items():
            for (b1, b2), c2 in self.coproduct_table[word[-1]].items():
                accumulate(result, (a1 + b1, a2 + b2), c1 * c2)
        self._free_memo[word] = result
        return result

    def coproduct(self, element: Union[NCPoly, Word]) -> TensorElem:
        result: TensorTerms = {}
        for word, coeff in self._word_of(element).items():
            add_into(result, self.coproduct_word(word), coeff)
        return TensorElem((self.pres, self.pres), result)

    def iterated_coproduct_word(self, word: Word, legs: int) -> TensorTerms:
        """Right-nested (id⊗...⊗Δ)...(id⊗Δ)Δ with the given number of legs."""
        if legs == 1:
            return {(w,): c for w, c in self.pres.reduce_word(word).items()}
        if legs == 2:
            return self.coproduct_word(word)
        key = (word, legs)
        cached = self._iterated_memo.get(key)
        if cached is not None:
            return cached
        result: TensorTerms = {}
        for (first, rest), coeff in self.coproduct_word(word).items():
            for tail, c in self.iterated_coproduct_word(rest, legs - 1).items():
                accumulate(result, (first,) + tail, coeff * c)
        self._iterated_memo[key] = result
        return result

    def iterated_coproduct(self, element: Union[NCPoly, Word], legs: int) -> TensorElem:
        result: TensorTerms = {}
        for word, coeff in self._word_of(element).items():
            add_into(result, self.iterated_coproduct_word(word, legs), coeff)
        return TensorElem((self.pres,) * legs, result)

    # -- counit -----------------------------------------------------------------------

    def counit_word(self, word: Word) -> Scalar:
        value = self.ctx.one
        for letter in word:
            value = value * self.counit_table[letter]
            if not value:
                break
        return value

    def counit(self, element: Union[NCPoly, Word]) -> Scalar:
        total = self.ctx.zero
        for word, coeff in self._word_of(element).items():
            total = total + coeff * self.counit_word(word)
        return total

    # -- antipode ---------------------------------------------------------------------

    def antipode_word(self, word: Word) -> Terms:
        cached = self._antipode_memo.get(word)
        if cached is not None:
            return cached
        last = self.antipode_table[word[-1]]
        result = self.pres.multiply(self.pres.normal_form(last), self.antipode_word(word[:-1]))
        self._antipode_memo[word] = result
        return result

    def antipode_terms(self, terms: Mapping[Word, Scalar]) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            add_into(result, self.antipode_word(word), coeff)
        return result

    def antipode(self, element: Union[NCPoly, Word]) -> NCPoly:
        return NCPoly(self.pres, self.antipode_terms(self._word_of(element)), reduced=True)

    # -- bases ----------------------------------------------------------------------

    def basis(self, limit: int = 64) -> Optional[List[Word]]:
        return self.pres.basis(limit)

    def words_up_to(self, bound: int) -> List[Word]:
        return self.pres.words_up_to(bound)

    def __repr__(self) -> str:
        return f"HopfData({self.name})"


def coproduct(h: NCPoly, hopf: HopfData) -> TensorElem:
    return hopf.coproduct(h)


def antipode(h: NCPoly, hopf: HopfData) -> NCPoly:
    return hopf.antipode(h)
