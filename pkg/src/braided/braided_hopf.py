"""Braided Hopf algebras: coproduct and antipode extended through the braiding."""
from typing import Dict, Mapping, Optional, Tuple, Union

from src.errors import AlphabetMismatch
from src.freealg.ncpoly import NCPoly
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, add_into
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import TensorElem, TensorTerms
from src.scalar.field import Scalar
from src.braided.braiding import BraidingSource, braided_mul
from src.braided.coaction import Action, Coaction


class BraidedHopfData:
    """A Hopf algebra in a braided category of (co)modules.

    Δ̲ is extended as an algebra map into B⊗̲B, and S̲ by braided
    antimultiplicativity S̲(bc) = ·Ψ(S̲b⊗S̲c).
    """

    def __init__(
        self,
        pres: Presentation,
        coproduct: Mapping[int, Mapping[Tuple[Word, Word], Scalar]],
        counit: Mapping[int, Scalar],
        antipode: Mapping[int, Terms],
        source: BraidingSource,
        host: Optional[HopfData] = None,
        coaction: Optional[Coaction] = None,
        action: Optional[Action] = None,
        name: Optional[str] = None,
    ):
        self.pres = pres
        self.name = name or pres.name
        self.ctx = pres.ctx
        self.coproduct_table: Dict[int, TensorTerms] = {g: dict(t) for g, t in coproduct.items()}
        self.counit_table: Dict[int, Scalar] = dict(counit)
        self.antipode_table: Dict[int, Terms] = {g: dict(t) for g, t in antipode.items()}
        self.source = source
        self.host = host
        self.coaction = coaction
        self.action = action
        self._coproduct_memo: Dict[Word, TensorTerms] = {(): {((), ()): self.ctx.one}}
        self._antipode_memo: Dict[Word, Terms] = {(): {(): self.ctx.one}}

    @property
    def slots(self) -> Tuple[Presentation, Presentation]:
        return (self.pres, self.pres)

    def with_source(self, source: BraidingSource) -> "BraidedHopfData":
        """Same tables, different braiding (used to test alternative braidings)."""
        return BraidedHopfData(
            self.pres, self.coproduct_table, self.counit_table, self.antipode_table,
            source, self.host, self.coaction, self.action, self.name,
        )

    def _terms(self, element: Union[NCPoly, Word]) -> Mapping[Word, Scalar]:
        if isinstance(element, NCPoly):
            if not self.pres.compatible(element.pres):
                raise AlphabetMismatch(f"{element.pres.name} element passed to {self.name}")
            return element.terms
        return {tuple(element): self.ctx.one}

    # -- coproduct -------------------------------------------------------------------

    def braided_product(self, left: TensorTerms, right: TensorTerms) -> TensorTerms:
        return braided_mul(TensorElem(self.slots, left), TensorElem(self.slots, right), self.source).terms

    def coproduct_word(self, word: Word) -> TensorTerms:
        cached = self._coproduct_memo.get(word)
        if cached is not None:
            return cached
        result = self.braided_product(self.coproduct_word(word[:-1]), self.coproduct_table[word[-1]])
        self._coproduct_memo[word] = result
        return result

    def coproduct(self, element) -> TensorElem:
        result: TensorTerms = {}
        for word, coeff in self._terms(element).items():
            add_into(result, self.coproduct_word(word), coeff)
        return TensorElem(self.slots, result)

    def counit_word(self, word: Word) -> Scalar:
        value = self.ctx.one
        for letter in word:
            value = value * self.counit_table[letter]
            if not value:
                break
        return value

    def counit(self, element) -> Scalar:
        total = self.ctx.zero
        for word, coeff in self._terms(element).items():
            total = total + coeff * self.counit_word(word)
        return total

    # -- antipode --------------------------------------------------------------------

    def braided_anti_product(self, left: Terms, right: Terms) -> Terms:
        """·Ψ(left⊗right)."""
        result: Terms = {}
        for (a, b), coeff in self.source.braid_terms(left, right).items():
            add_into(result, self.pres.multiply_words(a, b), coeff)
        return result

    def antipode_word(self, word: Word) -> Terms:
        cached = self._antipode_memo.get(word)
        if cached is not None:
            return cached
        last = self.pres.normal_form(self.antipode_table[word[-1]])
        if len(word) == 1:
            result = last
        else:
            result = self.braided_anti_product(self.antipode_word(word[:-1]), last)
        self._antipode_memo[word] = result
        return result

    def antipode_terms(self, terms: Mapping[Word, Scalar]) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            add_into(result, self.antipode_word(word), coeff)
        return result

    def antipode(self, element) -> NCPoly:
        return NCPoly(self.pres, self.antipode_terms(self._terms(element)), reduced=True)

    def words_up_to(self, bound: int):
        return self.pres.words_up_to(bound)

    def __repr__(self) -> str:
        return f"BraidedHopfData({self.name}, {self.source.kind})"


def braided_coproduct(b, bundle: BraidedHopfData) -> TensorElem:
    return bundle.coproduct(b)


def braided_antipode(b, bundle: BraidedHopfData) -> NCPoly:
    return bundle.antipode(b)


def coaction_antipode_product(bundle: BraidedHopfData, b: Word, c: Word, R) -> Terms:
    """Right-comodule form of S̲(bc): (S̲c⁽¹⁾)(S̲b⁽¹⁾)R(b⁽²⁾⊗c⁽²⁾)."""
    coaction = bundle.coaction
    result: Terms = {}
    c_legs = list(coaction.split(c))
    for b1, b2, bc in coaction.split(b):
        sb = bundle.antipode_word(b1)
        for c1, c2, cc in c_legs:
            value = R.evaluate_words(b2, c2)
            if value:
                add_into(result, bundle.pres.multiply(bundle.antipode_word(c1), sb), bc * cc * value)
    return result
