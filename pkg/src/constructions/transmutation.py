"""Transmutation B(H,H) of a dual-quasitriangular Hopf algebra and its reconciliation."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from src.braided.coaction import AdjointCoaction
from src.braided.braided_hopf import BraidedHopfData
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import DQSFunctional
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import Key, TensorTerms
from src.constructions.models import StructureConstantModel
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)


class TransmutedAlgebra(StructureConstantModel):
    """B(H,H): the coalgebra of H with product h·g = h₂g₂R((Sh₁)h₃⊗Sg₁).

    It lives in right H-comodules through the right adjoint coaction
    h ↦ h₂⊗(Sh₁)h₃, exposed as `coaction`.
    """

    def __init__(self, host: HopfData, R: DQSFunctional, degree_bound: int):
        self.host = host
        self.R = R
        self.coaction = AdjointCoaction(host)
        basis = [(w,) for w in host.words_up_to(degree_bound)]
        super().__init__(
            f"B({host.name},{host.name})",
            (host.pres,),
            basis,
            degree_bound,
            self._transmuted_product,
            coproduct=self._coproduct,
            counit=lambda key: host.counit_word(key[0]),
        )

    def _transmuted_product(self, left: Key, right: Key) -> TensorTerms:
        host, pres = self.host, self.host.pres
        h, g = left[0], right[0]
        result: Terms = {}
        right_split = host.coproduct_word(g)
        for (h1, h2, h3), hc in host.iterated_coproduct_word(h, 3).items():
            conjugate = pres.multiply(host.antipode_word(h1), {h3: pres.ctx.one})
            for (g1, g2), gc in right_split.items():
                value = self.R.evaluate(conjugate, host.antipode_word(g1))
                if value:
                    add_into(result, pres.multiply_words(h2, g2), hc * gc * value)
        return {(w,): c for w, c in result.items()}

    def _coproduct(self, key: Key) -> Dict[Tuple[Key, Key], Scalar]:
        return {((a,), (b,)): c for (a, b), c in self.host.coproduct_word(key[0]).items()}

    def multiply_words(self, left: Word, right: Word) -> Terms:
        return {k[0]: c for k, c in self.mul_keys((left,), (right,)).items()}

    def multiply(self, left: Mapping[Word, Scalar], right: Mapping[Word, Scalar]) -> Terms:
        result: Terms = {}
        for lw, lc in left.items():
            for rw, rc in right.items():
                add_into(result, self.multiply_words(lw, rw), lc * rc)
        return result


def transmute(host: HopfData, R: DQSFunctional, degree_bound: int) -> TransmutedAlgebra:
    logger.info("transmuting %s up to degree %d", host.name, degree_bound)
    return TransmutedAlgebra(host, R, degree_bound)


@dataclass
class ReconciliationResult:
    """Outcome of comparing a model against a stated presentation."""

    target: str
    checked: List[str] = field(default_factory=list)
    failures: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        lines = [f"{self.target}: {len(self.checked)} checks, {len(self.failures)} failures"]
        for label, residual in self.failures:
            lines.append(f"  FAIL {label}: residual {residual}")
        return "\n".join(lines)


class TransmutationReconciler:
    """Check a transmuted model against a target braided presentation.

    Target generators are mapped letter by letter onto host generators; a target
    word becomes the left-nested transmuted product of its letters.
    """

    def __init__(self, model: TransmutedAlgebra, target: BraidedHopfData, mapping: Mapping[str, str]):
        self.model = model
        self.target = target
        host_pres = model.host.pres
        self.letters: Dict[int, Word] = {
            target.pres.gen(name): (host_pres.gen(image),) for name, image in mapping.items()
        }
        self._memo: Dict[Word, Terms] = {(): {(): model.ctx.one}}

    def image_word(self, word: Word) -> Terms:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        prefix = self.image_word(word[:-1])
        result = self.model.multiply(prefix, {self.letters[word[-1]]: self.model.ctx.one})
        self._memo[word] = result
        return result

    def image(self, terms: Mapping[Word, Scalar]) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            add_into(result, self.image_word(word), coeff)
        return result

    def _text(self, terms: Terms) -> str:
        return self.model.host.pres.format_terms(terms)

    def check_relations(self, result: ReconciliationResult) -> None:
        pres = self.target.pres
        for relation in pres.relations:
            label = f"{pres.format_terms(relation)} = 0"
            result.checked.append(label)
            residual = self.image(relation)
            if residual:
                result.failures.append((label, self._text(residual)))
        for lhs, rhs in sorted(pres.rules.items()):
            label = f"{pres.word_text(lhs)} -> {pres.format_terms(rhs)}"
            result.checked.append(label)
            residual = dict(self.image_word(lhs))
            add_into(residual, self.image(rhs), -self.model.ctx.one)
            if residual:
                result.failures.append((label, self._text(residual)))

    def _image_tensor(self, terms: TensorTerms) -> TensorTerms:
        result: TensorTerms = {}
        for (w1, w2), coeff in terms.items():
            for a, ac in self.image_word(w1).items():
                for b, bc in self.image_word(w2).items():
                    accumulate(result, (a, b), coeff * ac * bc)
        return result

    def _model_coproduct(self, terms: Terms) -> TensorTerms:
        result: TensorTerms = {}
        for word, coeff in terms.items():
            add_into(result, self.model.host.coproduct_word(word), coeff)
        return result

    def check_coproducts(self, result: ReconciliationResult) -> None:
        pres = self.target.pres
        for letter in sorted(self.letters):
            label = f"coproduct of {pres.generators[letter]}"
            result.checked.append(label)
            expected = self._image_tensor(self.target.coproduct_word((letter,)))
            got = self._model_coproduct(self.image_word((letter,)))
            residual = dict(got)
            add_into(residual, expected, -self.model.ctx.one)
            if residual:
                result.failures.append((label, str(len(residual)) + " differing tensor terms"))

    def check_grouplike(self, result: ReconciliationResult, name: str) -> None:
        label = f"{name} grouplike"
        result.checked.append(label)
        image = self.image_word((self.target.pres.gen(name),))
        square: TensorTerms = {}
        for a, ac in image.items():
            for b, bc in image.items():
                accumulate(square, (a, b), ac * bc)
        residual = self._model_coproduct(image)
        add_into(residual, square, -self.model.ctx.one)
        if residual:
            result.failures.append((label, str(len(residual)) + " differing tensor terms"))

    def run(self, grouplike: Tuple[str, ...] = ()) -> ReconciliationResult:
        result = ReconciliationResult(self.target.name)
        self.check_relations(result)
        self.check_coproducts(result)
        for name in grouplike:
            self.check_grouplike(result, name)
        logger.info("reconciled %s against %s: %d/%d ok", self.model.name, self.target.name,
                    len(result.checked) - len(result.failures), len(result.checked))
        return result
