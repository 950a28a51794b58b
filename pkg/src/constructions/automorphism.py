"""The automorphism braided group B(H,H)⋉B of a braided group B in H-comodules."""
import logging
from typing import Dict, List, Optional, Tuple

from src.braided.braided_hopf import BraidedHopfData
from src.braided.braiding import RightComoduleBraiding
from src.braided.coaction import Coaction, Direction
from src.constructions.models import StructureConstantModel
from src.constructions.transmutation import TransmutedAlgebra
from src.errors import ConfigError, CoverageGap
from src.freealg.printing import format_linear
from src.freealg.terms import Terms, Word, accumulate, tuple_key
from src.hopf.functionals import DQSFunctional
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import Key, TensorTerms
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)


class AutomorphismBraidedGroup(StructureConstantModel):
    """B(H,H)⋉B on keys (h, b).

    (h⊗b)(g⊗c) = h₂g₃⊗b⁽¹⁾c R((Sh₁)h₃⊗Sg₂) R(b⁽²⁾⊗(Sg₁)g₄)
    Δ(h⊗b) = h₁⊗b₁⁽¹⁾ ⊗ h₂·b₁⁽²⁾⊗b₂, with · the transmuted product.
    """

    def __init__(self, host: HopfData, R: DQSFunctional, bundle: BraidedHopfData, degree_bound: int):
        coaction = bundle.coaction
        if coaction is None:
            raise CoverageGap(f"{bundle.name} carries no coaction of {host.name}")
        if coaction.direction is not Direction.RIGHT:
            raise ConfigError(f"{coaction.name} is not a right coaction")
        self.host = host
        self.R = R
        self.bundle = bundle
        self.coaction: Coaction = coaction
        self.transmuted = TransmutedAlgebra(host, R, degree_bound)
        self._braiding = RightComoduleBraiding(R, coaction, self.transmuted.coaction, name="Ψ(B⊗B(H,H))")
        basis = [
            (h, b)
            for h in host.words_up_to(degree_bound)
            for b in bundle.words_up_to(degree_bound - len(h))
        ]
        super().__init__(
            f"{self.transmuted.name}⋉{bundle.name}",
            (host.pres, bundle.pres),
            basis,
            degree_bound,
            self._cross_product,
            coproduct=self._cross_coproduct,
            counit=lambda key: host.counit_word(key[0]) * bundle.counit_word(key[1]),
        )

    def _conjugate(self, first: Word, last: Word) -> Terms:
        """(S first)·last in H."""
        return self.host.pres.multiply(self.host.antipode_word(first), {last: self.host.ctx.one})

    def _cross_product(self, left: Key, right: Key) -> TensorTerms:
        host, R = self.host, self.R
        h, b = left
        g, c = right
        b_legs = list(self.coaction.split(b))
        g_legs = host.iterated_coproduct_word(g, 4)
        result: TensorTerms = {}
        for (h1, h2, h3), hc in host.iterated_coproduct_word(h, 3).items():
            conj_h = self._conjugate(h1, h3)
            for (g1, g2, g3, g4), gc in g_legs.items():
                first = R.evaluate(conj_h, host.antipode_word(g2))
                if not first:
                    continue
                conj_g = self._conjugate(g1, g4)
                host_part = host.pres.multiply_words(h2, g3)
                for b1, b2, bc in b_legs:
                    second = R.evaluate(b2, conj_g)
                    if not second:
                        continue
                    coeff = hc * gc * bc * first * second
                    for x, xc in host_part.items():
                        for y, yc in self.bundle.pres.multiply_words(b1, c).items():
                            accumulate(result, (x, y), coeff * xc * yc)
        return result

    def _cross_coproduct(self, key: Key) -> Dict[Tuple[Key, Key], Scalar]:
        h, b = key
        result: Dict[Tuple[Key, Key], Scalar] = {}
        h_split = self.host.coproduct_word(h)
        for (b1, b2), bc in self.bundle.coproduct_word(b).items():
            for leg, host_leg, lc in self.coaction.split(b1):
                for (h1, h2), hc in h_split.items():
                    for t, tc in self.transmuted.multiply_words(h2, host_leg).items():
                        accumulate(result, ((h1, leg), (t, b2)), bc * lc * hc * tc)
        return result

    # -- independent path: braided tensor product B(H,H)⊗̲B --------------------------

    def braiding(self) -> RightComoduleBraiding:
        """Ψ: B⊗B(H,H) -> B(H,H)⊗B from R and the two right coactions."""
        return self._braiding

    def braided_tensor_product(self, left: Key, right: Key) -> TensorTerms:
        """(h⊗b)(g⊗c) = h·g'⊗b'c with Ψ(b⊗g) = g'⊗b'."""
        h, b = left
        g, c = right
        result: TensorTerms = {}
        for (g1, b1), coeff in self.braiding().braid_words(b, g).items():
            for x, xc in self.transmuted.multiply_words(h, g1).items():
                for y, yc in self.bundle.pres.multiply_words(b1, c).items():
                    accumulate(result, (x, y), coeff * xc * yc)
        return result

    def two_path_failures(self, bound: Optional[int] = None) -> List[Tuple[Key, Key]]:
        bound = self.degree_bound if bound is None else bound
        failures = []
        for left in self.basis:
            for right in self.basis:
                if self.degree(left) + self.degree(right) > bound:
                    continue
                if self.mul_keys(left, right) != self.braided_tensor_product(left, right):
                    failures.append((left, right))
        return failures

    # -- reading off relations ----------------------------------------------------------

    def cross_relations(self) -> List[Tuple[str, TensorTerms]]:
        """(1⊗x)(g⊗1) for every braided generator x and host generator g."""
        rows = []
        for x in range(len(self.bundle.pres.generators)):
            for g in range(len(self.host.pres.generators)):
                label = f"{self.bundle.pres.generators[x]}{self.host.pres.generators[g]}"
                rows.append((label, self.mul_keys(((), (x,)), ((g,), ()))))
        return rows

    def generator_coproducts(self) -> List[Tuple[str, Dict[Tuple[Key, Key], Scalar]]]:
        return [
            (name, self.coproduct_key(((), (x,))))
            for x, name in enumerate(self.bundle.pres.generators)
        ]

    def format_coproduct(self, terms: Dict[Tuple[Key, Key], Scalar]) -> str:
        def render(pair: Tuple[Key, Key]) -> str:
            return f"({self.format_key(pair[0], '·')})⊗({self.format_key(pair[1], '·')})"

        return format_linear(terms, render, key=lambda pair: tuple_key(pair[0] + pair[1]))


def automorphism_braided_group(
    host: HopfData, R: DQSFunctional, bundle: BraidedHopfData, degree_bound: int
) -> AutomorphismBraidedGroup:
    logger.info("building %s⋉%s up to degree %d", host.name, bundle.name, degree_bound)
    return AutomorphismBraidedGroup(host, R, bundle, degree_bound)
