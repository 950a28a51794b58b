"""Bosonisation: ordinary Hopf algebras built from a braided group and its host."""
import logging
from typing import Callable, Dict, Sequence, Tuple

from src.braided.braided_hopf import BraidedHopfData
from src.braided.coaction import Action, Coaction, Direction
from src.errors import AlphabetMismatch, ConfigError, CoverageGap
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import Functional
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.tensor import TensorElem, TensorTerms
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)

HOST_FIRST = "host-first"
CARRIER_FIRST = "carrier-first"


def merge_presentations(
    name: str, first: Presentation, second: Presentation, cross_rules: Dict[Word, Terms]
) -> Presentation:
    """Amalgamate two presentations; generators of `first` take precedence.

    Both rule sets are carried over unchanged and the cross rules (already in
    merged indices) are added on top.
    """
    clash = set(first.generators) & set(second.generators)
    if clash:
        raise AlphabetMismatch(f"cannot merge {first.name} and {second.name}: shared names {sorted(clash)}")
    offset = len(first.generators)
    rules: Dict[Word, Terms] = dict(first.rules)
    for lhs, rhs in second.rules.items():
        rules[tuple(i + offset for i in lhs)] = {tuple(i + offset for i in w): c for w, c in rhs.items()}
    rules.update(cross_rules)
    relations = list(first.relations) + [
        {tuple(i + offset for i in w): c for w, c in r.items()} for r in second.relations
    ]
    for lhs, rhs in cross_rules.items():
        relation = {lhs: first.ctx.one}
        add_into(relation, rhs, -first.ctx.one)
        relations.append(relation)
    grading = dict(first.grading)
    grading.update(second.grading)
    return Presentation(
        name,
        first.generators + second.generators,
        first.ctx,
        rules,
        grading,
        tuple(first.inverse_pairs) + tuple(second.inverse_pairs),
        relations,
    )


class CrossProductBuilder:
    """Shared plumbing for bosonisations and biproducts.

    Keeps the embeddings of host and carrier words into the merged alphabet and
    assembles the final HopfData from per-generator formulas.
    """

    def __init__(self, host: HopfData, bundle: BraidedHopfData, layout: str):
        if layout not in (HOST_FIRST, CARRIER_FIRST):
            raise ConfigError(f"unknown layout {layout!r}")
        self.host = host
        self.bundle = bundle
        self.layout = layout
        self.ctx = host.ctx
        self.host_offset = 0 if layout == HOST_FIRST else len(bundle.pres.generators)
        self.carrier_offset = len(host.pres.generators) if layout == HOST_FIRST else 0
        self.pres: Presentation = None

    # -- embeddings ---------------------------------------------------------------

    def h(self, word: Word) -> Word:
        return tuple(i + self.host_offset for i in word)

    def b(self, word: Word) -> Word:
        return tuple(i + self.carrier_offset for i in word)

    def host_terms(self, terms: Dict[Word, Scalar]) -> Terms:
        return {self.h(w): c for w, c in terms.items()}

    def carrier_terms(self, terms: Dict[Word, Scalar]) -> Terms:
        return {self.b(w): c for w, c in terms.items()}

    # -- assembly -----------------------------------------------------------------

    def build_presentation(self, name: str, cross: Callable[[int, int], Terms]) -> Presentation:
        """cross(b, h) gives the rewrite of the out-of-order product of two generators."""
        rules: Dict[Word, Terms] = {}
        for b in range(len(self.bundle.pres.generators)):
            for h in range(len(self.host.pres.generators)):
                lhs = self.b((b,)) + self.h((h,)) if self.layout == HOST_FIRST else self.h((h,)) + self.b((b,))
                rules[lhs] = cross(b, h)
        if self.layout == HOST_FIRST:
            self.pres = merge_presentations(name, self.host.pres, self.bundle.pres, rules)
        else:
            self.pres = merge_presentations(name, self.bundle.pres, self.host.pres, rules)
        return self.pres

    def build_hopf(
        self,
        coproduct: Callable[[int], TensorTerms],
        antipode: Callable[[int], Terms],
    ) -> HopfData:
        pres = self.pres
        slots = (pres, pres)
        coproducts: Dict[int, TensorTerms] = {}
        counits: Dict[int, Scalar] = {}
        antipodes: Dict[int, Terms] = {}
        for g in range(len(self.host.pres.generators)):
            letter = self.h((g,))[0]
            coproducts[letter] = {(self.h(a), self.h(b)): c for (a, b), c in self.host.coproduct_table[g].items()}
            counits[letter] = self.host.counit_table[g]
            antipodes[letter] = self.host_terms(self.host.antipode_table[g])
        for g in range(len(self.bundle.pres.generators)):
            letter = self.b((g,))[0]
            coproducts[letter] = TensorElem.build(slots, coproduct(g)).terms
            counits[letter] = self.bundle.counit_table[g]
            antipodes[letter] = pres.normal_form(antipode(g))
        logger.debug("%s: assembled %d generator tables", pres.name, len(coproducts))
        return HopfData(pres, coproducts, counits, antipodes)

    def mul(self, left: Terms, right: Terms) -> Terms:
        return self.pres.multiply(self.pres.normal_form(left), right)


def _require(structure, kind: str, bundle: BraidedHopfData):
    if structure is None:
        raise CoverageGap(f"{bundle.name} carries no {kind}")
    return structure


def bosonise_comodule(
    host: HopfData, R: Functional, bundle: BraidedHopfData, antipode: str = "corrected"
) -> HopfData:
    """H·⋉B for B in right H-comodules.

    bh = h₁b⁽¹⁾R(b⁽²⁾⊗h₂), Δb = b₁⁽¹⁾⊗b₁⁽²⁾b₂, Sb = (S̲b⁽¹⁾)S(b⁽²⁾).
    antipode="printed" uses (S̲b⁽¹⁾)b⁽²⁾ instead, which fails the antipode axiom
    as soon as the coaction is nontrivial.
    """
    if antipode not in ("corrected", "printed"):
        raise ConfigError(f"unknown antipode variant {antipode!r}")
    coaction: Coaction = _require(bundle.coaction, "coaction", bundle)
    if coaction.direction is not Direction.RIGHT:
        raise ConfigError(f"{coaction.name} is not a right coaction")
    builder = CrossProductBuilder(host, bundle, HOST_FIRST)

    def cross(b: int, h: int) -> Terms:
        rhs: Terms = {}
        host_split = host.coproduct_word((h,))
        for b1, b2, bc in coaction.split((b,)):
            for (h1, h2), hc in host_split.items():
                value = R.evaluate_words(b2, h2)
                if value:
                    accumulate(rhs, builder.h(h1) + builder.b(b1), bc * hc * value)
        return rhs

    builder.build_presentation(f"{host.name}·⋉{bundle.name}", cross)

    def coproduct(b: int) -> TensorTerms:
        result: TensorTerms = {}
        for (b1, b2), c in bundle.coproduct_word((b,)).items():
            for leg, host_leg, lc in coaction.split(b1):
                accumulate(result, (builder.b(leg), builder.h(host_leg) + builder.b(b2)), c * lc)
        return result

    def antipode_of(b: int) -> Terms:
        result: Terms = {}
        for leg, host_leg, c in coaction.split((b,)):
            first = builder.carrier_terms(bundle.antipode_word(leg))
            if antipode == "printed":
                second = {builder.h(host_leg): builder.ctx.one}
            else:
                second = builder.host_terms(host.antipode_word(host_leg))
            add_into(result, builder.mul(first, second), c)
        return result

    result = builder.build_hopf(coproduct, antipode_of)
    logger.info("bosonised %s over %s (%s antipode)", bundle.name, host.name, antipode)
    return result


def bosonise_left_comodule(host: HopfData, R: Functional, bundle: BraidedHopfData) -> HopfData:
    """B⋊·H for B in left H-comodules.

    hb = R(h₁⊗b⁽¹⁾)b⁽²⁾h₂, Δb = b₁b₂⁽¹⁾⊗b₂⁽²⁾, Sb = S(b⁽¹⁾)S̲b⁽²⁾.
    """
    coaction: Coaction = _require(bundle.coaction, "coaction", bundle)
    if coaction.direction is not Direction.LEFT:
        raise ConfigError(f"{coaction.name} is not a left coaction")
    builder = CrossProductBuilder(host, bundle, CARRIER_FIRST)

    def cross(b: int, h: int) -> Terms:
        rhs: Terms = {}
        host_split = host.coproduct_word((h,))
        for leg, host_leg, bc in coaction.split((b,)):
            for (h1, h2), hc in host_split.items():
                value = R.evaluate_words(h1, host_leg)
                if value:
                    accumulate(rhs, builder.b(leg) + builder.h(h2), bc * hc * value)
        return rhs

    builder.build_presentation(f"{bundle.name}⋊·{host.name}", cross)

    def coproduct(b: int) -> TensorTerms:
        result: TensorTerms = {}
        for (b1, b2), c in bundle.coproduct_word((b,)).items():
            for leg, host_leg, lc in coaction.split(b2):
                accumulate(result, (builder.b(b1) + builder.h(host_leg), builder.b(leg)), c * lc)
        return result

    def antipode_of(b: int) -> Terms:
        result: Terms = {}
        for leg, host_leg, c in coaction.split((b,)):
            first = builder.host_terms(host.antipode_word(host_leg))
            add_into(result, builder.mul(first, builder.carrier_terms(bundle.antipode_word(leg))), c)
        return result

    return builder.build_hopf(coproduct, antipode_of)


def _act_by_terms(action: Action, host_terms: Dict[Word, Scalar], carrier: Dict[Word, Scalar]) -> Terms:
    result: Terms = {}
    for hw, hc in host_terms.items():
        add_into(result, action.act_terms(hw, carrier), hc)
    return result


def bosonise_module(host: HopfData, quasitriangular: QuasitriangularElement, bundle: BraidedHopfData) -> HopfData:
    """B⋊H for B in left modules of a finite quasitriangular H.

    hb = (h₁▷b)h₂, Δb = b₁ℛ⁽²⁾⊗ℛ⁽¹⁾▷b₂, Sb = (uℛ⁽¹⁾▷S̲b)Sℛ⁽²⁾ with u = (Sℛ⁽²⁾)ℛ⁽¹⁾.
    """
    action: Action = _require(bundle.action, "action", bundle)
    action.require_finite()
    builder = CrossProductBuilder(host, bundle, CARRIER_FIRST)

    def cross(b: int, h: int) -> Terms:
        rhs: Terms = {}
        for (h1, h2), hc in host.coproduct_word((h,)).items():
            for w, c in action.act_word(h1, (b,)).items():
                accumulate(rhs, builder.b(w) + builder.h(h2), hc * c)
        return rhs

    builder.build_presentation(f"{bundle.name}⋊{host.name}", cross)
    u = quasitriangular.u_element().terms

    def coproduct(b: int) -> TensorTerms:
        result: TensorTerms = {}
        for (b1, b2), c in bundle.coproduct_word((b,)).items():
            for r1, r2, rc in quasitriangular.legs():
                for w, wc in action.act_word(r1, b2).items():
                    accumulate(result, (builder.b(b1) + builder.h(r2), builder.b(w)), c * rc * wc)
        return result

    def antipode_of(b: int) -> Terms:
        result: Terms = {}
        braided = bundle.antipode_word((b,))
        for r1, r2, rc in quasitriangular.legs():
            acting = host.pres.multiply(u, {r1: builder.ctx.one})
            first = builder.carrier_terms(_act_by_terms(action, acting, braided))
            add_into(result, builder.mul(first, builder.host_terms(host.antipode_word(r2))), rc)
        return result

    return builder.build_hopf(coproduct, antipode_of)


def bosonise_right_module(
    host: HopfData, quasitriangular: QuasitriangularElement, bundle: BraidedHopfData, action: Action = None
) -> HopfData:
    """H⋉B for B in right modules of a finite quasitriangular H.

    bh = h₁(b◁h₂), Δb = b₁◁ℛ⁽¹⁾⊗ℛ⁽²⁾b₂, Sb = (Sℛ⁽²⁾)(S̲b◁ℛ⁽¹⁾v) with v = ℛ⁽¹⁾Sℛ⁽²⁾.
    """
    action = action or _require(bundle.action, "action", bundle)
    if action.direction is not Direction.RIGHT:
        raise ConfigError(f"{action.name} is not a right action")
    action.require_finite()
    builder = CrossProductBuilder(host, bundle, HOST_FIRST)

    def cross(b: int, h: int) -> Terms:
        rhs: Terms = {}
        for (h1, h2), hc in host.coproduct_word((h,)).items():
            for w, c in action.act_word(h2, (b,)).items():
                accumulate(rhs, builder.h(h1) + builder.b(w), hc * c)
        return rhs

    builder.build_presentation(f"{host.name}⋉{bundle.name}", cross)
    v = quasitriangular.v_element().terms

    def coproduct(b: int) -> TensorTerms:
        result: TensorTerms = {}
        for (b1, b2), c in bundle.coproduct_word((b,)).items():
            for r1, r2, rc in quasitriangular.legs():
                for w, wc in action.act_word(r1, b1).items():
                    accumulate(result, (builder.b(w), builder.h(r2) + builder.b(b2)), c * rc * wc)
        return result

    def antipode_of(b: int) -> Terms:
        result: Terms = {}
        braided = bundle.antipode_word((b,))
        for r1, r2, rc in quasitriangular.legs():
            acting = host.pres.multiply(host.pres.reduce_word(r1), v)
            second = builder.carrier_terms(_act_by_terms(action, acting, braided))
            add_into(result, builder.mul(builder.host_terms(host.antipode_word(r2)), second), rc)
        return result

    return builder.build_hopf(coproduct, antipode_of)


def cross_relation_table(hopf: HopfData, host_count: int, layout: str) -> Sequence[Tuple[Word, Terms]]:
    """The cross rules of a bosonised presentation, in lhs order."""
    pres = hopf.pres
    rows = []
    for lhs, rhs in sorted(pres.rules.items()):
        if len(lhs) != 2:
            continue
        first_host = lhs[0] < host_count if layout == HOST_FIRST else lhs[0] >= len(pres.generators) - host_count
        second_host = lhs[1] < host_count if layout == HOST_FIRST else lhs[1] >= len(pres.generators) - host_count
        if first_host != second_host:
            rows.append((lhs, rhs))
    return rows
