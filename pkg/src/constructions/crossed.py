"""Crossed modules, induced structures, biproducts and generalised cross products."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.braided.braided_hopf import BraidedHopfData
from src.braided.braiding import CrossedModuleBraiding
from src.braided.coaction import (
    Action,
    AdjointAction,
    Coaction,
    Direction,
    InducedAction,
    InducedCoaction,
    RegularCoaction,
)
from src.constructions.bosonisation import CARRIER_FIRST, HOST_FIRST, CrossProductBuilder
from src.constructions.models import StructureConstantModel
from src.errors import AlphabetMismatch, BasisTooLarge, ConfigError
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import DQSFunctional
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.tensor import Key, TensorTerms

logger = logging.getLogger(__name__)


class CrossedModule:
    """A carrier with an action and a coaction of the same host, on the same side.

    Left-left:   h₁v⁽¹⁾⊗h₂▷v⁽²⁾ = (h₁▷v)⁽¹⁾h₂⊗(h₁▷v)⁽²⁾
    Right-right: v⁽¹⁾◁h₁⊗v⁽²⁾h₂ = (v◁h₂)⁽¹⁾⊗h₁(v◁h₂)⁽²⁾
    """

    def __init__(self, action: Action, coaction: Coaction, name: str = ""):
        if action.direction is not coaction.direction:
            raise ConfigError("a crossed module needs action and coaction on the same side")
        if not action.carrier.compatible(coaction.carrier):
            raise AlphabetMismatch(f"{action.carrier.name} and {coaction.carrier.name} differ")
        self.action = action
        self.coaction = coaction
        self.direction = action.direction
        self.host: HopfData = action.host
        self.carrier: Presentation = action.carrier
        self.name = name or f"{self.direction.value} crossed module {self.carrier.name}"

    def braiding(self) -> CrossedModuleBraiding:
        return CrossedModuleBraiding(self.direction, self.coaction, self.action, name=f"Ψ on {self.carrier.name}")

    @property
    def slots(self) -> Tuple[Presentation, Presentation]:
        if self.direction is Direction.LEFT:
            return (self.host.pres, self.carrier)
        return (self.carrier, self.host.pres)

    def _host_product(self, a: Word, b: Word) -> Terms:
        return self.host.pres.multiply(self.host.pres.reduce_word(a), {b: self.host.ctx.one})

    def compatibility_residual(self, h: Word, v: Word) -> TensorTerms:
        """Left side minus right side of the crossed-module condition."""
        host_split = self.host.coproduct_word(h)
        result: TensorTerms = {}
        one = self.host.ctx.one
        if self.direction is Direction.LEFT:
            for (h1, h2), hc in host_split.items():
                for v_carrier, v_host, vc in self.coaction.split(v):
                    for w, wc in self.action.act_word(h2, v_carrier).items():
                        for x, xc in self._host_product(h1, v_host).items():
                            accumulate(result, (x, w), hc * vc * wc * xc)
                for w, wc in self.action.act_word(h1, v).items():
                    for w_carrier, w_host, c in self.coaction.split(w):
                        for x, xc in self._host_product(w_host, h2).items():
                            accumulate(result, (x, w_carrier), -one * hc * wc * c * xc)
        else:
            for (h1, h2), hc in host_split.items():
                for v_carrier, v_host, vc in self.coaction.split(v):
                    for w, wc in self.action.act_word(h1, v_carrier).items():
                        for x, xc in self._host_product(v_host, h2).items():
                            accumulate(result, (w, x), hc * vc * wc * xc)
                for w, wc in self.action.act_word(h2, v).items():
                    for w_carrier, w_host, c in self.coaction.split(w):
                        for x, xc in self._host_product(h1, w_host).items():
                            accumulate(result, (w_carrier, x), -one * hc * wc * c * xc)
        return result

    def compatibility_failures(
        self, host_words: Sequence[Word], carrier_words: Sequence[Word]
    ) -> List[Tuple[Word, Word, TensorTerms]]:
        failures = []
        for h in host_words:
            for v in carrier_words:
                residual = self.compatibility_residual(h, v)
                if residual:
                    failures.append((h, v, residual))
        return failures

    def __repr__(self) -> str:
        return f"CrossedModule({self.name})"


Structure = Union[DQSFunctional, QuasitriangularElement]


def induce_crossed_module(partner: Union[Action, Coaction], structure: Structure) -> CrossedModule:
    """Complete a module or comodule to a crossed module.

    Comodules get the action v◁h = v⁽¹⁾R(v⁽²⁾⊗h) (left: h▷v = R(v⁽¹⁾⊗h)v⁽²⁾);
    modules over a finite quasitriangular host get v ↦ v◁ℛ⁽¹⁾⊗ℛ⁽²⁾ (left:
    v ↦ ℛ⁽²⁾⊗ℛ⁽¹⁾▷v).
    """
    if isinstance(partner, Coaction):
        if not isinstance(structure, DQSFunctional):
            raise ConfigError("inducing from a comodule needs a dual-quasitriangular functional")
        action = InducedAction(partner, structure)
        logger.debug("induced %s", action.name)
        return CrossedModule(action, partner, name=f"crossed module induced from {partner.name}")
    if not isinstance(structure, QuasitriangularElement):
        raise ConfigError("inducing from a module needs a quasitriangular element")
    partner.require_finite()
    coaction = InducedCoaction(partner, structure)
    logger.debug("induced %s", coaction.name)
    return CrossedModule(partner, coaction, name=f"crossed module induced from {partner.name}")


@dataclass
class ImageCheckResult:
    holds: bool
    variant: str
    witness: Optional[str] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.variant} image condition holds ({self.checked} checks)"
        return f"{self.variant} image condition fails at {self.witness}"


def _finite_words(pres: Presentation, limit: int) -> List[Word]:
    words = pres.basis(limit)
    if words is None:
        raise BasisTooLarge(f"{pres.name} has no finite basis within length {limit}")
    return words


def check_induced_image(X: CrossedModule, structure: Structure, variant: str, limit: int = 16) -> ImageCheckResult:
    """Is X in the image of the induction functor?

    variant="module": the coaction equals the one induced from the action by ℛ.
    variant="comodule": the action equals the one induced from the coaction by R.
    """
    carrier_words = _finite_words(X.carrier, limit)
    if variant == "module":
        if not isinstance(structure, QuasitriangularElement):
            raise ConfigError("the module variant needs a quasitriangular element")
        induced = InducedCoaction(X.action, structure)
        for count, v in enumerate(carrier_words, start=1):
            if X.coaction.coact_word(v) != induced.coact_word(v):
                return ImageCheckResult(False, variant, X.carrier.word_text(v), count)
        return ImageCheckResult(True, variant, checked=len(carrier_words))
    if variant == "comodule":
        if not isinstance(structure, DQSFunctional):
            raise ConfigError("the comodule variant needs a dual-quasitriangular functional")
        induced_action = InducedAction(X.coaction, structure)
        host_words = _finite_words(X.host.pres, limit)
        count = 0
        for h in host_words:
            for v in carrier_words:
                count += 1
                if X.action.act_word(h, v) != induced_action.act_word(h, v):
                    witness = f"{X.host.pres.word_text(h)} on {X.carrier.word_text(v)}"
                    return ImageCheckResult(False, variant, witness, count)
        return ImageCheckResult(True, variant, checked=count)
    raise ConfigError(f"unknown image variant {variant!r}")


def regular_adjoint_module(host: HopfData) -> CrossedModule:
    """H as a left-left crossed module by the regular coaction and adjoint action."""
    return CrossedModule(AdjointAction(host), RegularCoaction(host, Direction.LEFT), name=f"{host.name}^L_Ad")


# -- biproducts -------------------------------------------------------------------------


def biproduct(X: CrossedModule, bundle: BraidedHopfData) -> HopfData:
    """Simultaneous cross product and cross coproduct of a braided group in crossed modules.

    Left-left, B⋊·H:  hb = (h₁▷b)h₂, Δb = b₁b₂⁽¹⁾⊗b₂⁽²⁾, Sb = S(b⁽¹⁾)S̲b⁽²⁾.
    Right-right, H·⋉B: bh = h₁(b◁h₂), Δb = b₁⁽¹⁾⊗b₁⁽²⁾b₂, Sb = (S̲b⁽¹⁾)S(b⁽²⁾).
    """
    if not bundle.pres.compatible(X.carrier):
        raise AlphabetMismatch(f"{bundle.name} does not live on {X.carrier.name}")
    braided = bundle.with_source(X.braiding())
    host, action, coaction = X.host, X.action, X.coaction
    left = X.direction is Direction.LEFT
    builder = CrossProductBuilder(host, braided, CARRIER_FIRST if left else HOST_FIRST)

    def cross(b: int, h: int) -> Terms:
        rhs: Terms = {}
        for (h1, h2), hc in host.coproduct_word((h,)).items():
            if left:
                for w, c in action.act_word(h1, (b,)).items():
                    accumulate(rhs, builder.b(w) + builder.h(h2), hc * c)
            else:
                for w, c in action.act_word(h2, (b,)).items():
                    accumulate(rhs, builder.h(h1) + builder.b(w), hc * c)
        return rhs

    label = f"{bundle.name}⋊·{host.name}" if left else f"{host.name}·⋉{bundle.name}"
    builder.build_presentation(label, cross)

    def coproduct(b: int) -> TensorTerms:
        result: TensorTerms = {}
        for (b1, b2), c in braided.coproduct_word((b,)).items():
            if left:
                for leg, host_leg, lc in coaction.split(b2):
                    accumulate(result, (builder.b(b1) + builder.h(host_leg), builder.b(leg)), c * lc)
            else:
                for leg, host_leg, lc in coaction.split(b1):
                    accumulate(result, (builder.b(leg), builder.h(host_leg) + builder.b(b2)), c * lc)
        return result

    def antipode_of(b: int) -> Terms:
        result: Terms = {}
        for leg, host_leg, c in coaction.split((b,)):
            carrier_part = builder.carrier_terms(braided.antipode_word(leg))
            host_part = builder.host_terms(host.antipode_word(host_leg))
            if left:
                add_into(result, builder.mul(host_part, carrier_part), c)
            else:
                add_into(result, builder.mul(carrier_part, host_part), c)
        return result

    result = builder.build_hopf(coproduct, antipode_of)
    logger.info("biproduct %s built", label)
    return result


# -- generalised cross products -------------------------------------------------------

KeyAction = Callable[[Word, Key], TensorTerms]
KeyCoaction = Callable[[Key], Dict[Tuple[Word, Key], object]]


def algebra_model(pres: Presentation, limit: int = 16) -> StructureConstantModel:
    """A finite-dimensional presentation as a one-slot structure-constant model."""
    words = _finite_words(pres, limit)
    bound = max((len(w) for w in words), default=0)

    def product(left: Key, right: Key) -> TensorTerms:
        return {(w,): c for w, c in pres.multiply_words(left[0], right[0]).items()}

    return StructureConstantModel(pres.name, (pres,), [(w,) for w in words], 2 * bound, product)


def cross_product_model(
    base: StructureConstantModel, host: HopfData, act: KeyAction, name: str = ""
) -> StructureConstantModel:
    """A⋊H for a left H-module algebra A: (x⊗k)(y⊗l) = x(k₁▷y)⊗k₂l."""
    host_words = _finite_words(host.pres, 16)
    host_bound = max((len(w) for w in host_words), default=0)
    pres = host.pres

    def product(left: Key, right: Key) -> TensorTerms:
        x, k = left[:-1], left[-1]
        y, l = right[:-1], right[-1]
        result: TensorTerms = {}
        for (k1, k2), kc in host.coproduct_word(k).items():
            acted = act(k1, y)
            if not acted:
                continue
            tail = pres.multiply_words(k2, l)
            for y1, yc in acted.items():
                for z, zc in base.mul_keys(x, y1).items():
                    for t, tc in tail.items():
                        accumulate(result, z + (t,), kc * yc * zc * tc)
        return result

    basis = [x + (h,) for x in base.basis for h in host_words]
    return StructureConstantModel(
        name or f"{base.name}⋊{host.name}",
        base.slots + (pres,),
        basis,
        base.degree_bound + 2 * host_bound,
        product,
    )


def crossed_tensor_model(
    left: StructureConstantModel,
    right: StructureConstantModel,
    act: KeyAction,
    coact: KeyCoaction,
    name: str = "",
) -> StructureConstantModel:
    """Braided tensor product of algebras in left-left crossed modules.

    (b⊗c)(a⊗d) = b(c⁽¹⁾▷a)⊗c⁽²⁾d, with `coact` giving c ↦ c⁽¹⁾⊗c⁽²⁾ (host leg first).
    """
    split = len(left.slots)

    def product(first: Key, second: Key) -> TensorTerms:
        b, c = first[:split], first[split:]
        a, d = second[:split], second[split:]
        result: TensorTerms = {}
        for (host_leg, c2), cc in coact(c).items():
            acted = act(host_leg, a)
            if not acted:
                continue
            tail = right.mul_keys(c2, d)
            for a1, ac in acted.items():
                for x, xc in left.mul_keys(b, a1).items():
                    for y, yc in tail.items():
                        accumulate(result, x + y, cc * ac * xc * yc)
        return result

    basis = [x + y for x in left.basis for y in right.basis]
    return StructureConstantModel(
        name or f"{left.name}⊗̲{right.name}",
        left.slots + right.slots,
        basis,
        left.degree_bound + right.degree_bound,
        product,
    )


def _action_on_key(action: Action) -> KeyAction:
    def act(h: Word, key: Key) -> TensorTerms:
        return {(w,): c for w, c in action.act_word(h, key[0]).items()}

    return act


def _tensor_action(action: Action, host: HopfData) -> KeyAction:
    """h▷(b⊗g) = h₁▷b⊗h₂gSh₃ on B⋊H."""
    adjoint = AdjointAction(host)

    def act(h: Word, key: Key) -> TensorTerms:
        b, g = key
        result: TensorTerms = {}
        for (h1, h2), c in host.coproduct_word(h).items():
            first = action.act_word(h1, b)
            if not first:
                continue
            for x, xc in first.items():
                for y, yc in adjoint.act_word(h2, g).items():
                    accumulate(result, (x, y), c * xc * yc)
        return result

    return act


def _product_coaction(host: HopfData) -> KeyCoaction:
    """(g⊗l) ↦ g₁l₁⊗(g₂⊗l₂), the tensor product of left regular coactions."""
    pres = host.pres

    def coact(key: Key) -> Dict[Tuple[Word, Key], object]:
        g, l = key
        result: Dict[Tuple[Word, Key], object] = {}
        l_split = host.coproduct_word(l)
        for (g1, g2), gc in host.coproduct_word(g).items():
            for (l1, l2), lc in l_split.items():
                for x, xc in pres.multiply_words(g1, l1).items():
                    accumulate(result, (x, (g2, l2)), gc * lc * xc)
        return result

    return coact


def _regular_coaction(host: HopfData) -> KeyCoaction:
    def coact(key: Key) -> Dict[Tuple[Word, Key], object]:
        return {(h1, (h2,)): c for (h1, h2), c in host.coproduct_word(key[0]).items()}

    return coact


@dataclass
class LedgerResult:
    """Comparison of two structure-constant models on a shared key basis."""

    left: str
    right: str
    compared: int
    differences: List[Tuple[Key, Key]]

    @property
    def ok(self) -> bool:
        return not self.differences

    def __str__(self) -> str:
        verdict = "agree" if self.ok else f"differ on {len(self.differences)} products"
        return f"{self.left} vs {self.right}: {verdict} ({self.compared} products compared)"


def compare_models(first: StructureConstantModel, second: StructureConstantModel) -> LedgerResult:
    differences = []
    compared = 0
    for a in first.basis:
        for b in first.basis:
            compared += 1
            if first.mul_keys(a, b) != second.mul_keys(a, b):
                differences.append((a, b))
    return LedgerResult(first.name, second.name, compared, differences)


def associativity_ledger(action: Action) -> List[LedgerResult]:
    """Cross products as braided tensor products, for a left module algebra B.

    Checks B⋊H = B⊗̲H^L_Ad and (B⋊H)⋊H = B⊗̲(H⋊H) on the finite bases.
    """
    if action.direction is not Direction.LEFT:
        raise ConfigError("the cross product ledger uses a left action")
    host = action.host
    carrier = algebra_model(action.carrier)
    host_algebra = algebra_model(host.pres)
    act = _action_on_key(action)

    cross = cross_product_model(carrier, host, act)
    as_tensor = crossed_tensor_model(carrier, host_algebra, act, _regular_coaction(host))
    results = [compare_models(cross, as_tensor)]

    iterated = cross_product_model(cross, host, _tensor_action(action, host), name=f"({cross.name})⋊{host.name}")
    host_cross = cross_product_model(host_algebra, host, _action_on_key(AdjointAction(host)), name=f"{host.name}⋊{host.name}")
    nested = crossed_tensor_model(carrier, host_cross, act, _product_coaction(host))
    results.append(compare_models(iterated, nested))
    for result in results:
        logger.info("%s", result)
    return results
