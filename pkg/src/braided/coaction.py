"""Comodule and module structures over a Hopf algebra."""
import logging
from enum import Enum
from typing import Dict, Iterator, Mapping, Tuple

from src.errors import CoverageGap, InfiniteHost
from src.freealg.ncpoly import NCPoly
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import Functional
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.tensor import TensorElem, TensorTerms
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


class Coaction:
    """A coaction given on carrier generators and extended multiplicatively.

    Right coactions land in carrier⊗H, left coactions in H⊗carrier.
    """

    def __init__(
        self,
        direction: Direction,
        host: HopfData,
        carrier: Presentation,
        table: Mapping[int, Mapping[Tuple[Word, Word], Scalar]],
        name: str = "",
    ):
        self.direction = direction
        self.host = host
        self.carrier = carrier
        self.table: Dict[int, TensorTerms] = {g: dict(t) for g, t in table.items()}
        self.name = name or f"{direction.value} coaction of {host.name} on {carrier.name}"
        self._memo: Dict[Word, TensorTerms] = {}

    @property
    def ctx(self):
        return self.host.ctx

    @property
    def slots(self) -> Tuple[Presentation, Presentation]:
        if self.direction is Direction.RIGHT:
            return (self.carrier, self.host.pres)
        return (self.host.pres, self.carrier)

    def _generator(self, letter: int) -> TensorTerms:
        try:
            return self.table[letter]
        except KeyError:
            raise CoverageGap(
                f"{self.name}: no coaction given for {self.carrier.generators[letter]}"
            ) from None

    def coact_word(self, word: Word) -> TensorTerms:
        """Coaction of a word in the direction's slot order."""
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        if not word:
            result = {((), ()): self.ctx.one}
        else:
            head = self.coact_word(word[:-1])
            last = self._generator(word[-1])
            first_pres, second_pres = self.slots
            result: TensorTerms = {}
            for (a1, a2), c1 in head.items():
                for (b1, b2), c2 in last.items():
                    for w1, d1 in first_pres.multiply_words(a1, b1).items():
                        for w2, d2 in second_pres.multiply_words(a2, b2).items():
                            accumulate(result, (w1, w2), c1 * c2 * d1 * d2)
        self._memo[word] = result
        return result

    def split(self, word: Word) -> Iterator[Tuple[Word, Word, Scalar]]:
        """Yield (carrier leg, host leg, coefficient) whatever the direction."""
        for (first, second), coeff in self.coact_word(word).items():
            if self.direction is Direction.RIGHT:
                yield first, second, coeff
            else:
                yield second, first, coeff

    def coact(self, element) -> TensorElem:
        terms = element.terms if isinstance(element, NCPoly) else {tuple(element): self.ctx.one}
        result: TensorTerms = {}
        for word, coeff in terms.items():
            add_into(result, self.coact_word(word), coeff)
        return TensorElem(self.slots, result)

    @classmethod
    def trivial(cls, host: HopfData, carrier: Presentation, direction: Direction = Direction.RIGHT) -> "Coaction":
        one = host.ctx.one
        table = {}
        for g in range(len(carrier.generators)):
            key = ((g,), ()) if direction is Direction.RIGHT else ((), (g,))
            table[g] = {key: one}
        return cls(direction, host, carrier, table, name=f"trivial coaction on {carrier.name}")

    def __repr__(self) -> str:
        return f"Coaction({self.name})"


class RegularCoaction(Coaction):
    """H coacting on itself by the coproduct."""

    def __init__(self, host: HopfData, direction: Direction = Direction.RIGHT):
        super().__init__(direction, host, host.pres, {}, name=f"regular coaction of {host.name}")

    def coact_word(self, word: Word) -> TensorTerms:
        return self.host.coproduct_word(word)


class AdjointCoaction(Coaction):
    """Right adjoint coaction h ↦ h₂⊗(Sh₁)h₃, computed directly on words."""

    def __init__(self, host: HopfData):
        super().__init__(Direction.RIGHT, host, host.pres, {}, name=f"adjoint coaction of {host.name}")

    def coact_word(self, word: Word) -> TensorTerms:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        pres = self.host.pres
        result: TensorTerms = {}
        for (h1, h2, h3), coeff in self.host.iterated_coproduct_word(word, 3).items():
            for w, c in pres.multiply(self.host.antipode_word(h1), {h3: self.ctx.one}).items():
                accumulate(result, (h2, w), coeff * c)
        self._memo[word] = result
        return result


class InducedCoaction(Coaction):
    """Coaction induced from a module over a quasitriangular host.

    Left modules give the left coaction v ↦ ℛ⁽²⁾⊗ℛ⁽¹⁾▷v, right modules the right
    coaction v ↦ v◁ℛ⁽¹⁾⊗ℛ⁽²⁾.
    """

    def __init__(self, action: "Action", quasitriangular: QuasitriangularElement):
        super().__init__(
            action.direction,
            action.host,
            action.carrier,
            {},
            name=f"coaction induced from {action.name}",
        )
        self.action = action
        self.quasitriangular = quasitriangular

    def coact_word(self, word: Word) -> TensorTerms:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        result: TensorTerms = {}
        for r1, r2, coeff in self.quasitriangular.legs():
            if self.direction is Direction.LEFT:
                for v, c in self.action.act_word(r1, word).items():
                    accumulate(result, (r2, v), coeff * c)
            else:
                for v, c in self.action.act_word(r1, word).items():
                    accumulate(result, (v, r2), coeff * c)
        self._memo[word] = result
        return result


class Action:
    """An action of H on a carrier algebra.

    The table maps (host word, carrier generator) to a carrier polynomial. Products
    in the host use the module law, products in the carrier the module-algebra law
    h▷(bc) = (h₁▷b)(h₂▷c), respectively (bc)◁h = (b◁h₁)(c◁h₂).
    """

    def __init__(
        self,
        direction: Direction,
        host: HopfData,
        carrier: Presentation,
        table: Mapping[Tuple[Word, int], Terms],
        name: str = "",
    ):
        self.direction = direction
        self.host = host
        self.carrier = carrier
        self.table: Dict[Tuple[Word, int], Terms] = {k: dict(v) for k, v in table.items()}
        self.name = name or f"{direction.value} action of {host.name} on {carrier.name}"
        self._memo: Dict[Tuple[Word, Word], Terms] = {}

    @property
    def ctx(self):
        return self.host.ctx

    def require_finite(self) -> None:
        if self.host.basis() is None:
            raise InfiniteHost(f"{self.name}: module data needs a finite-dimensional host")

    def _on_generator(self, h: Word, letter: int) -> Terms:
        if not h:
            return {(letter,): self.ctx.one}
        entry = self.table.get((h, letter))
        if entry is not None:
            return self.carrier.normal_form(entry)
        if len(h) == 1:
            raise CoverageGap(
                f"{self.name}: no action of {self.host.pres.word_text(h)} on "
                f"{self.carrier.generators[letter]}"
            )
        # module law
        if self.direction is Direction.LEFT:
            inner = self.act_word(h[1:], (letter,))
            return self.act_terms(h[:1], inner)
        inner = self.act_word(h[:1], (letter,))
        return self.act_terms(h[1:], inner)

    def act_word(self, h: Word, v: Word) -> Terms:
        """h▷v for a left action, v◁h for a right action."""
        key = (h, v)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if not v:
            eps = self.host.counit_word(h)
            result = {(): eps} if eps else {}
        elif len(v) == 1:
            result = self._on_generator(h, v[0])
        else:
            result = {}
            head, rest = v[:1], v[1:]
            for (h1, h2), coeff in self.host.coproduct_word(h).items():
                left = self.act_word(h1, head)
                if not left:
                    continue
                right = self.act_word(h2, rest)
                if right:
                    add_into(result, self.carrier.multiply(left, right), coeff)
        self._memo[key] = result
        return result

    def act_terms(self, h: Word, terms: Mapping[Word, Scalar]) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            add_into(result, self.act_word(h, word), coeff)
        return result

    def act(self, h, v) -> NCPoly:
        h_terms = h.terms if isinstance(h, NCPoly) else {tuple(h): self.ctx.one}
        v_terms = v.terms if isinstance(v, NCPoly) else {tuple(v): self.ctx.one}
        result: Terms = {}
        for hw, hc in h_terms.items():
            add_into(result, self.act_terms(hw, v_terms), hc)
        return NCPoly(self.carrier, result, reduced=True)

    @classmethod
    def trivial(cls, host: HopfData, carrier: Presentation, direction: Direction = Direction.LEFT) -> "Action":
        return TrivialAction(direction, host, carrier)

    def __repr__(self) -> str:
        return f"Action({self.name})"


class TrivialAction(Action):
    """h▷v = ε(h)v."""

    def __init__(self, direction: Direction, host: HopfData, carrier: Presentation):
        super().__init__(direction, host, carrier, {}, name=f"trivial action on {carrier.name}")

    def act_word(self, h: Word, v: Word) -> Terms:
        eps = self.host.counit_word(h)
        if not eps:
            return {}
        return {w: c * eps for w, c in self.carrier.reduce_word(v).items()}


class AdjointAction(Action):
    """Left adjoint action h▷g = h₁gSh₂ of H on itself."""

    def __init__(self, host: HopfData):
        super().__init__(Direction.LEFT, host, host.pres, {}, name=f"adjoint action of {host.name}")

    def act_word(self, h: Word, v: Word) -> Terms:
        key = (h, v)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        pres = self.host.pres
        result: Terms = {}
        for (h1, h2), coeff in self.host.coproduct_word(h).items():
            left = pres.multiply_words(h1, v)
            add_into(result, pres.multiply(left, self.host.antipode_word(h2)), coeff)
        self._memo[key] = result
        return result


class InducedAction(Action):
    """Action induced from a comodule by a dual-quasitriangular structure.

    Right comodules give v◁h = v⁽¹⁾R(v⁽²⁾⊗h); left comodules give h▷v = R(v⁽¹⁾⊗h)v⁽²⁾.
    """

    def __init__(self, coaction: Coaction, R: Functional):
        direction = coaction.direction
        super().__init__(
            direction, coaction.host, coaction.carrier, {}, name=f"action induced from {coaction.name}"
        )
        self.coaction = coaction
        self.R = R

    def act_word(self, h: Word, v: Word) -> Terms:
        key = (h, v)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result: Terms = {}
        for carrier_leg, host_leg, coeff in self.coaction.split(v):
            value = self.R.evaluate_words(host_leg, h)
            if value:
                accumulate(result, carrier_leg, coeff * value)
        self._memo[key] = result
        return result
