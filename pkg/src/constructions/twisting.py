"""Dual twisting of braided groups and the colour-algebra gauge decomposition."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.braided.braided_hopf import BraidedHopfData
from src.braided.braiding import RightComoduleBraiding
from src.braided.coaction import Coaction, Direction
from src.constructions.models import StructureConstantModel
from src.errors import CoverageGap
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import Cocycle, DQSFunctional, Functional
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import Key, TensorTerms
from src.hopf.twist import TwistedAlgebraModel
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)


class TwistedBraidedModel(StructureConstantModel):
    """B_χ for a braided group B living in H-comodules.

    Right comodules: b·χc = b⁽¹⁾c⁽¹⁾χ⁻¹(b⁽²⁾⊗c⁽²⁾), Δ̲_χb = b₁⁽¹⁾⊗b₂⁽¹⁾χ(b₁⁽²⁾⊗b₂⁽²⁾).
    Left comodules use the mirror χ⁻¹(b⁽¹⁾⊗c⁽¹⁾)b⁽²⁾c⁽²⁾ and χ(b₁⁽¹⁾⊗b₂⁽¹⁾)b₁⁽²⁾⊗b₂⁽²⁾.
    The antipode and counit are those of B.
    """

    def __init__(self, bundle: BraidedHopfData, chi: Cocycle, degree_bound: int):
        if bundle.coaction is None:
            raise CoverageGap(f"{bundle.name} carries no coaction to twist along")
        self.bundle = bundle
        self.chi = chi
        self.coaction: Coaction = bundle.coaction
        pres = bundle.pres
        super().__init__(
            f"{bundle.name}_{chi.name}",
            (pres,),
            [(w,) for w in pres.words_up_to(degree_bound)],
            degree_bound,
            self._twisted_product,
            coproduct=self._twisted_coproduct,
            counit=lambda key: bundle.counit_word(key[0]),
        )

    @property
    def right(self) -> bool:
        return self.coaction.direction is Direction.RIGHT

    def _twisted_product(self, left: Key, right: Key) -> TensorTerms:
        pres = self.bundle.pres
        chi_inv = self.chi.inverse
        result: Terms = {}
        right_legs = list(self.coaction.split(right[0]))
        for b1, b2, bc in self.coaction.split(left[0]):
            for c1, c2, cc in right_legs:
                value = chi_inv.evaluate_words(b2, c2)
                if value:
                    add_into(result, pres.multiply_words(b1, c1), bc * cc * value)
        return {(w,): c for w, c in result.items()}

    def _twisted_coproduct(self, key: Key) -> Dict[Tuple[Key, Key], Scalar]:
        result: Dict[Tuple[Key, Key], Scalar] = {}
        for (b1, b2), c in self.bundle.coproduct_word(key[0]).items():
            second_legs = list(self.coaction.split(b2))
            for u, u_host, uc in self.coaction.split(b1):
                for v, v_host, vc in second_legs:
                    value = self.chi.evaluate_words(u_host, v_host)
                    if value:
                        accumulate(result, ((u,), (v,)), c * uc * vc * value)
        return result

    def antipode_key(self, key: Key) -> TensorTerms:
        return {(w,): c for w, c in self.bundle.antipode_word(key[0]).items()}

    def multiply_words(self, left: Word, right: Word) -> Terms:
        return {k[0]: c for k, c in self.mul_keys((left,), (right,)).items()}

    def multiply(self, left: Terms, right: Terms) -> Terms:
        result: Terms = {}
        for lw, lc in left.items():
            for rw, rc in right.items():
                add_into(result, self.multiply_words(lw, rw), lc * rc)
        return result

    def trivial_on(self, bound: Optional[int] = None) -> bool:
        """True when the twist leaves every product and coproduct unchanged."""
        pres = self.bundle.pres
        bound = self.degree_bound if bound is None else bound
        for key in self.basis:
            if self.degree(key) > bound:
                continue
            expected = {((a,), (b,)): c for (a, b), c in self.bundle.coproduct_word(key[0]).items()}
            if self.coproduct_key(key) != expected:
                return False
            for other in self.basis:
                if self.degree(key) + self.degree(other) > bound:
                    continue
                if self.multiply_words(key[0], other[0]) != pres.multiply_words(key[0], other[0]):
                    return False
        return True


def twist_braided(bundle: BraidedHopfData, chi: Cocycle, degree_bound: int) -> TwistedBraidedModel:
    logger.info("twisting %s by %s up to degree %d", bundle.name, chi.name, degree_bound)
    return TwistedBraidedModel(bundle, chi, degree_bound)


class TwistedDQS(Functional):
    """R_χ(h⊗g) = χ(g₁⊗h₁)R(h₂⊗g₂)χ⁻¹(h₃⊗g₃), read off a twisted host model."""

    def __init__(self, model: TwistedAlgebraModel):
        super().__init__(model.host, f"{model.R.name}_{model.chi.name}")
        self.model = model
        self._memo: Dict[Tuple[Word, Word], Scalar] = {}

    def evaluate_words(self, left: Word, right: Word) -> Scalar:
        key = (left, right)
        cached = self._memo.get(key)
        if cached is None:
            cached = self.model.R_chi(left, right)
            self._memo[key] = cached
        return cached


def twisted_braiding(
    bundle: BraidedHopfData, chi: Cocycle, R: DQSFunctional, degree_bound: int = 4
) -> RightComoduleBraiding:
    """Braiding of B_χ in right comodules of the twisted host."""
    model = TwistedAlgebraModel(bundle.coaction.host, chi, R, degree_bound)
    twisted = TwistedDQS(model)
    return RightComoduleBraiding(twisted, bundle.coaction, bundle.coaction, name=f"Ψ_{chi.name}")


# -- colour algebras ------------------------------------------------------------------


@dataclass
class ColourDecomposition:
    """ω = 2a + b over Z/m with a antisymmetric and b valued in {0, m/2}."""

    m: int
    omega: Tuple[Tuple[int, ...], ...]
    chi_exponents: Tuple[Tuple[int, ...], ...]
    beta0_exponents: Tuple[Tuple[int, ...], ...]

    ok = True

    @property
    def rank(self) -> int:
        return len(self.omega)

    @property
    def super_like(self) -> bool:
        return any(any(row) for row in self.beta0_exponents)

    def __str__(self) -> str:
        return (
            f"m={self.m}: chi exponents {[list(r) for r in self.chi_exponents]}, "
            f"beta0 exponents {[list(r) for r in self.beta0_exponents]}"
        )


@dataclass
class NoDecomposition:
    m: int
    reason: str

    ok = False

    def __str__(self) -> str:
        return f"m={self.m}: no decomposition ({self.reason})"


def _normalize_form(m: int, omega: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) % m for x in row) for row in omega)


def colour_sqrt_decompose(m: int, omega: Sequence[Sequence[int]]) -> Union[ColourDecomposition, NoDecomposition]:
    """Split a skew form into a square root part and a ±1 part."""
    if m < 1:
        return NoDecomposition(m, "modulus must be positive")
    n = len(omega)
    if any(len(row) != n for row in omega):
        return NoDecomposition(m, "form is not square")
    form = _normalize_form(m, omega)
    for i in range(n):
        for j in range(n):
            if (form[i][j] + form[j][i]) % m:
                return NoDecomposition(m, "form is not antisymmetric")
    zeros = tuple((0,) * n for _ in range(n))
    if m == 1:
        return ColourDecomposition(m, form, zeros, zeros)
    if m % 2:
        half = pow(2, -1, m)
        chi = tuple(tuple(x * half % m for x in row) for row in form)
        return ColourDecomposition(m, form, chi, zeros)
    if m % 4 == 0:
        return NoDecomposition(m, "m divisible by 4 is outside the square-root construction")
    a = [[0] * n for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = form[i][i]
        for j in range(i + 1, n):
            b[i][j] = m // 2 if form[i][j] % 2 else 0
            a[i][j] = ((form[i][j] - b[i][j]) % m) // 2
            a[j][i] = -a[i][j] % m
            b[j][i] = b[i][j]
    return ColourDecomposition(m, form, tuple(map(tuple, a)), tuple(map(tuple, b)))


def exponent_table(host: HopfData, exponents: Sequence[Sequence[int]]) -> Dict[Tuple[int, int], Scalar]:
    """Generator table g_i⊗g_j ↦ q^e_ij for a group algebra on g_1..g_n."""
    ctx = host.ctx
    table = {}
    for i, row in enumerate(exponents):
        for j, e in enumerate(row):
            table[(i, j)] = ctx.q_pow(e)
    return table


@dataclass
class ColourTwistResult:
    decomposition: Union[ColourDecomposition, NoDecomposition]
    beta_chi: Dict[Tuple[Word, Word], Scalar] = field(default_factory=dict)
    pairs_checked: int = 0

    @property
    def values(self) -> List[Scalar]:
        return sorted(set(self.beta_chi.values()), key=str)

    @property
    def trivial(self) -> bool:
        return bool(self.beta_chi) and all(v.is_one() for v in self.beta_chi.values())

    @property
    def signs_only(self) -> bool:
        return all(v.is_one() or (-v).is_one() for v in self.beta_chi.values())


def colour_twist(
    host: HopfData,
    R: DQSFunctional,
    decomposition: Union[ColourDecomposition, NoDecomposition],
) -> ColourTwistResult:
    """Twist the bicharacter of kG by the square-root cocycle, exhaustively on G×G."""
    if not decomposition.ok:
        logger.info("%s", decomposition)
        return ColourTwistResult(decomposition)
    chi = Cocycle(host, exponent_table(host, decomposition.chi_exponents), name="chi")
    model = TwistedAlgebraModel(host, chi, R, None)
    elements = host.basis()
    values: Dict[Tuple[Word, Word], Scalar] = {}
    for s in elements:
        for t in elements:
            values[(s, t)] = model.R_chi(s, t)
    logger.info("colour twist m=%d: %d pairs", decomposition.m, len(values))
    return ColourTwistResult(decomposition, values, len(values))


def _degree(coaction: Coaction, letter: int) -> Word:
    legs = list(coaction.split((letter,)))
    if len(legs) != 1 or legs[0][0] != (letter,):
        raise CoverageGap(f"{coaction.carrier.generators[letter]} is not homogeneous")
    return legs[0][1]


def colour_enveloping_check(model: TwistedBraidedModel, R: Functional) -> List[Tuple[str, str]]:
    """Check x·χy − β_χ(s,t)y·χx = χ⁻¹(s,t)(xy − β(s,t)yx) on generator pairs.

    Returns the failing pairs with their residuals; an empty list means the
    twisted commutators are the old brackets rescaled by χ⁻¹.
    """
    bundle = model.bundle
    pres = bundle.pres
    chi, chi_inv = model.chi, model.chi.inverse
    failures = []
    letters = range(len(pres.generators))
    for x in letters:
        s = _degree(model.coaction, x)
        for y in letters:
            t = _degree(model.coaction, y)
            beta = R.evaluate_words(s, t)
            beta_chi = chi.evaluate_words(t, s) * beta * chi_inv.evaluate_words(s, t)
            residual = dict(model.multiply_words((x,), (y,)))
            add_into(residual, model.multiply_words((y,), (x,)), -beta_chi)
            bracket = dict(pres.multiply_words((x,), (y,)))
            add_into(bracket, pres.multiply_words((y,), (x,)), -beta)
            add_into(residual, bracket, -chi_inv.evaluate_words(s, t))
            if residual:
                label = f"[{pres.generators[x]},{pres.generators[y]}]"
                failures.append((label, pres.format_terms(residual)))
    return failures
