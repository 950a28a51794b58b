"""Dual twisting of Hopf algebras by cocycles, and the inner-antipode-square check."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.errors import BasisTooLarge, NoSolution, UnboundedTwist
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import Cocycle, DQSFunctional, Functional
from src.hopf.hopf_data import HopfData
from src.hopf.linalg import solve_linear_system
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)


class TwistedAlgebraModel:
    """H with product h·χg = χ(h₁⊗g₁)h₂g₂χ⁻¹(h₃⊗g₃) and coproduct unchanged.

    For finite-dimensional hosts the basis is exact; otherwise it is the set of
    normal words up to `degree_bound` and products are only meaningful while the
    total degree stays within the bound.
    """

    def __init__(self, host: HopfData, chi: Cocycle, R: Optional[DQSFunctional], degree_bound: Optional[int]):
        self.host = host
        self.chi = chi
        self.R = R
        basis = host.basis()
        if basis is None:
            if degree_bound is None:
                raise UnboundedTwist(f"{host.name} is infinite-dimensional; give a degree bound")
            basis = host.words_up_to(degree_bound)
        self.basis: List[Word] = basis
        self.degree_bound = degree_bound
        self._mul_memo: Dict[Tuple[Word, Word], Terms] = {}

    @property
    def truncated(self) -> bool:
        return self.host.basis() is None

    def mul_words(self, left: Word, right: Word) -> Terms:
        key = (left, right)
        cached = self._mul_memo.get(key)
        if cached is not None:
            return cached
        pres = self.host.pres
        chi, chi_inv = self.chi, self.chi.inverse
        result: Terms = {}
        right_legs = self.host.iterated_coproduct_word(right, 3)
        for (h1, h2, h3), hc in self.host.iterated_coproduct_word(left, 3).items():
            for (g1, g2, g3), gc in right_legs.items():
                a = chi.evaluate_words(h1, g1)
                if not a:
                    continue
                b = chi_inv.evaluate_words(h3, g3)
                if not b:
                    continue
                add_into(result, pres.multiply_words(h2, g2), hc * gc * a * b)
        self._mul_memo[key] = result
        return result

    def mul(self, left: Terms, right: Terms) -> Terms:
        result: Terms = {}
        for lw, lc in left.items():
            for rw, rc in right.items():
                add_into(result, self.mul_words(lw, rw), lc * rc)
        return result

    def R_chi(self, left: Word, right: Word) -> Scalar:
        """R_χ(h⊗g) = χ(g₁⊗h₁)R(h₂⊗g₂)χ⁻¹(h₃⊗g₃)."""
        if self.R is None:
            raise NoSolution(f"{self.host.name} carries no dual-quasitriangular structure")
        total = self.host.ctx.zero
        right_legs = self.host.iterated_coproduct_word(right, 3)
        for (h1, h2, h3), hc in self.host.iterated_coproduct_word(left, 3).items():
            for (g1, g2, g3), gc in right_legs.items():
                a = self.chi.evaluate_words(g1, h1)
                if not a:
                    continue
                b = self.R.evaluate_words(h2, g2)
                if not b:
                    continue
                c = self.chi.inverse.evaluate_words(h3, g3)
                if c:
                    total = total + hc * gc * a * b * c
        return total

    def product_table(self) -> Dict[Tuple[Word, Word], Terms]:
        table = {}
        for left in self.basis:
            for right in self.basis:
                if self.degree_bound is None or len(left) + len(right) <= self.degree_bound:
                    table[(left, right)] = self.mul_words(left, right)
        return table


def dual_twist_hopf(
    host: HopfData, chi: Cocycle, R: Optional[DQSFunctional] = None, degree_bound: Optional[int] = None
) -> TwistedAlgebraModel:
    return TwistedAlgebraModel(host, chi, R, degree_bound)


@dataclass
class InnerCheckResult:
    inner: bool
    method: str
    sigma: Dict[Word, Scalar] = field(default_factory=dict)
    degree_bound: int = 0


class DrinfeldFunctional:
    """σ(h) = R(h₂⊗Sh₁) as a linear functional on H."""

    def __init__(self, R: DQSFunctional):
        self.R = R
        self.host = R.host

    def __call__(self, word: Word) -> Scalar:
        total = self.host.ctx.zero
        for (h1, h2), c in self.host.coproduct_word(word).items():
            total = total + c * self.R.evaluate(h2, self.host.antipode_word(h1))
        return total


def _inner_equations(host: HopfData, words: List[Word]):
    """Rows of S²*σ = σ*id: for each h and output word w, a map σ-unknown -> coefficient."""
    index = set(words)
    equations: List[Dict[Word, Scalar]] = []
    for h in words:
        rows: Dict[Word, Dict[Word, Scalar]] = {}
        for (h1, h2), c in host.coproduct_word(h).items():
            for w, s in host.antipode_terms(host.antipode_word(h1)).items():
                row = rows.setdefault(w, {})
                accumulate(row, h2, c * s)
            row = rows.setdefault(h2, {})
            accumulate(row, h1, -c)
        for row in rows.values():
            unknown = [u for u in row if u not in index]
            if unknown:
                raise BasisTooLarge(f"coproduct of {h} leaves the truncated basis")
            if row:
                equations.append(row)
    return equations


def antipode_square_inner_check(
    host: HopfData, R: DQSFunctional, degree_bound: int = 2, basis_limit: int = 4000
) -> InnerCheckResult:
    """Decide whether S² = σ*id*σ⁻¹ on words up to the degree bound.

    The functional σ(h) = R(h₂⊗Sh₁) is tried first; otherwise existence of some σ
    with σ(1) = 1 is decided by an exact linear solve.
    """
    words = host.basis() or host.words_up_to(degree_bound)
    words = [w for w in words if len(w) <= degree_bound]
    if len(words) > basis_limit:
        raise BasisTooLarge(f"{len(words)} basis words exceed the limit of {basis_limit}")
    equations = _inner_equations(host, words)

    candidate = DrinfeldFunctional(R)
    sigma = {w: candidate(w) for w in words}
    if all(sum((c * sigma[u] for u, c in row.items()), host.ctx.zero) == 0 for row in equations):
        logger.debug("%s: antipode square inner via R(h2⊗Sh1)", host.name)
        return InnerCheckResult(True, "drinfeld", sigma, degree_bound)

    rhs = [host.ctx.zero] * len(equations)
    equations.append({(): host.ctx.one})
    rhs.append(host.ctx.one)
    try:
        solution = solve_linear_system(host.ctx, equations, rhs, words, limit=basis_limit)
    except NoSolution:
        return InnerCheckResult(False, "linear", {}, degree_bound)
    return InnerCheckResult(True, "linear", solution.values, degree_bound)
