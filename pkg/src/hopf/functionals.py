"""Bilinear functionals H⊗H -> k: dual-quasitriangular structures, cocycles, convolution."""
import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.errors import AlphabetMismatch, NoSolution
from src.freealg.ncpoly import NCPoly
from src.freealg.terms import Terms, Word
from src.hopf.hopf_data import HopfData
from src.hopf.linalg import solve_linear_system
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)

GeneratorTable = Dict[Tuple[int, int], Scalar]


class Law(Enum):
    """How a form splits a product in one argument.

    FORWARD on the left:  F(hg⊗f) = F(h⊗f₁)F(g⊗f₂)
    REVERSE on the left:  F(hg⊗f) = F(h⊗f₂)F(g⊗f₁)
    FORWARD on the right: F(h⊗gf) = F(h₁⊗g)F(h₂⊗f)
    REVERSE on the right: F(h⊗gf) = F(h₁⊗f)F(h₂⊗g)
    """

    FORWARD = "forward"
    REVERSE = "reverse"


class Functional(ABC):
    """A bilinear map H⊗H -> k evaluated on words."""

    def __init__(self, host: HopfData, name: str = ""):
        self.host = host
        self.name = name

    @property
    def ctx(self):
        return self.host.ctx

    @abstractmethod
    def evaluate_words(self, left: Word, right: Word) -> Scalar:
        ...

    def _terms(self, element: Union[NCPoly, Word, Mapping]) -> Mapping[Word, Scalar]:
        if isinstance(element, NCPoly):
            if not self.host.pres.compatible(element.pres):
                raise AlphabetMismatch(f"{element.pres.name} element passed to {self.name or 'functional'}")
            return element.terms
        if isinstance(element, tuple):
            return {element: self.ctx.one}
        return element

    def evaluate(self, left, right) -> Scalar:
        total = self.ctx.zero
        for lw, lc in self._terms(left).items():
            for rw, rc in self._terms(right).items():
                value = self.evaluate_words(lw, rw)
                if value:
                    total = total + lc * rc * value
        return total

    def __call__(self, left, right) -> Scalar:
        return self.evaluate(left, right)


class BilinearForm(Functional):
    """A form given on generator pairs and extended to words by two product laws."""

    def __init__(
        self,
        host: HopfData,
        table: Mapping[Tuple[int, int], Scalar],
        left_law: Law,
        right_law: Law,
        name: str = "",
        free: bool = False,
    ):
        super().__init__(host, name)
        self.table: GeneratorTable = {k: v for k, v in table.items() if v}
        self.left_law = left_law
        self.right_law = right_law
        # free=True splits words without rewriting their legs
        self._split = host.free_coproduct_word if free else host.coproduct_word
        self._memo: Dict[Tuple[Word, Word], Scalar] = {}

    def evaluate_words(self, left: Word, right: Word) -> Scalar:
        key = (left, right)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = self._compute(left, right)
        self._memo[key] = value
        return value

    def _compute(self, left: Word, right: Word) -> Scalar:
        host = self.host
        if not left:
            return host.counit_word(right)
        if not right:
            return host.counit_word(left)
        if len(left) == 1 and len(right) == 1:
            return self.table.get((left[0], right[0]), self.ctx.zero)
        total = self.ctx.zero
        if len(left) > 1:
            head, rest = left[:1], left[1:]
            for (f1, f2), c in self._split(right).items():
                if self.left_law is Law.FORWARD:
                    a = self.evaluate_words(head, f1)
                    b = self.evaluate_words(rest, f2) if a else None
                else:
                    a = self.evaluate_words(head, f2)
                    b = self.evaluate_words(rest, f1) if a else None
                if a and b:
                    total = total + c * a * b
            return total
        head, rest = right[:1], right[1:]
        for (h1, h2), c in self._split(left).items():
            if self.right_law is Law.FORWARD:
                a = self.evaluate_words(h1, head)
                b = self.evaluate_words(h2, rest) if a else None
            else:
                a = self.evaluate_words(h1, rest)
                b = self.evaluate_words(h2, head) if a else None
            if a and b:
                total = total + c * a * b
        return total

    def entry(self, left: str, right: str) -> Scalar:
        pres = self.host.pres
        return self.evaluate_words((pres.gen(left),), (pres.gen(right),))


def counit_table(host: HopfData) -> GeneratorTable:
    """Generator entries of ε⊗ε."""
    letters = range(len(host.pres.generators))
    counits = [host.counit_word((i,)) for i in letters]
    return {(i, j): counits[i] * counits[j] for i in letters for j in letters if counits[i] and counits[j]}


class DQSFunctional(BilinearForm):
    """Dual-quasitriangular structure R with its convolution inverse.

    R(hg⊗f) = R(h⊗f₁)R(g⊗f₂) and R(h⊗gf) = R(h₁⊗f)R(h₂⊗g). When no inverse
    table is given it is computed on generators as R⁻¹(x⊗y) = R(Sx⊗y).
    """

    def __init__(
        self,
        host: HopfData,
        table: Mapping[Tuple[int, int], Scalar],
        inverse_table: Optional[Mapping[Tuple[int, int], Scalar]] = None,
        name: str = "R",
    ):
        super().__init__(host, table, Law.FORWARD, Law.REVERSE, name)
        if inverse_table is None:
            inverse_table = antipode_inverse_table(self)
        self.inverse = BilinearForm(host, inverse_table, Law.REVERSE, Law.FORWARD, name + "^-1")

    @classmethod
    def trivial(cls, host: HopfData) -> "DQSFunctional":
        """R = ε⊗ε."""
        table = counit_table(host)
        return cls(host, table, table, name="trivial")


def eval_R(a, b, R: DQSFunctional) -> Scalar:
    return R.evaluate(a, b)


class Cocycle(BilinearForm):
    """Bicharacter-type dual 2-cocycle χ; its inverse is χ(S⊗id)."""

    def __init__(
        self,
        host: HopfData,
        table: Mapping[Tuple[int, int], Scalar],
        inverse_table: Optional[Mapping[Tuple[int, int], Scalar]] = None,
        name: str = "chi",
    ):
        super().__init__(host, table, Law.FORWARD, Law.FORWARD, name)
        if inverse_table is None:
            inverse_table = antipode_inverse_table(self)
        self.inverse = BilinearForm(host, inverse_table, Law.REVERSE, Law.REVERSE, name + "^-1")

    @classmethod
    def trivial(cls, host: HopfData) -> "Cocycle":
        table = counit_table(host)
        return cls(host, table, table, name="trivial")


def antipode_inverse_table(form: BilinearForm) -> GeneratorTable:
    """Generator entries F⁻¹(x⊗y) = F(Sx⊗y)."""
    host = form.host
    letters = range(len(host.pres.generators))
    table: GeneratorTable = {}
    for i in letters:
        antipode = host.antipode_word((i,))
        for j in letters:
            value = form.evaluate(antipode, (j,))
            if value:
                table[(i, j)] = value
    return table


class CounitForm(Functional):
    """ε⊗ε, the unit of the convolution algebra."""

    def evaluate_words(self, left: Word, right: Word) -> Scalar:
        return self.host.counit_word(left) * self.host.counit_word(right)


class Convolution(Functional):
    """(F*G)(h⊗g) = F(h₁⊗g₁)G(h₂⊗g₂)."""

    def __init__(self, first: Functional, second: Functional):
        if first.host is not second.host and not first.host.pres.compatible(second.host.pres):
            raise AlphabetMismatch("convolution of functionals on different hosts")
        super().__init__(first.host, f"{first.name}*{second.name}")
        self.first = first
        self.second = second

    def evaluate_words(self, left: Word, right: Word) -> Scalar:
        total = self.ctx.zero
        right_split = self.host.coproduct_word(right)
        for (h1, h2), hc in self.host.coproduct_word(left).items():
            for (g1, g2), gc in right_split.items():
                a = self.first.evaluate_words(h1, g1)
                if a:
                    b = self.second.evaluate_words(h2, g2)
                    if b:
                        total = total + hc * gc * a * b
        return total


def convolve(first: Functional, second: Functional) -> Convolution:
    return Convolution(first, second)


def convolution_failures(
    first: Functional, second: Functional, degree_bound: int
) -> List[Tuple[Word, Word, Scalar, Scalar]]:
    """Word pairs of total degree <= bound where F*G or G*F differs from ε⊗ε."""
    unit = CounitForm(first.host)
    forward, backward = Convolution(first, second), Convolution(second, first)
    failures = []
    words = first.host.words_up_to(degree_bound)
    for u in words:
        for w in words:
            if len(u) + len(w) > degree_bound:
                continue
            expected = unit.evaluate_words(u, w)
            for product in (forward, backward):
                got = product.evaluate_words(u, w)
                if got != expected:
                    failures.append((u, w, got, expected))
                    break
    return failures


def check_convolution_inverse(first: Functional, second: Functional, degree_bound: int) -> bool:
    return not convolution_failures(first, second, degree_bound)


def complete_grouplike_entries(
    host: HopfData,
    table: Mapping[Tuple[int, int], Scalar],
    left_law: Law,
    right_law: Law,
    defines: Mapping[int, Terms],
    inverse_pairs: Iterable[Tuple[int, int]],
) -> GeneratorTable:
    """Fill in table entries involving defined generators and inverse generators.

    A defined generator d = P (P free of d) gets F(d⊗x) = F(P⊗x) and F(x⊗d) = F(x⊗P),
    with P expanded in the free algebra so that Δ(P) never reintroduces d.
    For an inverse pair (g, g⁻¹) the column F(·⊗g⁻¹) is solved from
    F(y⊗g g⁻¹) = ε(y) and then the row F(g⁻¹⊗·) from F(g g⁻¹⊗x) = ε(x).
    Both systems are linear when Δ of every generator is a sum of generator pairs.
    """
    completed: GeneratorTable = dict(table)
    letters = list(range(len(host.pres.generators)))

    for d, poly in defines.items():
        base = BilinearForm(host, completed, left_law, right_law, free=True)
        for x in letters:
            if x == d:
                continue
            x_terms = defines.get(x, {(x,): host.ctx.one})
            completed[(d, x)] = base.evaluate(poly, x_terms)
            completed[(x, d)] = base.evaluate(x_terms, poly)
        completed[(d, d)] = base.evaluate(poly, poly)

    for g, gi in inverse_pairs:
        _solve_inverse_column(host, completed, left_law, right_law, g, gi, letters)
        _solve_inverse_row(host, completed, left_law, right_law, g, gi, letters)
    return {k: v for k, v in completed.items() if v}


def _single(word: Word) -> int:
    if len(word) != 1:
        raise NoSolution("grouplike completion needs generator-to-generator coproducts")
    return word[0]


def _solve_inverse_column(host, table, left_law, right_law, g, gi, letters) -> None:
    unknowns = [t for t in letters if t != gi]
    equations, rhs = [], []
    for y in unknowns:
        row: Dict[int, Scalar] = {}
        for (y1, y2), c in host.coproduct_word((y,)).items():
            # F(y⊗g g⁻¹): FORWARD gives F(y₁⊗g)F(y₂⊗g⁻¹), REVERSE gives F(y₁⊗g⁻¹)F(y₂⊗g)
            known_leg, unknown_leg = (y1, y2) if right_law is Law.FORWARD else (y2, y1)
            known = table.get((_single(known_leg), g), host.ctx.zero)
            if known:
                t = _single(unknown_leg)
                row[t] = row.get(t, host.ctx.zero) + c * known
        equations.append(row)
        rhs.append(host.counit_word((y,)))
    solution = solve_linear_system(host.ctx, equations, rhs, unknowns)
    for t, value in solution.values.items():
        table[(t, gi)] = value


def _solve_inverse_row(host, table, left_law, right_law, g, gi, letters) -> None:
    equations, rhs = [], []
    for x in letters:
        row: Dict[int, Scalar] = {}
        for (x1, x2), c in host.coproduct_word((x,)).items():
            # F(g g⁻¹⊗x): FORWARD gives F(g⊗x₁)F(g⁻¹⊗x₂), REVERSE gives F(g⊗x₂)F(g⁻¹⊗x₁)
            known_leg, unknown_leg = (x1, x2) if left_law is Law.FORWARD else (x2, x1)
            known = table.get((g, _single(known_leg)), host.ctx.zero)
            if known:
                t = _single(unknown_leg)
                row[t] = row.get(t, host.ctx.zero) + c * known
        equations.append(row)
        rhs.append(host.counit_word((x,)))
    solution = solve_linear_system(host.ctx, equations, rhs, letters)
    for t, value in solution.values.items():
        table[(gi, t)] = value


def derived_table(form: Functional, letters: Sequence[int]) -> GeneratorTable:
    """Evaluate a functional on all generator pairs."""
    table: GeneratorTable = {}
    for i in letters:
        for j in letters:
            value = form.evaluate_words((i,), (j,))
            if value:
                table[(i, j)] = value
    return table
