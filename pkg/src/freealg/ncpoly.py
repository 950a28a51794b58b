"""Noncommutative polynomials in normal form over a presentation."""
from typing import Iterator, Tuple, Union

from src.errors import AlphabetMismatch
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, add_into, scaled, word_key
from src.scalar.field import Scalar


class NCPoly:
    """A normal-form element of a finitely presented algebra.

    Terms are kept reduced against the presentation; iteration follows the
    degree-lexicographic order.
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Terms, reduced: bool = False):
        self.pres = pres
        cleaned = {w: c for w, c in terms.items() if c}
        self.terms: Terms = cleaned if reduced else pres.normal_form(cleaned)

    @classmethod
    def zero(cls, pres: Presentation) -> "NCPoly":
        return cls(pres, {}, reduced=True)

    @classmethod
    def one(cls, pres: Presentation) -> "NCPoly":
        return cls(pres, {(): pres.ctx.one}, reduced=True)

    @classmethod
    def constant(cls, pres: Presentation, value: Union[int, Scalar]) -> "NCPoly":
        return cls(pres, {(): pres.ctx.scalar(value)}, reduced=True)

    @classmethod
    def from_word(cls, pres: Presentation, word: Word, coeff: Scalar = None) -> "NCPoly":
        coeff = pres.ctx.one if coeff is None else coeff
        return cls(pres, {w: c * coeff for w, c in pres.reduce_word(word).items()}, reduced=True)

    @classmethod
    def gen(cls, pres: Presentation, name: str) -> "NCPoly":
        return cls.from_word(pres, (pres.gen(name),))

    @classmethod
    def parse(cls, pres: Presentation, text: str, functions=None) -> "NCPoly":
        from src.freealg.expr import PolyEvaluator

        return PolyEvaluator(pres.ctx, [pres], functions or {}).polynomial(text)

    def _check(self, other: "NCPoly") -> None:
        if not self.pres.compatible(other.pres):
            raise AlphabetMismatch(f"cannot combine {self.pres.name} and {other.pres.name} polynomials")

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)):
            return NCPoly.constant(self.pres, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        result = dict(self.terms)
        add_into(result, other.terms)
        return NCPoly(self.pres, result, reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.pres, scaled(self.terms, -self.pres.ctx.one), reduced=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(self.pres.ctx.scalar(other))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return nc_mul(self, other, self.pres)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(self.pres.ctx.scalar(other))
        return NotImplemented

    def __pow__(self, n: int) -> "NCPoly":
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = NCPoly.one(self.pres)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, factor: Scalar) -> "NCPoly":
        return NCPoly(self.pres, scaled(self.terms, factor), reduced=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Scalar)):
            other = NCPoly.constant(self.pres, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.pres.compatible(other.pres) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.pres.signature, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Word, Scalar]]:
        for word in sorted(self.terms, key=word_key):
            yield word, self.terms[word]

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, word: Word) -> Scalar:
        return self.terms.get(word, self.pres.ctx.zero)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def __str__(self) -> str:
        return self.pres.format_terms(self.terms)

    def __repr__(self) -> str:
        return f"NCPoly({self.pres.name}: {self})"


def nc_mul(p: NCPoly, r: NCPoly, pres: Presentation) -> NCPoly:
    """Normal form of the product p*r."""
    for operand in (p, r):
        if not pres.compatible(operand.pres):
            raise AlphabetMismatch(f"{operand.pres.name} polynomial used in {pres.name}")
    return NCPoly(pres, pres.multiply(p.terms, r.terms), reduced=True)


def normal_form(p: NCPoly, pres: Presentation) -> NCPoly:
    """Reduce p against the rules of pres; p may carry unreduced terms."""
    if not pres.compatible(p.pres):
        raise AlphabetMismatch(f"{p.pres.name} polynomial used in {pres.name}")
    return NCPoly(pres, p.terms)
