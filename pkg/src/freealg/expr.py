"""Evaluate parsed expressions into polynomials and tensors over presentations."""
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Sequence, Tuple

from src.errors import ParseError
from src.freealg.ncpoly import NCPoly
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate, add_into, scaled
from src.scalar.field import FieldContext, Scalar
from src.scalar.syntax import (
    BinOp,
    Call,
    Name,
    Neg,
    Node,
    Num,
    Pow,
    Tensor,
    parse_expression,
    split_identifier,
)

# function name -> presentation name -> linear map on words
FunctionTable = Mapping[str, Mapping[str, Callable[[Word], Terms]]]


@dataclass
class Value:
    """Rank-tagged linear combination; keys are tuples of `rank` words."""

    rank: int
    terms: Dict[Tuple[Word, ...], Scalar]

    def promoted(self, rank: int) -> "Value":
        if self.rank == rank:
            return self
        if self.rank != 0:
            raise ParseError(f"cannot combine a rank-{self.rank} term with a rank-{rank} term")
        empty = ((),) * rank
        return Value(rank, {empty: c for c in self.terms.values() if c})


class PolyEvaluator:
    """Evaluates expressions whose tensor slots live in the given presentations.

    Juxtaposed identifiers such as `ad` split into generators of the slot they
    appear in; `q` is the field parameter wherever it occurs.
    """

    def __init__(self, ctx: FieldContext, slots: Sequence[Presentation], functions: FunctionTable = None):
        self.ctx = ctx
        self.slots = list(slots)
        self.functions = functions or {}

    # -- public entry points ------------------------------------------------------

    def evaluate(self, text: str) -> Value:
        node = parse_expression(text, functions=tuple(self.functions) or ("S",))
        return self._eval(node, 0)

    def tensor_terms(self, text: str, rank: int = None) -> Dict[Tuple[Word, ...], Scalar]:
        rank = len(self.slots) if rank is None else rank
        value = self.evaluate(text).promoted(rank)
        return value.terms

    def polynomial(self, text: str) -> NCPoly:
        value = self.evaluate(text).promoted(1)
        return NCPoly(self.slots[0], {key[0]: c for key, c in value.terms.items()}, reduced=True)

    def scalar(self, text: str) -> Scalar:
        value = self.evaluate(text)
        if value.rank != 0:
            raise ParseError(f"expected a scalar, got {text!r}")
        return value.terms.get((), self.ctx.zero)

    # -- evaluation -----------------------------------------------------------------

    def _slot(self, offset: int, column: int = 0) -> Presentation:
        if offset >= len(self.slots):
            raise ParseError(f"too many tensor factors (expected {len(self.slots)})", column=column)
        return self.slots[offset]

    def _constant(self, value: Scalar) -> Value:
        return Value(0, {(): value} if value else {})

    def _eval(self, node: Node, offset: int) -> Value:
        if isinstance(node, Num):
            return self._constant(self.ctx.scalar(node.value))
        if isinstance(node, Name):
            return self._name(node, offset)
        if isinstance(node, Neg):
            operand = self._eval(node.operand, offset)
            return Value(operand.rank, scaled(operand.terms, -self.ctx.one))
        if isinstance(node, BinOp):
            return self._binop(node, offset)
        if isinstance(node, Pow):
            return self._pow(node, offset)
        if isinstance(node, Tensor):
            left = self._eval(node.left, offset)
            left = left.promoted(max(left.rank, 1))
            right = self._eval(node.right, offset + left.rank)
            right = right.promoted(max(right.rank, 1))
            terms: Dict[Tuple[Word, ...], Scalar] = {}
            for lk, lc in left.terms.items():
                for rk, rc in right.terms.items():
                    accumulate(terms, lk + rk, lc * rc)
            return Value(left.rank + right.rank, terms)
        if isinstance(node, Call):
            return self._call(node, offset)
        raise ParseError(f"unsupported expression node {node!r}")

    def _name(self, node: Name, offset: int) -> Value:
        if node.text == "q":
            return self._constant(self.ctx.q)
        pres = self._slot(offset, node.column)
        parts = split_identifier(node.text, list(pres.generators) + ["q"])
        if parts is None:
            raise ParseError(f"unknown symbol {node.text!r} in {pres.name}", column=node.column)
        coeff = self.ctx.q ** parts.count("q")
        word = tuple(pres.index[p] for p in parts if p != "q")
        if not word:
            return self._constant(coeff)
        return Value(1, {(w,): c * coeff for w, c in pres.reduce_word(word).items()})

    def _product(self, left: Value, right: Value, offset: int) -> Value:
        if left.rank == 0 or right.rank == 0:
            scalar_side, other = (left, right) if left.rank == 0 else (right, left)
            factor = scalar_side.terms.get((), self.ctx.zero)
            return Value(other.rank, scaled(other.terms, factor))
        if left.rank != right.rank:
            raise ParseError(f"cannot multiply rank-{left.rank} and rank-{right.rank} terms")
        slots = [self._slot(offset + i) for i in range(left.rank)]
        terms: Dict[Tuple[Word, ...], Scalar] = {}
        for lk, lc in left.terms.items():
            for rk, rc in right.terms.items():
                partial: Dict[Tuple[Word, ...], Scalar] = {(): lc * rc}
                for pres, lw, rw in zip(slots, lk, rk):
                    following: Dict[Tuple[Word, ...], Scalar] = {}
                    for prefix, pc in partial.items():
                        for w, c in pres.multiply_words(lw, rw).items():
                            accumulate(following, prefix + (w,), pc * c)
                    partial = following
                add_into(terms, partial)
        return Value(left.rank, terms)

    def _binop(self, node: BinOp, offset: int) -> Value:
        left = self._eval(node.left, offset)
        right = self._eval(node.right, offset)
        if node.op in ("+", "-"):
            rank = max(left.rank, right.rank)
            left, right = left.promoted(rank), right.promoted(rank)
            terms = dict(left.terms)
            add_into(terms, right.terms, self.ctx.one if node.op == "+" else -self.ctx.one)
            return Value(rank, terms)
        if node.op == "*":
            return self._product(left, right, offset)
        if right.rank != 0:
            raise ParseError("division is only defined by scalars")
        return Value(left.rank, scaled(left.terms, right.terms.get((), self.ctx.zero).inverse()))

    def _pow(self, node: Pow, offset: int) -> Value:
        base = self._eval(node.base, offset)
        if base.rank == 0:
            return self._constant(base.terms.get((), self.ctx.zero) ** node.exponent)
        if node.exponent < 0:
            raise ParseError("negative powers are only defined for scalars")
        result = self._constant(self.ctx.one)
        for _ in range(node.exponent):
            result = self._product(result, base, offset)
        return result

    def _call(self, node: Call, offset: int) -> Value:
        pres = self._slot(offset, node.column)
        table = self.functions.get(node.func, {})
        function = table.get(pres.name)
        if function is None:
            raise ParseError(f"{node.func}() is not available on {pres.name}", column=node.column)
        argument = self._eval(node.arg, offset)
        argument = argument.promoted(max(argument.rank, 1))
        if argument.rank != 1:
            raise ParseError(f"{node.func}() takes a single tensor factor", column=node.column)
        terms: Dict[Tuple[Word, ...], Scalar] = {}
        for (word,), coeff in argument.terms.items():
            for w, c in function(word).items():
                accumulate(terms, (w,), coeff * c)
        return Value(1, terms)


def parse_poly(pres: Presentation, text: str, functions: FunctionTable = None) -> NCPoly:
    return PolyEvaluator(pres.ctx, [pres], functions).polynomial(text)
