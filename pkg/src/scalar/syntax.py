"""Expression syntax shared by scalars, polynomials and tensor expressions.

Grammar (lowest precedence first):

    sum     := ['+'|'-'] tensor (('+'|'-') tensor)*
    tensor  := product ('%' product)*
    product := power (('*'|'/'|<juxtaposition>) power)*
    power   := atom ['^' ['-'] INT | '^' '(' ['-'] INT ')']
    atom    := INT | NAME | NAME '(' sum ')' | '(' sum ')'

`%` (or `⊗`) builds tensors, a function call is only recognized for registered
function names such as `S`.
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import ParseError
from src.scalar.field import FieldContext, Scalar

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^%(),·⊗]))"
)

DEFAULT_FUNCTIONS = frozenset({"S"})


@dataclass(frozen=True)
class Token:
    kind: str  # num | name | op | end
    text: str
    column: int


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    text: str
    column: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Tensor:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"
    column: int


Node = Union[Num, Name, Neg, BinOp, Pow, Tensor, Call]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if not match:
            column = position + 1
            while column <= len(stripped) and stripped[column - 1].isspace():
                column += 1
            raise ParseError(f"unexpected character {stripped[column - 1]!r}", column=column)
        kind = match.lastgroup
        value = match.group(kind)
        column = match.start(kind) + 1
        if value == "·":
            value = "*"
        elif value == "⊗":
            value = "%"
        tokens.append(Token(kind, value, column))
        position = match.end()
    tokens.append(Token("end", "", len(stripped) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, functions: Iterable[str]):
        self.tokens = tokenize(text)
        self.index = 0
        self.functions = frozenset(functions)

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self.current
        if token.kind != "op" or token.text != text:
            found = token.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", column=token.column)
        return self._advance()

    def _at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def parse(self) -> Node:
        node = self._sum()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", column=self.current.column)
        return node

    def _sum(self) -> Node:
        if self._at_op("-"):
            self._advance()
            node: Node = Neg(self._tensor())
        else:
            if self._at_op("+"):
                self._advance()
            node = self._tensor()
        while self._at_op("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self._tensor())
        return node

    def _tensor(self) -> Node:
        node = self._product()
        while self._at_op("%"):
            self._advance()
            node = Tensor(node, self._product())
        return node

    def _starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("num", "name") or (token.kind == "op" and token.text == "(")

    def _product(self) -> Node:
        node = self._power()
        while True:
            if self._at_op("*", "/"):
                op = self._advance().text
                node = BinOp(op, node, self._power())
            elif self._starts_atom():
                node = BinOp("*", node, self._power())
            else:
                return node

    def _power(self) -> Node:
        node = self._atom()
        if self._at_op("^"):
            self._advance()
            node = Pow(node, self._exponent())
        return node

    def _exponent(self) -> int:
        wrapped = self._at_op("(")
        if wrapped:
            self._advance()
        sign = 1
        if self._at_op("-"):
            self._advance()
            sign = -1
        token = self.current
        if token.kind != "num":
            raise ParseError("exponent must be an integer literal", column=token.column)
        self._advance()
        if wrapped:
            self._expect(")")
        return sign * int(token.text)

    def _atom(self) -> Node:
        token = self.current
        if token.kind == "num":
            self._advance()
            return Num(int(token.text))
        if token.kind == "name":
            self._advance()
            if token.text in self.functions and self._at_op("("):
                self._advance()
                arg = self._sum()
                self._expect(")")
                return Call(token.text, arg, token.column)
            return Name(token.text, token.column)
        if self._at_op("("):
            self._advance()
            node = self._sum()
            self._expect(")")
            return node
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", column=token.column)


def parse_expression(text: str, functions: Iterable[str] = DEFAULT_FUNCTIONS) -> Node:
    """Parse an expression into an AST."""
    if not text.strip():
        raise ParseError("empty expression", column=1)
    return _Parser(text, functions).parse()


def split_identifier(text: str, names: Sequence[str]) -> Optional[List[str]]:
    """Split a juxtaposed identifier such as `ad` or `Cinvalpha` into known names.

    Greedy longest match; returns None when no split exists.
    """
    if text in names:
        return [text]
    ordered = sorted(set(names), key=len, reverse=True)

    def split_from(position: int) -> Optional[List[str]]:
        if position == len(text):
            return []
        for name in ordered:
            if text.startswith(name, position):
                rest = split_from(position + len(name))
                if rest is not None:
                    return [name] + rest
        return None

    return split_from(0)


def evaluate_scalar(node: Node, ctx: FieldContext) -> Scalar:
    """Evaluate an AST that mentions only integers and q."""
    if isinstance(node, Num):
        return ctx.scalar(node.value)
    if isinstance(node, Name):
        parts = split_identifier(node.text, ["q"])
        if parts is None:
            raise ParseError(f"unknown symbol {node.text!r} in scalar", column=node.column)
        return ctx.q ** len(parts)
    if isinstance(node, Neg):
        return -evaluate_scalar(node.operand, ctx)
    if isinstance(node, Pow):
        return evaluate_scalar(node.base, ctx) ** node.exponent
    if isinstance(node, BinOp):
        left = evaluate_scalar(node.left, ctx)
        right = evaluate_scalar(node.right, ctx)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left / right
    if isinstance(node, Call):
        raise ParseError(f"function {node.func} not allowed in a scalar", column=node.column)
    raise ParseError("tensor not allowed in a scalar")


def parse_scalar(text: str, ctx: FieldContext) -> Scalar:
    return evaluate_scalar(parse_expression(text, functions=()), ctx)


def split_assignment(line: str, separators: Tuple[str, ...] = ("->", "=")) -> Tuple[str, str, str]:
    """Split `lhs = rhs` or `lhs -> rhs`; returns (lhs, separator, rhs)."""
    for separator in separators:
        if separator in line:
            lhs, rhs = line.split(separator, 1)
            return lhs.strip(), separator, rhs.strip()
    raise ParseError("expected '=' in line", column=1)
