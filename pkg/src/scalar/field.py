"""Exact coefficient fields: Q(q) and cyclotomic fields Q(zeta_m)."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

from sympy.polys.densearith import (
    dup_add,
    dup_mul,
    dup_neg,
    dup_pow,
    dup_quo,
    dup_quo_ground,
    dup_rem,
    dup_sub,
)
from sympy.polys.densebasic import dup_LC, dup_degree, dup_strip
from sympy.polys.densetools import dup_monic
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd, dup_invert
from sympy.polys.polyerrors import NotInvertible

from src.errors import ConfigError, DivisionByZero, MixedContext

Dup = Tuple  # dense coefficient tuple, highest degree first

_ONE: Dup = (QQ.one,)
_ZERO: Dup = ()


@lru_cache(maxsize=None)
def cyclotomic_modulus(m: int) -> Dup:
    """Return the m-th cyclotomic polynomial as a dense tuple over QQ.

    Computed by dividing q^m - 1 by every cyclotomic factor of a proper divisor.
    """
    if m < 1:
        raise ConfigError(f"cyclotomic order must be positive, got {m}")
    poly = [QQ.one] + [QQ.zero] * (m - 1) + [-QQ.one]
    for d in range(1, m):
        if m % d == 0:
            poly = dup_quo(poly, list(cyclotomic_modulus(d)), QQ)
    return tuple(dup_strip(poly))


@dataclass(frozen=True)
class FieldContext:
    """The coefficient field shared by every scalar of one computation."""

    mode: str = "transcendental"
    order: int = 0

    TRANSCENDENTAL = "transcendental"
    CYCLOTOMIC = "cyclotomic"

    def __post_init__(self):
        if self.mode == self.TRANSCENDENTAL:
            if self.order != 0:
                raise ConfigError("transcendental field takes no order")
        elif self.mode == self.CYCLOTOMIC:
            if self.order < 1:
                raise ConfigError(f"cyclotomic order must be positive, got {self.order}")
        else:
            raise ConfigError(f"unknown field mode: {self.mode}")

    @classmethod
    def transcendental(cls) -> "FieldContext":
        return cls(cls.TRANSCENDENTAL, 0)

    @classmethod
    def cyclotomic(cls, m: int) -> "FieldContext":
        return cls(cls.CYCLOTOMIC, m)

    @classmethod
    def from_text(cls, text: str) -> "FieldContext":
        """Parse `transcendental` or `cyclotomic:m`."""
        text = text.strip().lower()
        if text == cls.TRANSCENDENTAL:
            return cls.transcendental()
        if text.startswith(cls.CYCLOTOMIC + ":"):
            order = text.split(":", 1)[1].strip()
            if not order.isdigit():
                raise ConfigError(f"bad cyclotomic order in field: {text!r}")
            return cls.cyclotomic(int(order))
        raise ConfigError(f"bad field: {text!r} (use transcendental or cyclotomic:m)")

    @property
    def is_cyclotomic(self) -> bool:
        return self.mode == self.CYCLOTOMIC

    @property
    def modulus(self) -> Dup:
        return cyclotomic_modulus(self.order) if self.is_cyclotomic else _ZERO

    def scalar(self, value: Union[int, "Scalar"]) -> "Scalar":
        """Coerce an integer (or a scalar of this context) into the field."""
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise MixedContext(f"scalar from {value.ctx} used in {self}")
            return value
        if isinstance(value, int):
            return Scalar.make(self, (QQ(value),), _ONE)
        raise TypeError(f"cannot coerce {type(value).__name__} to a scalar")

    def rational(self, numerator: int, denominator: int = 1) -> "Scalar":
        if denominator == 0:
            raise DivisionByZero("rational with zero denominator")
        return Scalar.make(self, (QQ(numerator, denominator),), _ONE)

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, _ZERO, _ONE)

    @property
    def one(self) -> "Scalar":
        return Scalar.make(self, _ONE, _ONE)

    @property
    def q(self) -> "Scalar":
        return Scalar.make(self, (QQ.one, QQ.zero), _ONE)

    def q_pow(self, n: int) -> "Scalar":
        return self.q ** n

    def parse(self, text: str) -> "Scalar":
        from src.scalar.syntax import evaluate_scalar, parse_expression

        return evaluate_scalar(parse_expression(text), self)

    def __str__(self) -> str:
        if self.is_cyclotomic:
            return f"{self.CYCLOTOMIC}:{self.order}"
        return self.TRANSCENDENTAL


class Scalar:
    """Immutable element of a FieldContext in canonical form."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: FieldContext, num: Dup, den: Dup = _ONE):
        self.ctx = ctx
        self.num = num
        self.den = den

    @classmethod
    def make(cls, ctx: FieldContext, num, den=_ONE) -> "Scalar":
        """Canonicalize a numerator/denominator pair."""
        num = dup_strip(list(num))
        if not num:
            return cls(ctx, _ZERO, _ONE)
        if ctx.is_cyclotomic:
            modulus = list(ctx.modulus)
            if tuple(den) != _ONE:
                try:
                    inverse = dup_invert(list(den), modulus, QQ)
                except NotInvertible as exc:
                    raise DivisionByZero("denominator vanishes in the cyclotomic field") from exc
                num = dup_mul(num, inverse, QQ)
            return cls(ctx, tuple(dup_rem(num, modulus, QQ)), _ONE)
        den = dup_strip(list(den))
        if not den:
            raise DivisionByZero("zero denominator")
        if len(den) > 1:
            g = dup_gcd(num, den, QQ)
            if dup_degree(g) > 0:
                num = dup_quo(num, g, QQ)
                den = dup_quo(den, g, QQ)
        lc = dup_LC(den, QQ)
        if lc != QQ.one:
            num = dup_quo_ground(num, lc, QQ)
            den = dup_monic(den, QQ)
        return cls(ctx, tuple(num), tuple(den))

    # -- coercion helpers -------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise MixedContext(f"cannot combine {self.ctx} and {other.ctx} scalars")
            return other
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return Scalar.make(self.ctx, dup_add(list(self.num), list(other.num), QQ), self.den)
        num = dup_add(
            dup_mul(list(self.num), list(other.den), QQ),
            dup_mul(list(other.num), list(self.den), QQ),
            QQ,
        )
        return Scalar.make(self.ctx, num, dup_mul(list(self.den), list(other.den), QQ))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.ctx, tuple(dup_neg(list(self.num), QQ)), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.ctx.zero
        num = dup_mul(list(self.num), list(other.num), QQ)
        if self.den == _ONE and other.den == _ONE:
            if self.ctx.is_cyclotomic:
                return Scalar(self.ctx, tuple(dup_rem(num, list(self.ctx.modulus), QQ)), _ONE)
            return Scalar(self.ctx, tuple(num), _ONE)
        return Scalar.make(self.ctx, num, dup_mul(list(self.den), list(other.den), QQ))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return Scalar.make(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.ctx.one
        if self.ctx.is_cyclotomic:
            result, base = self.ctx.one, self
            while n:
                if n & 1:
                    result = result * base
                base = base * base
                n >>= 1
            return result
        # a reduced fraction stays reduced under powers
        return Scalar(
            self.ctx,
            tuple(dup_pow(list(self.num), n, QQ)),
            tuple(dup_pow(list(self.den), n, QQ)),
        )

    # -- comparison -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx == other.ctx and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.ctx, self.num, self.den))

    # -- printing ---------------------------------------------------------------

    @property
    def is_atomic(self) -> bool:
        """True when the printed form is a single signed term without division by q."""
        return len(self.num) - self.num.count(QQ.zero) <= 1 and self.den == _ONE

    def __str__(self) -> str:
        numerator = format_dense(self.num)
        if self.den == _ONE:
            return numerator
        if _term_count(self.num) > 1:
            numerator = f"({numerator})"
        denominator = format_dense(self.den)
        if _term_count(self.den) > 1:
            denominator = f"({denominator})"
        return f"{numerator}/{denominator}"

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.ctx})"


def _term_count(coeffs: Dup) -> int:
    return sum(1 for c in coeffs if c != QQ.zero)


def _format_coefficient(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_dense(coeffs: Dup) -> str:
    """Print a dense polynomial in q, e.g. `q^2-1`."""
    if not coeffs:
        return "0"
    parts = []
    top = len(coeffs) - 1
    for position, c in enumerate(coeffs):
        if c == QQ.zero:
            continue
        power = top - position
        monomial = "" if power == 0 else ("q" if power == 1 else f"q^{power}")
        magnitude = -c if c < 0 else c
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == QQ.one:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(parts)
