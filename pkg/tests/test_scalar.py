import pytest

from src.errors import ConfigError, DivisionByZero, MixedContext, ParseError
from src.scalar.field import FieldContext, cyclotomic_modulus
from src.scalar.syntax import parse_scalar, split_identifier


def test_field_names_parse():
    assert FieldContext.from_text("transcendental") == FieldContext.transcendental()
    assert FieldContext.from_text(" Cyclotomic:6 ") == FieldContext.cyclotomic(6)
    assert str(FieldContext.cyclotomic(3)) == "cyclotomic:3"


@pytest.mark.parametrize("text", ["cyclotomic:", "cyclotomic:x", "cyclotomic:0", "complex"])
def test_bad_field_names_raise_config_error(text):
    with pytest.raises(ConfigError):
        FieldContext.from_text(text)


def test_config_error_is_a_value_error():
    with pytest.raises(ValueError):
        FieldContext.from_text("reals")


def test_rational_function_arithmetic(qq):
    q = qq.q
    assert (q - q ** -1) * q == q ** 2 - 1
    assert (q ** 2 - 1) / (q - 1) == q + 1
    assert q ** 3 / q ** 5 == q ** -2
    assert 1 - q * q ** -1 == 0


def test_canonical_printing(qq):
    assert str(qq.parse("(q^2-1)/q")) == "(q^2-1)/q"
    assert str(qq.q ** -1) == "1/q"
    assert str(-qq.q_pow(2)) == "-q^2"
    assert str(qq.rational(3, 4)) == "3/4"
    assert str(qq.zero) == "0"


@pytest.mark.parametrize("text", ["(q^2-1)/q", "q^-3", "1 - q^2", "(2*q+1)/(q^2+3)", "-7/2", "q^6"])
def test_print_parse_round_trip(qq, text):
    value = qq.parse(text)
    assert qq.parse(str(value)) == value


def test_fraction_reduced_and_denominator_monic(qq):
    value = qq.parse("(2*q^2 - 2)/(2*q - 2)")
    assert value == qq.q + 1
    assert str(value) == "q+1"


def test_cyclotomic_modulus_degrees():
    assert len(cyclotomic_modulus(3)) - 1 == 2
    assert len(cyclotomic_modulus(4)) - 1 == 2
    assert len(cyclotomic_modulus(12)) - 1 == 4


def test_primitive_cube_root_of_unity():
    ctx = FieldContext.cyclotomic(3)
    q = ctx.q
    assert q ** 3 == 1
    assert q != 1
    assert 1 + q + q ** 2 == 0
    assert q ** -1 == q ** 2


def test_cyclotomic_two_is_minus_one():
    ctx = FieldContext.cyclotomic(2)
    assert ctx.q == -1


def test_division_by_zero(qq):
    with pytest.raises(DivisionByZero):
        qq.one / qq.zero
    with pytest.raises(DivisionByZero):
        qq.parse("1/(q-q)")


def test_vanishing_cyclotomic_denominator():
    ctx = FieldContext.cyclotomic(3)
    with pytest.raises(DivisionByZero):
        ctx.one / (1 + ctx.q + ctx.q ** 2)


def test_mixed_contexts_refuse_to_combine(qq):
    with pytest.raises(MixedContext):
        qq.q + FieldContext.cyclotomic(3).q


def test_unknown_symbol_reports_column(qq):
    with pytest.raises(ParseError) as info:
        parse_scalar("q + z", qq)
    assert info.value.column == 5


def test_juxtaposed_q_is_a_power(qq):
    assert qq.parse("qq") == qq.q ** 2


def test_split_identifier_prefers_longest_names():
    assert split_identifier("Cinvalpha", ["C", "Cinv", "alpha"]) == ["Cinv", "alpha"]
    assert split_identifier("ad", ["a", "d"]) == ["a", "d"]
    assert split_identifier("xz", ["x", "y"]) is None
