import pytest

from src.errors import AlphabetMismatch, NonTerminating, OrientationMismatch, ParseError
from src.freealg.confluence import check_confluence, path_disagreements
from src.freealg.ncpoly import NCPoly, nc_mul, normal_form
from src.freealg.presentation import Presentation, free_presentation
from tests.helpers import poly


@pytest.fixture
def plane(qq):
    relation = {(1, 0): qq.one, (0, 1): -qq.q}
    return Presentation.oriented("plane", ["x", "y"], qq, [(relation, None)])


def test_quantum_plane_rule_orients_yx(plane, qq):
    assert plane.rules == {(1, 0): {(0, 1): qq.q}}


def test_normal_form_of_yx(aq2):
    assert poly(aq2.pres, "y*x") == poly(aq2.pres, "q*x*y")
    assert str(poly(aq2.pres, "y*x")) == "q*x*y"


def test_normal_form_of_higher_words(aq2):
    assert poly(aq2.pres, "y^2*x") == poly(aq2.pres, "q^2*x*y^2")
    assert poly(aq2.pres, "y*x^2") == poly(aq2.pres, "q^2*x^2*y")
    assert str(poly(aq2.pres, "y*x*y")) == "q*x*y^2"


def test_stated_rule_against_the_order_raises(qq):
    relation = {(1, 0): qq.one, (0, 1): -qq.q}
    with pytest.raises(OrientationMismatch):
        Presentation.oriented("plane", ["x", "y"], qq, [(relation, (0, 1))])


def test_increasing_rule_is_rejected(qq):
    with pytest.raises(NonTerminating):
        Presentation("bad", ["x", "y"], qq, {(0, 1): {(1, 0): qq.one}})


def test_ring_operations(aq2, qq):
    x = NCPoly.gen(aq2.pres, "x")
    y = NCPoly.gen(aq2.pres, "y")
    assert y * x - qq.q * x * y == 0
    assert (x + y) ** 2 == x ** 2 + (1 + qq.q) * x * y + y ** 2
    assert nc_mul(y, x, aq2.pres) == normal_form(NCPoly(aq2.pres, {(1, 0): qq.one}, reduced=True), aq2.pres)
    assert (x * 0).is_zero()


def test_mismatched_alphabets(aq2, qq):
    other = free_presentation("other", ["u"], qq)
    with pytest.raises(AlphabetMismatch):
        NCPoly.gen(aq2.pres, "x") + NCPoly.gen(other, "u")


def test_word_text_uses_powers(aq2):
    assert aq2.pres.word_text((0, 0, 1)) == "x^2*y"
    assert aq2.pres.word_text(()) == "1"


def test_defined_generator_and_inverse_reduce(glq2):
    pres = glq2.pres
    assert poly(pres, "alpha*delta - q^-1*beta*gamma") == poly(pres, "C")
    assert poly(pres, "Cinv*C") == NCPoly.one(pres)


def test_unknown_generator_is_a_parse_error(aq2):
    with pytest.raises(ParseError) as info:
        poly(aq2.pres, "x + w")
    assert info.value.column == 5


def test_normal_words_of_the_plane(aq2):
    assert aq2.pres.normal_words(2) == [(0, 0), (0, 1), (1, 1)]
    assert len(aq2.pres.words_up_to(3)) == 1 + 2 + 3 + 4


def test_finite_basis_of_the_superline(superline):
    assert superline.pres.basis() == [(), (0,)]


def test_plane_is_confluent(aq2):
    report = check_confluence(aq2.pres, 4)
    assert report.confluent


def test_unresolved_overlap_is_reported(qq):
    # x*y -> y and y*z -> x overlap on x*y*z: y*z -> x versus x*x
    rules = {(0, 1): {(1,): qq.one}, (1, 2): {(0,): qq.one}}
    pres = Presentation("skew", ["x", "y", "z"], qq, rules)
    report = check_confluence(pres, 3)
    assert not report.confluent
    assert report.failures[0].word == (0, 1, 2)
    assert path_disagreements(pres, 3)


def test_glq2_rules_resolve_at_degree_three(glq2):
    assert check_confluence(glq2.pres, 3).confluent
