import pytest

from src.braided.braided_hopf import BraidedHopfData
from src.braided.braiding import LeftComoduleBraiding
from src.braided.coaction import Action, Coaction, Direction
from src.constructions.automorphism import automorphism_braided_group
from src.constructions.bosonisation import (
    bosonise_comodule,
    bosonise_left_comodule,
    bosonise_module,
    bosonise_right_module,
)
from src.constructions.crossed import (
    associativity_ledger,
    biproduct,
    check_induced_image,
    induce_crossed_module,
    regular_adjoint_module,
)
from src.constructions.transmutation import TransmutationReconciler, transmute
from src.constructions.twisting import (
    TwistedDQS,
    colour_enveloping_check,
    colour_sqrt_decompose,
    colour_twist,
    exponent_table,
    twist_braided,
    twisted_braiding,
)
from src.errors import ConfigError
from src.hopf.functionals import Cocycle
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.twist import dual_twist_hopf
from src.verify.suites import verify_action, verify_crossed_module, verify_hopf, verify_model, verify_same_hopf
from tests.helpers import poly, tensor

HEISENBERG_FORM = [[0, 1], [2, 0]]


@pytest.fixture(scope="module")
def automorphisms(glq2, aq2):
    return automorphism_braided_group(glq2.hopf, glq2.R, aq2.braided, 2)


@pytest.fixture(scope="module")
def heisenberg_host(catalog):
    return catalog.load("group_bichar(3,2,[[0,1],[2,0]])")


# -- transmutation -------------------------------------------------------------------


def test_transmutation_reconciles_with_braided_matrices(glq2, bglq2):
    model = transmute(glq2.hopf, glq2.R, 2)
    mapping = {"a": "alpha", "b": "beta", "c": "gamma", "d": "delta", "D": "C", "Dinv": "Cinv"}
    result = TransmutationReconciler(model, bglq2.braided, mapping).run(("D",))
    assert result.ok, str(result)


def test_transmuted_product_keeps_grouplike_determinant_central(glq2):
    model = transmute(glq2.hopf, glq2.R, 2)
    pres = glq2.pres
    C, alpha = (pres.gen("C"),), (pres.gen("alpha"),)
    assert model.multiply_words(C, alpha) == model.multiply_words(alpha, C)


# -- automorphism braided group -------------------------------------------------------


@pytest.mark.parametrize(
    "label, expected",
    [
        ("xalpha", "alpha%x"),
        ("yalpha", "(q-q^-1)*beta%x + alpha%y"),
        ("xbeta", "q^-1*beta%x"),
        ("ybeta", "q*beta%y"),
        ("xgamma", "q*gamma%x"),
        ("ydelta", "delta%y - q^-2*(q-q^-1)*beta%x"),
    ],
)
def test_automorphism_cross_relations(automorphisms, glq2, aq2, label, expected):
    rows = dict(automorphisms.cross_relations())
    assert rows[label] == tensor((glq2.pres, aq2.pres), expected)


def test_automorphism_coproduct_of_x(automorphisms, glq2, aq2):
    x, y = aq2.pres.gen("x"), aq2.pres.gen("y")
    alpha, gamma = glq2.pres.gen("alpha"), glq2.pres.gen("gamma")
    one = glq2.ctx.one
    assert automorphisms.coproduct_key(((), (x,))) == {
        (((), (x,)), ((alpha,), ())): one,
        (((), (y,)), ((gamma,), ())): one,
        (((), ()), ((), (x,))): one,
    }


def test_automorphism_product_matches_braided_tensor_product(automorphisms):
    assert automorphisms.two_path_failures(2) == []


def test_automorphism_model_is_associative(automorphisms):
    report = verify_model(automorphisms, 2)
    assert report.ok, report.to_text()


# -- bosonisation ---------------------------------------------------------------------


def test_braided_line_bosonisation(braided_line):
    host = braided_line.host
    boson = bosonise_comodule(host.hopf, host.R, braided_line.braided)
    assert poly(boson.pres, "g*theta") == poly(boson.pres, "q*theta*g")
    assert verify_hopf(boson, 2).ok


def test_printed_antipode_fails_on_the_braided_line(braided_line):
    host = braided_line.host
    boson = bosonise_comodule(host.hopf, host.R, braided_line.braided, antipode="printed")
    report = verify_hopf(boson, 2)
    assert not report.ok
    assert any("antipode" in record.check for record in report.failures)


def test_unknown_antipode_variant(braided_line):
    host = braided_line.host
    with pytest.raises(ConfigError):
        bosonise_comodule(host.hopf, host.R, braided_line.braided, antipode="guessed")


def test_superline_bosonises_both_ways(superline, z2prime):
    by_coaction = bosonise_comodule(z2prime.hopf, z2prime.R, superline.braided)
    by_action = bosonise_module(z2prime.hopf, z2prime.quasitriangular, superline.braided)
    for boson in (by_coaction, by_action):
        assert poly(boson.pres, "g*theta") == poly(boson.pres, "-theta*g")
        assert verify_hopf(boson, 2).ok


def left_superline(superline, z2prime):
    g = z2prime.pres.gen("g")
    coaction = Coaction(Direction.LEFT, z2prime.hopf, superline.pres, {0: {((g,), (0,)): z2prime.ctx.one}})
    B = superline.braided
    return BraidedHopfData(
        superline.pres, B.coproduct_table, B.counit_table, B.antipode_table,
        LeftComoduleBraiding(z2prime.R, coaction, coaction), host=z2prime.hopf, coaction=coaction,
        name="left superline",
    )


def test_superline_bosonises_as_a_left_comodule(superline, z2prime):
    boson = bosonise_left_comodule(z2prime.hopf, z2prime.R, left_superline(superline, z2prime))
    assert poly(boson.pres, "g*theta") == poly(boson.pres, "-theta*g")
    assert verify_hopf(boson, 2).ok


def test_superline_bosonises_as_a_right_module(superline, z2prime):
    g = z2prime.pres.gen("g")
    action = Action(Direction.RIGHT, z2prime.hopf, superline.pres, {((g,), 0): {(0,): z2prime.ctx.scalar(-1)}})
    assert verify_action(action, 2).ok
    boson = bosonise_right_module(z2prime.hopf, z2prime.quasitriangular, superline.braided, action)
    assert poly(boson.pres, "g*theta") == poly(boson.pres, "-theta*g")
    assert verify_hopf(boson, 2).ok


def test_bosonisation_variants_check_the_side(superline, z2prime):
    with pytest.raises(ConfigError):
        bosonise_left_comodule(z2prime.hopf, z2prime.R, superline.braided)
    with pytest.raises(ConfigError):
        bosonise_right_module(z2prime.hopf, z2prime.quasitriangular, superline.braided)


# -- crossed modules and biproducts -----------------------------------------------------


def test_induced_crossed_module_and_biproduct(superline, z2prime):
    X = induce_crossed_module(superline.coaction, z2prime.R)
    assert X.direction is Direction.RIGHT
    assert verify_crossed_module(X, 2).ok
    product = biproduct(X, superline.braided)
    assert verify_hopf(product, 2).ok
    boson = bosonise_comodule(z2prime.hopf, z2prime.R, superline.braided)
    report = verify_same_hopf(product, boson, 2)
    assert report.ok, report.to_text()


def test_regular_adjoint_module_is_not_induced(z2prime):
    X = regular_adjoint_module(z2prime.hopf)
    assert verify_crossed_module(X, 2).ok
    result = check_induced_image(X, z2prime.quasitriangular, "module")
    assert not result
    assert result.witness == "g"


def test_over_the_ground_field_everything_is_induced(qq):
    host = HopfData.trivial(qq)
    X = regular_adjoint_module(host)
    assert check_induced_image(X, QuasitriangularElement.trivial(host), "module")


def test_cross_products_are_braided_tensor_products(superline):
    first, second = associativity_ledger(superline.action)
    assert first.ok, str(first)
    assert first.compared == 16
    assert second.ok, str(second)
    assert second.compared == 64


def test_ledger_needs_a_left_action(superline, z2prime):
    g = z2prime.pres.gen("g")
    action = Action(Direction.RIGHT, z2prime.hopf, superline.pres, {((g,), 0): {(0,): z2prime.ctx.scalar(-1)}})
    with pytest.raises(ConfigError):
        associativity_ledger(action)


def test_unknown_image_variant(z2prime):
    X = regular_adjoint_module(z2prime.hopf)
    with pytest.raises(ConfigError):
        check_induced_image(X, z2prime.quasitriangular, "bimodule")


# -- twisting ------------------------------------------------------------------------


def test_torus_twist_of_the_plane(glq2, aq2):
    model = twist_braided(aq2.braided, glq2.cocycle, 2)
    x, y = (aq2.pres.gen("x"),), (aq2.pres.gen("y"),)
    q = glq2.ctx.q
    expected = {w: c * q ** 2 for w, c in model.multiply_words(x, y).items()}
    assert model.multiply_words(y, x) == expected
    assert not model.trivial_on(2)
    assert verify_model(model, 2).ok


def test_trivial_cocycle_leaves_the_plane_alone(glq2, aq2):
    model = twist_braided(aq2.braided, Cocycle.trivial(glq2.hopf), 2)
    assert model.trivial_on(2)


def test_trivial_cocycle_keeps_the_braiding(glq2, aq2):
    twisted = twisted_braiding(aq2.braided, Cocycle.trivial(glq2.hopf), glq2.R, 2)
    x, y = (aq2.pres.gen("x"),), (aq2.pres.gen("y"),)
    for v, w in ((x, y), (y, x), (x, x)):
        assert twisted.braid_words(v, w) == aq2.braided.source.braid_words(v, w)


def test_twisting_a_group_algebra(heisenberg_host):
    host = heisenberg_host
    decomposition = colour_sqrt_decompose(3, HEISENBERG_FORM)
    chi = Cocycle(host.hopf, exponent_table(host.hopf, decomposition.chi_exponents))
    model = dual_twist_hopf(host.hopf, chi, host.R)
    assert not model.truncated
    g1, g2 = (host.pres.gen("g1"),), (host.pres.gen("g2"),)
    assert model.mul_words(g1, g2) == host.pres.multiply_words(g1, g2)
    twisted = TwistedDQS(model)
    assert host.R.evaluate_words(g1, g2) == host.ctx.q
    assert twisted.evaluate_words(g1, g2) == host.ctx.one
    assert twisted.evaluate_words(g2, g1) == host.ctx.one


# -- colour algebras -----------------------------------------------------------------


def test_odd_modulus_halves_the_form():
    result = colour_sqrt_decompose(3, HEISENBERG_FORM)
    assert result.ok
    assert result.chi_exponents == ((0, 2), (1, 0))
    assert not result.super_like


def test_twice_odd_modulus_splits_off_signs():
    result = colour_sqrt_decompose(6, [[0, 1], [5, 0]])
    assert result.ok
    assert result.beta0_exponents == ((0, 3), (3, 0))
    assert result.chi_exponents == ((0, 2), (4, 0))
    assert result.super_like


@pytest.mark.parametrize(
    "m, form",
    [(4, [[0, 1], [3, 0]]), (3, [[0, 1], [1, 0]]), (3, [[0, 1, 2]]), (0, [[0]])],
)
def test_forms_without_a_decomposition(m, form):
    assert not colour_sqrt_decompose(m, form).ok


def test_colour_twist_removes_the_bicharacter(heisenberg_host):
    decomposition = colour_sqrt_decompose(3, HEISENBERG_FORM)
    result = colour_twist(heisenberg_host.hopf, heisenberg_host.R, decomposition)
    assert result.pairs_checked == 81
    assert result.trivial


def test_super_colour_twist_leaves_signs(catalog):
    host = catalog.load("group_bichar(2,1,[[1]])")
    result = colour_twist(host.hopf, host.R, colour_sqrt_decompose(2, [[1]]))
    assert result.signs_only
    assert not result.trivial


def test_colour_enveloping_algebra_brackets(catalog, heisenberg_host):
    bundle = catalog.load("colour_heisenberg")
    decomposition = colour_sqrt_decompose(3, HEISENBERG_FORM)
    chi = Cocycle(heisenberg_host.hopf, exponent_table(heisenberg_host.hopf, decomposition.chi_exponents))
    model = twist_braided(bundle.braided, chi, 2)
    assert colour_enveloping_check(model, heisenberg_host.R) == []
