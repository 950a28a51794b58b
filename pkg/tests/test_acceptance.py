"""End-to-end reproductions of the worked GL_q(2), quantum plane and small-group examples."""
import pytest

from src.catalog.builtin import derive_glq2_rmatrix, pair_braiding
from src.constructions.automorphism import automorphism_braided_group
from src.constructions.bosonisation import bosonise_comodule
from src.constructions.crossed import biproduct, check_induced_image, induce_crossed_module, regular_adjoint_module
from src.constructions.transmutation import TransmutationReconciler, transmute
from src.constructions.twisting import colour_sqrt_decompose, colour_twist
from src.freealg.confluence import check_confluence
from src.hopf.functionals import eval_R
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.verify.suites import verify_braided_hopf, verify_crossed_module, verify_hopf, verify_same_hopf
from tests.helpers import poly, tensor

BGLQ2_MAP = {"a": "alpha", "b": "beta", "c": "gamma", "d": "delta", "D": "C", "Dinv": "Cinv"}


def test_transmutation_gives_braided_matrices(glq2, bglq2):
    model = transmute(glq2.hopf, glq2.R, 2)
    result = TransmutationReconciler(model, bglq2.braided, BGLQ2_MAP).run(("D",))
    assert result.ok, str(result)
    assert "D grouplike" in result.checked
    assert len([label for label in result.checked if "->" in label]) >= 6


@pytest.mark.parametrize(
    "u, w, expected",
    [
        ("a", "x", "x%a + (1-q^2)*y%c"),
        ("b", "x", "q^-1*x%b + (q-q^-1)*y%a - (q-q^-1)*y%d"),
        ("c", "x", "q*x%c"),
        ("d", "x", "x%d + (1-q^-2)*y%c"),
        ("c", "y", "q^-1*y%c"),
    ],
)
def test_braided_matrices_against_the_plane(bglq2, aq2, u, w, expected):
    source = pair_braiding(bglq2, aq2)
    got = source.braid_words((bglq2.pres.gen(u),), (aq2.pres.gen(w),))
    assert got == tensor((aq2.pres, bglq2.pres), expected)


def test_automorphism_braided_group_relations(glq2, aq2):
    model = automorphism_braided_group(glq2.hopf, glq2.R, aq2.braided, 2)
    rows = dict(model.cross_relations())
    slots = (glq2.pres, aq2.pres)
    expected = {
        "xalpha": "alpha%x",
        "yalpha": "(q-q^-1)*beta%x + alpha%y",
        "xbeta": "q^-1*beta%x",
        "ybeta": "q*beta%y",
        "xgamma": "q*gamma%x",
        "ygamma": "(1-q^-2)*delta%x - (1-q^-2)*alpha%x + q^-1*gamma%y",
        "xdelta": "delta%x",
        "ydelta": "delta%y - q^-2*(q-q^-1)*beta%x",
    }
    for label, text in expected.items():
        assert rows[label] == tensor(slots, text), label
    y, beta, delta = aq2.pres.gen("y"), glq2.pres.gen("beta"), glq2.pres.gen("delta")
    x = aq2.pres.gen("x")
    one = glq2.ctx.one
    assert model.coproduct_key(((), (y,))) == {
        (((), (x,)), ((beta,), ())): one,
        (((), (y,)), ((delta,), ())): one,
        (((), ()), ((), (y,))): one,
    }


def test_rmatrix_normalisation(catalog, glq2):
    derived = derive_glq2_rmatrix(catalog)
    C = (glq2.pres.gen("C"),)
    assert eval_R(C, C, derived) == glq2.ctx.q ** 6


def test_quantum_plane_is_a_braided_group(aq2):
    report = verify_braided_hopf(aq2.braided, 4)
    assert report.ok, report.to_text()


def test_braided_line_is_a_braided_group(braided_line):
    report = verify_braided_hopf(braided_line.braided, 4)
    assert report.ok, report.to_text()


def test_colour_twists(catalog):
    host = catalog.load("group_bichar(3,2,[[0,1],[2,0]])")
    result = colour_twist(host.hopf, host.R, colour_sqrt_decompose(3, [[0, 1], [2, 0]]))
    assert result.pairs_checked == 81 and result.trivial

    signs = catalog.load("group_bichar(2,2,[[1,1],[1,0]])")
    result = colour_twist(signs.hopf, signs.R, colour_sqrt_decompose(2, [[1, 1], [1, 0]]))
    assert result.pairs_checked == 16 and result.signs_only

    assert not colour_sqrt_decompose(4, [[0, 1], [3, 0]]).ok


def test_braided_line_bosonises_to_a_quantum_plane(braided_line):
    host = braided_line.host
    boson = bosonise_comodule(host.hopf, host.R, braided_line.braided)
    assert poly(boson.pres, "g*theta") == poly(boson.pres, "q*theta*g")
    report = verify_hopf(boson, 4)
    assert report.ok, report.to_text()


def test_biproduct_agrees_with_bosonisation(glq2, aq2):
    X = induce_crossed_module(aq2.coaction, glq2.R)
    product = biproduct(X, aq2.braided)
    boson = bosonise_comodule(glq2.hopf, glq2.R, aq2.braided)
    report = verify_same_hopf(product, boson, 3)
    assert report.ok, report.to_text()


def test_adjoint_module_of_z2_is_not_induced(z2prime, qq):
    X = regular_adjoint_module(z2prime.hopf)
    assert verify_crossed_module(X, 2).ok
    result = check_induced_image(X, z2prime.quasitriangular, "module")
    assert not result.holds
    assert result.witness == "g"

    ground = HopfData.trivial(qq)
    assert check_induced_image(regular_adjoint_module(ground), QuasitriangularElement.trivial(ground), "module")


@pytest.mark.parametrize("name", ["glq2", "bglq2", "aq2", "group_bichar(3,2,[[0,1],[2,0]])"])
def test_catalog_presentations_are_confluent(catalog, name):
    bundle = catalog.load(name)
    assert check_confluence(bundle.pres, 4).confluent
