import pytest

from src.braided.braided_hopf import coaction_antipode_product
from src.braided.braiding import (
    CrossedModuleBraiding,
    LeftComoduleBraiding,
    LeftModuleBraiding,
    RightComoduleBraiding,
    RightModuleBraiding,
)
from src.braided.coaction import Action, Coaction, Direction
from src.catalog.builtin import pair_braiding
from src.constructions.crossed import induce_crossed_module
from src.errors import CoverageGap
from src.hopf.tensor import TensorElem
from src.verify.suites import compare_braidings, verify_braided_hopf, verify_braiding, verify_coaction
from tests.helpers import poly, tensor


def plane_pair(aq2):
    return (aq2.pres, aq2.pres)


def test_plane_braiding_comes_from_the_coaction(aq2):
    assert isinstance(aq2.braided.source, RightComoduleBraiding)


@pytest.mark.parametrize(
    "v, w, expected",
    [
        ("x", "x", "q^2*x%x"),
        ("x", "y", "q*y%x"),
        ("y", "y", "q^2*y%y"),
        ("y", "x", "q*x%y + (q^2 - 1)*y%x"),
    ],
)
def test_plane_braiding_on_generators(aq2, v, w, expected):
    source = aq2.braided.source
    got = source.braid_words((aq2.pres.gen(v),), (aq2.pres.gen(w),))
    assert got == tensor(plane_pair(aq2), expected)


def test_plane_braiding_matches_the_table(aq2):
    report = compare_braidings(aq2.braided.source, aq2.explicit_braiding)
    assert report.ok, report.to_text()


def test_plane_coaction(aq2):
    assert verify_coaction(aq2.coaction, 2).ok


def test_braided_coproduct_of_xy(aq2):
    got = aq2.braided.coproduct(poly(aq2.pres, "x*y"))
    expected = tensor(plane_pair(aq2), "x*y%1 + x%y + q*y%x + 1%x*y")
    assert got == TensorElem(plane_pair(aq2), expected)


def test_braided_antipode_of_xy(aq2):
    assert aq2.braided.antipode(poly(aq2.pres, "x*y")) == poly(aq2.pres, "q^2*x*y")


def test_braided_counit_of_xy(aq2):
    assert aq2.braided.counit(poly(aq2.pres, "x*y + 3")) == 3


def test_plane_braided_hopf_axioms(aq2):
    report = verify_braided_hopf(aq2.braided, 2)
    assert report.ok, report.to_text()


@pytest.mark.parametrize(
    "u, expected",
    [
        ("a", "x%a + (1-q^2)*y%c"),
        ("b", "q^-1*x%b + (q-q^-1)*y%a - (q-q^-1)*y%d"),
        ("c", "q*x%c"),
        ("d", "x%d + (1-q^-2)*y%c"),
    ],
)
def test_matrix_braided_group_braids_past_x(bglq2, aq2, u, expected):
    source = pair_braiding(bglq2, aq2)
    assert source.output_slots == (aq2.pres, bglq2.pres)
    got = source.braid_words((bglq2.pres.gen(u),), (aq2.pres.gen("x"),))
    assert got == tensor((aq2.pres, bglq2.pres), expected)


def test_matrix_braided_group_against_the_plane_is_a_braiding(bglq2, aq2):
    report = verify_braiding(pair_braiding(bglq2, aq2))
    assert report.ok, report.to_text()


def test_pair_braiding_needs_a_shared_host(aq2, superline):
    with pytest.raises(CoverageGap):
        pair_braiding(aq2, superline)


def test_superline_braids_with_a_sign(superline):
    theta = (superline.pres.gen("theta"),)
    got = superline.braided.source.braid_words(theta, theta)
    assert got == {(theta, theta): -superline.ctx.one}
    assert verify_braided_hopf(superline.braided, 2).ok


def test_braided_line_over_the_anyonic_group(braided_line):
    q = braided_line.ctx.q
    theta = (braided_line.pres.gen("theta"),)
    assert braided_line.braided.source.braid_words(theta, theta) == {(theta, theta): q}
    got = braided_line.braided.coproduct(theta * 2)
    expected = tensor(
        (braided_line.pres, braided_line.pres), "theta^2%1 + (1+q)*theta%theta + 1%theta^2"
    )
    assert got.terms == expected


def test_printed_left_comodule_braiding_leaves_the_carrier(glq2, aq2):
    coaction = Coaction.trivial(glq2.hopf, aq2.pres, Direction.LEFT)
    source = LeftComoduleBraiding(glq2.R, coaction, coaction, printed=True)
    report = verify_braiding(source)
    assert not report.ok
    assert report.failures[0].check == "lands in W⊗V"


def test_corrected_left_comodule_braiding_is_accepted(glq2, aq2):
    coaction = Coaction.trivial(glq2.hopf, aq2.pres, Direction.LEFT)
    source = LeftComoduleBraiding(glq2.R, coaction, coaction)
    assert verify_braiding(source).ok


def superline_sign(superline):
    return tensor((superline.pres, superline.pres), "-theta%theta")


def test_module_braidings_on_the_superline(superline, z2prime):
    theta = (superline.pres.gen("theta"),)
    g = z2prime.pres.gen("g")
    right = Action(Direction.RIGHT, z2prime.hopf, superline.pres, {((g,), 0): {(0,): z2prime.ctx.scalar(-1)}})
    for source in (
        LeftModuleBraiding(z2prime.quasitriangular, superline.action, superline.action),
        RightModuleBraiding(z2prime.quasitriangular, right, right),
    ):
        assert source.braid_words(theta, theta) == superline_sign(superline)
        assert verify_braiding(source).ok


def test_induced_crossed_module_braiding(superline, z2prime):
    theta = (superline.pres.gen("theta"),)
    source = induce_crossed_module(superline.coaction, z2prime.R).braiding()
    assert isinstance(source, CrossedModuleBraiding)
    assert source.braid_words(theta, theta) == superline_sign(superline)


def test_antipode_of_a_product_through_the_coaction(glq2, aq2):
    x, y = (aq2.pres.gen("x"),), (aq2.pres.gen("y"),)
    got = coaction_antipode_product(aq2.braided, x, y, glq2.R)
    assert got == poly(aq2.pres, "q^2*x*y").terms
    assert got == aq2.braided.antipode_word(x + y)


def test_plane_antipode_is_checked_through_the_coaction(aq2):
    report = verify_braided_hopf(aq2.braided, 3)
    checks = {r.check: r for r in report.records}
    assert checks["antipode of a product through the coaction"].passed
    assert report.ok, report.to_text()


def test_stated_braidings_skip_the_coaction_path(aq2):
    explicit = aq2.braided.with_source(aq2.explicit_braiding)
    checks = {r.check for r in verify_braided_hopf(explicit, 2).records}
    assert "antipode of a product through the coaction" not in checks
