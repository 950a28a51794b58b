import pytest

from src.errors import NoSolution
from src.freealg.ncpoly import NCPoly
from src.hopf.functionals import check_convolution_inverse, convolve, CounitForm
from src.hopf.hopf_data import HopfData
from src.hopf.linalg import solve_linear_system
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.twist import antipode_square_inner_check
from src.verify.suites import verify_cocycle, verify_dqs, verify_hopf, verify_quasitriangular
from tests.helpers import poly, tensor


def test_matrix_coproduct(glq2):
    pres = glq2.pres
    alpha = pres.gen("alpha")
    assert glq2.hopf.coproduct_word((alpha,)) == tensor((pres, pres), "alpha%alpha + beta%gamma")
    C = pres.gen("C")
    assert glq2.hopf.coproduct_word((C,)) == {((C,), (C,)): glq2.ctx.one}


def test_antipode_of_a_product_reverses(glq2):
    pres = glq2.pres
    got = glq2.hopf.antipode(poly(pres, "alpha*beta"))
    assert got == poly(pres, "-q*Cinv*beta*Cinv*delta")


def test_counit_is_multiplicative(glq2):
    pres = glq2.pres
    assert glq2.hopf.counit(poly(pres, "alpha*delta + beta")) == 1
    assert glq2.hopf.counit(poly(pres, "C")) == 1


def test_glq2_hopf_axioms(glq2):
    report = verify_hopf(glq2.hopf, 2)
    assert report.ok, report.to_text()


def test_trivial_host_is_a_hopf_algebra(qq):
    assert verify_hopf(HopfData.trivial(qq), 2).ok


def test_rmatrix_on_generators(glq2):
    R, q = glq2.R, glq2.ctx.q
    assert R.entry("alpha", "alpha") == q ** 2
    assert R.entry("alpha", "delta") == q
    assert R.entry("delta", "alpha") == q
    assert R.entry("delta", "delta") == q ** 2
    assert R.entry("beta", "gamma") == q ** 2 - 1
    assert R.entry("gamma", "gamma") == 0
    assert R.entry("alpha", "beta") == 0


def test_rmatrix_on_the_determinant(glq2):
    C = glq2.pres.gen("C")
    assert glq2.R.evaluate((C,), (C,)) == glq2.ctx.q ** 6


def test_rmatrix_on_the_determinant_and_its_inverse(glq2):
    R, q = glq2.R, glq2.ctx.q
    assert R.entry("C", "alpha") == q ** 3
    assert R.entry("alpha", "C") == q ** 3
    assert R.entry("C", "delta") == q ** 3
    assert R.entry("C", "beta") == 0
    assert R.entry("gamma", "C") == 0
    assert R.entry("Cinv", "alpha") == q ** -3
    assert R.entry("C", "Cinv") == q ** -6
    assert R.entry("Cinv", "Cinv") == q ** 6


def test_rmatrix_on_a_product_containing_the_determinant(glq2):
    ad = (glq2.pres.gen("alpha"), glq2.pres.gen("delta"))
    assert glq2.R.evaluate(ad, ad) == glq2.ctx.q ** 6


def test_rmatrix_is_dual_quasitriangular(glq2):
    report = verify_dqs(glq2.R, 2)
    assert report.ok, report.to_text()


def test_rmatrix_inverse_under_convolution(glq2):
    assert check_convolution_inverse(glq2.R, glq2.R.inverse, 2)
    product = convolve(glq2.R, glq2.R.inverse)
    counit = CounitForm(glq2.hopf)
    alpha, beta = (glq2.pres.gen("alpha"),), (glq2.pres.gen("beta"),)
    assert product.evaluate_words(alpha, alpha) == counit.evaluate_words(alpha, alpha) == 1
    assert product.evaluate_words(alpha, beta) == 0


def test_torus_cocycle(glq2):
    chi, q = glq2.cocycle, glq2.ctx.q
    assert chi.entry("alpha", "delta") == q
    assert chi.entry("delta", "alpha") == 1
    assert verify_cocycle(chi, 2).ok


def test_super_quasitriangular_structure(z2prime):
    Q = z2prime.quasitriangular
    g = NCPoly.gen(z2prime.pres, "g")
    assert verify_quasitriangular(Q).ok
    assert Q.u_element() == g
    assert Q.v_element() == g


def test_trivial_quasitriangular_structure(qq):
    host = HopfData.trivial(qq)
    assert verify_quasitriangular(QuasitriangularElement.trivial(host)).ok


def test_antipode_square_is_inner_on_glq2(glq2):
    result = antipode_square_inner_check(glq2.hopf, glq2.R, degree_bound=1)
    assert result.inner


def test_linear_solve(qq):
    q = qq.q
    solution = solve_linear_system(qq, [{"x": qq.one, "y": q}, {"x": qq.one, "y": -q}], [1 + q, 1 - q], ["x", "y"])
    assert solution.unique
    assert solution.values == {"x": qq.one, "y": qq.one}


def test_linear_solve_free_and_inconsistent(qq):
    solution = solve_linear_system(qq, [{"x": qq.one, "y": qq.one}], [qq.one], ["x", "y"])
    assert solution.free == ["y"]
    with pytest.raises(NoSolution):
        solve_linear_system(qq, [{"x": qq.one}, {"x": qq.one}], [qq.one, qq.zero], ["x"])
