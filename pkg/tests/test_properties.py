from hypothesis import given, settings, strategies as st

from src.braided.braided_hopf import coaction_antipode_product
from src.freealg.ncpoly import NCPoly
from src.scalar.field import FieldContext

TRANSCENDENTAL = FieldContext.transcendental()
CUBE_ROOT = FieldContext.cyclotomic(3)

coefficients = st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=4)
shifts = st.integers(min_value=-2, max_value=2)


def laurent(ctx, coeffs, shift):
    value = ctx.zero
    for power, c in enumerate(coeffs):
        value = value + ctx.scalar(c) * ctx.q_pow(power + shift)
    return value


def fraction(ctx, top, bottom, shift):
    denominator = laurent(ctx, bottom, 0)
    if not denominator:
        denominator = ctx.one
    return laurent(ctx, top, shift) / denominator


scalars = st.tuples(coefficients, coefficients, shifts)
laurents = st.tuples(coefficients, shifts)


@settings(max_examples=250, deadline=None)
@given(a=scalars, b=scalars, c=scalars)
def test_rational_function_field_laws(a, b, c):
    x, y, z = (fraction(TRANSCENDENTAL, *t) for t in (a, b, c))
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0
    if x:
        assert x * (1 / x) == 1
        assert TRANSCENDENTAL.parse(str(x)) == x


@settings(max_examples=150, deadline=None)
@given(a=laurents, b=laurents)
def test_cyclotomic_field_laws(a, b):
    x, y = laurent(CUBE_ROOT, *a), laurent(CUBE_ROOT, *b)
    assert x * y == y * x
    assert x * CUBE_ROOT.q ** 3 == x
    if y:
        assert (x / y) * y == x


def words(letters):
    return st.lists(st.sampled_from(letters), min_size=0, max_size=3)


def word_poly(pres, names, scale):
    poly = NCPoly.one(pres) * scale
    for name in names:
        poly = poly * NCPoly.gen(pres, name)
    return poly


@settings(max_examples=300, deadline=None)
@given(u=words(["x", "y"]), v=words(["x", "y"]), w=words(["x", "y"]), k=st.integers(min_value=-3, max_value=3))
def test_plane_product_is_associative(aq2, u, v, w, k):
    a = word_poly(aq2.pres, u, k)
    b = word_poly(aq2.pres, v, 1)
    c = word_poly(aq2.pres, w, 1)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(
    u=words(["alpha", "beta", "gamma", "delta"]),
    v=words(["alpha", "beta", "gamma", "delta"]),
    w=st.lists(st.sampled_from(["alpha", "delta", "C"]), max_size=2),
)
def test_matrix_product_is_associative(glq2, u, v, w):
    a, b, c = (word_poly(glq2.pres, names, 1) for names in (u, v, w))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=200, deadline=None)
@given(letters=st.lists(st.sampled_from([0, 1]), min_size=2, max_size=3), cut=st.integers(min_value=1, max_value=2))
def test_plane_antipode_splits_agree(aq2, letters, cut):
    B = aq2.braided
    word = tuple(letters)
    cut = min(cut, len(word) - 1)
    whole = NCPoly(aq2.pres, B.antipode_word(word))
    split = B.braided_anti_product(B.antipode_word(word[:cut]), B.antipode_word(word[cut:]))
    assert NCPoly(aq2.pres, split) == whole
    via_coaction = coaction_antipode_product(B, word[:cut], word[cut:], aq2.host.R)
    assert NCPoly(aq2.pres, via_coaction) == whole
