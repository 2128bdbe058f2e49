from hypothesis import given, settings, strategies as st

from uqplus.damiani import AlternatingKind as K, alternating_word
from uqplus.free import FreeElement, X
from uqplus.model import (ModelElement, apply_dagger, apply_sigma, apply_tau, counit_z,
                          from_free, gen_image, parse_model, z_index, zmon, zvee_element,
                          zvee_poly)
from uqplus.scalar import q, qpow


def zb(*idx):
    m = ModelElement.one()
    for i in idx:
        m = m * ModelElement.basis("", z_index(i))
    return m


def word(w):
    return ModelElement.basis(w)


def elements():
    key = st.tuples(st.text(alphabet="xy", max_size=3),
                    st.lists(st.integers(0, 2), max_size=3).map(lambda e: zmon(*e)))
    return st.dictionaries(key, st.integers(-3, 3), max_size=3).map(ModelElement)


def test_generator_images():
    assert gen_image(K.Wminus, 0) == from_free(X)
    assert gen_image(K.G, 1) == word("yx") + zb(1)
    assert gen_image(K.Wminus, 1) == word("xyx") + ModelElement.basis("x", z_index(1))
    assert gen_image(K.Gtilde, 0) == ModelElement.one()


def test_product_basics():
    a = gen_image(K.Wplus, 2)
    assert ModelElement.one() * a == a
    assert zb(1) * zb(1) == zb(1, 1)
    x = from_free(X)
    assert (x * zb(2) - zb(2) * x).is_zero()


def test_word_factor_shuffles():
    assert from_free(X) * from_free(FreeElement.word("y")) == from_free(X * FreeElement.word("y"))


@settings(max_examples=30, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_zvee_small():
    assert zvee_element(0) == ModelElement.one()
    assert zvee_element(1) == zb(1) * (q + qpow(-1))
    # z^vee_2 = q^2 z2 + z1^2 + q^-2 z2 with z0 = 1
    assert zvee_element(2) == zb(2) * (qpow(2) + qpow(-2)) + zb(1, 1)
    for n in range(5):
        assert zvee_element(n) == zvee_poly(n)


def test_symmetries():
    for k in range(4):
        assert apply_sigma(gen_image(K.Wminus, k)) == gen_image(K.Wplus, k)
        assert apply_dagger(gen_image(K.G, k)) == gen_image(K.Gtilde, k)
        assert apply_dagger(gen_image(K.Wminus, k)) == gen_image(K.Wminus, k)
        assert apply_tau(gen_image(K.G, k)) == gen_image(K.G, k)
    assert apply_sigma(zb(1)) == zb(1)
    a = gen_image(K.G, 3) + zb(2) * q
    assert apply_sigma(apply_sigma(a)) == a
    assert apply_dagger(apply_dagger(a)) == a


def test_counit():
    for n in range(4):
        assert counit_z(gen_image(K.Wminus, n)) == alternating_word(K.Wminus, n)
    assert counit_z(zvee_element(1)).is_zero()
    assert counit_z(ModelElement.one()) == FreeElement.one()


def test_text_format():
    a = parse_model("xyx + (q^2)*x (*) z1 - e (*) z1^2 z3")
    assert a == word("xyx") + ModelElement.basis("x", z_index(1)) * qpow(2) - zb(1, 1, 3)
    assert parse_model(str(a)) == a


@settings(max_examples=40, deadline=None)
@given(elements())
def test_text_round_trip(a):
    assert parse_model(str(a)) == a
