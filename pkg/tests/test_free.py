from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from uqplus.brackets import commutator, qcommutator
from uqplus.free import (FreeElement, X, Y, bidegree, concat_mul, pairing, parse_free,
                         shuffle_words)
from uqplus.scalar import LaurentPoly, Scalar, q, q_integer, qpow

from conftest import free_elements, words


def W(w, c=1):
    return FreeElement.word(w, c)


@lru_cache(maxsize=None)
def naive_shuffle(u, v):
    """u*v = u1 (u' * v) + q^<v1, u> v1 (u * v'), as {word: {exponent: int}}."""
    if not u:
        return {v: {0: 1}}
    if not v:
        return {u: {0: 1}}
    out = {}
    weight = sum(pairing(v[0], ch) for ch in u)
    for prefix, rest, shift in ((u[0], naive_shuffle(u[1:], v), 0),
                                (v[0], naive_shuffle(u, v[1:]), weight)):
        for w, poly in rest.items():
            acc = out.setdefault(prefix + w, {})
            for e, c in poly.items():
                acc[e + shift] = acc.get(e + shift, 0) + c
    return out


def as_element(table):
    return FreeElement({w: Scalar(LaurentPoly.from_dict(p)) for w, p in table.items()})


def test_pairing():
    assert pairing("x", "x") == 2
    assert pairing("x", "y") == -2
    assert pairing("y", "y") == 2


def test_concatenation():
    assert X.concat(Y) == W("xy")
    assert FreeElement.one().concat(W("xyy")) == W("xyy")
    assert (X + Y).concat(X) == W("xx") + W("yx")


def test_letter_shuffles():
    assert X * Y == W("xy") + W("yx", qpow(-2))
    assert X * X == W("xx", 1 + qpow(2))
    assert X * W("yx") == W("xyx") + W("yxx", qpow(-2) * (1 + qpow(2)))


def test_unit():
    e = FreeElement.one()
    assert e * W("xyx") == W("xyx")
    assert W("xyx") * e == W("xyx")


@pytest.mark.parametrize("u,v", [("x", "y"), ("xy", "x"), ("xxy", "yx"), ("xyxy", "yyx"),
                                 ("yxxy", "xyyx"), ("xyx", "xyxyx")])
def test_shuffle_matches_recursive_definition(u, v):
    assert W(u) * W(v) == as_element(naive_shuffle(u, v))


@settings(max_examples=80, deadline=None)
@given(words(5), words(5))
def test_shuffle_recursion_random(u, v):
    assert W(u) * W(v) == as_element(naive_shuffle(u, v))


@settings(max_examples=40, deadline=None)
@given(free_elements(), free_elements(), free_elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(free_elements(), free_elements(), free_elements())
def test_bilinearity(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * q) * b == (a * b) * q


def test_q_serre():
    for a, b in ((X, Y), (Y, X)):
        inner = qcommutator(a, b, q)
        assert commutator(a, qcommutator(a, inner, qpow(-1))).is_zero()
    expanded = (X * X * X * Y - (X * X * Y * X) * q_integer(3)
                + (X * Y * X * X) * q_integer(3) - Y * X * X * X)
    assert expanded.is_zero()


def test_e_delta_one_expansion():
    e = Y * X * qpow(-2) - X * Y
    assert e == W("xy", qpow(-4) - 1)
    assert e.swap_letters() == W("yx", qpow(-4) - 1)
    assert e.bidegrees() == {(1, 1)}


def test_swap_and_reverse():
    assert X.swap_letters() == Y
    assert W("xy").swap_letters() == W("yx")
    assert W("xyy").reverse_words() == W("yyx")
    assert X.reverse_words() == X
    assert (X * Y).reverse_words() == Y * X


@settings(max_examples=40, deadline=None)
@given(free_elements(), free_elements())
def test_symmetries(a, b):
    assert (a * b).swap_letters() == a.swap_letters() * b.swap_letters()
    assert (a * b).reverse_words() == b.reverse_words() * a.reverse_words()
    assert a.swap_letters().swap_letters() == a


def test_shuffle_preserves_bidegree():
    prod = W("xxy") * W("yx")
    assert prod.bidegrees() == {(3, 2)}
    assert bidegree("xyxyx") == (3, 2)


def test_word_length_cap():
    with pytest.raises(ValueError):
        W("x" * 13) * W("y" * 13)


def test_bad_words():
    with pytest.raises(ValueError):
        FreeElement.word("xz")


def test_text_format():
    a = parse_free("(q^-4 - 1)*xy + 2*yx - e")
    assert a == W("xy", qpow(-4) - 1) + W("yx", 2) - FreeElement.one()
    assert parse_free(str(a)) == a
    assert str(FreeElement.zero()) == "0"


@settings(max_examples=40, deadline=None)
@given(free_elements())
def test_text_round_trip(a):
    assert parse_free(str(a)) == a


def test_shuffle_words_calculator():
    assert shuffle_words("x", "y") == X * Y
    assert shuffle_words() == FreeElement.one()
