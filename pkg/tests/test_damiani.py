import pytest

from uqplus.brackets import commutator
from uqplus.damiani import (AlternatingKind as K, DamianiCache, alternating_word,
                            damiani_e_delta, damiani_e_minus, damiani_e_plus, e_delta_1,
                            e_delta_zero, xi)
from uqplus.free import FreeElement, X, Y
from uqplus.scalar import q, qpow

QP = q + qpow(-1)


def tau(f):
    return f.swap_letters().reverse_words()


def test_base_cases():
    assert damiani_e_minus(0) == X
    assert damiani_e_plus(0) == Y
    assert e_delta_1() == FreeElement.word("xy", qpow(-4) - 1)
    assert e_delta_zero() == -(q - qpow(-1)).inverse()


def test_first_recursion_step():
    ed = damiani_e_delta(1)
    assert damiani_e_minus(1) == commutator(ed, X) / QP
    assert damiani_e_plus(1) == commutator(Y, ed) / QP


def test_gradings():
    assert damiani_e_minus(2).bidegrees() == {(3, 2)}
    assert damiani_e_plus(1).bidegrees() == {(1, 2)}
    for n in range(1, 4):
        assert damiani_e_delta(n).bidegrees() == {(n, n)}


def test_delta_one_both_ways():
    cache = DamianiCache()
    assert cache.delta(1) == FreeElement.word("xy", qpow(-4) - 1)
    assert cache.delta_alternative(1) == cache.delta(1)


@pytest.mark.parametrize("n", range(5))
def test_tau_action(n):
    assert tau(damiani_e_minus(n)) == damiani_e_plus(n)
    if n:
        assert tau(damiani_e_delta(n)) == damiani_e_delta(n)


def test_imaginary_root_vectors_commute():
    for i in range(1, 4):
        for j in range(i + 1, 4):
            assert commutator(damiani_e_delta(i), damiani_e_delta(j)).is_zero()


def test_two_recursions_agree():
    cache = DamianiCache()
    for n in range(1, 5):
        assert cache.delta(n) == cache.delta_alternative(n)


def test_delta_needs_positive_index():
    with pytest.raises(ValueError):
        damiani_e_delta(0)


def test_alternating_words():
    word = lambda kind, k: alternating_word(kind, k)
    assert word(K.Wminus, 2) == FreeElement.word("xyxyx")
    assert word(K.Wplus, 1) == FreeElement.word("yxy")
    assert word(K.G, 2) == FreeElement.word("yxyx")
    assert word(K.Gtilde, 2) == FreeElement.word("xyxy")
    assert word(K.Gtilde, 0) == FreeElement.one()


def test_xi():
    assert xi() * (q - qpow(-1)) ** 2 == -qpow(2)
    assert xi().inverse() * xi() == 1
