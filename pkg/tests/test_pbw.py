import itertools

import pytest

from uqplus import pbw
from uqplus.damiani import AlternatingKind as K
from uqplus.model import ModelElement, gen_image
from uqplus.pbw import (G, Gt, MemoNormalizer, NormalForm, PbwOrder, RewriteError, Wm, Wp,
                        normal_form, ordered_monomials, parse_monomial, pbw_mul, to_model)
from uqplus.scalar import ONE, q, qpow
from uqplus.checks import expected_counts, oracle_symbols, zvee_normal_form

QM = q - qpow(-1)
MAIN, APPX = PbwOrder.MAIN, PbwOrder.APPENDIX


def nf(text, order=MAIN):
    return normal_form(parse_monomial(text), order)


def mono(text, coeff=ONE, order=MAIN):
    return NormalForm.monomial(tuple(parse_monomial(text)), order, coeff)


def test_parse_symbols():
    assert parse_monomial("W[0] W[-2] W[1] W[3] Wt[3]") == [Wm(0), Wm(2), Wp(0), Wp(2), Wp(2)]
    assert parse_monomial("G[2] Gt[0]") == [G(2), Gt(0)]
    with pytest.raises(ValueError):
        parse_monomial("H[1]")
    assert str(Wm(2)) == "W[-2]" and str(Wp(2)) == "W[3]" and str(Gt(1)) == "Gt[1]"


def test_sorted_is_fixed():
    assert nf("W[0]") == mono("W[0]")
    assert nf("") == NormalForm.one()


def test_w1_w0():
    expected = mono("W[0] W[1]") + (mono("G[1]") - mono("Gt[1]")).scaled(qpow(-1) * QM)
    assert nf("W[1] W[0]") == expected
    assert nf("W[1] W[0]", APPX) == NormalForm(
        {m: c for m, c in expected.terms.items()}, APPX)


def test_gt1_g1():
    expected = mono("G[1] Gt[1]") + (mono("W[-1] W[1]") - mono("W[0] W[2]")).scaled(q * QM)
    assert nf("Gt[1] G[1]") == expected


def test_units_dropped():
    assert nf("G[0] W[1] Gt[0]") == mono("W[1]")


def test_pbw_mul_unit():
    a = nf("W[2] G[1] W[0]")
    one = NormalForm.one()
    assert pbw_mul(one, a) == a
    assert pbw_mul(a, one) == a


def test_z1_central():
    for order in PbwOrder:
        z1 = zvee_normal_form(1, order)
        w0 = normal_form([Wm(0)], order)
        assert (pbw_mul(z1, w0) - pbw_mul(w0, z1)).is_zero()


def test_to_model_basics():
    assert to_model(mono("W[0]")) == gen_image(K.Wminus, 0)
    assert to_model(NormalForm.one()) == ModelElement.one()


@pytest.mark.parametrize("order", list(PbwOrder))
def test_pairs_agree_with_model(order):
    syms = oracle_symbols(3)
    for a, b in itertools.product(syms, repeat=2):
        lhs = to_model(normal_form([a, b], order))
        rhs = gen_image(a.kind, a.index) * gen_image(b.kind, b.index)
        assert lhs == rhs, (a, b)


@pytest.mark.parametrize("order", list(PbwOrder))
def test_triples_agree_with_model(order):
    syms = oracle_symbols(2)
    for m in itertools.product(syms, repeat=3):
        if sum(s.grade() for s in m) <= 9:
            assert to_model(normal_form(m, order)) == pbw.monomial_image(m), m


def test_normal_forms_are_sorted():
    for m in itertools.product(oracle_symbols(2), repeat=3):
        for order in PbwOrder:
            assert normal_form(m, order).is_sorted()


def test_orders_differ():
    assert pbw.is_sorted((G(1), Wm(0)), MAIN)
    assert not pbw.is_sorted((G(1), Wm(0)), APPX)
    assert pbw.is_sorted((Wm(0), G(1)), APPX)


def test_memo_normalizer_agrees():
    for order in PbwOrder:
        memo = MemoNormalizer(order)
        for m in itertools.islice(itertools.product(oracle_symbols(2), repeat=4), 0, None, 37):
            assert memo(m) == normal_form(m, order)


def test_iteration_cap():
    with pytest.raises(RewriteError):
        normal_form([Wp(2), Wm(2), Wp(2), Wm(2)], MAIN, max_iterations=3)


def test_index_bound():
    with pytest.raises(RewriteError):
        normal_form([Wp(5)], MAIN, index_bound=4)


def test_ordered_monomial_counts():
    assert ordered_monomials(0) == [()]
    assert {frozenset(m) for m in ordered_monomials(1)} == {frozenset([Wm(0)]), frozenset([Wp(0)])}
    grade2 = set(ordered_monomials(2))
    assert len(grade2) == 5
    assert (G(1),) in grade2 and (Gt(1),) in grade2
    for order in PbwOrder:
        assert [len(ordered_monomials(g, order)) for g in range(7)] == expected_counts(6)
    assert expected_counts(6) == [1, 2, 5, 10, 20, 36, 65]


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        pbw_mul(NormalForm.one(MAIN), NormalForm.one(APPX))
