import pytest
from hypothesis import given, settings, strategies as st

from uqplus.model import ModelElement, z_index
from uqplus.scalar import ONE, ZERO, Scalar, q, qpow
from uqplus.series import Series1, Series2, divided_difference, series2_check_zero
from uqplus.damiani import xi

from conftest import scalars


def z(*idx):
    m = ModelElement.one()
    for i in idx:
        m = m * ModelElement.basis("", z_index(i))
    return m


def scalar_series(values):
    return Series1([Scalar(v) for v in values])


def test_unit_and_products():
    a = scalar_series([3, 1, 4, 1, 5])
    one = Series1.constant(ONE, 4)
    assert a * one == a
    assert scalar_series([1, 1, 0]) * scalar_series([1, -1, 0]) == scalar_series([1, 0, -1])


def test_inverse_example_commuting_coefficients():
    a = Series1([ModelElement.one()] + [z(k) for k in range(1, 5)])
    b = a.inverse()
    assert b[1] == -z(1)
    assert b[2] == z(1, 1) - z(2)
    assert b[3] == z(1, 2) * 2 - z(1, 1, 1) - z(3)
    assert b[4] == z(1, 1, 1, 1) + z(1, 3) * 2 + z(2, 2) - z(1, 1, 2) * 3 - z(4)


def test_inverse_noncommuting_order():
    # with noncommuting coefficients b_2 = a1 a1 - a2 and b_3 = a1 a2 + a2 a1 - a1^3 - a3
    from uqplus.free import FreeElement
    a = [FreeElement.one()] + [FreeElement.word(w) for w in ("x", "y", "xy")]
    cat = lambda u, v: u.concat(v)
    b = Series1(a).inverse(mul=cat)
    x, y, xy = a[1], a[2], a[3]
    assert b[2] == cat(x, x) - y
    assert b[3] == cat(x, y) + cat(y, x) - cat(cat(x, x), x) - xy


@settings(max_examples=40, deadline=None)
@given(st.lists(scalars(), min_size=4, max_size=4))
def test_inverse_round_trip(tail):
    a = Series1([ONE] + tail)
    assert a * a.inverse() == Series1.constant(ONE, 4)
    assert a.inverse().inverse() == a


def test_inverse_needs_invertible_constant():
    with pytest.raises(ZeroDivisionError):
        scalar_series([0, 1]).inverse()


def test_scale_arg():
    a = scalar_series([1, 2, 3])
    assert a.scale_arg(ONE) == a
    assert a.scale_arg(q) == Series1([Scalar(1), q * 2, qpow(2) * 3])
    assert a.scale_arg(xi()).scale_arg(xi().inverse()) == a


def test_shifts():
    t = scalar_series([0, 1])
    assert t.shift_down() == scalar_series([1])
    a = scalar_series([5, 6, 7])
    assert a.shift_up().shift_down() == a
    with pytest.raises(ValueError):
        a.shift_down()


def test_divided_difference():
    t2 = scalar_series([0, 0, 1])
    dd = divided_difference(t2)
    assert dd[(1, 0)] == 1 and dd[(0, 1)] == 1 and dd[(0, 0)] == 0
    assert series2_check_zero(divided_difference(scalar_series([7, 0, 0])))


def test_bivariate_ring_identity():
    f = scalar_series([1, 2, 3, 4])
    s_minus_t = {(1, 0): 1, (0, 1): -1}
    lhs = (Series2.in_s(f) - Series2.in_t(f))
    rhs = divided_difference(f).times_poly(s_minus_t)
    assert series2_check_zero((lhs - rhs).truncate(3))
    assert series2_check_zero(Series2({}, 3, ZERO))


def test_product_of_commuting_variables():
    f = scalar_series([1, 1, 1])
    prod = Series2.in_s(f) * Series2.in_t(f)
    assert prod[(1, 1)] == 1 and prod[(2, 0)] == 1
    assert prod.scale_args(q, ONE)[(2, 0)] == qpow(2)
