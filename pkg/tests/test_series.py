from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import F, T1, T2, nonzero_scalars, scalars
from hilbgw.series import (
    InsufficientCoefficientsError,
    NoRationalFormError,
    QPoly,
    QRational,
    QSeries,
    rational_reconstruct,
    series_exp,
    series_log,
)

ORDER = 5


@st.composite
def series(draw, order=ORDER):
    return QSeries([draw(scalars()) for _ in range(order + 1)], order, F)


@st.composite
def units(draw, order=ORDER):
    s = draw(series(order))
    return s + (draw(nonzero_scalars()) - s.coeffs[0])


@given(series(), series(), st.integers(0, ORDER))
def test_truncation_is_a_ring_homomorphism(a, b, k):
    assert (a * b).truncate(k) == a.truncate(k) * b.truncate(k)
    assert (a + b).truncate(k) == a.truncate(k) + b.truncate(k)


@given(series(), series())
def test_mixed_orders_truncate_to_smaller(a, b):
    c = a * b.truncate(2)
    assert c.order == 2
    assert c == (a * b).truncate(2)


@given(units())
def test_inverse(a):
    assert a * a.inverse() == QSeries.constant(1, ORDER, F)


def test_non_unit_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        QSeries([0, 1], 3, F).inverse()


@given(series())
def test_exp_log_inverse(a):
    a = a - a.coeffs[0]
    assert series_log(series_exp(a)) == a


def test_exp_of_q():
    e = series_exp(QSeries([0, 1], 6, F))
    assert e.coeffs == tuple(F(Fraction(1, factorial(k))) for k in range(7))


@given(series())
def test_q_derivative_and_integral(a):
    assert a.q_derivative().q_integrate(a.coeffs[0]) == a
    # q d/dq is a derivation
    b = a * a
    assert b.q_derivative() == a.q_derivative() * a * 2


@given(series(), nonzero_scalars())
def test_rescale_is_a_homomorphism(a, c):
    assert (a * a).rescale(c) == a.rescale(c) * a.rescale(c)


def test_geometric_series():
    s = QRational(QPoly([1], F), QPoly([1, -1], F)).taylor(6)
    assert s == QSeries([1] * 7, 6, F)


def test_qrational_normalizes():
    r = QRational(QPoly([2, 2], F), QPoly([2, -2], F))
    assert r.den.coeffs[0] == F.one
    # common factor (1 + q) cancels
    a = QRational(QPoly([1, 2, 1], F), QPoly([1, 0, -1], F))
    assert a == QRational(QPoly([1, 1], F), QPoly([1, -1], F))
    with pytest.raises(ValueError):
        QRational(QPoly([1], F), QPoly([0, 1], F))


def test_poly_gcd_and_divmod():
    a = QPoly([1, 0, -1], F)  # 1 - q^2
    b = QPoly([1, 1], F)  # 1 + q
    quot, rem = a.divmod(b)
    assert rem.is_zero() and quot == QPoly([1, -1], F)
    assert a.gcd(b) == b.monic()


def test_reconstruct_closed_form():
    c = -((T1 + T2) ** 2) / (24 * T1 * T2)
    target = QRational(QPoly([c, c], F), QPoly([1, -1], F))
    assert rational_reconstruct(target.taylor(8), 2) == target


@given(st.lists(nonzero_scalars(), min_size=1, max_size=3), st.lists(st.integers(-2, 2), min_size=1, max_size=2))
def test_reconstruct_random(num, den_tail):
    r = QRational(QPoly(num, F), QPoly([1] + den_tail, F))
    d = max(r.num.degree, r.den.degree)
    assert rational_reconstruct(r.taylor(2 * d + 4), d) == r


def test_reconstruct_errors():
    s = QSeries([1, 1, 2, 3, 5, 8], 5, F)
    with pytest.raises(InsufficientCoefficientsError):
        rational_reconstruct(s, 3)
    # 1, 1, 2, 3, 5, 8, 13 is Fibonacci; break it and ask for degree 1 only
    bad = QSeries([1, 0, 0, 1, 0, 0, 0, 5], 7, F)
    with pytest.raises(NoRationalFormError):
        rational_reconstruct(bad, 1)
    fib = QSeries([1, 1, 2, 3, 5, 8, 13, 21], 7, F)
    assert rational_reconstruct(fib, 2) == QRational(QPoly([1], F), QPoly([1, -1, -1], F))
