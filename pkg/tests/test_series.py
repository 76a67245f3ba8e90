import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degbern.errors import NonNilpotentInnerError, NonUnitLeadingCoefficientError, ValuationMismatchError
from degbern.rings import LAM, X, Y
from degbern.series import (
    TruncatedSeries,
    deg_log_series,
    deg_polylog_series,
    exp_deg_series,
    log1p_series,
    series_compose,
    series_div,
    series_mul,
)
from degbern.stirling import stirling2_deg

small = st.builds(F, st.integers(-9, 9), st.integers(1, 5))


def series_of(order, valuation=0, unit=False):
    coeff = small.map(lambda c: c + LAM * c / 2)

    def build(cs):
        cs = [0] * valuation + cs
        return TruncatedSeries(cs[: order + 1], order=order)

    if unit:
        # leading coefficient a nonzero rational
        return st.tuples(small.filter(bool), st.lists(coeff, min_size=order, max_size=order)).map(
            lambda t: build([t[0]] + t[1])
        )
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(build)


def t_series(order):
    return TruncatedSeries.variable(order)


def test_mul_difference_of_squares():
    a = TruncatedSeries([1, 1, 0])
    b = TruncatedSeries([1, -1, 0])
    assert series_mul(a, b) == TruncatedSeries([1, 0, -1])


def test_mul_identity_and_order():
    a = exp_deg_series(X, 4)
    assert a * TruncatedSeries.constant(1, 4) == a
    assert series_mul(a, TruncatedSeries.constant(1, 2)).order == 2


def test_square_of_exp_minus_one_gives_stirling():
    base = exp_deg_series(1, 3) - 1
    sq = series_mul(base, base)
    # n! [t^n] (e_l(t) - 1)^k / k!
    assert sq.egf_coeffs()[3] / 2 == stirling2_deg(3, 2)


def test_div_t_by_t():
    t = t_series(3)
    assert series_div(t, t) == TruncatedSeries([1, 0, 0], order=2)


def test_div_bernoulli_kernel():
    # log(1 + l t)/l over e_l(t) - 1
    num = TruncatedSeries([0, 1, -LAM / 2, LAM**2 / 3])
    q = series_div(num, exp_deg_series(1, 3) - 1)
    assert q.order == 2
    assert list(q.coeffs) == [1, F(-1, 2), F(1, 12) + LAM / 4]


def test_div_fubini_first_coefficient():
    q = series_div(TruncatedSeries.constant(1, 3), 1 - (exp_deg_series(1, 3) - 1) * Y)
    assert q[1] == Y


def test_div_errors():
    t = t_series(3)
    with pytest.raises(ValuationMismatchError):
        series_div(TruncatedSeries.constant(1, 3), t)
    with pytest.raises(NonUnitLeadingCoefficientError):
        series_div(t, t * LAM)
    with pytest.raises(NonUnitLeadingCoefficientError):
        series_div(t, TruncatedSeries([0], order=3))


def test_compose_identity_inner():
    outer = TruncatedSeries([1, 1, 1])
    assert series_compose(outer, t_series(2)) == TruncatedSeries([1, 1, 1])


def test_compose_mercator():
    out = series_compose(log1p_series(3), t_series(3) * LAM)
    assert list(out.coeffs) == [0, LAM, -(LAM**2) / 2, LAM**3 / 3]


def test_compose_rejects_constant_inner():
    with pytest.raises(NonNilpotentInnerError):
        series_compose(t_series(2), TruncatedSeries([1, 1, 0]))


def test_compose_truncates_to_shorter_order():
    assert series_compose(log1p_series(2), t_series(5)).order == 2
    assert series_compose(log1p_series(7), t_series(3)).order == 3


def test_index_one_polylog_quotient():
    # Li_1(u)/u at u = 1 - e_l(-t), against t e_{-l}(t)/(e_{-l}(t) - 1) = t / (1 - e_l(-t))
    N = 6
    u = 1 - exp_deg_series(1, N, sign=-1)
    lhs = series_div(series_compose(deg_polylog_series(1, N), u), u)
    rhs = series_div(t_series(N), u)
    assert lhs == rhs


def test_exp_deg_examples():
    assert exp_deg_series(0, 5) == TruncatedSeries.constant(1, 5)
    assert list(exp_deg_series(1, 2).coeffs) == [1, 1, (1 - LAM) / 2]
    assert list(exp_deg_series(X, 2).coeffs) == [1, X, X * (X - LAM) / 2]
    assert list(exp_deg_series(X, 2, sign=-1).coeffs) == [1, -X, X * (X - LAM) / 2]


def test_deg_log_coefficients():
    s = deg_log_series(4)
    assert s[0] == 0 and s[1] == 1
    assert s[2] == (LAM - 1) / 2
    # lambda * (1)_{2,1/lambda} at lambda = 3 is 3 * 1 * (1 - 1/3) = 2
    assert (s[2] * 2).evaluate(l=3) == 2


@pytest.mark.parametrize("order", [1, 4, 8])
def test_deg_log_is_inverse_of_exp(order):
    assert series_compose(deg_log_series(order), exp_deg_series(1, order) - 1) == t_series(order)
    assert series_compose(exp_deg_series(1, order) - 1, deg_log_series(order)) == t_series(order)


@pytest.mark.parametrize("k", [-2, 0, 1, 3])
def test_polylog_coefficients(k):
    s = deg_polylog_series(k, 6)
    assert s[1] == 1
    for n in range(1, 7):
        assert s[n].evaluate(l=0) == F(1) / F(n) ** k


def test_polylog_index_one_is_negated_log():
    N = 8
    assert deg_polylog_series(1, N) == -series_compose(deg_log_series(N), -t_series(N))


def test_classical_exponential_limit():
    s = exp_deg_series(1, 7).map(lambda c: c.evaluate(l=0))
    assert list(s.coeffs) == [F(1, math.factorial(n)) for n in range(8)]


def test_exp_product_is_vandermonde():
    assert exp_deg_series(X + Y, 6) == exp_deg_series(X, 6) * exp_deg_series(Y, 6)


@given(series_of(4), series_of(4, unit=True))
@settings(max_examples=40, deadline=None)
def test_div_then_mul_roundtrip(a, b):
    q = series_div(a, b)
    assert series_mul(q, b) == a.truncate(q.order)


@given(series_of(3, valuation=1), series_of(3, unit=True))
@settings(max_examples=25, deadline=None)
def test_div_with_shared_valuation(a, c):
    den = series_mul(c, t_series(3))
    q = series_div(a, den)
    assert q.order == 2
    assert series_mul(q, series_div(den, t_series(3))) == series_div(a, t_series(3)).truncate(2)


@given(series_of(4), series_of(4, valuation=1), series_of(4, valuation=1))
@settings(max_examples=25, deadline=None)
def test_composition_is_associative(f, g, h):
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


def test_truncation_order_is_explicit():
    s = TruncatedSeries([1, 2], order=4)
    assert len(s.coeffs) == 5
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2, 3], order=1)
    with pytest.raises(IndexError):
        s[5]
