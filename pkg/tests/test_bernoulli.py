import doctest
import math
from fractions import Fraction as F

import pytest

import numeric_oracle as oracle
from degbern import bernoulli
from degbern.bernoulli import (
    beta_deg_at_r,
    beta_deg_gf,
    beta_deg_number,
    beta_deg_poly,
    beta_routes,
    carlitz_beta,
    carlitz_beta_gf,
    classical_bernoulli_gf,
    fubini_deg,
    fubini_deg_gf,
    fubini_neg_arg,
    integrated_fubini,
)
from degbern.errors import NegativeIndexError
from degbern.rings import LAM, X, Y

NONZERO_LAMBDAS = [F(1, 2), F(-2, 3), F(5), F(-7, 4), F(3, 5), F(2), F(-1), F(9, 7), F(-5, 2), F(1, 9), F(4), F(-3)]
CLASSICAL_BERNOULLI = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0), F(-1, 30)]


def test_doctests():
    assert doctest.testmod(bernoulli).failed == 0


def test_number_examples():
    assert [beta_deg_number(n) for n in range(4)] == [1, F(-1, 2), F(1, 6) + LAM / 2, -LAM / 2 - LAM**2]


def test_polynomial_examples():
    assert beta_deg_poly(2) == X**2 - (1 + LAM) * X + F(1, 6) + LAM / 2
    assert beta_deg_at_r(2, 1) == F(1, 6) - LAM / 2
    assert beta_deg_poly(2).evaluate(x=1) == beta_deg_at_r(2, 1)


def test_routes_agree_individually():
    for n in range(8):
        for at in (None, "x", 0, 2):
            routes = beta_routes(n, at)
            assert len(set(routes.values())) == 1, (n, at)


def test_bad_argument_selector():
    with pytest.raises(ValueError):
        beta_routes(2, "y")
    with pytest.raises(NegativeIndexError):
        beta_deg_at_r(3, -1)
    with pytest.raises(NegativeIndexError):
        beta_deg_number(-2)


def test_numbers_match_generating_function():
    assert beta_deg_gf(10) == [beta_deg_number(n) for n in range(11)]


def test_polynomials_match_generating_function():
    assert beta_deg_gf(8, X) == [beta_deg_poly(n) for n in range(9)]


@pytest.mark.parametrize("r", range(5))
def test_values_at_r_match_generating_function(r):
    assert beta_deg_gf(8, r) == [beta_deg_at_r(n, r) for n in range(9)]


@pytest.mark.parametrize("n", range(9))
def test_numbers_against_numeric_oracle(n):
    value = beta_deg_number(n)
    for lam in NONZERO_LAMBDAS[: n + 2]:
        assert value.evaluate(l=lam) == oracle.fully_degenerate_bernoulli(n, lam)


@pytest.mark.parametrize("n", range(7))
def test_polynomials_against_numeric_oracle(n):
    value = beta_deg_poly(n)
    for lam in NONZERO_LAMBDAS[:4]:
        for x in (F(0), F(1, 3), F(-2)):
            assert value.evaluate(l=lam, x=x) == oracle.fully_degenerate_bernoulli(n, lam, x)


def test_classical_limit():
    assert [beta_deg_number(n).evaluate(l=0) for n in range(9)] == CLASSICAL_BERNOULLI
    assert [b.evaluate(x=0) for b in classical_bernoulli_gf(8)] == CLASSICAL_BERNOULLI
    for n in range(8):
        assert beta_deg_poly(n).evaluate(l=0) == classical_bernoulli_gf(7)[n]


def test_classical_spot_values():
    assert classical_bernoulli_gf(2)[1].evaluate(x=0) == F(-1, 2)
    assert classical_bernoulli_gf(2)[2].evaluate(x=F(1, 2)) == F(-1, 12)


def test_polynomial_degree_and_leading_coefficient():
    for n in range(9):
        p = beta_deg_poly(n)
        assert p.degree("x") == n
        assert p.coeff_of("x", n) == 1


def test_carlitz_examples():
    assert carlitz_beta(1) == F(-1, 2) + LAM / 2 + X
    assert carlitz_beta(2).evaluate(l=0) == X**2 - X + F(1, 6)
    assert carlitz_beta_gf(4, 0) == [c.evaluate(x=0) for c in carlitz_beta_gf(4)]


@pytest.mark.parametrize("n", range(7))
def test_carlitz_against_numeric_oracle(n):
    for lam in (F(0), F(1, 2), F(-3)):
        for x in (F(0), F(2, 5)):
            assert carlitz_beta(n).evaluate(l=lam, x=x) == oracle.carlitz_bernoulli(n, lam, x)


def test_fubini_examples():
    assert fubini_deg(0) == 1
    assert fubini_deg(1) == X + Y
    assert fubini_deg(2).evaluate(y=0) == X - LAM * X + 2 * X**2


def test_fubini_matches_generating_function():
    assert fubini_deg_gf(8) == [fubini_deg(n) for n in range(9)]


@pytest.mark.parametrize("n", range(6))
def test_fubini_against_numeric_oracle(n):
    for lam in (F(0), F(2, 3), F(-1)):
        for x, y in ((F(1, 2), F(0)), (F(-3), F(5, 4))):
            assert fubini_deg(n).evaluate(l=lam, x=x, y=y) == oracle.fubini(n, lam, x, y)


def test_fubini_negated_argument():
    for n in range(8):
        assert fubini_neg_arg(n) == fubini_deg(n).subs({"x": -Y, "y": 0})
        assert fubini_neg_arg(n, 2) == fubini_deg(n).subs({"x": -Y, "y": 2})
        assert fubini_neg_arg(n, "x") == fubini_deg(n).subs({"x": -Y, "y": X})


def test_fubini_bad_shift():
    with pytest.raises(ValueError):
        fubini_neg_arg(2, "y")
    with pytest.raises(ValueError):
        integrated_fubini(2, "x", upper=X)


@pytest.mark.parametrize("n", range(11))
def test_integrated_fubini_reproduces_bernoulli(n):
    assert integrated_fubini(n, upper=1) == beta_deg_number(n)
    assert integrated_fubini(n, "x") == beta_deg_poly(n)
    for r in range(3):
        assert integrated_fubini(n, r, upper=1) == beta_deg_at_r(n, r)


def d_dx(p):
    return sum((c * j * LAM**i * X ** (j - 1) * Y**k for (i, j, k), c in p.terms() if j), start=0 * X)


def test_integrated_fubini_symbolic_upper_limit():
    # differentiating in the upper limit recovers the integrand
    for n in range(6):
        total = integrated_fubini(n)
        assert total.evaluate(x=0) == 0
        assert total.subs({"x": 1}) == beta_deg_number(n)
        assert d_dx(total) == fubini_neg_arg(n).subs({"y": X})


def test_weight_is_signed_factorial_ratio():
    for k in range(6):
        assert bernoulli._signed_weight(k) == F((-1) ** k * math.factorial(k), k + 1)
