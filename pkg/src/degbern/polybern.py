"""Degenerate poly-Bernoulli polynomials ``beta^{(p)}_{n,l}(x)`` of integer index ``p``.

Generated by ``Li_{p,l}(1 - e_l(-t)) / (1 - e_l(-t)) * e_l^{-x}(-t)``.

The closed forms carry the factors ``(-l)^k (1)_{k+1,1/l}`` and
``l^k (1)_{k+1,1/l}``.  They are used here in the 1/l-free shapes
``prod_{j=1}^{k} (j - l)`` and ``prod_{j=1}^{k} (l - j)`` so everything stays
polynomial in ``l``.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from functools import lru_cache

from .codec import encode_poly
from .errors import InternalIdentityFailure, check_nonnegative
from .rings import LAM, ONE, X, ZERO, Poly
from .reports import IdentityReport
from .series import (
    TruncatedSeries,
    deg_log_series,
    deg_polylog_series,
    exp_deg_series,
    series_compose,
    series_div,
)
from .stirling import deg_falling, rstirling2_deg, stirling2_deg, stirling_poly

FORMS = ("stirling_poly", "falling", "stirling")


@lru_cache(maxsize=None)
def rising_weight(k: int) -> Poly:
    """``prod_{j=1}^{k} (j - l)``, equal to ``(-l)^k (1)_{k+1,1/l}``."""
    out = ONE
    for j in range(1, k + 1):
        out = out * (j - LAM)
    return out


@lru_cache(maxsize=None)
def falling_weight(k: int) -> Poly:
    """``prod_{j=1}^{k} (l - j)``, equal to ``l^k (1)_{k+1,1/l}``."""
    out = ONE
    for j in range(1, k + 1):
        out = out * (LAM - j)
    return out


def literal_weight(k: int, lam: Fraction, negate: bool) -> Fraction:
    """``(+-lam)^k (1)_{k+1,1/lam}`` evaluated with genuine ``1/lam`` arithmetic."""
    inv = 1 / Fraction(lam)
    product = Fraction(1)
    for i in range(k + 1):
        product *= 1 - i * inv
    return (-lam if negate else lam) ** k * product


def poly_bernoulli_gf_series(p: int, n_max: int, x=X) -> TruncatedSeries:
    check_nonnegative(n_max=n_max)
    N = n_max + 1
    u = 1 - exp_deg_series(1, N, sign=-1)
    numerator = series_compose(deg_polylog_series(p, N), u)
    return series_div(numerator, u) * exp_deg_series(-Poly.coerce(x), n_max, sign=-1)


def poly_bernoulli_gf(p: int, n_max: int, x=X) -> list[Poly]:
    """``beta^{(p)}_{n,l}(x)`` for n = 0..n_max by coefficient extraction."""
    return poly_bernoulli_gf_series(p, n_max, x).egf_coeffs()


def _power(k: int, p: int) -> Fraction:
    return Fraction(k + 1) ** p


def shifted_stirling_poly(n: int, k: int) -> Poly:
    """``S_{2,-l}(n, k | x - k)``: negate l first, then shift x."""
    return stirling_poly(n, k).negate_lambda().shift_x(-k)


def shifted_stirling_poly_falling(n: int, k: int) -> Poly:
    """``S_{2,-l}(n, k | x - k)`` as ``(1/k!) sum_l C(k,l) (-1)^l (x - l)_{n,-l}``."""
    total = ZERO
    for l in range(k + 1):
        term = deg_falling(X - l, n, negate=True) * math.comb(k, l)
        total = total + (-term if l % 2 else term)
    return total / math.factorial(k)


def falling_difference_expansion(n: int, k: int) -> tuple[Poly, Poly]:
    """Both sides of ``sum_l C(k,l)(-1)^l (x-l)_{n,-l} = sum_j C(n,j)(-1)^j (x)_{n-j,-l} k! (-1)^k S_{2,l}(j,k)``."""
    lhs = ZERO
    for l in range(k + 1):
        term = deg_falling(X - l, n, negate=True) * math.comb(k, l)
        lhs = lhs + (-term if l % 2 else term)
    rhs = ZERO
    for j in range(n + 1):
        term = deg_falling(X, n - j, negate=True) * stirling2_deg(j, k) * math.comb(n, j)
        rhs = rhs + (-term if j % 2 else term)
    rhs = rhs * math.factorial(k)
    if k % 2:
        rhs = -rhs
    return lhs, rhs


@lru_cache(maxsize=None)
def poly_bernoulli_closed(p: int, n: int, form: str = "stirling_poly") -> Poly:
    """One closed form of ``beta^{(p)}_{n,l}(x)``.

    ``form`` is one of:

    ``"stirling_poly"``
        ``sum_k w_k / (k+1)^p * S_{2,-l}(n, k | x - k)``
    ``"falling"``
        ``sum_k w_k / ((k+1)^p k!) * sum_l C(k,l) (-1)^l (x - l)_{n,-l}``
    ``"stirling"``
        ``sum_k v_k / (k+1)^p * sum_j C(n,j) (-1)^j S_{2,l}(j,k) (x)_{n-j,-l}``

    with ``w_k = prod (j - l)`` and ``v_k = prod (l - j)`` over ``j = 1..k``.
    """
    check_nonnegative(n=n)
    total = ZERO
    if form == "stirling_poly":
        for k in range(n + 1):
            total = total + shifted_stirling_poly(n, k) * rising_weight(k) / _power(k, p)
    elif form == "falling":
        for k in range(n + 1):
            inner = ZERO
            for l in range(k + 1):
                term = deg_falling(X - l, n, negate=True) * math.comb(k, l)
                inner = inner + (-term if l % 2 else term)
            total = total + inner * rising_weight(k) / (_power(k, p) * math.factorial(k))
    elif form == "stirling":
        for k in range(n + 1):
            inner = ZERO
            for j in range(k, n + 1):
                term = stirling2_deg(j, k) * deg_falling(X, n - j, negate=True) * math.comb(n, j)
                inner = inner + (-term if j % 2 else term)
            total = total + inner * falling_weight(k) / _power(k, p)
    else:
        raise ValueError(f"unknown closed form {form!r}; expected one of {FORMS}")
    return total


def poly_bernoulli(p: int, n: int) -> Poly:
    """``beta^{(p)}_{n,l}(x)``; the three closed forms are required to agree."""
    values = [poly_bernoulli_closed(p, n, form) for form in FORMS]
    if values[1] != values[0] or values[2] != values[0]:
        raise InternalIdentityFailure(f"poly_bernoulli({p}, {n}): closed forms disagree")
    return values[0]


def neg_r_convolution_form(p: int, n: int, r: int) -> Poly:
    total = ZERO
    for k in range(n + 1):
        inner = ZERO
        for j in range(k, n + 1):
            inner = inner + stirling2_deg(j, k) * deg_falling(r, n - j) * math.comb(n, j)
        total = total + inner * falling_weight(k) / _power(k, p)
    return -total if n % 2 else total


def neg_r_rstirling_form(p: int, n: int, r: int) -> Poly:
    total = ZERO
    for k in range(n + 1):
        total = total + rstirling2_deg(n, k, r) * falling_weight(k) / _power(k, p)
    return -total if n % 2 else total


@lru_cache(maxsize=None)
def poly_bernoulli_at_neg_r(p: int, n: int, r: int) -> Poly:
    """``beta^{(p)}_{n,l}(-r)`` for integer ``r >= 0`` via r-Stirling numbers.

    Checked against the convolution form and against substituting ``x = -r``
    into the closed polynomial.
    """
    check_nonnegative(n=n, r=r)
    a = neg_r_convolution_form(p, n, r)
    b = neg_r_rstirling_form(p, n, r)
    c = poly_bernoulli_closed(p, n).evaluate(x=-r)
    if not a == b == c:
        raise InternalIdentityFailure(f"poly_bernoulli_at_neg_r({p}, {n}, {r}): {a}, {b}, {c}")
    return b


def check_polylog_log_bridge(N: int) -> IdentityReport:
    """Compare ``Li_{1,l}(t)`` with ``-log_l(1 - t)`` coefficient by coefficient up to ``t**N``."""
    if N < 1:
        raise ValueError("the bridge needs order N >= 1")
    start = time.perf_counter()
    left = deg_polylog_series(1, N)
    right = -series_compose(deg_log_series(N), -TruncatedSeries.variable(N))
    counterexample = None
    failures = 0
    for n in range(N + 1):
        if left[n] != right[n]:
            failures += 1
            if counterexample is None:
                counterexample = {
                    "point": {"n": n},
                    "lhs": encode_poly(left[n]),
                    "rhs": encode_poly(right[n]),
                }
    return IdentityReport(
        id="polylog.log_bridge",
        points=N + 1,
        status="fail" if failures else "pass",
        counterexample=counterexample,
        wall_time=time.perf_counter() - start,
        failures=failures,
    )
