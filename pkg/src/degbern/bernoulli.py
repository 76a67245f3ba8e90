"""Fully degenerate and Carlitz degenerate Bernoulli polynomials, degenerate Fubini polynomials.

The fully degenerate Bernoulli polynomials ``beta_{n,l}(x)`` are generated by
``log(1 + l t) / (l (e_l(t) - 1)) * e_l^x(t)``.  Each public ``beta_*``
function evaluates three closed forms (Stirling, double sum, forward
difference) and refuses to return if they disagree; the generating-function
route in :func:`beta_deg_gf` is the independent check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InternalIdentityFailure, check_nonnegative
from .rings import LAM, X, Y, ZERO, Poly
from .series import TruncatedSeries, exp_deg_series, series_div
from .stirling import (
    deg_falling,
    forward_difference,
    rstirling2_deg,
    stirling2_deg,
    stirling_poly,
)


def _agree(label: str, *values: Poly) -> Poly:
    first = values[0]
    for other in values[1:]:
        if other != first:
            raise InternalIdentityFailure(f"{label}: routes disagree ({first} vs {other})")
    return first


def _signed_weight(k: int) -> Fraction:
    # (-1)^k k! / (k + 1)
    w = Fraction(math.factorial(k), k + 1)
    return -w if k % 2 else w


def beta_routes(n: int, at=None) -> dict[str, Poly]:
    """The three closed forms of ``beta_{n,l}(a)``, keyed by route name.

    ``at`` picks the argument: ``None`` for the numbers (a = 0), ``"x"`` for
    the polynomials, or an integer ``r >= 0``.  Routes:

    ``stirling``
        ``sum_k (-1)^k k!/(k+1) S_k`` with ``S_k`` the matching Stirling-type
        quantity (numbers, Stirling polynomials, or r-Stirling numbers)
    ``double_sum``
        ``sum_k 1/(k+1) sum_j C(k,j) (-1)^j (a + j)_{n,l}``
    ``difference``
        ``sum_k (-1)^k/(k+1) Delta^k (a)_{n,l}``
    """
    check_nonnegative(n=n)
    if at is None:
        base, stirling = 0, lambda k: stirling2_deg(n, k)
    elif at == "x":
        base, stirling = X, lambda k: stirling_poly(n, k)
    elif isinstance(at, int):
        check_nonnegative(r=at)
        base, stirling = at, lambda k: rstirling2_deg(n, k, at)
    else:
        raise ValueError(f"at must be None, 'x' or a nonnegative int, got {at!r}")
    samples = [deg_falling(base + j, n) for j in range(n + 1)]
    stirling_form = ZERO
    double = ZERO
    diff = ZERO
    for k in range(n + 1):
        stirling_form = stirling_form + stirling(k) * _signed_weight(k)
        inner = ZERO
        for j in range(k + 1):
            term = samples[j] * math.comb(k, j)
            inner = inner + (-term if j % 2 else term)
        double = double + inner / (k + 1)
        d = forward_difference(samples[: k + 1], k) / (k + 1)
        diff = diff + (-d if k % 2 else d)
    return {"stirling": stirling_form, "double_sum": double, "difference": diff}


def _agreed(label: str, routes: dict[str, Poly]) -> Poly:
    return _agree(label, *routes.values())


@lru_cache(maxsize=None)
def beta_deg_number(n: int) -> Poly:
    """Fully degenerate Bernoulli number ``beta_{n,l}``.

    >>> [str(beta_deg_number(n)) for n in range(3)]
    ['1', '-1/2', '1/6 + 1/2*l']
    """
    return _agreed(f"beta_deg_number({n})", beta_routes(n))


@lru_cache(maxsize=None)
def beta_deg_poly(n: int) -> Poly:
    """Fully degenerate Bernoulli polynomial ``beta_{n,l}(x)``."""
    return _agreed(f"beta_deg_poly({n})", beta_routes(n, "x"))


@lru_cache(maxsize=None)
def beta_deg_at_r(n: int, r: int) -> Poly:
    """``beta_{n,l}(r)`` at a nonnegative integer ``r``."""
    check_nonnegative(n=n, r=r)
    return _agreed(f"beta_deg_at_r({n}, {r})", beta_routes(n, r))


def beta_deg_gf_series(n_max: int, x=0) -> TruncatedSeries:
    """Generating function of ``beta_{n,l}(x)`` to order ``n_max``; ``x`` may be symbolic."""
    check_nonnegative(n_max=n_max)
    N = n_max + 1
    # log(1 + l t) / l = sum (-1)^(m-1) l^(m-1) t^m / m
    coeffs = [ZERO]
    for m in range(1, N + 1):
        c = LAM ** (m - 1) / m
        coeffs.append(-c if m % 2 == 0 else c)
    numerator = TruncatedSeries(coeffs, order=N)
    kernel = series_div(numerator, exp_deg_series(1, N) - 1)
    return kernel * exp_deg_series(x, n_max)


def beta_deg_gf(n_max: int, x=0) -> list[Poly]:
    """``beta_{n,l}(x)`` for n = 0..n_max by coefficient extraction.

    ``x = 0`` gives the numbers, ``x = X`` the polynomials and an integer
    ``r`` the values at ``r``.
    """
    return beta_deg_gf_series(n_max, x).egf_coeffs()


def carlitz_beta_gf(n_max: int, x=X) -> list[Poly]:
    """Carlitz degenerate Bernoulli polynomials ``beta_n(x | l)``, generated by ``t e_l^x(t) / (e_l(t) - 1)``."""
    check_nonnegative(n_max=n_max)
    N = n_max + 1
    kernel = series_div(TruncatedSeries.variable(N), exp_deg_series(1, N) - 1)
    return (kernel * exp_deg_series(x, n_max)).egf_coeffs()


@lru_cache(maxsize=None)
def carlitz_beta(n: int) -> Poly:
    return carlitz_beta_gf(n)[n]


def classical_bernoulli_gf(n_max: int, x=X) -> list[Poly]:
    """Ordinary Bernoulli polynomials from ``t e^{xt} / (e^t - 1)``, i.e. the same kernel at ``l = 0``."""
    check_nonnegative(n_max=n_max)
    N = n_max + 1
    e = exp_deg_series(1, N).map(lambda c: c.evaluate(l=0))
    ex = exp_deg_series(x, n_max).map(lambda c: c.evaluate(l=0))
    kernel = series_div(TruncatedSeries.variable(N), e - 1)
    return (kernel * ex).egf_coeffs()


# ----------------------------------------------------------------------
# degenerate two-variable Fubini polynomials F_{n,l}(x | y)


@lru_cache(maxsize=None)
def fubini_deg(n: int) -> Poly:
    """``F_{n,l}(x | y)`` by its closed double sum."""
    check_nonnegative(n=n)
    total = ZERO
    for m in range(n + 1):
        inner = ZERO
        for k in range(m + 1):
            inner = inner + stirling2_deg(m, k) * math.factorial(k) * X**k
        total = total + inner * deg_falling(Y, n - m) * math.comb(n, m)
    return total


def fubini_deg_gf(n_max: int) -> list[Poly]:
    """``F_{n,l}(x | y)`` for n = 0..n_max from ``e_l^y(t) / (1 - x (e_l(t) - 1))``."""
    check_nonnegative(n_max=n_max)
    den = 1 - (exp_deg_series(1, n_max) - 1) * X
    return series_div(exp_deg_series(Y, n_max), den).egf_coeffs()


def _shift_kind(shift):
    if shift is None or shift == "x" or (isinstance(shift, int) and not isinstance(shift, bool)):
        if isinstance(shift, int):
            check_nonnegative(r=shift)
        return shift
    raise ValueError(f"shift must be None, a nonnegative int or 'x', got {shift!r}")


@lru_cache(maxsize=None)
def fubini_neg_arg(n: int, shift=None) -> Poly:
    """``F_{n,l}(-y | s)`` as an alternating sum in ``y``.

    ``shift`` selects the second argument ``s``: ``None`` for 0, an integer
    ``r >= 0`` (r-Stirling numbers), or ``"x"`` (Stirling polynomials).
    """
    check_nonnegative(n=n)
    shift = _shift_kind(shift)
    total = ZERO
    for k in range(n + 1):
        if shift is None:
            s = stirling2_deg(n, k)
        elif shift == "x":
            s = stirling_poly(n, k)
        else:
            s = rstirling2_deg(n, k, shift)
        term = s * math.factorial(k) * Y**k
        total = total + (-term if k % 2 else term)
    return total


def integrated_fubini(n: int, shift=None, upper=None) -> Poly:
    """``int_0^upper F_{n,l}(-y | s) dy`` by exact antidifferentiation in ``y``.

    With ``upper=None`` the upper limit is the symbol ``x``, except for
    ``shift="x"`` where ``x`` is taken and the limit defaults to 1.
    """
    shift = _shift_kind(shift)
    if upper is None:
        upper = 1 if shift == "x" else X
    elif shift == "x" and isinstance(upper, Poly) and "x" in upper.variables():
        raise ValueError("the symbolic upper limit clashes with the shift variable x")
    return fubini_neg_arg(n, shift).integrate("y", 0, upper)
