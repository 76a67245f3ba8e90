"""Degenerate falling factorials, differences and Stirling-type numbers.

Each family comes with an explicit finite sum and a generating-function
route so that the two can be checked against each other.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from typing import Sequence

from .errors import ArityMismatchError, InternalIdentityFailure, check_nonnegative
from .rings import LAM, ONE, X, ZERO, Poly
from .series import exp_deg_series


class FallingKind(enum.Enum):
    ORDINARY = "ordinary"  # (a)_n = a(a-1)...(a-n+1)
    DEGENERATE = "degenerate"  # (a)_{n,l} = a(a-l)...(a-(n-1)l)


def falling_factorial(kind: FallingKind, argument, n: int) -> Poly:
    check_nonnegative(n=n)
    step = LAM if kind is FallingKind.DEGENERATE else ONE
    return _falling(Poly.coerce(argument), n, step)


def _falling(a: Poly, n: int, step) -> Poly:
    out = ONE
    for i in range(n):
        out = out * (a - step * i)
    return out


@lru_cache(maxsize=None)
def deg_falling(a, n: int, negate: bool = False) -> Poly:
    """``(a)_{n,l}``, or ``(a)_{n,-l}`` with ``negate``; cached on hashable ``a``."""
    check_nonnegative(n=n)
    step = -LAM if negate else LAM
    return _falling(Poly.coerce(a), n, step)


def forward_difference(values: Sequence, k: int):
    """``k``-th forward difference from the samples ``f(x), f(x+1), ..., f(x+k)``."""
    check_nonnegative(k=k)
    if len(values) != k + 1:
        raise ArityMismatchError(f"need {k + 1} samples for a difference of order {k}, got {len(values)}")
    total = ZERO
    for j, v in enumerate(values):
        term = Poly.coerce(v) * math.comb(k, j)
        total = total + (term if (k - j) % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def stirling2_deg(n: int, k: int) -> Poly:
    """Degenerate Stirling number of the second kind ``S_{2,l}(n, k)`` by its alternating sum."""
    check_nonnegative(n=n, k=k)
    if k > n:
        return ZERO
    total = ZERO
    for j in range(k + 1):
        term = deg_falling(j, n) * math.comb(k, j)
        total = total + (term if (k - j) % 2 == 0 else -term)
    return total / math.factorial(k)


def stirling2_deg_gf(n_max: int, k: int) -> list[Poly]:
    """``S_{2,l}(n, k)`` for n = 0..n_max from ``(e_l(t) - 1)**k / k!``."""
    check_nonnegative(n_max=n_max, k=k)
    base = exp_deg_series(1, n_max) - 1
    return ((base**k) / math.factorial(k)).egf_coeffs()


@lru_cache(maxsize=None)
def rstirling2_deg(n: int, k: int, r: int) -> Poly:
    """Degenerate r-Stirling number ``S^{(r)}_{2,l}(n + r, k + r)`` by its alternating sum."""
    check_nonnegative(n=n, k=k, r=r)
    if k > n:
        return ZERO
    total = ZERO
    for j in range(k + 1):
        term = deg_falling(r + j, n) * math.comb(k, j)
        total = total + (term if (k - j) % 2 == 0 else -term)
    return total / math.factorial(k)


def rstirling2_deg_gf(n_max: int, k: int, r: int) -> list[Poly]:
    """``S^{(r)}_{2,l}(n + r, k + r)`` for n = 0..n_max from ``e_l^r(t) (e_l(t) - 1)**k / k!``."""
    check_nonnegative(n_max=n_max, k=k, r=r)
    base = exp_deg_series(1, n_max) - 1
    series = exp_deg_series(r, n_max) * (base**k) / math.factorial(k)
    return series.egf_coeffs()


def rstirling2_via_convolution(n: int, k: int, r: int) -> Poly:
    """r-Stirling numbers as a binomial convolution of ``S_{2,l}(l, k)`` with ``(r)_{n-l,l}``."""
    check_nonnegative(n=n, k=k, r=r)
    total = ZERO
    for l in range(k, n + 1):
        total = total + stirling2_deg(l, k) * deg_falling(r, n - l) * math.comb(n, l)
    return total


def stirling_poly_convolution(n: int, k: int) -> Poly:
    check_nonnegative(n=n, k=k)
    total = ZERO
    for l in range(k, n + 1):
        total = total + stirling2_deg(l, k) * deg_falling(X, n - l) * math.comb(n, l)
    return total


def stirling_poly_alternating(n: int, k: int) -> Poly:
    check_nonnegative(n=n, k=k)
    total = ZERO
    for l in range(k + 1):
        term = deg_falling(X + l, n) * math.comb(k, l)
        total = total + (term if (k - l) % 2 == 0 else -term)
    return total / math.factorial(k)


@lru_cache(maxsize=None)
def stirling_poly(n: int, k: int) -> Poly:
    """Degenerate Stirling polynomial ``S_{2,l}(n, k | x)``.

    Computed both as a convolution with ``(x)_{m,l}`` and as an alternating
    sum over ``(l + x)_{n,l}``; the two must agree.
    """
    a = stirling_poly_convolution(n, k)
    b = stirling_poly_alternating(n, k)
    if a != b:
        raise InternalIdentityFailure(f"stirling_poly({n}, {k}): {a} != {b}")
    return a


def stirling_poly_gf(n_max: int, k: int) -> list[Poly]:
    """``S_{2,l}(n, k | x)`` for n = 0..n_max from ``(e_l(t) - 1)**k e_l^x(t) / k!``."""
    check_nonnegative(n_max=n_max, k=k)
    base = exp_deg_series(1, n_max) - 1
    series = exp_deg_series(X, n_max) * (base**k) / math.factorial(k)
    return series.egf_coeffs()


def stirling_triangle(n_max: int, k_max: int | None = None) -> list[list[Poly]]:
    """Rows ``[S_{2,l}(n, 0), ..., S_{2,l}(n, min(n, k_max))]`` for n = 0..n_max."""
    check_nonnegative(n_max=n_max)
    rows = []
    for n in range(n_max + 1):
        top = n if k_max is None else min(n, k_max)
        rows.append([stirling2_deg(n, k) for k in range(top + 1)])
    return rows

