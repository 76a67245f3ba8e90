"""Truncated formal power series in t with polynomial coefficients.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``t**0 .. t**N`` exactly and nothing beyond.  Every operation states the order
of its result; nothing is silently extended with zeros.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    NonNilpotentInnerError,
    NonUnitLeadingCoefficientError,
    ValuationMismatchError,
    check_nonnegative,
)
from .rings import LAM, ONE, ZERO, Poly, as_fraction


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Poly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        check_nonnegative(order=order)
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients given for a series of order {order}")
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.coeffs: tuple[Poly, ...] = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        return cls([value], order=order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series ``t``."""
        return cls([0, 1] if order >= 1 else [0], order=order)

    @classmethod
    def from_egf(cls, values: Sequence) -> TruncatedSeries:
        """Series with coefficients ``values[n] / n!``."""
        return cls([Poly.coerce(v) / math.factorial(n) for n, v in enumerate(values)])

    def __getitem__(self, n: int) -> Poly:
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def valuation(self) -> float:
        """Index of the first nonzero coefficient, ``math.inf`` for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot raise the order of a series from {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order=order)

    def map(self, fn: Callable[[Poly], Poly]) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], order=self.order)

    def egf_coeffs(self) -> list[Poly]:
        """``n! * [t**n]`` for n = 0..order."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    # ------------------------------------------------------------------

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order=order
            )
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:], order=self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return self.map(lambda c: -c)

    def __sub__(self, other) -> TruncatedSeries:
        if not isinstance(other, (TruncatedSeries, int, Fraction, Poly)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return self.map(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        if isinstance(other, (int, Fraction)):
            return self.map(lambda c: c / other)
        return NotImplemented

    def __pow__(self, k: int) -> TruncatedSeries:
        check_nonnegative(exponent=k)
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(k):
            result = series_mul(result, self)
        return result

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    out = [ZERO] * (order + 1)
    for i in range(order + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(out, order=order)


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``q`` with ``num = q * den``.

    The denominator's first nonzero coefficient, at index ``v``, must be a
    nonzero rational constant and ``num`` must vanish to order at least ``v``.
    The result has order ``min(num.order, den.order) - v``.
    """
    v = den.valuation()
    if v == math.inf:
        raise NonUnitLeadingCoefficientError("division by the zero series")
    lead = den.coeffs[v]
    if not lead.is_constant():
        raise NonUnitLeadingCoefficientError(
            f"leading coefficient {lead} of the denominator is not a rational constant"
        )
    if num.valuation() < v:
        raise ValuationMismatchError(
            f"numerator valuation {num.valuation()} is below denominator valuation {v}"
        )
    order = min(num.order, den.order) - v
    if order < 0:
        raise ValuationMismatchError("not enough known terms to form a quotient")
    inv = 1 / lead.constant_value()
    a = num.coeffs[v:]
    b = den.coeffs[v:]
    q: list[Poly] = []
    for i in range(order + 1):
        acc = a[i]
        for j in range(1, i + 1):
            if b[j]:
                acc = acc - b[j] * q[i - j]
        q.append(acc * inv)
    return TruncatedSeries(q, order=order)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))`` by Horner's rule, truncated to ``min(outer.order, inner.order)``."""
    if inner.coeffs[0]:
        raise NonNilpotentInnerError(f"inner series has constant term {inner.coeffs[0]}")
    order = min(outer.order, inner.order)
    inner = inner.truncate(order)
    result = TruncatedSeries.constant(outer.coeffs[order], order)
    for i in range(order - 1, -1, -1):
        result = series_mul(result, inner) + outer.coeffs[i]
    return result


def exp_deg_series(exponent, N: int, sign: int = 1) -> TruncatedSeries:
    """Degenerate exponential ``e_l^a(sign*t)``: coefficients ``(a)_{k,l} sign^k / k!``.

    ``exponent`` may be any rational or polynomial (it is the ``a``).
    """
    check_nonnegative(N=N)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = Poly.coerce(exponent)
    coeffs = []
    falling = ONE
    for k in range(N + 1):
        if k:
            falling = falling * (a - (k - 1) * LAM)
        c = falling / math.factorial(k)
        coeffs.append(-c if sign < 0 and k % 2 else c)
    return TruncatedSeries(coeffs, order=N)


def deg_log_series(N: int) -> TruncatedSeries:
    """Degenerate logarithm ``log_l(1+t)``, the compositional inverse of ``e_l(t) - 1``.

    The coefficient of ``t**n`` is ``prod_{j=1}^{n-1} (l - j) / n!``.
    """
    check_nonnegative(N=N)
    coeffs = [ZERO]
    prod = ONE
    for n in range(1, N + 1):
        if n > 1:
            prod = prod * (LAM - (n - 1))
        coeffs.append(prod / math.factorial(n))
    return TruncatedSeries(coeffs[: N + 1], order=N)


def deg_polylog_series(k: int, N: int) -> TruncatedSeries:
    """Degenerate polylogarithm of integer index ``k`` (any sign).

    The coefficient of ``u**n`` is ``prod_{j=1}^{n-1} (j - l) / ((n-1)! n**k)``.
    """
    check_nonnegative(N=N)
    coeffs = [ZERO]
    prod = ONE
    for n in range(1, N + 1):
        if n > 1:
            prod = prod * ((n - 1) - LAM)
        coeffs.append(prod / (math.factorial(n - 1) * Fraction(n) ** k))
    return TruncatedSeries(coeffs[: N + 1], order=N)


def log1p_series(N: int, scale=1) -> TruncatedSeries:
    """Mercator series of ``log(1 + scale*t)``."""
    check_nonnegative(N=N)
    s = Poly.coerce(scale)
    coeffs = [ZERO]
    power = ONE
    for n in range(1, N + 1):
        power = power * s
        c = power / n
        coeffs.append(c if n % 2 else -c)
    return TruncatedSeries(coeffs[: N + 1], order=N)


def series_evaluate(s: TruncatedSeries, **values) -> TruncatedSeries:
    """Evaluate every coefficient at rational values of l, x, y."""
    values = {k: as_fraction(v) for k, v in values.items()}
    return s.map(lambda c: c.evaluate(values))
