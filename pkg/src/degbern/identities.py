"""Catalog of identities checked as exact polynomial equalities.

Every case compares two independently computed sides at each point of a
parameter sweep.  Equality is structural equality of canonical polynomials,
so a passing case is a proof for the swept parameter values; only the case
flagged ``sampled`` evaluates at sample values of ``l``.

Case ids are dotted (``family.aspect``) so that ``run_suite(prefix=...)``
selects whole families.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from .bernoulli import (
    beta_deg_at_r,
    beta_deg_gf,
    beta_deg_number,
    beta_deg_poly,
    beta_routes,
    carlitz_beta,
    classical_bernoulli_gf,
    fubini_deg,
    fubini_deg_gf,
    fubini_neg_arg,
    integrated_fubini,
)
from .codec import encode_poly, encode_series
from .errors import UnknownIdentityError
from .oracles import classical_rstirling2, classical_stirling2
from .polybern import (
    falling_difference_expansion,
    falling_weight,
    literal_weight,
    neg_r_convolution_form,
    neg_r_rstirling_form,
    poly_bernoulli_closed,
    poly_bernoulli_gf,
    rising_weight,
    shifted_stirling_poly,
    shifted_stirling_poly_falling,
)
from .reports import IdentityReport
from .rings import LAM, ONE, X, Y, ZERO, Poly
from .series import (
    TruncatedSeries,
    deg_log_series,
    deg_polylog_series,
    exp_deg_series,
    log1p_series,
    series_compose,
    series_div,
)
from .stirling import (
    FallingKind,
    deg_falling,
    falling_factorial,
    forward_difference,
    rstirling2_deg,
    rstirling2_deg_gf,
    rstirling2_via_convolution,
    stirling2_deg,
    stirling2_deg_gf,
    stirling_poly,
    stirling_poly_alternating,
    stirling_poly_convolution,
    stirling_poly_gf,
)

# Set-partition enumeration grows like the Bell numbers; these caps keep it fast.
PARTITION_N_CAP = 8
PARTITION_R_CAP = 3
LAMBDA_SAMPLES = (Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(5))


@dataclass(frozen=True)
class Limits:
    n_max: int = 10
    r_max: int = 4
    p_min: int = -3
    p_max: int = 3

    def ns(self, start: int = 0, cap: int | None = None) -> range:
        top = self.n_max if cap is None else min(self.n_max, cap)
        return range(start, top + 1)

    def rs(self, cap: int | None = None) -> range:
        top = self.r_max if cap is None else min(self.r_max, cap)
        return range(top + 1)

    def ps(self) -> range:
        return range(self.p_min, self.p_max + 1)


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class IdentityCase:
    id: str
    title: str
    params: tuple[str, ...]
    sweep: Callable[[Limits], Iterable[tuple]]
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    sampled: bool = False

    def points(self, limits: Limits) -> list[dict[str, Any]]:
        pts = [dict(zip(self.params, p)) for p in self.sweep(limits)]
        return sorted(pts, key=lambda d: tuple(d[name] for name in self.params))


def _encode(value: Any) -> Any:
    if isinstance(value, TruncatedSeries):
        return encode_series(value)
    if isinstance(value, (Poly, int, Fraction)):
        return encode_poly(value)
    if isinstance(value, (tuple, list)):
        return [_encode(v) for v in value]
    return value


def run_identity(case: IdentityCase | str, limits: Limits = DEFAULT_LIMITS) -> IdentityReport:
    """Check one case at every sweep point; report the first failing point in sweep order."""
    if isinstance(case, str):
        case = get_case(case)
    start = time.perf_counter()
    points = case.points(limits)
    failures = 0
    counterexample = None
    for point in points:
        try:
            left, right = case.lhs(**point), case.rhs(**point)
            ok = left == right
            detail = {"lhs": _encode(left), "rhs": _encode(right)}
        except Exception as exc:  # a broken route is a failed point, not a crashed suite
            ok = False
            detail = {"error": f"{type(exc).__name__}: {exc}"}
        if not ok:
            failures += 1
            if counterexample is None:
                counterexample = {"point": point, **detail}
    return IdentityReport(
        id=case.id,
        points=len(points),
        status="fail" if failures else "pass",
        counterexample=counterexample,
        wall_time=time.perf_counter() - start,
        failures=failures,
    )


def run_suite(
    prefix: str | None = None,
    limits: Limits = DEFAULT_LIMITS,
    include_controls: bool = False,
) -> list[IdentityReport]:
    """Run every catalog case whose id starts with ``prefix``, sorted by id."""
    cases = matching_cases(prefix, include_controls)
    return [run_identity(case, limits) for case in cases]


def matching_cases(prefix: str | None = None, include_controls: bool = False) -> list[IdentityCase]:
    pool = dict(CATALOG)
    if include_controls:
        pool.update(CONTROLS)
    return [pool[i] for i in sorted(pool) if prefix is None or i.startswith(prefix)]


def get_case(case_id: str) -> IdentityCase:
    try:
        return CATALOG[case_id]
    except KeyError:
        pass
    try:
        return CONTROLS[case_id]
    except KeyError:
        raise UnknownIdentityError(case_id) from None


def suite_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)


# ----------------------------------------------------------------------
# sweeps


def _n(start: int = 0, cap: int | None = None):
    return lambda lim: ((n,) for n in lim.ns(start, cap))


def _nk(cap: int | None = None):
    return lambda lim: ((n, k) for n in lim.ns(cap=cap) for k in range(n + 1))


def _nr(cap: int | None = None):
    return lambda lim: itertools.product(lim.ns(cap=cap), lim.rs())


def _nkr(n_cap: int | None = None, r_cap: int | None = None):
    def sweep(lim: Limits) -> Iterator[tuple]:
        for n in lim.ns(cap=n_cap):
            for k in range(n + 1):
                for r in lim.rs(r_cap):
                    yield n, k, r

    return sweep


def _pn(cap: int | None = None):
    return lambda lim: itertools.product(lim.ps(), lim.ns(cap=cap))


def _pnr(r_cap: int | None = None):
    return lambda lim: itertools.product(lim.ps(), lim.ns(), lim.rs(r_cap))


# ----------------------------------------------------------------------
# helpers for the individual cases


class _PrefixTable:
    """Caches ``build(key, order)`` lists and serves entry ``n``, rebuilding at a higher order when needed.

    Truncated coefficients do not depend on the order, so the cache never
    changes a result.
    """

    def __init__(self, build: Callable[..., list]):
        self._build = build
        self._tables: dict[Any, list] = {}

    def __call__(self, key: tuple, n: int):
        table = self._tables.get(key)
        if table is None or len(table) <= n:
            table = self._build(*key, max(n, 10))
            self._tables[key] = table
        return table[n]


_stirling_gf = _PrefixTable(lambda k, N: stirling2_deg_gf(N, k))
_rstirling_gf = _PrefixTable(lambda k, r, N: rstirling2_deg_gf(N, k, r))
_stirling_poly_gf = _PrefixTable(lambda k, N: stirling_poly_gf(N, k))
_beta_gf = _PrefixTable(lambda at, N: beta_deg_gf(N, X if at == "x" else at))
_fubini_gf = _PrefixTable(lambda N: fubini_deg_gf(N))
_classical_gf = _PrefixTable(lambda N: classical_bernoulli_gf(N))
_poly_bernoulli_gf = _PrefixTable(lambda p, N: poly_bernoulli_gf(p, N))


def _alternating_shifted(n: int, k: int, r: int) -> Poly:
    # sum_j C(k,j) (-1)^j (j + r)_{n,l}
    total = ZERO
    for j in range(k + 1):
        term = deg_falling(j + r, n) * math.comb(k, j)
        total = total + (-term if j % 2 else term)
    return total


def _signed(value: Poly, k: int) -> Poly:
    return -value if k % 2 else value


def _convolution_with_r(n: int, k: int, r: int, start: int) -> Poly:
    total = ZERO
    for l in range(start, n + 1):
        total = total + stirling2_deg(l, k) * deg_falling(r, n - l) * math.comb(n, l)
    return total


def _fubini_neg_gf(n: int) -> Poly:
    series = series_div(TruncatedSeries.constant(1, n), 1 + (exp_deg_series(1, n) - 1) * Y)
    return series.egf_coeffs()[n]


def _log_fubini_gf(n: int, r: int = 0) -> Poly:
    # e_l^r(t) log(1 + x (e_l(t) - 1)) / (e_l(t) - 1), coefficient n! [t^n]
    N = n + 1
    base = exp_deg_series(1, N) - 1
    log_part = series_compose(log1p_series(N), base * X)
    series = series_div(log_part, base) * exp_deg_series(r, n)
    return series.egf_coeffs()[n]


def _index_one_rhs(n: int) -> TruncatedSeries:
    # t e_{-l}^{x+1}(t) / (e_{-l}(t) - 1)
    N = n + 1
    e_neg = exp_deg_series(1, N).map(Poly.negate_lambda)
    kernel = series_div(TruncatedSeries.variable(N), e_neg - 1)
    return kernel * exp_deg_series(X + 1, n).map(Poly.negate_lambda)


def _index_one_lhs(n: int) -> TruncatedSeries:
    N = n + 1
    u = 1 - exp_deg_series(1, N, sign=-1)
    return series_div(series_compose(deg_polylog_series(1, N), u), u) * exp_deg_series(
        -X, n, sign=-1
    )


def _weights_at(k: int, lam: Fraction) -> tuple[Fraction, Fraction]:
    return (
        rising_weight(k).evaluate(l=lam).constant_value(),
        falling_weight(k).evaluate(l=lam).constant_value(),
    )


def _literal_weights(k: int, lam: Fraction) -> tuple[Fraction, Fraction]:
    if lam == 0:
        # 1/l is undefined at 0; compare with the l -> 0 limit (+-1)^k k!
        return Fraction(math.factorial(k)), Fraction((-1) ** k * math.factorial(k))
    return literal_weight(k, lam, negate=True), literal_weight(k, lam, negate=False)


def _leading_x(n: int) -> tuple[int, Poly]:
    p = beta_deg_poly(n)
    return p.degree("x"), p.coeff_of("x", p.degree("x"))


def _case(id, title, params, sweep, lhs, rhs, sampled=False) -> IdentityCase:
    return IdentityCase(id, title, tuple(params.split()), sweep, lhs, rhs, sampled)


_CASES = [
    # -- defining relations ------------------------------------------------
    _case(
        "defining.stirling",
        "(x)_{n,l} = sum_k S_{2,l}(n,k) (x)_k",
        "n", _n(),
        lambda n: falling_factorial(FallingKind.DEGENERATE, X, n),
        lambda n: sum(
            (stirling2_deg(n, k) * falling_factorial(FallingKind.ORDINARY, X, k) for k in range(n + 1)),
            ZERO,
        ),
    ),
    _case(
        "defining.r_stirling",
        "(x+r)_{n,l} = sum_k S^{(r)}_{2,l}(n+r,k+r) (x)_k",
        "n r", _nr(),
        lambda n, r: falling_factorial(FallingKind.DEGENERATE, X + r, n),
        lambda n, r: sum(
            (rstirling2_deg(n, k, r) * falling_factorial(FallingKind.ORDINARY, X, k) for k in range(n + 1)),
            ZERO,
        ),
    ),
    # -- degenerate Stirling numbers ---------------------------------------
    _case(
        "stirling.gf",
        "alternating sum equals n! [t^n] (e_l(t)-1)^k / k!",
        "n k", _nk(),
        lambda n, k: stirling2_deg(n, k),
        lambda n, k: _stirling_gf((k,), n),
    ),
    _case(
        "stirling.difference",
        "Delta^k (0)_{n,l} = k! S_{2,l}(n,k)",
        "n k", _nk(),
        lambda n, k: forward_difference([deg_falling(j, n) for j in range(k + 1)], k),
        lambda n, k: stirling2_deg(n, k) * math.factorial(k),
    ),
    _case(
        "stirling.set_partitions",
        "S_{2,0}(n,k) counts set partitions into k blocks",
        "n k", _nk(cap=PARTITION_N_CAP),
        lambda n, k: stirling2_deg(n, k).evaluate(l=0),
        lambda n, k: classical_stirling2(n, k),
    ),
    _case(
        "rstirling.gf",
        "alternating sum equals n! [t^n] e_l^r(t) (e_l(t)-1)^k / k!",
        "n k r", _nkr(),
        lambda n, k, r: rstirling2_deg(n, k, r),
        lambda n, k, r: _rstirling_gf((k, r), n),
    ),
    _case(
        "rstirling.convolution",
        "S^{(r)}_{2,l}(n+r,k+r) = sum_l C(n,l) S_{2,l}(l,k) (r)_{n-l,l}",
        "n k r", _nkr(),
        lambda n, k, r: rstirling2_deg(n, k, r),
        lambda n, k, r: rstirling2_via_convolution(n, k, r),
    ),
    _case(
        "rstirling.set_partitions",
        "S^{(r)}_{2,0}(n+r,k+r) counts partitions keeping r elements apart",
        "n k r", _nkr(n_cap=PARTITION_N_CAP, r_cap=PARTITION_R_CAP),
        lambda n, k, r: rstirling2_deg(n, k, r).evaluate(l=0),
        lambda n, k, r: classical_rstirling2(n, k, r),
    ),
    _case(
        "rstirling.alternating",
        "sum_j C(k,j)(-1)^j (j+r)_{n,l} = (-1)^k k! sum_{l>=k} C(n,l) S_{2,l}(l,k)(r)_{n-l,l}",
        "n k r", _nkr(),
        lambda n, k, r: _alternating_shifted(n, k, r),
        lambda n, k, r: _signed(_convolution_with_r(n, k, r, k) * math.factorial(k), k),
    ),
    _case(
        "rstirling.difference",
        "sum_j C(k,j)(-1)^j (j+r)_{n,l} = (-1)^k Delta^k (r)_{n,l}",
        "n k r", _nkr(),
        lambda n, k, r: _alternating_shifted(n, k, r),
        lambda n, k, r: _signed(
            forward_difference([deg_falling(r + j, n) for j in range(k + 1)], k), k
        ),
    ),
    _case(
        "rstirling.full_convolution",
        "sum_j C(k,j)(-1)^j (r+j)_{n,l} = sum_{l>=0} C(n,l)(r)_{n-l,l} S_{2,l}(l,k) k! (-1)^k",
        "n k r", _nkr(),
        lambda n, k, r: _alternating_shifted(n, k, r),
        lambda n, k, r: _signed(_convolution_with_r(n, k, r, 0) * math.factorial(k), k),
    ),
    # -- falling factorials and series --------------------------------------
    _case(
        "falling.vandermonde",
        "(x+y)_{n,l} = sum_l C(n,l) (x)_{l,l} (y)_{n-l,l}",
        "n", _n(),
        lambda n: deg_falling(X + Y, n),
        lambda n: sum((deg_falling(X, l) * deg_falling(Y, n - l) * math.comb(n, l) for l in range(n + 1)), ZERO),
    ),
    _case(
        "series.exp_product",
        "e_l^{x+y}(t) = e_l^x(t) e_l^y(t) to order n",
        "n", _n(),
        lambda n: exp_deg_series(X + Y, n),
        lambda n: exp_deg_series(X, n) * exp_deg_series(Y, n),
    ),
    _case(
        "series.log_inverse",
        "log_l(1 + (e_l(t) - 1)) = t to order n",
        "n", _n(1),
        lambda n: series_compose(deg_log_series(n), exp_deg_series(1, n) - 1),
        lambda n: TruncatedSeries.variable(n),
    ),
    _case(
        "series.exp_inverse",
        "e_l(log_l(1 + t)) - 1 = t to order n",
        "n", _n(1),
        lambda n: series_compose(exp_deg_series(1, n) - 1, deg_log_series(n)),
        lambda n: TruncatedSeries.variable(n),
    ),
    _case(
        "series.classical_exp",
        "e_0(t) has coefficients 1/n!",
        "n", _n(),
        lambda n: exp_deg_series(1, n).map(lambda c: c.evaluate(l=0)),
        lambda n: TruncatedSeries([Fraction(1, math.factorial(i)) for i in range(n + 1)]),
    ),
    _case(
        "polylog.log_bridge",
        "Li_{1,l}(t) = -log_l(1 - t) to order n",
        "n", _n(1),
        lambda n: deg_polylog_series(1, n),
        lambda n: -series_compose(deg_log_series(n), -TruncatedSeries.variable(n)),
    ),
    _case(
        "polylog.classical_limit",
        "Li_{p,0}(u) has coefficients 1/n^p",
        "p n", _pn(),
        lambda p, n: deg_polylog_series(p, n).map(lambda c: c.evaluate(l=0)),
        lambda p, n: TruncatedSeries([0] + [Fraction(1) / Fraction(i) ** p for i in range(1, n + 1)], order=n),
    ),
    # -- degenerate Stirling polynomials ------------------------------------
    _case(
        "stirling_poly.forms",
        "convolution form of S_{2,l}(n,k|x) equals its alternating form",
        "n k", _nk(),
        lambda n, k: stirling_poly_convolution(n, k),
        lambda n, k: stirling_poly_alternating(n, k),
    ),
    _case(
        "stirling_poly.gf",
        "S_{2,l}(n,k|x) = n! [t^n] (e_l(t)-1)^k e_l^x(t) / k!",
        "n k", _nk(),
        lambda n, k: stirling_poly(n, k),
        lambda n, k: _stirling_poly_gf((k,), n),
    ),
    _case(
        "stirling_poly.at_zero",
        "S_{2,l}(n,k|0) = S_{2,l}(n,k)",
        "n k", _nk(),
        lambda n, k: stirling_poly(n, k).evaluate(x=0),
        lambda n, k: stirling2_deg(n, k),
    ),
    # -- fully degenerate Bernoulli numbers and polynomials ------------------
    _case(
        "bernoulli.number.double_sum",
        "Stirling form of beta_{n,l} equals the double sum",
        "n", _n(),
        lambda n: beta_routes(n)["stirling"],
        lambda n: beta_routes(n)["double_sum"],
    ),
    _case(
        "bernoulli.number.difference",
        "Stirling form of beta_{n,l} equals the difference form at 0",
        "n", _n(),
        lambda n: beta_routes(n)["stirling"],
        lambda n: beta_routes(n)["difference"],
    ),
    _case(
        "bernoulli.number.gf",
        "Stirling form of beta_{n,l} equals gf extraction",
        "n", _n(),
        lambda n: beta_routes(n)["stirling"],
        lambda n: _beta_gf((0,), n),
    ),
    _case(
        "bernoulli.at_r.double_sum",
        "r-Stirling form of beta_{n,l}(r) equals the double sum",
        "n r", _nr(),
        lambda n, r: beta_routes(n, r)["stirling"],
        lambda n, r: beta_routes(n, r)["double_sum"],
    ),
    _case(
        "bernoulli.at_r.difference",
        "r-Stirling form of beta_{n,l}(r) equals the difference form at r",
        "n r", _nr(),
        lambda n, r: beta_routes(n, r)["stirling"],
        lambda n, r: beta_routes(n, r)["difference"],
    ),
    _case(
        "bernoulli.at_r.poly_eval",
        "r-Stirling form of beta_{n,l}(r) equals beta_{n,l}(x) at x = r",
        "n r", _nr(),
        lambda n, r: beta_routes(n, r)["stirling"],
        lambda n, r: beta_deg_poly(n).evaluate(x=r),
    ),
    _case(
        "bernoulli.at_r.gf",
        "r-Stirling form of beta_{n,l}(r) equals gf extraction with e_l^r(t)",
        "n r", _nr(),
        lambda n, r: beta_routes(n, r)["stirling"],
        lambda n, r: _beta_gf((r,), n),
    ),
    _case(
        "bernoulli.poly.double_sum",
        "Stirling-polynomial form of beta_{n,l}(x) equals the double sum",
        "n", _n(),
        lambda n: beta_routes(n, "x")["stirling"],
        lambda n: beta_routes(n, "x")["double_sum"],
    ),
    _case(
        "bernoulli.poly.difference",
        "Stirling-polynomial form of beta_{n,l}(x) equals the difference form",
        "n", _n(),
        lambda n: beta_routes(n, "x")["stirling"],
        lambda n: beta_routes(n, "x")["difference"],
    ),
    _case(
        "bernoulli.poly.gf",
        "Stirling-polynomial form of beta_{n,l}(x) equals gf extraction",
        "n", _n(),
        lambda n: beta_routes(n, "x")["stirling"],
        lambda n: _beta_gf(("x",), n),
    ),
    _case(
        "bernoulli.poly.leading",
        "beta_{n,l}(x) is monic of x-degree n",
        "n", _n(),
        _leading_x,
        lambda n: (n, ONE),
    ),
    _case(
        "bernoulli.classical_limit",
        "beta_{n,0}(x) equals the ordinary Bernoulli polynomial from t e^{xt}/(e^t - 1)",
        "n", _n(),
        lambda n: beta_deg_poly(n).evaluate(l=0),
        lambda n: _classical_gf((), n),
    ),
    # -- degenerate Fubini polynomials --------------------------------------
    _case(
        "fubini.gf",
        "closed double sum for F_{n,l}(x|y) equals gf extraction",
        "n", _n(),
        lambda n: fubini_deg(n),
        lambda n: _fubini_gf((), n),
    ),
    _case(
        "fubini.negated",
        "F_{n,l}(-y) alternating sum equals F_{n,l}(x|y) at x=-y, y=0",
        "n", _n(),
        lambda n: fubini_neg_arg(n),
        lambda n: fubini_deg(n).subs(x=-Y, y=0),
    ),
    _case(
        "fubini.negated_gf",
        "F_{n,l}(-y) = n! [t^n] 1 / (1 + y (e_l(t) - 1))",
        "n", _n(),
        lambda n: fubini_neg_arg(n),
        _fubini_neg_gf,
    ),
    _case(
        "fubini.negated_shift",
        "F_{n,l}(-y|r) r-Stirling sum equals F_{n,l}(x|y) at x=-y, y=r",
        "n r", _nr(),
        lambda n, r: fubini_neg_arg(n, r),
        lambda n, r: fubini_deg(n).subs(x=-Y, y=r),
    ),
    _case(
        "fubini.negated_poly",
        "F_{n,l}(-y|x) Stirling-polynomial sum equals F_{n,l}(x|y) at x=-y, y=x",
        "n", _n(),
        lambda n: fubini_neg_arg(n, "x"),
        lambda n: fubini_deg(n).subs(x=-Y, y=X),
    ),
    _case(
        "fubini.integrated_closed",
        "int_0^x F_{n,l}(-y) dy = sum_k S_{2,l}(n,k) (-1)^k k!/(k+1) x^{k+1}",
        "n", _n(),
        lambda n: integrated_fubini(n),
        lambda n: sum(
            (_signed(stirling2_deg(n, k) * Fraction(math.factorial(k), k + 1) * X ** (k + 1), k) for k in range(n + 1)),
            ZERO,
        ),
    ),
    _case(
        "fubini.log_gf",
        "int_0^x F_{n,l}(-y) dy = n! [t^n] log(1 + x(e_l(t)-1)) / (e_l(t)-1)",
        "n", _n(),
        lambda n: integrated_fubini(n),
        lambda n: _log_fubini_gf(n),
    ),
    _case(
        "fubini.log_gf_shift",
        "int_0^x F_{n,l}(-y|r) dy = n! [t^n] e_l^r(t) log(1 + x(e_l(t)-1)) / (e_l(t)-1)",
        "n r", _nr(),
        lambda n, r: integrated_fubini(n, r),
        lambda n, r: _log_fubini_gf(n, r),
    ),
    _case(
        "fubini.integrated",
        "int_0^1 F_{n,l}(-y) dy = beta_{n,l}",
        "n", _n(),
        lambda n: integrated_fubini(n, upper=1),
        lambda n: beta_deg_number(n),
    ),
    _case(
        "fubini.integrated_shift",
        "int_0^1 F_{n,l}(-y|r) dy = beta_{n,l}(r)",
        "n r", _nr(),
        lambda n, r: integrated_fubini(n, r, upper=1),
        lambda n, r: beta_deg_at_r(n, r),
    ),
    _case(
        "fubini.integrated_poly",
        "int_0^1 F_{n,l}(-y|x) dy = beta_{n,l}(x)",
        "n", _n(),
        lambda n: integrated_fubini(n, "x"),
        lambda n: beta_deg_poly(n),
    ),
    # -- degenerate poly-Bernoulli polynomials ------------------------------
    _case(
        "poly_bernoulli.stirling_poly_form",
        "gf extraction equals sum_k w_k/(k+1)^p S_{2,-l}(n,k|x-k)",
        "p n", _pn(),
        lambda p, n: _poly_bernoulli_gf((p,), n),
        lambda p, n: poly_bernoulli_closed(p, n, "stirling_poly"),
    ),
    _case(
        "poly_bernoulli.falling_form",
        "gf extraction equals the double sum over (x-l)_{n,-l}",
        "p n", _pn(),
        lambda p, n: _poly_bernoulli_gf((p,), n),
        lambda p, n: poly_bernoulli_closed(p, n, "falling"),
    ),
    _case(
        "poly_bernoulli.stirling_form",
        "gf extraction equals the S_{2,l}(j,k) (x)_{n-j,-l} form",
        "p n", _pn(),
        lambda p, n: _poly_bernoulli_gf((p,), n),
        lambda p, n: poly_bernoulli_closed(p, n, "stirling"),
    ),
    _case(
        "poly_bernoulli.shifted_stirling_poly",
        "S_{2,-l}(n,k|x-k) = (1/k!) sum_l C(k,l)(-1)^l (x-l)_{n,-l}",
        "n k", _nk(),
        shifted_stirling_poly,
        shifted_stirling_poly_falling,
    ),
    _case(
        "poly_bernoulli.shift_commutes",
        "negating l and shifting x commute on S_{2,l}(n,k|x)",
        "n k", _nk(),
        lambda n, k: stirling_poly(n, k).negate_lambda().shift_x(-k),
        lambda n, k: stirling_poly(n, k).shift_x(-k).negate_lambda(),
    ),
    _case(
        "poly_bernoulli.falling_expansion",
        "sum_l C(k,l)(-1)^l (x-l)_{n,-l} = sum_j C(n,j)(-1)^j (x)_{n-j,-l} k!(-1)^k S_{2,l}(j,k)",
        "n k", _nk(),
        lambda n, k: falling_difference_expansion(n, k)[0],
        lambda n, k: falling_difference_expansion(n, k)[1],
    ),
    _case(
        "poly_bernoulli.index_one_numerator",
        "Li_{1,l}(1 - e_l(-t)) = t to order n",
        "n", _n(1),
        lambda n: series_compose(deg_polylog_series(1, n), 1 - exp_deg_series(1, n, sign=-1)),
        lambda n: TruncatedSeries.variable(n),
    ),
    _case(
        "poly_bernoulli.index_one_gf",
        "index-1 generating function equals t e_{-l}^{x+1}(t) / (e_{-l}(t) - 1)",
        "n", _n(),
        _index_one_lhs,
        _index_one_rhs,
    ),
    _case(
        "poly_bernoulli.carlitz_bridge",
        "beta^{(1)}_{n,l}(x) = Carlitz beta_n(x+1 | -l)",
        "n", _n(),
        lambda n: _poly_bernoulli_gf((1,), n),
        lambda n: carlitz_beta(n).negate_lambda().shift_x(1),
    ),
    _case(
        "poly_bernoulli.negative_argument",
        "beta^{(p)}_{n,l}(-r) = (-1)^n sum_k v_k/(k+1)^p S^{(r)}_{2,l}(n+r,k+r)",
        "p n r", _pnr(),
        lambda p, n, r: neg_r_rstirling_form(p, n, r),
        lambda p, n, r: poly_bernoulli_closed(p, n, "stirling_poly").evaluate(x=-r),
    ),
    _case(
        "poly_bernoulli.negative_argument_convolution",
        "(-1)^n convolution form equals the S_{2,l}(j,k)(x)_{n-j,-l} form at x = -r",
        "p n r", _pnr(),
        lambda p, n, r: neg_r_convolution_form(p, n, r),
        lambda p, n, r: poly_bernoulli_closed(p, n, "stirling").evaluate(x=-r),
    ),
    _case(
        "poly_bernoulli.prefactor_guard",
        "prod (j - l), prod (l - j) match (-+l)^k (1)_{k+1,1/l} at sample l",
        "k s", lambda lim: itertools.product(lim.ns(), range(len(LAMBDA_SAMPLES))),
        lambda k, s: _weights_at(k, LAMBDA_SAMPLES[s]),
        lambda k, s: _literal_weights(k, LAMBDA_SAMPLES[s]),
        sampled=True,
    ),
]

CATALOG: dict[str, IdentityCase] = {c.id: c for c in _CASES}


def _ordinary_power_stirling(n: int, k: int) -> Poly:
    # uses j^n where (j)_{n,l} belongs
    total = ZERO
    for j in range(k + 1):
        term = Poly.constant(j**n) * math.comb(k, j)
        total = total + (term if (k - j) % 2 == 0 else -term)
    return total / math.factorial(k)


_CONTROL_CASES = [
    _case(
        "control.stirling_ordinary_powers",
        "corrupted: ordinary powers in place of degenerate falling factorials",
        "n k", _nk(),
        lambda n, k: stirling2_deg(n, k),
        _ordinary_power_stirling,
    ),
    _case(
        "control.bernoulli_sign_flip",
        "corrupted: sign of every Stirling-form term flipped",
        "n", _n(),
        lambda n: beta_deg_number(n),
        lambda n: -beta_routes(n)["stirling"],
    ),
    _case(
        "control.carlitz_unshifted",
        "corrupted: Carlitz bridge without the x -> x + 1 shift",
        "n", _n(),
        lambda n: _poly_bernoulli_gf((1,), n),
        lambda n: carlitz_beta(n).negate_lambda(),
    ),
]

CONTROLS: dict[str, IdentityCase] = {c.id: c for c in _CONTROL_CASES}
