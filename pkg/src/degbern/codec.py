"""JSON encodings of rationals, polynomials and truncated series.

Rational
    the string ``"p/q"``, or ``"p"`` when ``q == 1``; the sign sits on the
    numerator (``"-1/2"``).
Polynomial in l only
    a flat list of rational strings, ascending in ``l``: ``1/6 + l/2`` is
    ``["1/6", "1/2"]``.
Polynomial involving x or y
    three nested lists indexed ``[y power][x power][l power]``:
    ``x + y`` is ``[[[], ["1"]], [["1"]]]``.

Trailing zeros are trimmed at every nesting level, so the encoding of a value
is unique.  A constant polynomial is encoded as a bare rational string and the
zero polynomial as ``"0"``.  Decoding dispatches on nesting depth.

Series
    ``{"order": N, "coeffs": [<polynomial encodings>]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .rings import Poly, format_fraction
from .series import TruncatedSeries


def _trim(seq: list) -> list:
    while seq and (seq[-1] == "0" or seq[-1] == []):
        seq.pop()
    return seq


def encode_poly(p) -> Any:
    p = Poly.coerce(p)
    if p.is_constant():
        return format_fraction(p.constant_value())
    if not p.variables() - {"l"}:
        return [format_fraction(c) for c in p.lambda_coeffs()]
    dy, dx, dl = p.degree("y"), p.degree("x"), p.degree("l")
    nested = []
    for k in range(dy + 1):
        row = []
        for j in range(dx + 1):
            row.append(_trim([format_fraction(p.coefficient((i, j, k))) for i in range(dl + 1)]))
        nested.append(_trim(row))
    return _trim(nested)


def decode_poly(data: Any) -> Poly:
    if isinstance(data, str):
        return Poly.constant(Fraction(data))
    if not isinstance(data, list):
        raise ValueError(f"not a polynomial encoding: {data!r}")
    if not data:
        return Poly()
    if all(isinstance(c, str) for c in data):
        return Poly({(i, 0, 0): Fraction(c) for i, c in enumerate(data)})
    terms = {}
    for k, row in enumerate(data):
        for j, lam_coeffs in enumerate(row):
            for i, c in enumerate(lam_coeffs):
                terms[(i, j, k)] = Fraction(c)
    return Poly(terms)


def encode_series(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [encode_poly(c) for c in s.coeffs]}


def decode_series(data: dict) -> TruncatedSeries:
    return TruncatedSeries([decode_poly(c) for c in data["coeffs"]], order=data["order"])


def dumps(obj: Any) -> str:
    """Deterministic compact JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
