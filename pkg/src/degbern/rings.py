"""Exact polynomial arithmetic over the rationals in the variables (l, x, y).

``l`` stands for the degeneracy parameter lambda.  Every value in the package
is a :class:`Poly`; polynomials in ``l`` alone play the role of "lambda
polynomials", and rational constants are constant polynomials.  Scalars are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.

Monomials are exponent triples ``(i, j, k)`` meaning ``l**i * x**j * y**k``.
Zero coefficients are never stored, so two polynomials are equal exactly when
their term dictionaries are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

VARIABLES = ("l", "x", "y")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Scalar = Union[int, Fraction]
Monomial = tuple[int, int, int]


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(value: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(value)


class Poly:
    """Immutable polynomial with rational coefficients in ``l``, ``x`` and ``y``.

    >>> x, l = Poly.var("x"), Poly.var("l")
    >>> (x + l) * (x - l)
    Poly('-l^2 + x^2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != 3 or any(e < 0 for e in mono):
                    raise ValueError(f"bad monomial {mono!r}")
                c = as_fraction(coeff)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Fraction]) -> Poly:
        # terms must already be clean: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> Poly:
        c = as_fraction(value)
        return cls._wrap({(0, 0, 0): c} if c else {})

    @classmethod
    def var(cls, name: str) -> Poly:
        mono = [0, 0, 0]
        mono[_var_index(name)] = 1
        return cls._wrap({tuple(mono): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> Poly:
        if isinstance(value, Poly):
            return value
        return cls.constant(value)

    @classmethod
    def from_lambda_coeffs(cls, coeffs: Iterable[Scalar]) -> Poly:
        return cls({(i, 0, 0): c for i, c in enumerate(coeffs)})

    # ------------------------------------------------------------------
    # inspection

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted by ascending powers of y, then x, then l."""
        return sorted(self._terms.items(), key=lambda item: item[0][::-1])

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0, 0) in self._terms)

    def constant_value(self) -> Fraction:
        """The rational value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0, 0), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); ``-1`` for zero."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = _var_index(var)
        return max(m[i] for m in self._terms)

    def variables(self) -> frozenset[str]:
        used = set()
        for mono in self._terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(VARIABLES[i])
        return frozenset(used)

    def coeff_of(self, var: str, power: int) -> Poly:
        """Coefficient of ``var**power`` as a polynomial in the other variables."""
        i = _var_index(var)
        out = {}
        for mono, c in self._terms.items():
            if mono[i] == power:
                m = list(mono)
                m[i] = 0
                out[tuple(m)] = c
        return Poly._wrap(out)

    def lambda_coeffs(self) -> list[Fraction]:
        """Ascending coefficients in ``l``; the zero polynomial gives ``[]``."""
        if self.variables() - {"l"}:
            raise ValueError(f"{self} depends on x or y")
        deg = self.degree("l")
        return [self.coefficient((i, 0, 0)) for i in range(deg + 1)]

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly.constant(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> Poly:
        return self

    def __sub__(self, other) -> Poly:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> Poly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Poly.constant(other) + (-self)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and (0, 0, 0) in b:
            return self * b[(0, 0, 0)]
        if len(a) == 1 and (0, 0, 0) in a:
            return other * a[(0, 0, 0)]
        out: dict[Monomial, Fraction] = {}
        for (i1, j1, k1), c1 in a.items():
            for (i2, j2, k2), c2 in b.items():
                m = (i1 + i2, j1 + j2, k1 + k2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        """Division by a nonzero rational (or a nonzero constant polynomial)."""
        if isinstance(other, Poly):
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # equality

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # substitution

    def subs(self, values: Mapping[str, object] | None = None, **kwargs) -> Poly:
        """Simultaneously substitute rationals or polynomials for variables.

        >>> Poly.var("x").subs(x=Poly.var("y") + 1)
        Poly('1 + y')
        """
        assignment = dict(values or {}, **kwargs)
        if not assignment:
            return self
        targets = {}
        for name, value in assignment.items():
            targets[_var_index(name)] = value if isinstance(value, Poly) else as_fraction(value)
        if all(not isinstance(v, Poly) for v in targets.values()):
            return self._subs_scalars(targets)
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                powers[key] = Poly.coerce(targets[i]) ** e
            return powers[key]

        result: dict[Monomial, Fraction] = {}
        total = ZERO
        for mono, c in self._terms.items():
            kept = list(mono)
            factor = None
            for i in targets:
                if mono[i]:
                    p = power(i, mono[i])
                    factor = p if factor is None else factor * p
                kept[i] = 0
            kept = tuple(kept)
            if factor is None:
                result[kept] = result.get(kept, 0) + c
            else:
                total = total + Poly._wrap({kept: c}) * factor
        return total + Poly({m: c for m, c in result.items() if c})

    def _subs_scalars(self, targets: dict[int, Fraction]) -> Poly:
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            kept = list(mono)
            for i, v in targets.items():
                if mono[i]:
                    c = c * v ** mono[i]
                kept[i] = 0
            if c:
                kept = tuple(kept)
                out[kept] = out.get(kept, 0) + c
        return Poly._wrap({m: c for m, c in out.items() if c})

    def evaluate(self, values: Mapping[str, Scalar] | None = None, **kwargs) -> Poly:
        """Substitute rational values; unassigned variables remain symbolic."""
        assignment = dict(values or {}, **kwargs)
        for name, value in assignment.items():
            if isinstance(value, Poly):
                raise TypeError(f"evaluate() takes rationals; use subs() for {name}")
        return self.subs(assignment)

    def shift_x(self, c: Scalar) -> Poly:
        """Replace x by x + c."""
        c = as_fraction(c)
        if not c:
            return self
        return self.subs(x=X + c)

    def negate_lambda(self) -> Poly:
        """Replace l by -l."""
        return Poly._wrap({m: (-c if m[0] & 1 else c) for m, c in self._terms.items()})

    def antiderivative(self, var: str) -> Poly:
        """Formal antiderivative in ``var`` with zero constant of integration."""
        i = _var_index(var)
        out = {}
        for mono, c in self._terms.items():
            m = list(mono)
            m[i] += 1
            out[tuple(m)] = c / m[i]
        return Poly._wrap(out)

    def integrate(self, var: str, lower, upper) -> Poly:
        """Definite integral in ``var``; the limits may be rationals or polynomials."""
        anti = self.antiderivative(var)
        return anti.subs({var: upper}) - anti.subs({var: lower})

    # ------------------------------------------------------------------
    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.terms():
            factors = []
            for name, e in zip(VARIABLES, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            monomial = "*".join(factors)
            mag = abs(c)
            if not monomial:
                body = format_fraction(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{format_fraction(mag)}*{monomial}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


ZERO = Poly._wrap({})
ONE = Poly._wrap({(0, 0, 0): Fraction(1)})
LAM = Poly.var("l")
X = Poly.var("x")
Y = Poly.var("y")


def poly_arith(a, b, op: str) -> Poly:
    """Apply ``op`` in {"add", "sub", "mul"} to two ring elements."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def poly_eval(p, at: Mapping[str, Scalar]) -> Poly:
    return Poly.coerce(p).evaluate(at)


def poly_shift_x(p, c: Scalar) -> Poly:
    return Poly.coerce(p).shift_x(c)


def poly_negate_lambda(p) -> Poly:
    return Poly.coerce(p).negate_lambda()
