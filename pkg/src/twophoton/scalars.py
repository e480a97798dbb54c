"""Exact scalars: rationals (``fractions.Fraction``) and sparse polynomials.

A scalar is either a ``Fraction`` or a :class:`Poly` over a declared, ordered
tuple of variable names. Plain ``int`` values are accepted wherever a scalar
is expected and are promoted to ``Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import DomainError

Exponents = Tuple[int, ...]
Scalar = Union[Fraction, "Poly"]

PARAM_NAMES = (
    "a1", "a2", "a3", "a4", "a5", "a6",
    "b1", "b2", "b3", "b4", "b5", "b6",
    "c1", "c2", "c3",
)


def _grlex_key(exps: Exponents):
    # graded lex, highest degree first
    return (-sum(exps), tuple(-e for e in exps))


class Poly:
    """Sparse multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    ``Fraction`` coefficients. Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, object] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: Dict[Exponents, Fraction] = {}
        for exps, c in dict(terms).items():
            if len(exps) != n:
                raise DomainError(f"exponent vector {exps} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c, variables: Iterable[str]) -> "Poly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Iterable[str]) -> "Poly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise DomainError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Iterable[str]):
        variables = tuple(variables)
        return tuple(cls.var(v, variables) for v in variables)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise DomainError(
                    f"polynomial rings differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(other, self.variables)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return Poly(self.variables)
            return Poly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        if isinstance(other, Poly) and other.is_constant():
            return self * (1 / other.constant_term())
        raise DomainError("polynomials can only be divided by nonzero rationals")

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers of polynomials are not polynomials")
        result = Poly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.variables): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree_part(self, k: int) -> Fraction:
        """Coefficient of ``x**k`` for a polynomial in a single variable."""
        if len(self.variables) != 1:
            raise DomainError("degree_part needs a univariate polynomial")
        return self.terms.get((k,), Fraction(0))

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        point = [Fraction(values[v]) for v in self.variables]
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for x, e in zip(point, exps):
                if e:
                    t *= x ** e
            total += t
        return total

    def __repr__(self):
        return f"Poly({str(self)!r}, variables={self.variables})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key):
            c = self.terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, variables: Iterable[str]) -> Poly:
    """Parse strings like ``"2*a1*b5 - 1/2*c2^2 + 3"`` over ``variables``."""
    variables = tuple(variables)
    result = Poly(variables)
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        term = Poly.const(sign, variables)
        for factor in m.group(2).split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                term = term * Fraction(factor)
            else:
                name, _, power = factor.partition("^")
                term = term * Poly.var(name.strip(), variables) ** (int(power) if power else 1)
        result = result + term
        pos = m.end()
    return result


def to_scalar(x, variables: Iterable[str] | None = None) -> Scalar:
    """Promote ``x`` (int, Fraction, Poly or string) to an exact scalar."""
    if isinstance(x, Poly):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        raise DomainError("floats are not exact scalars; pass a rational string")
    if isinstance(x, str):
        s = x.strip()
        try:
            return Fraction(s)
        except ValueError:
            if variables is None:
                raise DomainError(f"{x!r} is not a rational and no variables were given")
            return parse_poly(s, variables)
    raise TypeError(f"cannot convert {type(x).__name__} to a scalar")


def format_scalar(s) -> str:
    if isinstance(s, Poly):
        return str(s)
    if isinstance(s, float):
        return repr(s)
    return str(Fraction(s))


def is_zero(s) -> bool:
    return not s


def scalar_variables(*scalars):
    """Common variable tuple of the polynomial scalars among ``scalars`` (or None)."""
    found = None
    for s in scalars:
        if isinstance(s, Poly):
            if found is None:
                found = s.variables
            elif found != s.variables:
                raise DomainError(f"polynomial rings differ: {found} vs {s.variables}")
    return found


def symbolic_params() -> Tuple[Poly, ...]:
    """The fifteen bialgebra parameters as generators of one polynomial ring."""
    return Poly.gens(PARAM_NAMES)
