"""Dense matrices over exact scalars.

Rational matrices are stored as an integer numpy object array plus one
positive common denominator, which keeps products at big-int speed.
Matrices with polynomial entries keep :class:`Poly` objects directly
(``den is None``); they are only used for small semiclassical checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .errors import DomainError
from .scalars import Poly


def _int_array(rows) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            arr[i, j] = v
    return arr


class Matrix:
    __slots__ = ("num", "den", "variables")

    def __init__(self, num: np.ndarray, den: Optional[int] = 1, variables=None):
        self.num = num
        self.den = den
        self.variables = variables
        if den is not None:
            self._reduce()

    # construction
    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None) -> "Matrix":
        m = n if m is None else m
        arr = np.empty((n, m), dtype=object)
        arr.fill(0)
        return cls(arr, 1)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        out = cls.zeros(n)
        for i in range(n):
            out.num[i, i] = 1
        return out

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        flat = [v for row in rows for v in row]
        polys = [v for v in flat if isinstance(v, Poly)]
        if polys:
            variables = polys[0].variables
            arr = _int_array([[v if isinstance(v, Poly) else Poly.const(v, variables)
                               for v in row] for row in rows])
            return cls(arr, None, variables)
        fr = [[Fraction(v) for v in row] for row in rows]
        den = reduce(lcm, (v.denominator for row in fr for v in row), 1)
        return cls(_int_array([[v.numerator * (den // v.denominator) for v in row]
                               for row in fr]), den)

    @property
    def shape(self):
        return self.num.shape

    @property
    def is_poly(self) -> bool:
        return self.den is None

    def _reduce(self):
        g = self.den
        for v in self.num.flat:
            if g == 1:
                break
            if v:
                g = gcd(g, v)
        if g > 1:
            self.num = self.num // g
            self.den //= g

    def to_poly(self, variables) -> "Matrix":
        if self.is_poly:
            if self.variables != tuple(variables):
                raise DomainError(f"polynomial rings differ: {self.variables} vs {variables}")
            return self
        variables = tuple(variables)
        arr = np.empty(self.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            arr[idx] = Poly.const(Fraction(v, self.den), variables)
        return Matrix(arr, None, variables)

    def _align(self, other: "Matrix"):
        if self.is_poly or other.is_poly:
            variables = self.variables or other.variables
            return self.to_poly(variables), other.to_poly(variables)
        return self, other

    # arithmetic
    def __add__(self, other: "Matrix") -> "Matrix":
        a, b = self._align(other)
        if a.is_poly:
            return Matrix(a.num + b.num, None, a.variables)
        den = lcm(a.den, b.den)
        return Matrix(a.num * (den // a.den) + b.num * (den // b.den), den)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.num, self.den, self.variables)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        a, b = self._align(other)
        if a.is_poly:
            return Matrix(a.num.dot(b.num), None, a.variables)
        return Matrix(a.num.dot(b.num), a.den * b.den)

    def scale(self, s) -> "Matrix":
        if isinstance(s, Poly):
            m = self.to_poly(s.variables)
            return Matrix(m.num * s, None, m.variables)
        if self.is_poly:
            return Matrix(self.num * Fraction(s), None, self.variables)
        s = Fraction(s)
        return Matrix(self.num * s.numerator, self.den * s.denominator)

    def __mul__(self, s) -> "Matrix":
        if isinstance(s, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(s)

    __rmul__ = __mul__

    def kron(self, other: "Matrix") -> "Matrix":
        a, b = self._align(other)
        if a.is_poly:
            return Matrix(np.kron(a.num, b.num), None, a.variables)
        return Matrix(np.kron(a.num, b.num), a.den * b.den)

    def transpose(self) -> "Matrix":
        return Matrix(self.num.T.copy(), self.den, self.variables)

    def permute(self, perm: Sequence[int]) -> "Matrix":
        """``P A P^T`` for the permutation sending basis index ``i`` to ``perm[i]``."""
        inv = np.empty(len(perm), dtype=int)
        inv[np.asarray(perm)] = np.arange(len(perm))
        return Matrix(self.num[np.ix_(inv, inv)].copy(), self.den, self.variables)

    def map_entries(self, f) -> "Matrix":
        return Matrix.from_rows([[f(v) for v in row] for row in self.rows()])

    # inspection
    def entry(self, i: int, j: int):
        v = self.num[i, j]
        if self.is_poly:
            return v
        return Fraction(v, self.den)

    def rows(self) -> List[List]:
        n, m = self.shape
        return [[self.entry(i, j) for j in range(m)] for i in range(n)]

    def is_zero(self) -> bool:
        return not any(bool(v) for v in self.num.flat)

    def is_strictly_lower(self) -> bool:
        n, m = self.shape
        return all(not self.num[i, j] for i in range(n) for j in range(i, m))

    def lowering_depth(self) -> int:
        """Largest ``j - i`` over nonzero entries (how far the matrix lowers an index)."""
        depth = 0
        for (i, j), v in np.ndenumerate(self.num):
            if v and j - i > depth:
                depth = j - i
        return depth

    def to_float(self) -> np.ndarray:
        if self.is_poly:
            raise DomainError("polynomial matrices have no float view")
        return np.array([[float(Fraction(v, self.den)) for v in row] for row in self.num], dtype=float)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def differences(self, other: "Matrix", indices: Iterable[int] | None = None):
        """Entries ``(i, j, self_ij, other_ij)`` that differ, restricted to ``indices`` x ``indices``."""
        diff = self - other
        idx = range(self.shape[0]) if indices is None else list(indices)
        out = []
        for i in idx:
            for j in idx:
                if diff.num[i, j]:
                    out.append((i, j, self.entry(i, j), other.entry(i, j)))
        return out

    def degree_part(self, k: int) -> "Matrix":
        """Coefficient matrix of ``x**k`` for a univariate polynomial matrix."""
        if not self.is_poly:
            if k == 0:
                return self
            return Matrix.zeros(*self.shape)
        return Matrix.from_rows([[v.degree_part(k) for v in row] for row in self.num])

    def evaluate(self, values) -> "Matrix":
        if not self.is_poly:
            return self
        return Matrix.from_rows([[v.evaluate(values) for v in row] for row in self.num])

    def __repr__(self):
        return f"Matrix({self.shape[0]}x{self.shape[1]}, den={self.den})"


def swap_permutation(d: int) -> List[int]:
    """Index permutation of ``C^d (x) C^d`` exchanging the two legs."""
    return [j * d + i for i in range(d) for j in range(d)]


def kron_all(*ms: Matrix) -> Matrix:
    return reduce(lambda a, b: a.kron(b), ms)


def nilpotent_series(series, A: Matrix) -> Matrix:
    """``sum_k c_k A**k`` for strictly lower-triangular ``A`` (finite by nilpotency)."""
    n = A.shape[0]
    if not A.is_strictly_lower():
        raise DomainError(f"nilpotent_series needs a strictly lower-triangular matrix ({series.label})")
    coeffs = list(series.coeffs) if hasattr(series, "coeffs") else list(series)
    result = Matrix.identity(n).scale(coeffs[0]) if coeffs and coeffs[0] else Matrix.zeros(n)
    power = Matrix.identity(n)
    for k in range(1, n):
        power = power @ A
        if power.is_zero():
            break
        c = coeffs[k] if k < len(coeffs) else 0
        if c:
            result = result + power.scale(c)
    return result
